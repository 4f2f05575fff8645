#pragma once

#include <polysphere/sphere.hpp>

namespace polysphere {

/// The coordinate map from polygon space onto the suspension sphere.
///
/// For i = 1, 2, ... the vertex v_i is confined to the arc of the unit
/// circle about v_{i-1} cut off by the disk of radius n-1-i around the far
/// endpoint v_{n-1}; t_i is its linear parameter on that arc. The chain
/// stops at the first index whose distance to v_{n-1} attains the disk
/// radius (the tail index): there t = +/-1 by which endpoint was hit, and
/// later entries carry no information. Termination is decided by the
/// distance criterion rather than |t_i| ~ 1 because the parameter
/// saturates through a square-root singularity while the distance stays
/// well conditioned.
///
/// Throws InvalidPolygon if validate(p, tol) reports anything, and
/// InconsistentGeometry if arc construction fails afterwards (possible only
/// for corrupted input).
SuspensionCoords phi_forward(const PolygonConfig& p, double tol = kDefaultTol);

/// Cartesian composite: susp_to_cart(phi_forward(p)).
SphereVector phi_forward_cart(const PolygonConfig& p, double tol = kDefaultTol);

/// Inverse map: rebuilds the unique polygon with the given arc parameters.
/// Vertices v_1 .. v_{i0} are placed sequentially on their constraint arcs;
/// past the tail index the remaining edges are forced straight, so v_k lies
/// at fraction (k - i0)/(n-1-i0) along the segment from v_{i0} to v_{n-1}.
/// The result passes validate within a small multiple of tol.
///
/// Throws SpecMismatch when s.n != spec.n and InvalidCoords for malformed
/// coordinates (via the canonicalizing constructor).
PolygonConfig phi_inverse(const ModuliSpec& spec, const SuspensionCoords& s, double tol = kDefaultTol);

/// Inverse from a Cartesian unit vector: phi_inverse(cart_to_susp(v)).
PolygonConfig phi_inverse_cart(const ModuliSpec& spec, const SphereVector& v, double tol = kDefaultTol);

/// Max vertex distance between p and phi_inverse(spec, phi_forward(p)).
/// Zero in exact arithmetic; a direct measure of round-trip drift.
double roundtrip_error(const ModuliSpec& spec, const PolygonConfig& p, double tol = kDefaultTol);

} // namespace polysphere
