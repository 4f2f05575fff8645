#pragma once

#include <polysphere/polygon.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace polysphere {

/// Point of the sphere S^{n-3} in the iterated-suspension model: coordinates
/// (t_1, ..., t_{n-2}) in [-1, 1] where everything after the first +/-1 is
/// equivalent. i0 is the 1-based index of that first +/-1; entries past i0
/// are stored as zeros so that value equality approximates class equality.
/// susp_equiv remains the authoritative comparison.
struct SuspensionCoords {
    int n = 0;              // ambient polygon count; the sphere has dimension n-3
    std::vector<double> t;  // n-2 entries
    int i0 = 0;             // 1-based; 1 <= i0 <= n-2, |t[i0-1]| == 1
};

/// Unit vector in R^{n-2} representing a point of the standard S^{n-3}.
struct SphereVector {
    std::vector<double> x;

    std::size_t dim() const { return x.size(); }
};

double norm(const SphereVector& v);

/// Builds canonical coordinates from raw entries and an explicit terminal
/// index: snaps t[i0-1] to exactly +/-1 (it must be within tol of that) and
/// zeroes the irrelevant tail. Throws InvalidCoords when i0 is out of range,
/// |t_i| >= 1 before i0, or |t_{i0}| is not 1 within tol.
SuspensionCoords make_suspension(int n, std::vector<double> t, int i0, double tol = kDefaultTol);

/// Same, inferring i0 as the first entry within tol of +/-1; such an entry
/// must exist (the last coordinate is a sign).
SuspensionCoords make_suspension(int n, std::vector<double> t, double tol = kDefaultTol);

/// x_i = t_i * prod_{j<i} sqrt(1 - t_j^2). Unit norm in exact arithmetic;
/// within 1e-12 numerically.
SphereVector susp_to_cart(const SuspensionCoords& s);

/// t_i = x_i / sqrt(1 - x_1^2 - ... - x_{i-1}^2) while the remaining squared
/// mass exceeds tol^2; the terminal index is declared where it does not, with
/// t_{i0} = sign(x_{i0}). The remaining mass is accumulated as a suffix sum
/// of squares, which avoids the cancellation of 1 - (partial sum) and makes
/// exact-zero tails terminate exactly. Throws NotUnit when |sum x_i^2 - 1|
/// exceeds tol.
SuspensionCoords cart_to_susp(const SphereVector& v, double tol = kDefaultTol);

/// Equality of suspension points as classes: same terminal index, same sign
/// there, earlier entries within tol. Throws DimensionMismatch if n differs.
bool susp_equiv(const SuspensionCoords& a, const SuspensionCoords& b, double tol = kDefaultTol);

/// Negation of all coordinates (the antipode in the suspension model).
SuspensionCoords negate(const SuspensionCoords& s);

SphereVector antipode(const SphereVector& v);

/// Representative of the antipodal pair {v, -v}: the one whose first entry
/// of magnitude above tol is positive. Idempotent.
SphereVector projective_canonical(const SphereVector& v, double tol = kDefaultTol);

/// Angle in [0, pi] between unit vectors, via atan2 of the rejection norm
/// and the dot product (precise near 0 and pi, unlike arccos of the dot).
double angle_between(const SphereVector& u, const SphereVector& v);

/// Constant-speed great-circle interpolation between unit vectors:
/// angle(result, u) = s * angle(u, v). Throws AntipodalEndpoints when
/// angle(u, v) >= pi - tol (the geodesic is not unique) and OutOfRange for
/// s outside [0, 1].
SphereVector slerp(const SphereVector& u, const SphereVector& v, double s, double tol = kDefaultTol);

/// Uniform point of S^{n-3}: a normalized vector of independent standard
/// normals drawn from the given engine (Box-Muller over the engine's 53-bit
/// uniforms, so the stream is reproducible across platforms).
SphereVector sample_uniform(std::size_t dim, std::mt19937_64& rng);

/// Deterministic single draw for a spec: seeds a fresh engine.
SphereVector sample_uniform(const ModuliSpec& spec, std::uint64_t seed);

} // namespace polysphere
