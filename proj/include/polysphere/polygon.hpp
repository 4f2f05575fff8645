#pragma once

#include <polysphere/geometry.hpp>

#include <string>
#include <vector>

namespace polysphere {

/// Identifies the configuration space of planar n-gons with one side of
/// length r and the remaining n-1 sides of unit length. The supported range
/// is n >= 4 and n-2 <= r < n-1; at r = n-1 the space collapses to a point.
struct ModuliSpec {
    int n = 0;
    double r = 0.0;
};

inline bool operator==(const ModuliSpec& a, const ModuliSpec& b) {
    return a.n == b.n && a.r == b.r;
}

bool spec_is_valid(const ModuliSpec& spec);

/// Throws InvalidSpec when the (n, r) bounds fail.
void require_valid_spec(const ModuliSpec& spec);

/// A polygon in canonical position: vertex 0 pinned at the origin, vertex
/// n-1 pinned at (r, 0), consecutive vertices at unit distance.
struct PolygonConfig {
    ModuliSpec spec;
    std::vector<PlanarPoint> vertices;
};

enum class ViolationKind {
    NonFinite,
    Endpoint,
    EdgeLength,
    TriangleLower,
    TriangleUpper,
};

struct Violation {
    ViolationKind kind;
    int index;       // vertex or edge index the measurement refers to
    double measured; // measured value
    double bound;    // bound it was checked against
    std::string message;
};

using ValidationReport = std::vector<Violation>;

std::string to_string(const Violation& v);

/// Checks the canonical-position pins, the n-1 unit edges, and the chain
/// distance bounds n-2-i <= d(v_i, v_{n-1}) <= n-1-i, all within tol.
/// Returns one entry per violated constraint; empty means valid.
/// Throws WrongArity if the vertex count differs from n, InvalidSpec if the
/// (n, r) bounds fail.
ValidationReport validate(const PolygonConfig& p, double tol = kDefaultTol);

/// Throws InvalidPolygon summarizing the report when validate is non-empty.
void require_valid(const PolygonConfig& p, double tol = kDefaultTol);

/// Reflection across the x-axis; an involution fixing the pinned endpoints.
PolygonConfig reflect(const PolygonConfig& p);

/// Least index i >= 1 at which d(v_i, v_{n-1}) = n-1-i within tol. From this
/// index on, the vertices lie evenly spaced on the straight segment to
/// v_{n-1}. Always in [1, n-2] for a valid polygon: equality is guaranteed
/// at i = n-2 (the last edge has unit length) and cannot hold at i = 0
/// (r < n-1). Throws NotFound, reporting the closest near-miss, when tol is
/// too small for the input's noise level.
int tail_index(const PolygonConfig& p, double tol = kDefaultTol);

} // namespace polysphere
