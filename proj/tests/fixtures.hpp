#pragma once

#include <polysphere/polygon.hpp>

#include <cmath>
#include <vector>

namespace fixtures {

inline polysphere::PolygonConfig make_polygon(int n, double r,
                                              std::vector<polysphere::PlanarPoint> verts) {
    polysphere::PolygonConfig p;
    p.spec = {n, r};
    p.vertices = std::move(verts);
    return p;
}

// Heptagon read off a plotted diagram; coordinates are only accurate to a
// couple of decimals, so anything touching it validates with tol 0.05.
// Its chain stays strictly inside the distance bounds until the last vertex.
inline polysphere::PolygonConfig figure1() {
    return make_polygon(7, 5.2,
                        {{0.0, 0.0},
                         {0.6, 0.8},
                         {1.58, 1.0},
                         {2.58, 1.0},
                         {3.5, 0.6},
                         {4.49, 0.7},
                         {5.2, 0.0}});
}

// Same spec, but the chain goes taut at vertex 4: d(v4, v6) ~ 2, so the tail
// v4, v5, v6 is (nearly) collinear.
inline polysphere::PolygonConfig figure2() {
    return make_polygon(7, 5.2,
                        {{0.0, 0.0},
                         {0.95, 0.3},
                         {1.76, -0.3},
                         {2.63, 0.2},
                         {3.38, 0.85},
                         {4.29, 0.42},
                         {5.2, 0.0}});
}

// Exact quadrilateral: edges 1, 1, 1 and long side 2, apex at height
// sqrt(3)/2. Written with std::sqrt so the unit edges hold to the last ulp;
// a seven-digit decimal for the apex would already be off by ~3e-9.
inline polysphere::PolygonConfig exact_quad() {
    const double h = std::sqrt(3.0) / 2.0;
    return make_polygon(4, 2.0, {{0.0, 0.0}, {1.0, 0.0}, {1.5, h}, {2.0, 0.0}});
}

inline constexpr double kFigureTol = 0.05;

} // namespace fixtures
