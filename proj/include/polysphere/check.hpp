#pragma once

#include <polysphere/planner.hpp>

#include <cstdint>
#include <string>

namespace polysphere {

/// Aggregate result of the seeded property sweep. Each field is a maximum
/// over `count` samples, so reruns with the same spec, count, and seed
/// reproduce it bit for bit.
struct CheckSummary {
    ModuliSpec spec;
    int count = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double max_roundtrip_vertex = 0.0; // polygon -> coords -> polygon drift
    double max_roundtrip_cart = 0.0;   // unit vector -> polygon -> unit vector drift
    double max_equivariance = 0.0;     // |image(reflected) + image|, max-norm
    double max_projective = 0.0;       // canonical images of mirror pair, max-norm gap
    double max_residual = 0.0;         // worst constraint violation of rebuilt polygons
    bool pass = false;                 // all maxima within tol
};

/// Draws `count` uniform sphere points, pulls each back to a polygon, and
/// measures round trips both ways, reflection equivariance, projective
/// canonicalization, and the constraint residuals of the rebuilt polygons.
CheckSummary run_check(const ModuliSpec& spec, int count, std::uint64_t seed, double tol = 1e-8);

/// Compact JSON rendering of the summary; byte-deterministic.
std::string check_to_json(const CheckSummary& summary);

} // namespace polysphere
