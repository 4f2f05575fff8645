#include <polysphere/check.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace polysphere {

namespace {

/// Worst absolute constraint violation: endpoint pins, unit edges, and the
/// chain distance bounds. Zero for an exactly valid polygon.
double constraint_residual(const PolygonConfig& p) {
    const int n = p.spec.n;
    const auto& v = p.vertices;
    const PlanarPoint far = v[static_cast<std::size_t>(n - 1)];
    double worst = distance(v[0], PlanarPoint{0.0, 0.0});
    worst = std::max(worst, distance(far, PlanarPoint{p.spec.r, 0.0}));
    for (int i = 0; i + 1 < n; ++i) {
        const double len =
            distance(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
        worst = std::max(worst, std::abs(len - 1.0));
    }
    for (int i = 1; i <= n - 2; ++i) {
        const double d = distance(v[static_cast<std::size_t>(i)], far);
        worst = std::max(worst, static_cast<double>(n - 2 - i) - d);
        worst = std::max(worst, d - static_cast<double>(n - 1 - i));
    }
    return worst;
}

double frame_gap(const PolygonConfig& a, const PolygonConfig& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        worst = std::max(worst, distance(a.vertices[i], b.vertices[i]));
    }
    return worst;
}

} // namespace

CheckSummary run_check(const ModuliSpec& spec, int count, std::uint64_t seed, double tol) {
    require_valid_spec(spec);
    if (count < 1) {
        throw Error(ErrorCode::OutOfRange, "count = " + std::to_string(count) + ", need >= 1");
    }

    CheckSummary sum;
    sum.spec = spec;
    sum.count = count;
    sum.seed = seed;
    sum.tol = tol;

    std::mt19937_64 rng(seed);
    const std::size_t dim = static_cast<std::size_t>(spec.n - 2);
    for (int k = 0; k < count; ++k) {
        const SphereVector w = sample_uniform(dim, rng);
        const PolygonConfig p = phi_inverse_cart(spec, w);
        sum.max_residual = std::max(sum.max_residual, constraint_residual(p));

        const SuspensionCoords s = phi_forward(p);
        const SphereVector w2 = susp_to_cart(s);
        for (std::size_t i = 0; i < dim; ++i) {
            sum.max_roundtrip_cart = std::max(sum.max_roundtrip_cart, std::abs(w2.x[i] - w.x[i]));
        }

        const PolygonConfig p2 = phi_inverse(spec, s);
        sum.max_roundtrip_vertex = std::max(sum.max_roundtrip_vertex, frame_gap(p, p2));

        const SphereVector wr = phi_forward_cart(reflect(p));
        for (std::size_t i = 0; i < dim; ++i) {
            sum.max_equivariance = std::max(sum.max_equivariance, std::abs(wr.x[i] + w2.x[i]));
        }

        const SphereVector ca = projective_canonical(w2);
        const SphereVector cb = projective_canonical(wr);
        for (std::size_t i = 0; i < dim; ++i) {
            sum.max_projective = std::max(sum.max_projective, std::abs(ca.x[i] - cb.x[i]));
        }
    }

    sum.pass = sum.max_roundtrip_vertex <= tol && sum.max_roundtrip_cart <= tol &&
               sum.max_equivariance <= tol && sum.max_projective <= tol &&
               sum.max_residual <= tol;
    return sum;
}

std::string check_to_json(const CheckSummary& summary) {
    nlohmann::json j;
    j["n"] = summary.spec.n;
    j["r"] = summary.spec.r;
    j["count"] = summary.count;
    j["seed"] = summary.seed;
    j["tol"] = summary.tol;
    j["max_roundtrip_vertex"] = summary.max_roundtrip_vertex;
    j["max_roundtrip_cart"] = summary.max_roundtrip_cart;
    j["max_equivariance"] = summary.max_equivariance;
    j["max_projective"] = summary.max_projective;
    j["max_residual"] = summary.max_residual;
    j["pass"] = summary.pass;
    return j.dump();
}

} // namespace polysphere
