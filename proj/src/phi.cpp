#include <polysphere/phi.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace polysphere {

namespace {

Error inconsistent(int i, const Error& cause) {
    return Error(ErrorCode::InconsistentGeometry,
                 "arc step " + std::to_string(i) + ": " + cause.what());
}

// The chain is in the tail regime at i when x_i sits on the outer constraint
// circle, i.e. at an endpoint of its arc, and the remaining vertices already
// lie taut on the segment to the last vertex. The distance test alone is not
// enough: a chain can pass within tol of the circle with a bend still to
// come, and snapping such a configuration to the tail discards the bend,
// amplifying a tol-sized slack into a sqrt(tol)-sized reconstruction error.
// With all three checks a snap moves no vertex by more than ~2 tol.
bool tail_reached(const std::vector<PlanarPoint>& v, int n, int i, const ArcSpec& arc,
                  double radius, double tol) {
    const PlanarPoint far = v[static_cast<std::size_t>(n - 1)];
    const PlanarPoint xi = v[static_cast<std::size_t>(i)];
    if (std::abs(distance(xi, far) - radius) > tol) return false;
    const double offset = wrap_angle(direction_angle(arc.center, xi) - arc.theta_c);
    if (distance(xi, arc_point(arc, offset >= 0.0 ? 1.0 : -1.0)) > tol) return false;
    const double span = static_cast<double>(n - 1 - i);
    for (int k = i + 1; k <= n - 2; ++k) {
        const double f = static_cast<double>(k - i) / span;
        if (distance(v[static_cast<std::size_t>(k)], xi + f * (far - xi)) > tol) return false;
    }
    return true;
}

} // namespace

SuspensionCoords phi_forward(const PolygonConfig& p, double tol) {
    require_valid(p, tol);
    const int n = p.spec.n;
    const auto& v = p.vertices;
    const PlanarPoint far = v[static_cast<std::size_t>(n - 1)];

    std::vector<double> t(static_cast<std::size_t>(n - 2), 0.0);
    for (int i = 1; i <= n - 2; ++i) {
        const double radius = static_cast<double>(n - 1 - i);
        ArcSpec arc;
        try {
            arc = cut_arc(v[static_cast<std::size_t>(i - 1)], far, radius, tol);
        } catch (const Error& e) {
            throw inconsistent(i, e);
        }
        const PlanarPoint xi = v[static_cast<std::size_t>(i)];
        // At i = n-2 the constraint radius equals the (unit) last edge, so the
        // chain is always terminal there; no tail remains to check.
        if (i == n - 2 || tail_reached(v, n, i, arc, radius, tol)) {
            // The endpoint hit decides the sign.
            const double offset = wrap_angle(direction_angle(arc.center, xi) - arc.theta_c);
            t[static_cast<std::size_t>(i - 1)] = offset >= 0.0 ? 1.0 : -1.0;
            return make_suspension(n, std::move(t), i, tol);
        }
        double ti;
        try {
            ti = arc_parameter(arc, xi, tol);
        } catch (const Error& e) {
            throw inconsistent(i, e);
        }
        // arc_parameter clamps to [-1, 1]; an exact +/-1 on a non-terminal
        // step would collide with the suspension convention, so pull it just
        // inside the open interval.
        if (std::abs(ti) >= 1.0) ti = std::copysign(std::nextafter(1.0, 0.0), ti);
        t[static_cast<std::size_t>(i - 1)] = ti;
    }
    // Not reached: i = n-2 always takes the terminal branch.
    throw Error(ErrorCode::InconsistentGeometry, "chain never reached the tail");
}

SphereVector phi_forward_cart(const PolygonConfig& p, double tol) {
    return susp_to_cart(phi_forward(p, tol));
}

PolygonConfig phi_inverse(const ModuliSpec& spec, const SuspensionCoords& s, double tol) {
    require_valid_spec(spec);
    if (s.n != spec.n) {
        throw Error(ErrorCode::SpecMismatch,
                    "coordinates for n = " + std::to_string(s.n) + ", spec has n = " +
                        std::to_string(spec.n));
    }
    // Canonicalize up front; rejects malformed t / i0 with InvalidCoords.
    const SuspensionCoords c = make_suspension(s.n, s.t, s.i0, tol);

    const int n = spec.n;
    PolygonConfig p;
    p.spec = spec;
    p.vertices.assign(static_cast<std::size_t>(n), PlanarPoint{});
    p.vertices[0] = {0.0, 0.0};
    const PlanarPoint far{spec.r, 0.0};
    p.vertices[static_cast<std::size_t>(n - 1)] = far;

    for (int i = 1; i <= c.i0; ++i) {
        const double radius = static_cast<double>(n - 1 - i);
        ArcSpec arc;
        try {
            arc = cut_arc(p.vertices[static_cast<std::size_t>(i - 1)], far, radius, tol);
        } catch (const Error& e) {
            throw inconsistent(i, e);
        }
        p.vertices[static_cast<std::size_t>(i)] = arc_point(arc, c.t[static_cast<std::size_t>(i - 1)]);
    }
    // Straight tail: the chain from v_{i0} to v_{n-1} is taut.
    const PlanarPoint anchor = p.vertices[static_cast<std::size_t>(c.i0)];
    const double span = static_cast<double>(n - 1 - c.i0);
    for (int k = c.i0 + 1; k <= n - 2; ++k) {
        const double f = static_cast<double>(k - c.i0) / span;
        p.vertices[static_cast<std::size_t>(k)] = anchor + f * (far - anchor);
    }
    return p;
}

PolygonConfig phi_inverse_cart(const ModuliSpec& spec, const SphereVector& v, double tol) {
    return phi_inverse(spec, cart_to_susp(v, tol), tol);
}

double roundtrip_error(const ModuliSpec& spec, const PolygonConfig& p, double tol) {
    const PolygonConfig q = phi_inverse(spec, phi_forward(p, tol), tol);
    double worst = 0.0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        worst = std::max(worst, distance(p.vertices[i], q.vertices[i]));
    }
    return worst;
}

} // namespace polysphere
