#include <polysphere/polygon.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace polysphere {

bool spec_is_valid(const ModuliSpec& spec) {
    return spec.n >= 4 && std::isfinite(spec.r) && spec.r >= spec.n - 2 && spec.r < spec.n - 1;
}

void require_valid_spec(const ModuliSpec& spec) {
    if (!spec_is_valid(spec)) {
        std::ostringstream oss;
        oss << "need n >= 4 and n-2 <= r < n-1, got n = " << spec.n << ", r = " << spec.r;
        throw Error(ErrorCode::InvalidSpec, oss.str());
    }
}

std::string to_string(const Violation& v) {
    std::ostringstream oss;
    switch (v.kind) {
    case ViolationKind::NonFinite:
        oss << "vertex " << v.index << " has a non-finite coordinate";
        break;
    case ViolationKind::Endpoint:
        oss << "pinned vertex " << v.index << " off by " << v.measured << " (tol " << v.bound << ")";
        break;
    case ViolationKind::EdgeLength:
        oss << "edge " << v.index << " has length " << v.measured << " (expected " << v.bound << ")";
        break;
    case ViolationKind::TriangleLower:
        oss << "chain distance at vertex " << v.index << " is " << v.measured
            << ", below lower bound " << v.bound;
        break;
    case ViolationKind::TriangleUpper:
        oss << "chain distance at vertex " << v.index << " is " << v.measured
            << ", above upper bound " << v.bound;
        break;
    }
    if (!v.message.empty()) oss << " [" << v.message << "]";
    return oss.str();
}

ValidationReport validate(const PolygonConfig& p, double tol) {
    require_valid_spec(p.spec);
    const int n = p.spec.n;
    if (static_cast<int>(p.vertices.size()) != n) {
        std::ostringstream oss;
        oss << "expected " << n << " vertices, got " << p.vertices.size();
        throw Error(ErrorCode::WrongArity, oss.str());
    }

    ValidationReport report;
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(p.vertices[i].x) || !std::isfinite(p.vertices[i].y)) {
            report.push_back({ViolationKind::NonFinite, i, 0.0, 0.0, ""});
        }
    }
    if (!report.empty()) return report; // distances below would be meaningless

    const PlanarPoint last = p.vertices[n - 1];

    const double d0 = distance(p.vertices[0], {0.0, 0.0});
    if (d0 > tol) {
        report.push_back({ViolationKind::Endpoint, 0, d0, tol, "expected (0, 0)"});
    }
    const double dn = distance(last, {p.spec.r, 0.0});
    if (dn > tol) {
        report.push_back({ViolationKind::Endpoint, n - 1, dn, tol, "expected (r, 0)"});
    }

    for (int i = 1; i < n; ++i) {
        const double len = distance(p.vertices[i - 1], p.vertices[i]);
        if (std::abs(len - 1.0) > tol) {
            report.push_back({ViolationKind::EdgeLength, i, len, 1.0, ""});
        }
    }

    for (int i = 0; i <= n - 2; ++i) {
        const double d = distance(p.vertices[i], last);
        const double lower = static_cast<double>(n - 2 - i);
        const double upper = static_cast<double>(n - 1 - i);
        if (d < lower - tol) {
            report.push_back({ViolationKind::TriangleLower, i, d, lower, ""});
        }
        if (d > upper + tol) {
            report.push_back({ViolationKind::TriangleUpper, i, d, upper, ""});
        }
    }
    return report;
}

void require_valid(const PolygonConfig& p, double tol) {
    const ValidationReport report = validate(p, tol);
    if (report.empty()) return;
    std::ostringstream oss;
    oss << report.size() << " constraint violation(s): " << to_string(report.front());
    if (report.size() > 1) oss << "; ...";
    throw Error(ErrorCode::InvalidPolygon, oss.str());
}

PolygonConfig reflect(const PolygonConfig& p) {
    PolygonConfig q = p;
    for (auto& v : q.vertices) v.y = -v.y;
    return q;
}

int tail_index(const PolygonConfig& p, double tol) {
    require_valid_spec(p.spec);
    const int n = p.spec.n;
    if (static_cast<int>(p.vertices.size()) != n) {
        throw Error(ErrorCode::WrongArity, "vertex count does not match n");
    }
    const PlanarPoint last = p.vertices[n - 1];

    double best_miss = std::numeric_limits<double>::infinity();
    int best_i = -1;
    for (int i = 1; i <= n - 2; ++i) {
        const double miss = std::abs(distance(p.vertices[i], last) - static_cast<double>(n - 1 - i));
        if (miss <= tol) return i;
        if (miss < best_miss) {
            best_miss = miss;
            best_i = i;
        }
    }
    std::ostringstream oss;
    oss << "no chain-distance equality within tol " << tol << "; closest miss " << best_miss
        << " at index " << best_i;
    throw Error(ErrorCode::NotFound, oss.str());
}

} // namespace polysphere
