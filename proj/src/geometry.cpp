#include <polysphere/geometry.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace polysphere {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

std::string format_double(double x) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec; // 40 chars always suffice for a double
    return std::string(buf, end);
}

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::DegenerateCenter: return "DegenerateCenter";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotOnCircle: return "NotOnCircle";
    case ErrorCode::OutsideArc: return "OutsideArc";
    case ErrorCode::DegenerateArc: return "DegenerateArc";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AntipodalEndpoints: return "AntipodalEndpoints";
    case ErrorCode::InvalidCoords: return "InvalidCoords";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::InconsistentGeometry: return "InconsistentGeometry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

double distance(PlanarPoint a, PlanarPoint b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

double wrap_angle(double a) {
    double w = std::remainder(a, kTwoPi); // [-pi, pi]
    if (w <= -kPi) w = kPi;               // half-open on the left
    return w;
}

double direction_angle(PlanarPoint from, PlanarPoint to) {
    return wrap_angle(std::atan2(to.y - from.y, to.x - from.x));
}

ArcSpec cut_arc(PlanarPoint center, PlanarPoint target, double radius, double tol) {
    const double d = distance(center, target);
    if (d <= tol) {
        throw Error(ErrorCode::DegenerateCenter,
                    "constraint point coincides with circle center (d = " + std::to_string(d) + ")");
    }
    if (radius < 0.0 || d > radius + 1.0 + tol) {
        throw Error(ErrorCode::NoIntersection,
                    "constraint disk misses the unit circle (d = " + std::to_string(d) +
                        ", radius = " + std::to_string(radius) + ")");
    }
    if (d < radius - 1.0 - tol) {
        throw Error(ErrorCode::NoIntersection,
                    "unit circle lies strictly inside the constraint disk (d = " + std::to_string(d) +
                        ", radius = " + std::to_string(radius) + ")");
    }

    ArcSpec arc;
    arc.center = center;
    arc.theta_c = direction_angle(center, target);
    const double cos_half = std::clamp((d * d + 1.0 - radius * radius) / (2.0 * d), -1.0, 1.0);
    arc.half_angle = std::acos(cos_half);
    return arc;
}

PlanarPoint arc_point(const ArcSpec& arc, double t) {
    if (std::abs(t) > 1.0) {
        throw Error(ErrorCode::OutOfRange, "arc parameter " + std::to_string(t) + " outside [-1, 1]");
    }
    const double a = arc.theta_c + t * arc.half_angle;
    return {arc.center.x + std::cos(a), arc.center.y + std::sin(a)};
}

double arc_parameter(const ArcSpec& arc, PlanarPoint p, double tol) {
    const double radial = distance(arc.center, p);
    if (std::abs(radial - 1.0) > tol) {
        throw Error(ErrorCode::NotOnCircle,
                    "point at radius " + std::to_string(radial) + " from arc center");
    }
    if (arc.half_angle <= std::max(tol, kMinHalfAngle)) {
        throw Error(ErrorCode::DegenerateArc,
                    "half-angle " + std::to_string(arc.half_angle) + " too small to parametrize");
    }
    const double offset = wrap_angle(direction_angle(arc.center, p) - arc.theta_c);
    if (std::abs(offset) > arc.half_angle + tol) {
        throw Error(ErrorCode::OutsideArc,
                    "angular offset " + std::to_string(offset) + " exceeds half-angle " +
                        std::to_string(arc.half_angle));
    }
    return std::clamp(offset / arc.half_angle, -1.0, 1.0);
}

} // namespace polysphere
