#pragma once

#include <polysphere/error.hpp>

#include <string>

namespace polysphere {

/// Shortest decimal form that parses back to the exact same double. All
/// text output goes through this so that equal inputs give equal bytes.
std::string format_double(double x);

/// Default absolute tolerance on distances and radial deviations.
inline constexpr double kDefaultTol = 1e-9;

/// Below this half-angle an arc parameter is numerically meaningless and
/// arc_parameter refuses to evaluate; callers take the degenerate branch.
/// Position error of a reconstructed point scales with the half-angle, so
/// tiny-but-representable arcs are still safe to parametrize; this only has
/// to reject arcs whose angular offsets drown in rounding noise.
inline constexpr double kMinHalfAngle = 1e-9;

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

inline PlanarPoint operator+(PlanarPoint a, PlanarPoint b) { return {a.x + b.x, a.y + b.y}; }
inline PlanarPoint operator-(PlanarPoint a, PlanarPoint b) { return {a.x - b.x, a.y - b.y}; }
inline PlanarPoint operator*(double s, PlanarPoint p) { return {s * p.x, s * p.y}; }

double distance(PlanarPoint a, PlanarPoint b);

/// Canonical angle wrap to (-pi, pi]. All angle comparisons in the library
/// go through wrapped differences of this form.
double wrap_angle(double a);

/// Wrapped direction angle of the vector from `from` to `to`.
double direction_angle(PlanarPoint from, PlanarPoint to);

/// The arc cut off a unit circle by a disk constraint, parametrized linearly
/// by t in [-1, 1] moving counterclockwise.
///
/// The arc lives on the unit circle about `center`. `theta_c` is the direction
/// angle from the center toward the constraint point, and `half_angle` is the
/// angular half-width; the endpoints sit at theta_c +/- half_angle and are
/// equidistant from the constraint point.
struct ArcSpec {
    PlanarPoint center;
    double theta_c = 0.0;    // in (-pi, pi]
    double half_angle = 0.0; // in [0, pi]
};

/// Arc of the unit circle about `center` consisting of the points within
/// distance `radius` of `target`.
///
/// Derivation of the half-width: let d = |target - center| and consider the
/// triangle (center, target, endpoint) where the endpoint lies on the unit
/// circle at distance exactly `radius` from target. The law of cosines gives
///     radius^2 = d^2 + 1 - 2 d cos(half_angle)
/// so  half_angle = arccos((d^2 + 1 - radius^2) / (2 d)).
/// Distance to the target is strictly increasing in the angular offset from
/// theta_c on [0, pi], so the arc is exactly the offset range
/// [-half_angle, +half_angle]. The arccos argument is clamped to [-1, 1] to
/// absorb rounding at tangency.
///
/// Errors: NoIntersection when the circle and disk boundary miss each other
/// beyond tol (d > radius + 1 + tol, or the whole circle lies strictly inside
/// the disk, d < radius - 1 - tol, or the disk is empty); DegenerateCenter
/// when target coincides with center within tol.
ArcSpec cut_arc(PlanarPoint center, PlanarPoint target, double radius, double tol = kDefaultTol);

/// Point of the arc at parameter t in [-1, 1]; t = -1 and t = +1 are the
/// endpoints in counterclockwise order, t = 0 the point closest to the
/// constraint. Throws OutOfRange for |t| > 1.
PlanarPoint arc_point(const ArcSpec& arc, double t);

/// Inverse of arc_point on [-1, 1]: the linear parameter of a point lying on
/// the arc. Throws NotOnCircle if p is not on the unit circle within tol,
/// OutsideArc if its angular offset exceeds half_angle beyond tol, and
/// DegenerateArc when half_angle <= max(tol, kMinHalfAngle).
double arc_parameter(const ArcSpec& arc, PlanarPoint p, double tol = kDefaultTol);

} // namespace polysphere
