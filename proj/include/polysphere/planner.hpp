#pragma once

#include <polysphere/phi.hpp>

namespace polysphere {

/// Oriented plans move on the sphere model; unoriented plans treat a polygon
/// and its mirror image as the same state and may steer toward the antipode
/// when that is closer.
enum class PlanMode {
    Oriented,
    Unoriented,
};

struct PathPlan {
    ModuliSpec spec;
    PlanMode mode = PlanMode::Oriented;
    double angle = 0.0; // geodesic length in radians on the sphere model
    std::vector<PolygonConfig> frames;
};

/// Geodesic motion plan from p to q: both endpoints are mapped to the
/// sphere, the great-circle arc between the images is sampled at steps+1
/// evenly spaced points, and each point is pulled back to a polygon. Every
/// frame is a valid configuration by construction, and consecutive frames
/// are a constant sphere angle apart (angle / steps).
///
/// In unoriented mode the goal image is replaced by its antipode when that
/// shortens the arc, so the plan may end at the mirror image of q and angle
/// never exceeds pi/2.
///
/// Throws InvalidSpec / SpecMismatch / InvalidPolygon for bad inputs,
/// OutOfRange for steps < 1, and AntipodalEndpoints when the geodesic is
/// not unique (oriented mode only; callers route via a waypoint).
PathPlan plan(const ModuliSpec& spec, const PolygonConfig& p, const PolygonConfig& q, int steps,
              PlanMode mode = PlanMode::Oriented, double tol = kDefaultTol);

/// Consistency audit of a plan: per-frame polygon validity and spec
/// agreement, the angle range for the mode, and constant per-step spacing
/// of the frame images on the sphere. Returns one message per problem;
/// empty means consistent.
std::vector<std::string> validate_plan(const PathPlan& plan, double tol = kDefaultTol);

/// Same audit plus endpoint reproduction: frames.front() must match start
/// and frames.back() must match goal within tol (in unoriented mode, the
/// goal may be matched up to reflection).
std::vector<std::string> validate_plan(const PathPlan& plan, const PolygonConfig& start,
                                       const PolygonConfig& goal, double tol = kDefaultTol);

} // namespace polysphere
