#include <polysphere/planner.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace polysphere {

namespace {

/// Max vertex distance between two frames; infinite on arity mismatch.
double frame_gap(const PolygonConfig& a, const PolygonConfig& b) {
    if (a.vertices.size() != b.vertices.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        worst = std::max(worst, distance(a.vertices[i], b.vertices[i]));
    }
    return worst;
}

} // namespace

PathPlan plan(const ModuliSpec& spec, const PolygonConfig& p, const PolygonConfig& q, int steps,
              PlanMode mode, double tol) {
    require_valid_spec(spec);
    if (steps < 1) {
        throw Error(ErrorCode::OutOfRange, "steps = " + std::to_string(steps) + ", need >= 1");
    }
    if (!(p.spec == spec) || !(q.spec == spec)) {
        throw Error(ErrorCode::SpecMismatch, "endpoint polygons must carry the plan's spec");
    }

    const SphereVector u = phi_forward_cart(p, tol);
    SphereVector v = phi_forward_cart(q, tol);
    if (mode == PlanMode::Unoriented) {
        double dot = 0.0;
        for (std::size_t i = 0; i < u.dim(); ++i) dot += u.x[i] * v.x[i];
        if (dot < 0.0) v = antipode(v); // nearer end of the antipodal pair
    }

    PathPlan out;
    out.spec = spec;
    out.mode = mode;
    out.angle = angle_between(u, v);
    out.frames.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(steps);
        out.frames.push_back(phi_inverse_cart(spec, slerp(u, v, s, tol), tol));
    }
    return out;
}

std::vector<std::string> validate_plan(const PathPlan& plan, double tol) {
    std::vector<std::string> problems;
    if (!spec_is_valid(plan.spec)) {
        problems.push_back("plan spec out of range: n = " + std::to_string(plan.spec.n) +
                           ", r = " + format_double(plan.spec.r));
        return problems;
    }
    if (plan.frames.empty()) {
        problems.push_back("plan has no frames");
        return problems;
    }

    const double limit =
        plan.mode == PlanMode::Oriented ? std::numbers::pi : std::numbers::pi / 2.0;
    if (!(plan.angle >= -tol && plan.angle <= limit + tol)) {
        problems.push_back("angle " + format_double(plan.angle) + " outside [0, " +
                           format_double(limit) + "]");
    }

    bool frames_ok = true;
    std::vector<SphereVector> images;
    images.reserve(plan.frames.size());
    for (std::size_t k = 0; k < plan.frames.size(); ++k) {
        const PolygonConfig& f = plan.frames[k];
        const std::string tag = "frame " + std::to_string(k) + ": ";
        if (!(f.spec == plan.spec)) {
            problems.push_back(tag + "spec differs from the plan's");
            frames_ok = false;
            continue;
        }
        ValidationReport report;
        try {
            report = validate(f, tol);
        } catch (const Error& e) {
            problems.push_back(tag + e.what());
            frames_ok = false;
            continue;
        }
        if (!report.empty()) {
            for (const Violation& viol : report) problems.push_back(tag + to_string(viol));
            frames_ok = false;
            continue;
        }
        if (frames_ok) images.push_back(phi_forward_cart(f, tol));
    }
    if (!frames_ok) return problems;

    if (images.size() == 1) {
        if (std::abs(plan.angle) > tol) {
            problems.push_back("single frame but angle = " + format_double(plan.angle));
        }
        return problems;
    }
    const double step = plan.angle / static_cast<double>(images.size() - 1);
    for (std::size_t k = 0; k + 1 < images.size(); ++k) {
        const double a = angle_between(images[k], images[k + 1]);
        if (std::abs(a - step) > tol) {
            problems.push_back("step " + std::to_string(k) + ": sphere angle " + format_double(a) +
                               ", expected " + format_double(step));
        }
    }
    return problems;
}

std::vector<std::string> validate_plan(const PathPlan& plan, const PolygonConfig& start,
                                       const PolygonConfig& goal, double tol) {
    std::vector<std::string> problems = validate_plan(plan, tol);
    if (plan.frames.empty()) return problems;

    const double start_gap = frame_gap(plan.frames.front(), start);
    if (!(start_gap <= tol)) {
        problems.push_back("start endpoint off by " + format_double(start_gap));
    }
    double goal_gap = frame_gap(plan.frames.back(), goal);
    if (plan.mode == PlanMode::Unoriented) {
        goal_gap = std::min(goal_gap, frame_gap(plan.frames.back(), reflect(goal)));
    }
    if (!(goal_gap <= tol)) {
        problems.push_back("goal endpoint off by " + format_double(goal_gap));
    }
    return problems;
}

} // namespace polysphere
