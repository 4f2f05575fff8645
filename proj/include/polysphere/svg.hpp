#pragma once

#include <polysphere/planner.hpp>

#include <string>
#include <vector>

namespace polysphere {

struct SvgOptions {
    bool overlay = false;  // unit circles about v_0..v_{i0-1} and constraint arcs
    double scale = 120.0;  // pixels per unit length
    double margin = 0.5;   // padding around the drawing, in unit lengths
    double tol = kDefaultTol; // tail detection tolerance for the overlay
};

/// Deterministic standalone SVG for one configuration: n-1 edge lines,
/// n vertex markers with index labels, and with overlay on, the unit circle
/// about each vertex before the tail index plus the constraint arcs of radii
/// 1..n-2 about the far endpoint (drawn as their left halves, the side the
/// chain lives on). Same input and options give identical bytes.
std::string render_svg(const PolygonConfig& p, const SvgOptions& opts = {});

/// One SVG per frame, all sharing a common view box so the frames register
/// when flipped through.
std::vector<std::string> render_svg(const PathPlan& plan, const SvgOptions& opts = {});

} // namespace polysphere
