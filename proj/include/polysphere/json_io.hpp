#pragma once

#include <polysphere/planner.hpp>

#include <string>

namespace polysphere {

/// Text codecs for the three document kinds. All writers emit compact JSON
/// with shortest-round-trip floats, so equal values give equal bytes and
/// decode(encode(v)) == v exactly.
///
/// Readers throw ParseError naming the offending field for structural
/// problems. polygon_from_json additionally validates the geometry and
/// throws ValidationError listing the report when it is non-empty.

/// {"n": int, "r": float, "vertices": [[x, y] * n]}
std::string polygon_to_json(const PolygonConfig& p);
PolygonConfig polygon_from_json(const std::string& text, double tol = kDefaultTol);

/// {"n": int, "r": float, "t": [float * (n-2)], "i0": int, "x": [float * (n-2)]}
/// where x is the Cartesian form of t (always derived on write). On read, t
/// is authoritative when present (i0 inferred if missing); otherwise x is
/// converted.
struct CoordsRecord {
    ModuliSpec spec;
    SuspensionCoords coords;
};
std::string coords_to_json(const ModuliSpec& spec, const SuspensionCoords& s);
CoordsRecord coords_from_json(const std::string& text, double tol = kDefaultTol);

/// {"spec": {"n", "r"}, "mode": "oriented" | "unoriented", "angle": float,
///  "frames": [polygon * (steps+1)]}. Decoding is structural only; run
/// validate_plan for the geometric audit.
std::string plan_to_json(const PathPlan& plan);
PathPlan plan_from_json(const std::string& text);

/// One row per frame, flattened vertex coordinates:
/// frame,x0,y0,...,x{n-1},y{n-1}
std::string plan_to_csv(const PathPlan& plan);

} // namespace polysphere
