#include <polysphere/json_io.hpp>

#include <json.hpp>

#include <string>
#include <utility>

namespace polysphere {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

int int_at(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw Error(ErrorCode::ParseError, std::string(key) + ": expected an integer");
    }
    return j.at(key).get<int>();
}

double number_at(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw Error(ErrorCode::ParseError, std::string(key) + ": expected a number");
    }
    return j.at(key).get<double>();
}

std::vector<double> numbers_at(const json& j, const char* key, std::size_t count) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw Error(ErrorCode::ParseError, std::string(key) + ": expected an array");
    }
    const json& arr = j.at(key);
    if (arr.size() != count) {
        throw Error(ErrorCode::ParseError, std::string(key) + ": expected " +
                                               std::to_string(count) + " entries, got " +
                                               std::to_string(arr.size()));
    }
    std::vector<double> out;
    out.reserve(count);
    for (const json& e : arr) {
        if (!e.is_number()) {
            throw Error(ErrorCode::ParseError, std::string(key) + ": expected numbers");
        }
        out.push_back(e.get<double>());
    }
    return out;
}

json polygon_to_node(const PolygonConfig& p) {
    json verts = json::array();
    for (PlanarPoint v : p.vertices) verts.push_back(json::array({v.x, v.y}));
    json j;
    j["n"] = p.spec.n;
    j["r"] = p.spec.r;
    j["vertices"] = std::move(verts);
    return j;
}

PolygonConfig polygon_from_node(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "polygon: expected an object");
    PolygonConfig p;
    p.spec.n = int_at(j, "n");
    p.spec.r = number_at(j, "r");
    if (!j.contains("vertices") || !j.at("vertices").is_array()) {
        throw Error(ErrorCode::ParseError, "vertices: expected an array");
    }
    const json& verts = j.at("vertices");
    if (static_cast<int>(verts.size()) != p.spec.n) {
        throw Error(ErrorCode::ParseError,
                    "vertices: expected " + std::to_string(p.spec.n) + " entries, got " +
                        std::to_string(verts.size()));
    }
    p.vertices.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const json& e = verts.at(i);
        if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number()) {
            throw Error(ErrorCode::ParseError,
                        "vertices[" + std::to_string(i) + "]: expected [x, y]");
        }
        p.vertices.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
    }
    return p;
}

} // namespace

std::string polygon_to_json(const PolygonConfig& p) { return polygon_to_node(p).dump(); }

PolygonConfig polygon_from_json(const std::string& text, double tol) {
    PolygonConfig p = polygon_from_node(parse(text));
    const ValidationReport report = validate(p, tol);
    if (!report.empty()) {
        std::string msg = "polygon fails validation:";
        for (const Violation& v : report) msg += "\n  " + to_string(v);
        throw Error(ErrorCode::ValidationError, msg);
    }
    return p;
}

std::string coords_to_json(const ModuliSpec& spec, const SuspensionCoords& s) {
    require_valid_spec(spec);
    if (s.n != spec.n) {
        throw Error(ErrorCode::SpecMismatch, "coordinates for n = " + std::to_string(s.n) +
                                                 ", spec has n = " + std::to_string(spec.n));
    }
    json j;
    j["n"] = spec.n;
    j["r"] = spec.r;
    j["t"] = s.t;
    j["i0"] = s.i0;
    j["x"] = susp_to_cart(s).x;
    return j.dump();
}

CoordsRecord coords_from_json(const std::string& text, double tol) {
    const json j = parse(text);
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "coordinates: expected an object");
    CoordsRecord rec;
    rec.spec.n = int_at(j, "n");
    rec.spec.r = number_at(j, "r");
    require_valid_spec(rec.spec);
    const std::size_t m = static_cast<std::size_t>(rec.spec.n - 2);
    if (j.contains("t")) {
        std::vector<double> t = numbers_at(j, "t", m);
        if (j.contains("i0")) {
            rec.coords = make_suspension(rec.spec.n, std::move(t), int_at(j, "i0"), tol);
        } else {
            rec.coords = make_suspension(rec.spec.n, std::move(t), tol);
        }
    } else if (j.contains("x")) {
        SphereVector v;
        v.x = numbers_at(j, "x", m);
        rec.coords = cart_to_susp(v, tol);
    } else {
        throw Error(ErrorCode::ParseError, "coordinates: expected a \"t\" or \"x\" array");
    }
    return rec;
}

std::string plan_to_json(const PathPlan& plan) {
    json frames = json::array();
    for (const PolygonConfig& f : plan.frames) frames.push_back(polygon_to_node(f));
    json j;
    j["spec"] = {{"n", plan.spec.n}, {"r", plan.spec.r}};
    j["mode"] = plan.mode == PlanMode::Oriented ? "oriented" : "unoriented";
    j["angle"] = plan.angle;
    j["frames"] = std::move(frames);
    return j.dump();
}

PathPlan plan_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "plan: expected an object");
    if (!j.contains("spec") || !j.at("spec").is_object()) {
        throw Error(ErrorCode::ParseError, "spec: expected an object");
    }
    PathPlan plan;
    plan.spec.n = int_at(j.at("spec"), "n");
    plan.spec.r = number_at(j.at("spec"), "r");
    if (!j.contains("mode") || !j.at("mode").is_string()) {
        throw Error(ErrorCode::ParseError, "mode: expected \"oriented\" or \"unoriented\"");
    }
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "oriented") {
        plan.mode = PlanMode::Oriented;
    } else if (mode == "unoriented") {
        plan.mode = PlanMode::Unoriented;
    } else {
        throw Error(ErrorCode::ParseError, "mode: expected \"oriented\" or \"unoriented\"");
    }
    plan.angle = number_at(j, "angle");
    if (!j.contains("frames") || !j.at("frames").is_array()) {
        throw Error(ErrorCode::ParseError, "frames: expected an array");
    }
    for (const json& f : j.at("frames")) plan.frames.push_back(polygon_from_node(f));
    return plan;
}

std::string plan_to_csv(const PathPlan& plan) {
    std::string out = "frame";
    for (int i = 0; i < plan.spec.n; ++i) {
        out += ",x" + std::to_string(i) + ",y" + std::to_string(i);
    }
    out += "\n";
    for (std::size_t k = 0; k < plan.frames.size(); ++k) {
        out += std::to_string(k);
        for (PlanarPoint v : plan.frames[k].vertices) {
            out += "," + format_double(v.x) + "," + format_double(v.y);
        }
        out += "\n";
    }
    return out;
}

} // namespace polysphere
