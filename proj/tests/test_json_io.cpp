#include <polysphere/json_io.hpp>
#include <polysphere/phi.hpp>

#include <doctest.h>

#include "fixtures.hpp"

#include <cmath>
#include <optional>
#include <string>

using namespace polysphere;

namespace {

bool same_vertices(const PolygonConfig& a, const PolygonConfig& b) {
    if (a.vertices.size() != b.vertices.size()) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        if (a.vertices[i].x != b.vertices[i].x) return false;
        if (a.vertices[i].y != b.vertices[i].y) return false;
    }
    return true;
}

std::optional<ErrorCode> code_of(const std::string& text, double tol) {
    try {
        static_cast<void>(polygon_from_json(text, tol));
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("polygon JSON round trip is bit exact") {
    const PolygonConfig p = fixtures::exact_quad();
    const std::string text = polygon_to_json(p);
    const PolygonConfig back = polygon_from_json(text);
    CHECK(back.spec.n == 4);
    CHECK(back.spec.r == 2.0);
    CHECK(same_vertices(p, back));
    CHECK(polygon_to_json(back) == text); // encoding is deterministic
}

TEST_CASE("figure fixtures decode under a loose tolerance only") {
    const std::string text = polygon_to_json(fixtures::figure1());
    CHECK(polygon_from_json(text, fixtures::kFigureTol).spec.n == 7);
    CHECK(code_of(text, 1e-9) == ErrorCode::ValidationError);
}

TEST_CASE("malformed polygon payloads raise ParseError") {
    CHECK(code_of("this is not json", 1e-9) == ErrorCode::ParseError);
    CHECK(code_of("[1, 2, 3]", 1e-9) == ErrorCode::ParseError);
    CHECK(code_of(R"({"n": 4, "r": 2.0})", 1e-9) == ErrorCode::ParseError);
    // Arity mismatch is reported at parse time, naming the field.
    const std::string three = R"({"n": 4, "r": 2.0,
        "vertices": [[0,0],[1,0],[2,0]]})";
    try {
        static_cast<void>(polygon_from_json(three, 1e-9));
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("vertices") != std::string::npos);
    }
    const std::string badpair = R"({"n": 4, "r": 2.0,
        "vertices": [[0,0],[1,0],[2,0],[2,0,7]]})";
    CHECK(code_of(badpair, 1.0) == ErrorCode::ParseError);
}

TEST_CASE("coordinate records round trip through JSON") {
    const ModuliSpec spec{5, 3.25};
    const SuspensionCoords s = make_suspension(5, {0.4, -0.3, 1.0}, 3);
    const std::string text = coords_to_json(spec, s);
    const CoordsRecord back = coords_from_json(text);
    CHECK(back.spec.n == 5);
    CHECK(back.spec.r == 3.25);
    CHECK(susp_equiv(back.coords, s, 1e-12));
    CHECK(coords_to_json(back.spec, back.coords) == text);
}

TEST_CASE("coordinate records accept x in place of t") {
    const std::string text = R"({"n": 4, "r": 2.0, "x": [0.6, 0.8]})";
    const CoordsRecord rec = coords_from_json(text);
    CHECK(rec.coords.i0 == 2);
    CHECK(rec.coords.t[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(rec.coords.t[1] == 1.0);
}

TEST_CASE("terminal index is inferred when omitted") {
    const std::string text = R"({"n": 5, "r": 3.5, "t": [0.25, -1.0, 0.9]})";
    const CoordsRecord rec = coords_from_json(text);
    CHECK(rec.coords.i0 == 2);
    CHECK(rec.coords.t[2] == 0.0); // canonical tail
}

TEST_CASE("coordinate payloads without t or x are rejected") {
    try {
        static_cast<void>(coords_from_json(R"({"n": 4, "r": 2.0})"));
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("plan JSON round trip") {
    const ModuliSpec spec{4, 2.0};
    const PolygonConfig p = phi_inverse(spec, make_suspension(4, {1.0, 0.0}, 1));
    const PolygonConfig q = phi_inverse(spec, make_suspension(4, {0.0, 1.0}, 2));
    const PathPlan out = plan(spec, p, q, 4);
    const std::string text = plan_to_json(out);
    const PathPlan back = plan_from_json(text);
    CHECK(back.mode == PlanMode::Oriented);
    CHECK(back.angle == out.angle);
    REQUIRE(back.frames.size() == out.frames.size());
    for (std::size_t k = 0; k < back.frames.size(); ++k) {
        CHECK(same_vertices(back.frames[k], out.frames[k]));
    }
    CHECK(plan_to_json(back) == text);

    SUBCASE("unknown mode strings are rejected") {
        std::string bad = text;
        const auto at = bad.find("\"oriented\"");
        REQUIRE(at != std::string::npos);
        bad.replace(at, 10, "\"sideways\"");
        try {
            static_cast<void>(plan_from_json(bad));
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("plan CSV layout") {
    const ModuliSpec spec{4, 2.0};
    const PolygonConfig p = phi_inverse(spec, make_suspension(4, {1.0, 0.0}, 1));
    const PolygonConfig q = phi_inverse(spec, make_suspension(4, {0.0, 1.0}, 2));
    const PathPlan out = plan(spec, p, q, 3);
    const std::string csv = plan_to_csv(out);
    CHECK(csv.rfind("frame,x0,y0,x1,y1,x2,y2,x3,y3\n", 0) == 0);
    int rows = 0;
    for (char c : csv) rows += c == '\n';
    CHECK(rows == 5); // header plus one row per frame
    CHECK(csv.find("0,0,0,") == 1 + csv.find('\n')); // frame 0 starts at the pins
}
