#include <polysphere/check.hpp>
#include <polysphere/json_io.hpp>
#include <polysphere/svg.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace polysphere;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << data;
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

/// frames.svg -> frames_007.svg
std::string numbered_path(const std::string& path, std::size_t index) {
    char suffix[8];
    std::snprintf(suffix, sizeof(suffix), "_%03zu", index);
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + suffix;
    }
    return path.substr(0, dot) + suffix + path.substr(dot);
}

PlanMode parse_mode(const std::string& mode) {
    return mode == "unoriented" ? PlanMode::Unoriented : PlanMode::Oriented;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar polygon configurations, their sphere coordinates, and geodesic plans"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string goal_path;
    std::string out_path;
    std::string csv_path;
    std::string mode_str = "oriented";
    double tol = kDefaultTol;
    double check_tol = 1e-8;
    int n = 6;
    double r = 4.5;
    std::uint64_t seed = 0;
    int count = 1;
    int steps = 16;
    bool overlay = false;

    CLI::App* map_cmd = app.add_subcommand("map", "Polygon JSON to sphere coordinates JSON");
    map_cmd->add_option("input", input, "polygon JSON file, - for stdin");
    map_cmd->add_option("--tol", tol, "validation tolerance");
    map_cmd->add_option("--out", out_path, "output file, default stdout");

    CLI::App* unmap_cmd = app.add_subcommand("unmap", "Coordinates JSON to polygon JSON");
    unmap_cmd->add_option("input", input, "coordinates JSON file, - for stdin");
    unmap_cmd->add_option("--tol", tol, "coordinate tolerance");
    unmap_cmd->add_option("--out", out_path, "output file, default stdout");

    CLI::App* reflect_cmd = app.add_subcommand("reflect", "Mirror a polygon across the x-axis");
    reflect_cmd->add_option("input", input, "polygon JSON file, - for stdin");
    reflect_cmd->add_option("--tol", tol, "validation tolerance");
    reflect_cmd->add_option("--out", out_path, "output file, default stdout");

    CLI::App* plan_cmd = app.add_subcommand("plan", "Geodesic plan between two polygons");
    plan_cmd->add_option("start", input, "start polygon JSON file")->required();
    plan_cmd->add_option("goal", goal_path, "goal polygon JSON file")->required();
    plan_cmd->add_option("--steps", steps, "number of geodesic steps (frames - 1)");
    plan_cmd->add_option("--mode", mode_str, "oriented or unoriented")
        ->check(CLI::IsMember({"oriented", "unoriented"}));
    plan_cmd->add_option("--tol", tol, "validation tolerance");
    plan_cmd->add_option("--out", out_path, "plan JSON output file, default stdout");
    plan_cmd->add_option("--csv", csv_path, "also write the trajectory as CSV");

    CLI::App* sample_cmd = app.add_subcommand("sample", "Seeded random polygons as a JSON array");
    sample_cmd->add_option("--n", n, "vertex count")->required();
    sample_cmd->add_option("--r", r, "long side length")->required();
    sample_cmd->add_option("--seed", seed, "RNG seed");
    sample_cmd->add_option("--count", count, "number of polygons");
    sample_cmd->add_option("--out", out_path, "output file, default stdout");

    CLI::App* check_cmd = app.add_subcommand("check", "Seeded property sweep, JSON summary");
    check_cmd->add_option("--n", n, "vertex count")->required();
    check_cmd->add_option("--r", r, "long side length")->required();
    check_cmd->add_option("--seed", seed, "RNG seed");
    check_cmd->add_option("--count", count, "number of samples");
    check_cmd->add_option("--tol", check_tol, "pass threshold for the maxima");
    check_cmd->add_option("--out", out_path, "output file, default stdout");

    CLI::App* render_cmd = app.add_subcommand("render", "Polygon or plan JSON to SVG");
    render_cmd->add_option("input", input, "polygon or plan JSON file, - for stdin");
    render_cmd->add_flag("--overlay", overlay, "draw unit circles and constraint arcs");
    render_cmd->add_option("--tol", tol, "validation tolerance");
    render_cmd->add_option("--out", out_path, "output SVG file; required for plans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (map_cmd->parsed()) {
            const PolygonConfig p = polygon_from_json(read_input(input), tol);
            write_output(out_path, coords_to_json(p.spec, phi_forward(p, tol)) + "\n");
        } else if (unmap_cmd->parsed()) {
            const CoordsRecord rec = coords_from_json(read_input(input), tol);
            write_output(out_path, polygon_to_json(phi_inverse(rec.spec, rec.coords, tol)) + "\n");
        } else if (reflect_cmd->parsed()) {
            const PolygonConfig p = polygon_from_json(read_input(input), tol);
            write_output(out_path, polygon_to_json(reflect(p)) + "\n");
        } else if (plan_cmd->parsed()) {
            const PolygonConfig p = polygon_from_json(read_input(input), tol);
            const PolygonConfig q = polygon_from_json(read_input(goal_path), tol);
            const PathPlan path = plan(p.spec, p, q, steps, parse_mode(mode_str), tol);
            write_output(out_path, plan_to_json(path) + "\n");
            if (!csv_path.empty()) write_output(csv_path, plan_to_csv(path));
        } else if (sample_cmd->parsed()) {
            const ModuliSpec spec{n, r};
            require_valid_spec(spec);
            if (count < 1) throw Error(ErrorCode::OutOfRange, "count must be >= 1");
            std::mt19937_64 rng(seed);
            std::string out = "[";
            for (int k = 0; k < count; ++k) {
                if (k > 0) out += ",";
                const SphereVector w =
                    sample_uniform(static_cast<std::size_t>(spec.n - 2), rng);
                out += polygon_to_json(phi_inverse_cart(spec, w));
            }
            out += "]\n";
            write_output(out_path, out);
        } else if (check_cmd->parsed()) {
            const CheckSummary summary = run_check(ModuliSpec{n, r}, count, seed, check_tol);
            write_output(out_path, check_to_json(summary) + "\n");
            if (!summary.pass) {
                std::cerr << "check failed: a maximum exceeds tol = " << format_double(check_tol)
                          << "\n";
                return 1;
            }
        } else if (render_cmd->parsed()) {
            const std::string text = read_input(input);
            SvgOptions opts;
            opts.overlay = overlay;
            opts.tol = tol;
            bool is_plan = false;
            try {
                is_plan = nlohmann::json::parse(text).contains("frames");
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorCode::ParseError, e.what());
            }
            if (is_plan) {
                if (out_path.empty() || out_path == "-") {
                    std::cerr << "render: plans need --out to name the per-frame files\n";
                    return 2;
                }
                const std::vector<std::string> docs = render_svg(plan_from_json(text), opts);
                for (std::size_t k = 0; k < docs.size(); ++k) {
                    write_output(numbered_path(out_path, k), docs[k]);
                }
            } else {
                write_output(out_path, render_svg(polygon_from_json(text, tol), opts));
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
