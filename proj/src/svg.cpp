#include <polysphere/svg.hpp>

#include <algorithm>
#include <string>

namespace polysphere {

namespace {

struct Box {
    double minx = 0.0;
    double miny = 0.0;
    double maxx = 0.0;
    double maxy = 0.0;
    bool empty = true;

    void grow(double x, double y) {
        if (empty) {
            minx = maxx = x;
            miny = maxy = y;
            empty = false;
            return;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }

    void grow_circle(PlanarPoint c, double rad) {
        grow(c.x - rad, c.y - rad);
        grow(c.x + rad, c.y + rad);
    }
};

void grow_frame(Box& box, const PolygonConfig& p, const SvgOptions& opts) {
    for (PlanarPoint v : p.vertices) box.grow(v.x, v.y);
    if (!opts.overlay) return;
    const int i0 = tail_index(p, opts.tol);
    for (int i = 0; i < i0; ++i) {
        box.grow_circle(p.vertices[static_cast<std::size_t>(i)], 1.0);
    }
    // Constraint arcs are drawn as the left halves of the circles about the
    // far endpoint, so they extend one radius up, down, and leftward.
    const PlanarPoint far = p.vertices[static_cast<std::size_t>(p.spec.n - 1)];
    const double top = static_cast<double>(p.spec.n - 2);
    box.grow(far.x - top, far.y - top);
    box.grow(far.x, far.y + top);
}

std::string render_frame(const PolygonConfig& p, const SvgOptions& opts, const Box& box) {
    const double s = opts.scale;
    const double m = opts.margin;
    const auto pxn = [&](double x) { return (x - box.minx + m) * s; };
    const auto pyn = [&](double y) { return (box.maxy - y + m) * s; };
    const double width = (box.maxx - box.minx + 2.0 * m) * s;
    const double height = (box.maxy - box.miny + 2.0 * m) * s;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(width) +
           "\" height=\"" + format_double(height) + "\" viewBox=\"0 0 " + format_double(width) +
           " " + format_double(height) + "\">\n";
    out += "<style>"
           ".edge{stroke:#222;stroke-width:2;fill:none}"
           ".unit-circle{stroke:#999;stroke-width:1;fill:none;stroke-dasharray:4 3}"
           ".constraint-arc{stroke:#a44;stroke-width:1;fill:none}"
           ".vertex{fill:#222}"
           ".label{font:12px monospace;fill:#222}"
           "</style>\n";

    const int n = p.spec.n;
    const auto& v = p.vertices;
    if (opts.overlay) {
        const int i0 = tail_index(p, opts.tol);
        for (int i = 0; i < i0; ++i) {
            const PlanarPoint c = v[static_cast<std::size_t>(i)];
            out += "<circle class=\"unit-circle\" cx=\"" + format_double(pxn(c.x)) + "\" cy=\"" +
                   format_double(pyn(c.y)) + "\" r=\"" + format_double(s) + "\"/>\n";
        }
        const PlanarPoint far = v[static_cast<std::size_t>(n - 1)];
        for (int rho = 1; rho <= n - 2; ++rho) {
            const double rad = static_cast<double>(rho);
            out += "<path class=\"constraint-arc\" d=\"M " + format_double(pxn(far.x)) + " " +
                   format_double(pyn(far.y + rad)) + " A " + format_double(rad * s) + " " +
                   format_double(rad * s) + " 0 0 0 " + format_double(pxn(far.x)) + " " +
                   format_double(pyn(far.y - rad)) + "\"/>\n";
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        const PlanarPoint a = v[static_cast<std::size_t>(i)];
        const PlanarPoint b = v[static_cast<std::size_t>(i + 1)];
        out += "<line class=\"edge\" x1=\"" + format_double(pxn(a.x)) + "\" y1=\"" +
               format_double(pyn(a.y)) + "\" x2=\"" + format_double(pxn(b.x)) + "\" y2=\"" +
               format_double(pyn(b.y)) + "\"/>\n";
    }
    for (int i = 0; i < n; ++i) {
        const PlanarPoint c = v[static_cast<std::size_t>(i)];
        out += "<circle class=\"vertex\" cx=\"" + format_double(pxn(c.x)) + "\" cy=\"" +
               format_double(pyn(c.y)) + "\" r=\"3.5\"/>\n";
        out += "<text class=\"label\" x=\"" + format_double(pxn(c.x) + 6.0) + "\" y=\"" +
               format_double(pyn(c.y) - 6.0) + "\">" + std::to_string(i) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace

std::string render_svg(const PolygonConfig& p, const SvgOptions& opts) {
    require_valid(p, opts.tol);
    Box box;
    grow_frame(box, p, opts);
    return render_frame(p, opts, box);
}

std::vector<std::string> render_svg(const PathPlan& plan, const SvgOptions& opts) {
    Box box;
    for (const PolygonConfig& f : plan.frames) {
        require_valid(f, opts.tol);
        grow_frame(box, f, opts);
    }
    std::vector<std::string> out;
    out.reserve(plan.frames.size());
    for (const PolygonConfig& f : plan.frames) out.push_back(render_frame(f, opts, box));
    return out;
}

} // namespace polysphere
