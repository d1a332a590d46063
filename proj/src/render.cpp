#include "goldenext/render.hpp"

#include "goldenext/construct.hpp"
#include "goldenext/extremal.hpp"
#include "goldenext/geometry.hpp"
#include "goldenext/goldenseq.hpp"
#include "goldenext/radical.hpp"
#include "goldenext/svg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldenext {

namespace {

Point foot_of_perpendicular(Point p, Point a, Point b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
    return {a.x + t * dx, a.y + t * dy};
}

Figure finish(const SvgCanvas& canvas) {
    return {canvas.finish(), canvas.scale(), canvas.offset_x(), canvas.offset_y()};
}

Figure render_fig1(const RenderSpec& spec) {
    const AreaSolution sol = solve_min_area_analytic();
    const TriangleGeom tri = realize_tangent_triangle(sol.ab, sol.ac, false);

    const double min_x = std::min({tri.A.x, tri.B.x, tri.C.x, -1.0});
    const double max_x = std::max({tri.A.x, tri.B.x, tri.C.x, 1.0});
    const double max_y = std::max(tri.A.y, 1.0);
    SvgCanvas canvas(spec.width_px, spec.height_px, min_x, 0.0, max_x, max_y);

    canvas.line(tri.B.x, tri.B.y, tri.C.x, tri.C.y, "edge");
    canvas.line(tri.A.x, tri.A.y, tri.B.x, tri.B.y, "tangent");
    canvas.line(tri.A.x, tri.A.y, tri.C.x, tri.C.y, "tangent");
    canvas.upper_arc(0, 0, 1, "semicircle");

    const Point d = foot_of_perpendicular(tri.O, tri.A, tri.B);
    const Point e = foot_of_perpendicular(tri.O, tri.A, tri.C);
    canvas.line(tri.O.x, tri.O.y, d.x, d.y, "radius");
    canvas.line(tri.O.x, tri.O.y, e.x, e.y, "radius");

    canvas.marker(tri.A.x, tri.A.y, "A");
    canvas.marker(tri.B.x, tri.B.y, "B");
    canvas.marker(tri.C.x, tri.C.y, "C");
    canvas.marker(tri.O.x, tri.O.y, "O");
    canvas.marker(d.x, d.y, "D");
    canvas.marker(e.x, e.y, "E");
    if (spec.annotate) {
        canvas.text(tri.A.x, tri.A.y, "A");
        canvas.text(tri.B.x, tri.B.y, "B");
        canvas.text(tri.C.x, tri.C.y, "C");
        canvas.text(tri.O.x, tri.O.y, "O");
        canvas.text(d.x, d.y, "D");
        canvas.text(e.x, e.y, "E");
    }
    return finish(canvas);
}

Figure render_fig2(const RenderSpec& spec) {
    if (spec.n_max < 1 || spec.n_max > 12) {
        throw std::invalid_argument("fig2 overlays 1 <= n-max <= 12 triangles");
    }
    const LimitTriangle limit = tn_limit();
    const double limit_mid = radical_to_double(limit.side_mid);
    std::vector<double> mids;
    double top = limit_mid;
    for (unsigned n = 1; n <= spec.n_max; ++n) {
        mids.push_back(radical_to_double(tn_entry(n).side_mid));
        top = std::max(top, mids.back());
    }

    SvgCanvas canvas(spec.width_px, spec.height_px, 0.0, 0.0, 1.0, top);
    canvas.line(0, 0, 1, 0, "edge");
    // dashed limit triangle underneath the sequence members
    canvas.line(0, 0, 0, limit_mid, "leg-limit");
    canvas.line(0, limit_mid, 1, 0, "hyp-limit");
    if (spec.annotate) canvas.text(0, limit_mid, "T∞");
    for (unsigned n = 1; n <= spec.n_max; ++n) {
        const std::string tag = "T" + std::to_string(n);
        canvas.line(0, 0, 0, mids[n - 1], "leg-" + tag);
        canvas.line(0, mids[n - 1], 1, 0, "hyp-" + tag);
        if (spec.annotate) canvas.text(0, mids[n - 1], tag);
    }
    return finish(canvas);
}

Figure render_fig3(const RenderSpec& spec) {
    const ConstructionTrace trace = construct_T2().first;
    auto pt = [&](const char* id) -> Point {
        const GeomObject& g = trace.object(id);
        return {g.num[0].convert_to<double>(), g.num[1].convert_to<double>()};
    };
    struct Disc {
        Point center;
        double r;
    };
    auto disc = [&](const char* id) -> Disc {
        const GeomObject& g = trace.object(id);
        return {{g.num[0].convert_to<double>(), g.num[1].convert_to<double>()},
                sqrt(g.num[2]).convert_to<double>()};
    };

    const Point b = pt("B"), c = pt("C"), a = pt("A"), d = pt("D");
    const Point o = pt("O"), e = pt("E");
    const Disc circ_b = disc("circ_B"), circ_c = disc("circ_C"), circ_g = disc("circ_G");
    const Disc arc_m = disc("arc_M"), arc_o = disc("arc_O");

    double min_x = 0, max_x = 1, min_y = 0, max_y = 0;
    for (const Disc& k : {circ_b, circ_c, circ_g}) {
        min_x = std::min(min_x, k.center.x - k.r);
        max_x = std::max(max_x, k.center.x + k.r);
        min_y = std::min(min_y, k.center.y - k.r);
        max_y = std::max(max_y, k.center.y + k.r);
    }
    for (const Disc& k : {arc_m, arc_o}) {
        min_x = std::min(min_x, k.center.x - k.r);
        max_x = std::max(max_x, k.center.x + k.r);
        max_y = std::max(max_y, k.center.y + k.r);
    }
    max_y = std::max(max_y, e.y);

    SvgCanvas canvas(spec.width_px, spec.height_px, min_x, min_y, max_x, max_y);
    for (const Disc& k : {circ_b, circ_c, circ_g}) {
        canvas.circle(k.center.x, k.center.y, k.r, "construction");
    }
    canvas.upper_arc(arc_m.center.x, arc_m.center.y, arc_m.r, "arc");
    canvas.upper_arc(arc_o.center.x, arc_o.center.y, arc_o.r, "arc");

    canvas.line(c.x, c.y, d.x, d.y, "rect");
    canvas.line(d.x, d.y, a.x, a.y, "rect");
    canvas.line(b.x, b.y, c.x, c.y, "edge");
    canvas.line(e.x, e.y, b.x, b.y, "tri");
    canvas.line(e.x, e.y, c.x, c.y, "tri");

    canvas.marker(b.x, b.y, "B");
    canvas.marker(o.x, o.y, "O");
    canvas.marker(c.x, c.y, "C");
    canvas.marker(a.x, a.y, "A");
    canvas.marker(e.x, e.y, "E");
    canvas.text(b.x, b.y, "B");
    canvas.text(o.x, o.y, "O");
    canvas.text(c.x, c.y, "C");
    canvas.text(a.x, a.y, "A");
    canvas.text(e.x, e.y, "E");
    if (spec.annotate) {
        for (const char* id : {"D", "G", "F", "M", "H1", "H2"}) {
            const Point p = pt(id);
            canvas.marker(p.x, p.y, id);
            canvas.text(p.x, p.y, id);
        }
    }
    return finish(canvas);
}

}  // namespace

Figure render_figure(const RenderSpec& spec) {
    if (spec.width_px == 0 || spec.height_px == 0) {
        throw std::invalid_argument("figure dimensions must be positive");
    }
    switch (spec.figure) {
        case FigureKind::fig1_min_area: return render_fig1(spec);
        case FigureKind::fig2_sequence: return render_fig2(spec);
        case FigureKind::fig3_construction: return render_fig3(spec);
    }
    throw std::invalid_argument("unknown figure");
}

}  // namespace goldenext
