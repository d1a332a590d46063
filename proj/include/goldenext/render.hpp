#pragma once

#include <string>

namespace goldenext {

enum class FigureKind { fig1_min_area, fig2_sequence, fig3_construction };

struct RenderSpec {
    FigureKind figure = FigureKind::fig1_min_area;
    unsigned width_px = 800;
    unsigned height_px = 600;
    bool annotate = true;
    // fig2 only: overlays T_1 .. T_n_max plus the limit triangle.
    unsigned n_max = 3;
};

// A rendered SVG plus the world-to-pixel transform it used, so callers can
// map drawn coordinates back: px_x = offset_x + scale * x and
// px_y = offset_y - scale * y.
struct Figure {
    std::string svg;
    double scale = 1.0;
    double offset_x = 0.0;
    double offset_y = 0.0;
};

// fig1: the smallest circumscribing triangle around the unit semicircle,
// with the tangency radii. fig2: the golden right-triangle sequence on a
// shared unit leg. fig3: the full compass-straightedge trace of T2.
// Throws std::invalid_argument on zero dimensions or a bad fig2 range.
Figure render_figure(const RenderSpec& spec);

}  // namespace goldenext
