#include "goldenext/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace goldenext {

std::string svg_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    std::string out(buf);
    if (out == "-0.000000000") out = "0.000000000";
    return out;
}

SvgCanvas::SvgCanvas(unsigned width_px, unsigned height_px, double min_x, double min_y,
                     double max_x, double max_y)
    : width_(width_px), height_(height_px) {
    if (width_px == 0 || height_px == 0) {
        throw std::invalid_argument("canvas dimensions must be positive");
    }
    if (!(max_x > min_x) || !(max_y > min_y)) {
        throw std::invalid_argument("degenerate world box");
    }
    const double usable_w = 0.9 * width_px;
    const double usable_h = 0.9 * height_px;
    scale_ = std::min(usable_w / (max_x - min_x), usable_h / (max_y - min_y));
    ox_ = (width_px - scale_ * (max_x - min_x)) / 2 - scale_ * min_x;
    oy_ = (height_px - scale_ * (max_y - min_y)) / 2 + scale_ * max_y;
}

void SvgCanvas::line(double x1, double y1, double x2, double y2, const std::string& cls) {
    body_ += "<line class=\"" + cls + "\" x1=\"" + svg_num(px_x(x1)) + "\" y1=\"" +
             svg_num(px_y(y1)) + "\" x2=\"" + svg_num(px_x(x2)) + "\" y2=\"" +
             svg_num(px_y(y2)) + "\"/>\n";
}

void SvgCanvas::circle(double cx, double cy, double r, const std::string& cls) {
    body_ += "<circle class=\"" + cls + "\" cx=\"" + svg_num(px_x(cx)) + "\" cy=\"" +
             svg_num(px_y(cy)) + "\" r=\"" + svg_num(scale_ * r) + "\"/>\n";
}

void SvgCanvas::marker(double cx, double cy, const std::string& id) {
    body_ += "<circle class=\"marker\" id=\"pt-" + id + "\" cx=\"" + svg_num(px_x(cx)) +
             "\" cy=\"" + svg_num(px_y(cy)) + "\" r=\"3\"/>\n";
}

void SvgCanvas::upper_arc(double cx, double cy, double r, const std::string& cls) {
    const double pr = scale_ * r;
    body_ += "<path class=\"" + cls + "\" d=\"M " + svg_num(px_x(cx - r)) + " " +
             svg_num(px_y(cy)) + " A " + svg_num(pr) + " " + svg_num(pr) + " 0 0 1 " +
             svg_num(px_x(cx + r)) + " " + svg_num(px_y(cy)) + "\"/>\n";
}

void SvgCanvas::text(double wx, double wy, const std::string& label) {
    body_ += "<text class=\"label\" x=\"" + svg_num(px_x(wx) + 6) + "\" y=\"" +
             svg_num(px_y(wy) - 6) + "\">" + label + "</text>\n";
}

std::string SvgCanvas::finish() const {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width_) + "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " +
           std::to_string(width_) + " " + std::to_string(height_) + "\">\n";
    out +=
        "<style>\n"
        "line, path, circle { fill: none; stroke: #222; stroke-width: 1.5; }\n"
        ".edge { stroke-width: 2; }\n"
        ".tangent, .tri, .hyp-limit { stroke: #184a8f; stroke-width: 2; }\n"
        ".semicircle, .arc { stroke: #8f1818; stroke-width: 1.5; }\n"
        ".radius { stroke: #8f1818; stroke-dasharray: 6 4; stroke-width: 1; }\n"
        ".construction { stroke: #999; stroke-width: 0.75; }\n"
        ".rect { stroke: #444; stroke-width: 1.25; }\n"
        ".leg-limit, .hyp-limit { stroke-dasharray: 8 5; }\n"
        ".marker { fill: #222; stroke: none; }\n"
        ".label { fill: #222; stroke: none; font: 16px sans-serif; }\n"
        "</style>\n";
    out += body_;
    out += "</svg>\n";
    return out;
}

}  // namespace goldenext
