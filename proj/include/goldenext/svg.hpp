#pragma once

#include <string>
#include <vector>

namespace goldenext {

// Fixed 9-decimal formatting; negative zero normalizes away so equal
// coordinates always print as equal bytes.
std::string svg_num(double v);

// Collects SVG 1.1 elements inside a fixed world-to-pixel frame: the world
// box is fitted into the canvas with 5% margins, preserving aspect ratio,
// and world y grows upward while pixel y grows downward.
class SvgCanvas {
   public:
    SvgCanvas(unsigned width_px, unsigned height_px, double min_x, double min_y, double max_x,
              double max_y);

    double scale() const { return scale_; }
    double offset_x() const { return ox_; }
    double offset_y() const { return oy_; }
    double px_x(double wx) const { return ox_ + scale_ * wx; }
    double px_y(double wy) const { return oy_ - scale_ * wy; }

    void line(double x1, double y1, double x2, double y2, const std::string& cls);
    // World-radius circle outline.
    void circle(double cx, double cy, double r, const std::string& cls);
    // Fixed-size dot marking a named point.
    void marker(double cx, double cy, const std::string& id);
    // The upper half-circle about (cx, cy), drawn left to right as one path.
    void upper_arc(double cx, double cy, double r, const std::string& cls);
    void text(double wx, double wy, const std::string& label);

    std::string finish() const;

   private:
    unsigned width_;
    unsigned height_;
    double scale_;
    double ox_;
    double oy_;
    std::string body_;
};

}  // namespace goldenext
