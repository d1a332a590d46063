#include "goldenext/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace goldenext {

namespace {

constexpr double kRightAngleBand = 1e-9;

double cross(Point u, Point v) {
    return u.x * v.y - u.y * v.x;
}

Point sub(Point p, Point q) {
    return Point{p.x - q.x, p.y - q.y};
}

double tri_area(Point p, Point q, Point r) {
    return 0.5 * std::abs(cross(sub(q, p), sub(r, p)));
}

double angle_at(Point vertex, Point p, Point q) {
    Point u = sub(p, vertex);
    Point v = sub(q, vertex);
    double dot = u.x * v.x + u.y * v.y;
    double lu = std::hypot(u.x, u.y);
    double lv = std::hypot(v.x, v.y);
    double c = std::clamp(dot / (lu * lv), -1.0, 1.0);
    return std::acos(c);
}

}  // namespace

const char* to_string(AngleClass c) {
    switch (c) {
        case AngleClass::acute: return "acute";
        case AngleClass::right: return "right";
        case AngleClass::obtuse: return "obtuse";
    }
    return "?";
}

BaseAngles::BaseAngles(double beta, double gamma) : beta_(beta), gamma_(gamma) {
    if (!(beta > 0) || !(gamma > 0) || !(beta + gamma < std::numbers::pi)) {
        throw std::domain_error("BaseAngles: need 0 < beta, gamma and beta + gamma < pi");
    }
}

TriangleGeom triangle_from_base_angles(const BaseAngles& angles) {
    double sb = std::sin(angles.beta());
    double sg = std::sin(angles.gamma());
    double s_apex = std::sin(angles.beta() + angles.gamma());
    TriangleGeom tri;
    tri.O = Point{0, 0};
    tri.B = Point{-1.0 / sb, 0};
    tri.C = Point{1.0 / sg, 0};
    tri.A = Point{(std::cos(angles.beta()) - std::cos(angles.gamma())) / s_apex,
                  (sb + sg) / s_apex};
    tri.R = 1.0;
    return tri;
}

double distance(Point p, Point q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

double point_line_distance(Point p, Point a, Point b) {
    return std::abs(cross(sub(b, a), sub(p, a))) / distance(a, b);
}

double side_length(const TriangleGeom& tri, Side side) {
    return side == Side::AB ? distance(tri.A, tri.B) : distance(tri.A, tri.C);
}

double tangent_distance(const TriangleGeom& tri, Side side) {
    Point end = side == Side::AB ? tri.B : tri.C;
    return point_line_distance(tri.O, tri.A, end);
}

double area(const TriangleGeom& tri) {
    return tri_area(tri.A, tri.B, tri.C);
}

double area_decomposition_residual(const TriangleGeom& tri) {
    double whole = tri_area(tri.A, tri.B, tri.C);
    double parts = tri_area(tri.A, tri.O, tri.B) + tri_area(tri.A, tri.O, tri.C);
    return std::abs(whole - parts);
}

double perimeter(const TriangleGeom& tri) {
    return distance(tri.A, tri.B) + distance(tri.A, tri.C) + distance(tri.B, tri.C);
}

bool diameter_contained(const TriangleGeom& tri) {
    return tri.B.x <= tri.O.x - tri.R && tri.O.x + tri.R <= tri.C.x;
}

AngleClass classify(const TriangleGeom& tri) {
    double largest = std::max({angle_at(tri.A, tri.B, tri.C),
                               angle_at(tri.B, tri.A, tri.C),
                               angle_at(tri.C, tri.A, tri.B)});
    double gap = largest - std::numbers::pi / 2;
    if (std::abs(gap) <= kRightAngleBand) {
        return AngleClass::right;
    }
    return gap > 0 ? AngleClass::obtuse : AngleClass::acute;
}

bool tangency_foot_on_segment(const TriangleGeom& tri, Side side) {
    Point a = tri.A;
    Point b = side == Side::AB ? tri.B : tri.C;
    Point d = sub(b, a);
    double t = ((tri.O.x - a.x) * d.x + (tri.O.y - a.y) * d.y) /
               (d.x * d.x + d.y * d.y);
    return 0.0 <= t && t <= 1.0;
}

}  // namespace goldenext
