#pragma once

namespace goldenext {

struct Point {
    double x = 0;
    double y = 0;
};

enum class Side { AB, AC };
enum class AngleClass { acute, right, obtuse };

const char* to_string(AngleClass c);

// Base angles at B and C of a triangle circumscribing the unit semicircle.
// Every such triangle is reachable, and tangency holds by construction.
class BaseAngles {
   public:
    BaseAngles(double beta, double gamma);

    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

   private:
    double beta_;
    double gamma_;
};

// Triangle around the semicircle of radius R centered at O, diameter on BC.
struct TriangleGeom {
    Point A;
    Point B;
    Point C;
    Point O;
    double R = 1.0;
};

// O at the origin, B = (-1/sin beta, 0), C = (1/sin gamma, 0); both slanted
// sides end up at distance exactly R = 1 from O.
TriangleGeom triangle_from_base_angles(const BaseAngles& angles);

double distance(Point p, Point q);
double point_line_distance(Point p, Point a, Point b);

double side_length(const TriangleGeom& tri, Side side);
double tangent_distance(const TriangleGeom& tri, Side side);
double area(const TriangleGeom& tri);

// |S_ABC - (S_AOB + S_AOC)| with every sub-area taken from coordinates.
// Zero whenever O lies on segment BC; grows once O leaves the base.
double area_decomposition_residual(const TriangleGeom& tri);

double perimeter(const TriangleGeom& tri);

// Both diameter endpoints (O.x +- R, 0) inside segment BC, inclusive.
bool diameter_contained(const TriangleGeom& tri);

// Largest angle against pi/2 with a 1e-9 band mapped to "right".
AngleClass classify(const TriangleGeom& tri);

// Whether the perpendicular foot from O to the side's line lands on the
// segment itself rather than its extension.
bool tangency_foot_on_segment(const TriangleGeom& tri, Side side);

}  // namespace goldenext
