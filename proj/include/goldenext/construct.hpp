#pragma once

#include "goldenext/qphi.hpp"
#include "goldenext/radical.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goldenext {

// 50-digit working precision for the numeric shadow of every construction.
using Float50 = boost::multiprecision::cpp_bin_float_50;

Float50 to_float50(const BigRational& r);
Float50 to_float50(const QPhi& x);
Float50 to_float50(const Radical& x);

// A step whose result is empty, ambiguous, degenerate, or otherwise not a
// valid compass-and-straightedge move.
class ConstructionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// A step referring to an object id that is not (yet) in the trace.
class UnresolvedObjectError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class ObjectKind { point, line, circle };

std::string to_string(ObjectKind kind);

struct RadicalPoint {
    Radical x;
    Radical y;
};

// Squared distance between two exact points, when the cross terms stay in
// Q(phi). Works even for points whose difference has no single-radical form.
std::optional<QPhi> dist_sq_exact(const RadicalPoint& p, const RadicalPoint& q);

// One named object of a construction. Lines are stored as a*x + b*y = c and
// circles as (cx, cy, r^2). The exact layer is present whenever the object
// is expressible over Q(phi) with at most one radical per coordinate; the
// numeric layer is always present and is computed from the inputs' numeric
// layers, never from the exact data, so agreement between the two is a
// genuine crosscheck.
struct GeomObject {
    ObjectKind kind = ObjectKind::point;
    std::string id;
    std::optional<RadicalPoint> exact_point;
    std::optional<std::array<QPhi, 3>> exact_line;
    std::optional<std::array<QPhi, 3>> exact_circle;
    std::array<Float50, 3> num{};  // point: x, y, 0; line: a, b, c; circle: cx, cy, r^2
};

// place_point(x, y)                literal Radical coordinates
// line_through(P, Q)               infinite line, also used to extend a segment
// extend_segment(P, Q)             alias of line_through, kept for readability
// perpendicular_at(L, P)           line through P perpendicular to L
// circle_center_through(O, P)      circle centered at O through P
// circle_center_radius(O, P, Q)    circle centered at O with radius |PQ|
// golden_section_point(P, Q)       the point X on PQ with |PX| / |XQ| = phi
// intersect(X, Y; selector)        one point of X ∩ Y, picked by the selector
struct ConstructionStep {
    std::string output;
    std::string op;
    std::vector<std::string> inputs;
    std::string selector;

    friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

// An ordered list of steps together with the objects they resolve to. Steps
// execute as they are applied; selectors that leave zero or more than one
// candidate raise ConstructionError at that moment, not at some later replay.
class ConstructionTrace {
   public:
    const GeomObject& apply(ConstructionStep step);

    bool has_object(const std::string& id) const;
    const GeomObject& object(const std::string& id) const;

    const std::vector<ConstructionStep>& steps() const { return steps_; }
    const std::map<std::string, GeomObject>& objects() const { return objects_; }

    // Discards the object table and re-executes every step in order.
    void replay();

    // One step per line, "out = op(in1, in2; selector)". parse(serialize())
    // reproduces the trace exactly, object table included.
    std::string serialize() const;
    static ConstructionTrace parse(const std::string& text);

   private:
    GeomObject execute(const ConstructionStep& step) const;

    std::vector<ConstructionStep> steps_;
    std::map<std::string, GeomObject> objects_;
};

// Divides PQ internally in the golden ratio measured from P. Exact by
// definition of the op; degenerate segments and coordinates that leave the
// single-radical layer raise ConstructionError.
RadicalPoint golden_section_point(const RadicalPoint& p, const RadicalPoint& q);

// Square, midpoint, arc: the classical golden rectangle on B = (0,0),
// C = (1,0), ending with corners A = (0, phi) and D = (1, phi).
ConstructionTrace build_golden_rectangle();

// Exact squared lengths of the second triangle in the golden sequence, read
// off the finished construction, plus the identities that certify it.
struct TriangleCertificate {
    QPhi bo_sq;  // 2 - phi
    QPhi oc_sq;  // 5 - 3 phi
    QPhi eo_sq;  // 2 + phi, the squared rectangle diagonal
    QPhi be_sq;  // 2 phi
    QPhi ec_sq;  // 1 + 2 phi
    Radical side_short;
    Radical side_mid;
    Radical side_long;
    bool bo_oc_ratio_is_phi = false;
    bool eo_matches_rect_diagonal = false;
    bool right_angle_at_b = false;
    bool pythagoras = false;
    bool matches_t2 = false;
};

// Extends the rectangle into the right triangle BCE: section the base at O,
// swing the arc through A about O, and cut it with the extension of BA.
std::pair<ConstructionTrace, TriangleCertificate> construct_T2();

// A checkable statement about named points of a trace. For segment_length
// the first two points and `value` are used; for segment_ratio all four
// (|P0 P1| / |P2 P3| = value); for right_angle the first three with the
// vertex in the middle, `value` ignored.
struct Claim {
    enum class Kind { segment_length, segment_ratio, right_angle };

    Kind kind = Kind::segment_length;
    std::string label;
    std::array<std::string, 4> points{};
    Radical value = Radical::from_qphi(QPhi(0));
};

struct ClaimOutcome {
    std::string label;
    bool pass = false;
    bool exact = false;  // decided by field arithmetic, not floats
};

struct VerifyReport {
    std::vector<ClaimOutcome> claims;
    bool all_pass = true;
};

// Checks each claim exactly when the relevant coordinates allow it, and at
// 50-digit precision (tolerance 1e-25) when they do not.
VerifyReport verify_trace(const ConstructionTrace& trace, const std::vector<Claim>& claims);

}  // namespace goldenext
