#include "goldenext/construct.hpp"

#include "goldenext/goldenseq.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace goldenext {

Float50 to_float50(const BigRational& r) {
    return Float50(numerator(r)) / Float50(denominator(r));
}

Float50 to_float50(const QPhi& x) {
    static const Float50 kPhi50 = (1 + sqrt(Float50(5))) / 2;
    return to_float50(x.a()) + to_float50(x.b()) * kPhi50;
}

Float50 to_float50(const Radical& x) {
    Float50 d = to_float50(x.radicand());
    if (d < 0) d = 0;
    return to_float50(x.coeff()) * sqrt(d);
}

std::string to_string(ObjectKind kind) {
    switch (kind) {
        case ObjectKind::point: return "point";
        case ObjectKind::line: return "line";
        case ObjectKind::circle: return "circle";
    }
    return "?";
}

std::optional<QPhi> dist_sq_exact(const RadicalPoint& p, const RadicalPoint& q) {
    // (a - b)^2 = a^2 + b^2 - 2ab per axis; only the cross term can fail.
    auto axis = [](const Radical& a, const Radical& b) -> std::optional<QPhi> {
        auto cross = (a * b).as_qphi();
        if (!cross) return std::nullopt;
        return a.square() + b.square() - QPhi(2) * *cross;
    };
    auto dx = axis(p.x, q.x);
    auto dy = axis(p.y, q.y);
    if (!dx || !dy) return std::nullopt;
    return *dx + *dy;
}

namespace {

using Num3 = std::array<Float50, 3>;

const Float50& tiny() {
    static const Float50 kTiny("1e-45");
    return kTiny;
}

// ---- exact layer ----------------------------------------------------------

std::optional<Radical> rdiv(const Radical& x, const Radical& y) {
    if (y.is_zero()) return std::nullopt;
    // 1 / (c sqrt(d)) = sqrt(d) / (c d)
    const Radical inv(QPhi(1) / (y.coeff() * y.radicand()), y.radicand());
    return x * inv;
}

// Scales (a, b, c) by the first nonzero coefficient so equal lines get equal
// triples. Fails when a scaled coefficient leaves Q(phi).
std::optional<std::array<QPhi, 3>> normalize_line(const Radical& a, const Radical& b,
                                                  const Radical& c) {
    const Radical* pivot = nullptr;
    if (a.sign() != 0) {
        pivot = &a;
    } else if (b.sign() != 0) {
        pivot = &b;
    }
    if (pivot == nullptr) return std::nullopt;
    std::array<QPhi, 3> out;
    const Radical* parts[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        auto scaled = rdiv(*parts[i], *pivot);
        if (!scaled) return std::nullopt;
        auto q = scaled->as_qphi();
        if (!q) return std::nullopt;
        out[static_cast<std::size_t>(i)] = *q;
    }
    return out;
}

std::optional<std::array<QPhi, 3>> exact_line_through(const RadicalPoint& p,
                                                      const RadicalPoint& q) {
    auto a = radical_sub(q.y, p.y);
    auto b = radical_sub(p.x, q.x);
    if (!a || !b) return std::nullopt;
    auto c = radical_add(*a * p.x, *b * p.y);
    if (!c) return std::nullopt;
    return normalize_line(*a, *b, *c);
}

std::optional<std::array<QPhi, 3>> exact_perpendicular(const std::array<QPhi, 3>& line,
                                                       const RadicalPoint& p) {
    // normal (a, b) turns into direction, so the new normal is (b, -a)
    auto c = radical_sub(line[1] * p.x, line[0] * p.y);
    if (!c) return std::nullopt;
    return normalize_line(Radical::from_qphi(line[1]), Radical::from_qphi(-line[0]), *c);
}

std::optional<std::array<QPhi, 3>> exact_circle_about(const RadicalPoint& center,
                                                      const std::optional<QPhi>& r_sq) {
    auto cx = center.x.as_qphi();
    auto cy = center.y.as_qphi();
    if (!cx || !cy || !r_sq) return std::nullopt;
    return std::array<QPhi, 3>{*cx, *cy, *r_sq};
}

// Exact intersection candidates. available = false means the exact layer
// cannot express the result and the numeric layer decides alone; an
// available-but-empty list is a definite "no intersection".
struct ExactPoints {
    bool available = false;
    std::vector<RadicalPoint> pts;
};

ExactPoints exact_line_line(const std::array<QPhi, 3>& l, const std::array<QPhi, 3>& m) {
    ExactPoints out;
    out.available = true;
    const QPhi det = l[0] * m[1] - m[0] * l[1];
    if (det.sign() == 0) {
        if (l == m) throw ConstructionError("coincident lines meet everywhere");
        return out;  // parallel
    }
    const QPhi x = (l[2] * m[1] - m[2] * l[1]) / det;
    const QPhi y = (l[0] * m[2] - m[0] * l[2]) / det;
    out.pts.push_back({Radical::from_qphi(x), Radical::from_qphi(y)});
    return out;
}

ExactPoints exact_line_circle(const std::array<QPhi, 3>& line, const std::array<QPhi, 3>& circle) {
    const QPhi &a = line[0], &b = line[1], &c = line[2];
    const QPhi &cx = circle[0], &cy = circle[1], &r_sq = circle[2];
    ExactPoints out;

    // Reduce to A t^2 + B t + C = 0 in one coordinate. On a vertical line the
    // free coordinate is y; otherwise substitute y = k - u x.
    const bool vertical = (b.sign() == 0);
    QPhi u, k, qa, qb, qc;
    if (vertical) {
        if (a.sign() == 0) return out;
        k = c / a;
        qa = QPhi(1);
        qb = QPhi(-2) * cy;
        qc = cy * cy + (k - cx) * (k - cx) - r_sq;
    } else {
        u = a / b;
        k = c / b;
        qa = QPhi(1) + u * u;
        qb = QPhi(-2) * cx - QPhi(2) * u * (k - cy);
        qc = cx * cx + (k - cy) * (k - cy) - r_sq;
    }
    const QPhi disc = qb * qb - QPhi(4) * qa * qc;
    const int disc_sign = disc.sign();
    if (disc_sign < 0) {
        out.available = true;
        return out;
    }
    if (auto root = sqrt_in_qphi(disc)) {
        out.available = true;
        auto push = [&](const QPhi& t) {
            if (vertical) {
                out.pts.push_back({Radical::from_qphi(k), Radical::from_qphi(t)});
            } else {
                out.pts.push_back({Radical::from_qphi(t), Radical::from_qphi(k - u * t)});
            }
        };
        push((-qb + *root) / (QPhi(2) * qa));
        if (disc_sign != 0) push((-qb - *root) / (QPhi(2) * qa));
        return out;
    }
    if (qb.sign() == 0) {
        // Roots are +-sqrt(disc) / (2A): one pure radical per point.
        const QPhi half = QPhi(1) / (QPhi(2) * qa);
        const Radical plus(half, disc);
        const Radical minus(-half, disc);
        auto partner = [&](const Radical& t) -> std::optional<Radical> {
            if (vertical || u.sign() == 0) return Radical::from_qphi(k);
            return radical_add(Radical::from_qphi(k), (-u) * t);
        };
        auto pp = partner(plus);
        auto pm = partner(minus);
        if (pp && pm) {
            out.available = true;
            if (vertical) {
                out.pts.push_back({*pp, plus});
                out.pts.push_back({*pm, minus});
            } else {
                out.pts.push_back({plus, *pp});
                out.pts.push_back({minus, *pm});
            }
        }
    }
    return out;  // irrational roots with a rational shift: numeric only
}

ExactPoints exact_circle_circle(const std::array<QPhi, 3>& k1, const std::array<QPhi, 3>& k2) {
    const QPhi a = QPhi(2) * (k2[0] - k1[0]);
    const QPhi b = QPhi(2) * (k2[1] - k1[1]);
    if (a.sign() == 0 && b.sign() == 0) {
        if (k1[2] == k2[2]) throw ConstructionError("coincident circles meet everywhere");
        ExactPoints out;
        out.available = true;
        return out;  // concentric, distinct radii
    }
    const QPhi c =
        k2[0] * k2[0] - k1[0] * k1[0] + k2[1] * k2[1] - k1[1] * k1[1] + k1[2] - k2[2];
    return exact_line_circle({a, b, c}, k1);
}

// (p - v) . (q - v), expanded so each product collapses on its own.
std::optional<QPhi> dot_at_vertex(const RadicalPoint& p, const RadicalPoint& v,
                                  const RadicalPoint& q) {
    auto axis = [](const Radical& a, const Radical& b, const Radical& c) -> std::optional<QPhi> {
        auto ac = (a * c).as_qphi();
        auto ab = (a * b).as_qphi();
        auto bc = (b * c).as_qphi();
        if (!ac || !ab || !bc) return std::nullopt;
        return *ac - *ab - *bc + b.square();
    };
    auto dx = axis(p.x, v.x, q.x);
    auto dy = axis(p.y, v.y, q.y);
    if (!dx || !dy) return std::nullopt;
    return *dx + *dy;
}

std::optional<RadicalPoint> golden_exact(const RadicalPoint& p, const RadicalPoint& q) {
    const QPhi ratio = QPhi::phi() - QPhi(1);  // 1/phi
    auto coord = [&](const Radical& a, const Radical& b) -> std::optional<Radical> {
        auto d = radical_sub(b, a);
        if (!d) return std::nullopt;
        return radical_add(a, ratio * *d);
    };
    auto x = coord(p.x, q.x);
    auto y = coord(p.y, q.y);
    if (!x || !y) return std::nullopt;
    return RadicalPoint{*x, *y};
}

// ---- numeric layer --------------------------------------------------------

struct NumPoints {
    std::vector<std::array<Float50, 2>> pts;
};

NumPoints num_line_line(const Num3& l, const Num3& m) {
    NumPoints out;
    const Float50 det = l[0] * m[1] - m[0] * l[1];
    if (abs(det) < tiny()) return out;
    out.pts.push_back({(l[2] * m[1] - m[2] * l[1]) / det, (l[0] * m[2] - m[0] * l[2]) / det});
    return out;
}

NumPoints num_line_circle(const Num3& line, const Num3& circle) {
    const Float50 &a = line[0], &b = line[1], &c = line[2];
    NumPoints out;
    // Substitute out whichever coordinate the line determines better.
    const bool solve_x = abs(b) >= abs(a);
    const Float50 u = solve_x ? a / b : b / a;
    const Float50 k = solve_x ? c / b : c / a;
    const Float50 along = solve_x ? circle[0] : circle[1];
    const Float50 other = solve_x ? circle[1] : circle[0];
    const Float50 qa = 1 + u * u;
    const Float50 qb = -2 * along - 2 * u * (k - other);
    const Float50 qc = along * along + (k - other) * (k - other) - circle[2];
    Float50 disc = qb * qb - 4 * qa * qc;
    if (disc < 0) {
        if (disc < Float50("-1e-40")) return out;
        disc = 0;  // grazing contact lost to rounding
    }
    const Float50 root = sqrt(disc);
    const Float50 t_plus = (-qb + root) / (2 * qa);
    const Float50 t_minus = (-qb - root) / (2 * qa);
    for (const Float50& t : {t_plus, t_minus}) {
        const Float50 o = k - u * t;
        if (solve_x) {
            out.pts.push_back({t, o});
        } else {
            out.pts.push_back({o, t});
        }
        if (root == 0) break;
    }
    return out;
}

NumPoints num_circle_circle(const Num3& k1, const Num3& k2) {
    const Float50 a = 2 * (k2[0] - k1[0]);
    const Float50 b = 2 * (k2[1] - k1[1]);
    if (abs(a) < tiny() && abs(b) < tiny()) return {};
    const Float50 c =
        k2[0] * k2[0] - k1[0] * k1[0] + k2[1] * k2[1] - k1[1] * k1[1] + k1[2] - k2[2];
    return num_line_circle({a, b, c}, k1);
}

// ---- candidate selection --------------------------------------------------

struct Candidate {
    std::optional<RadicalPoint> exact;
    Float50 x;
    Float50 y;
};

template <class PointNum>
std::vector<Candidate> select_candidates(std::vector<Candidate> cands, const std::string& sel,
                                         const PointNum& point_num) {
    if (sel.empty()) return cands;
    if (sel == "x>0" || sel == "x<0" || sel == "y>0" || sel == "y<0") {
        const bool on_x = (sel[0] == 'x');
        const bool positive = (sel[1] == '>');
        std::erase_if(cands, [&](const Candidate& c) {
            const Float50& v = on_x ? c.x : c.y;
            return positive ? !(v > 0) : !(v < 0);
        });
        return cands;
    }
    if (sel.rfind("nearest:", 0) == 0) {
        const auto ref = point_num(sel.substr(8));
        const Candidate* best = nullptr;
        Float50 best_d = 0;
        bool tie = false;
        for (const Candidate& c : cands) {
            const Float50 dx = c.x - ref[0];
            const Float50 dy = c.y - ref[1];
            const Float50 d = dx * dx + dy * dy;
            if (best == nullptr || d < best_d - tiny()) {
                best = &c;
                best_d = d;
                tie = false;
            } else if (d < best_d + tiny()) {
                tie = true;
            }
        }
        if (best == nullptr) return {};
        if (tie) throw ConstructionError("selector '" + sel + "' is ambiguous: equidistant candidates");
        return {*best};
    }
    if (sel.rfind("beyond:", 0) == 0) {
        const std::string rest = sel.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) {
            throw ConstructionError("selector 'beyond' needs two reference points");
        }
        const auto p = point_num(rest.substr(0, colon));
        const auto q = point_num(rest.substr(colon + 1));
        const Float50 dx = q[0] - p[0];
        const Float50 dy = q[1] - p[1];
        const Float50 len_sq = dx * dx + dy * dy;
        if (len_sq < tiny()) {
            throw ConstructionError("selector 'beyond' with coincident reference points");
        }
        std::erase_if(cands, [&](const Candidate& c) {
            const Float50 t = ((c.x - p[0]) * dx + (c.y - p[1]) * dy) / len_sq;
            return !(t > 1);
        });
        return cands;
    }
    throw ConstructionError("unknown selector '" + sel + "'");
}

std::string strip(std::string s) {
    const auto solid = [](unsigned char ch) { return std::isspace(ch) == 0; };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), solid));
    s.erase(std::find_if(s.rbegin(), s.rend(), solid).base(), s.end());
    return s;
}

}  // namespace

// ---- trace ----------------------------------------------------------------

bool ConstructionTrace::has_object(const std::string& id) const {
    return objects_.contains(id);
}

const GeomObject& ConstructionTrace::object(const std::string& id) const {
    auto it = objects_.find(id);
    if (it == objects_.end()) {
        throw UnresolvedObjectError("no object named '" + id + "' in the trace");
    }
    return it->second;
}

const GeomObject& ConstructionTrace::apply(ConstructionStep step) {
    if (step.output.empty() ||
        step.output.find_first_of(" =(),;:") != std::string::npos) {
        throw ConstructionError("invalid object id '" + step.output + "'");
    }
    if (objects_.contains(step.output)) {
        throw ConstructionError("object id '" + step.output + "' already defined");
    }
    GeomObject obj = execute(step);
    steps_.push_back(std::move(step));
    auto [it, inserted] = objects_.emplace(obj.id, std::move(obj));
    (void)inserted;
    return it->second;
}

void ConstructionTrace::replay() {
    std::vector<ConstructionStep> steps = std::move(steps_);
    steps_.clear();
    objects_.clear();
    for (ConstructionStep& s : steps) apply(std::move(s));
}

GeomObject ConstructionTrace::execute(const ConstructionStep& step) const {
    auto need = [&](std::size_t n) {
        if (step.inputs.size() != n) {
            throw ConstructionError(step.op + " expects " + std::to_string(n) + " inputs, got " +
                                    std::to_string(step.inputs.size()));
        }
    };
    auto get = [&](const std::string& id) -> const GeomObject& {
        auto it = objects_.find(id);
        if (it == objects_.end()) {
            throw UnresolvedObjectError("step '" + step.output + "' refers to unknown object '" +
                                        id + "'");
        }
        return it->second;
    };
    auto get_point = [&](const std::string& id) -> const GeomObject& {
        const GeomObject& g = get(id);
        if (g.kind != ObjectKind::point) {
            throw ConstructionError("'" + id + "' is a " + to_string(g.kind) +
                                    ", expected a point");
        }
        return g;
    };
    auto point_num = [&](const std::string& id) -> std::array<Float50, 2> {
        const GeomObject& g = get_point(id);
        return {g.num[0], g.num[1]};
    };
    if (step.op != "intersect" && !step.selector.empty()) {
        throw ConstructionError("only intersect takes a selector");
    }

    GeomObject out;
    out.id = step.output;

    if (step.op == "place_point") {
        need(2);
        const Radical x = radical_parse(step.inputs[0]);
        const Radical y = radical_parse(step.inputs[1]);
        out.kind = ObjectKind::point;
        out.exact_point = RadicalPoint{x, y};
        out.num = {to_float50(x), to_float50(y), 0};
        return out;
    }

    if (step.op == "line_through" || step.op == "extend_segment") {
        need(2);
        const GeomObject& p = get_point(step.inputs[0]);
        const GeomObject& q = get_point(step.inputs[1]);
        const Float50 a = q.num[1] - p.num[1];
        const Float50 b = p.num[0] - q.num[0];
        if (abs(a) < tiny() && abs(b) < tiny()) {
            throw ConstructionError(step.op + " through coincident points");
        }
        out.kind = ObjectKind::line;
        out.num = {a, b, a * p.num[0] + b * p.num[1]};
        if (p.exact_point && q.exact_point) {
            out.exact_line = exact_line_through(*p.exact_point, *q.exact_point);
        }
        return out;
    }

    if (step.op == "perpendicular_at") {
        need(2);
        const GeomObject& l = get(step.inputs[0]);
        if (l.kind != ObjectKind::line) {
            throw ConstructionError("perpendicular_at expects a line first");
        }
        const GeomObject& p = get_point(step.inputs[1]);
        out.kind = ObjectKind::line;
        out.num = {l.num[1], -l.num[0], l.num[1] * p.num[0] - l.num[0] * p.num[1]};
        if (l.exact_line && p.exact_point) {
            out.exact_line = exact_perpendicular(*l.exact_line, *p.exact_point);
        }
        return out;
    }

    if (step.op == "circle_center_through" || step.op == "circle_center_radius") {
        const bool spanned = (step.op == "circle_center_radius");
        need(spanned ? 3 : 2);
        const GeomObject& center = get_point(step.inputs[0]);
        const GeomObject& p = get_point(step.inputs[spanned ? 1 : 0]);
        const GeomObject& q = get_point(step.inputs[spanned ? 2 : 1]);
        const GeomObject& from = spanned ? p : center;
        const Float50 dx = q.num[0] - from.num[0];
        const Float50 dy = q.num[1] - from.num[1];
        const Float50 r_sq = dx * dx + dy * dy;
        if (r_sq < tiny()) {
            throw ConstructionError(step.op + " gives a zero radius");
        }
        out.kind = ObjectKind::circle;
        out.num = {center.num[0], center.num[1], r_sq};
        if (center.exact_point && from.exact_point && q.exact_point) {
            out.exact_circle = exact_circle_about(
                *center.exact_point, dist_sq_exact(*from.exact_point, *q.exact_point));
        }
        return out;
    }

    if (step.op == "golden_section_point") {
        need(2);
        const GeomObject& p = get_point(step.inputs[0]);
        const GeomObject& q = get_point(step.inputs[1]);
        const Float50 dx = q.num[0] - p.num[0];
        const Float50 dy = q.num[1] - p.num[1];
        if (abs(dx) < tiny() && abs(dy) < tiny()) {
            throw ConstructionError("golden_section_point of a degenerate segment");
        }
        static const Float50 kInvPhi50 = (sqrt(Float50(5)) - 1) / 2;
        out.kind = ObjectKind::point;
        out.num = {p.num[0] + kInvPhi50 * dx, p.num[1] + kInvPhi50 * dy, 0};
        if (p.exact_point && q.exact_point) {
            out.exact_point = golden_exact(*p.exact_point, *q.exact_point);
        }
        return out;
    }

    if (step.op == "intersect") {
        need(2);
        const GeomObject& x = get(step.inputs[0]);
        const GeomObject& y = get(step.inputs[1]);
        if (x.kind == ObjectKind::point || y.kind == ObjectKind::point) {
            throw ConstructionError("intersect expects lines or circles");
        }
        ExactPoints exact;
        NumPoints nums;
        const bool x_line = (x.kind == ObjectKind::line);
        const bool y_line = (y.kind == ObjectKind::line);
        if (x_line && y_line) {
            nums = num_line_line(x.num, y.num);
            if (x.exact_line && y.exact_line) {
                exact = exact_line_line(*x.exact_line, *y.exact_line);
            }
        } else if (x_line || y_line) {
            const GeomObject& l = x_line ? x : y;
            const GeomObject& k = x_line ? y : x;
            nums = num_line_circle(l.num, k.num);
            if (l.exact_line && k.exact_circle) {
                exact = exact_line_circle(*l.exact_line, *k.exact_circle);
            }
        } else {
            nums = num_circle_circle(x.num, y.num);
            if (x.exact_circle && y.exact_circle) {
                exact = exact_circle_circle(*x.exact_circle, *y.exact_circle);
            }
        }

        std::vector<Candidate> cands;
        if (exact.available) {
            for (const RadicalPoint& rp : exact.pts) {
                Candidate c;
                c.exact = rp;
                c.x = to_float50(rp.x);
                c.y = to_float50(rp.y);
                // Keep the independently computed root when one matches, so
                // the numeric layer stays a genuine crosscheck downstream.
                const std::array<Float50, 2>* mate = nullptr;
                Float50 best = 0;
                for (const auto& np : nums.pts) {
                    const Float50 d = abs(np[0] - c.x) + abs(np[1] - c.y);
                    if (mate == nullptr || d < best) {
                        mate = &np;
                        best = d;
                    }
                }
                if (mate != nullptr && best < Float50("1e-20")) {
                    c.x = (*mate)[0];
                    c.y = (*mate)[1];
                }
                cands.push_back(std::move(c));
            }
        } else {
            for (const auto& np : nums.pts) {
                cands.push_back({std::nullopt, np[0], np[1]});
            }
        }
        if (cands.empty()) {
            throw ConstructionError("'" + step.inputs[0] + "' and '" + step.inputs[1] +
                                    "' do not intersect");
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (a.x != b.x) return a.x < b.x;
            return a.y < b.y;
        });
        cands = select_candidates(std::move(cands), step.selector, point_num);
        if (cands.empty()) {
            throw ConstructionError("selector '" + step.selector +
                                    "' leaves no intersection of '" + step.inputs[0] + "' and '" +
                                    step.inputs[1] + "'");
        }
        if (cands.size() > 1) {
            throw ConstructionError("intersection of '" + step.inputs[0] + "' and '" +
                                    step.inputs[1] + "' is ambiguous: " +
                                    std::to_string(cands.size()) + " candidates remain");
        }
        out.kind = ObjectKind::point;
        out.exact_point = cands.front().exact;
        out.num = {cands.front().x, cands.front().y, 0};
        return out;
    }

    throw ConstructionError("unknown op '" + step.op + "'");
}

std::string ConstructionTrace::serialize() const {
    std::string out;
    for (const ConstructionStep& s : steps_) {
        out += s.output;
        out += " = ";
        out += s.op;
        out += "(";
        for (std::size_t i = 0; i < s.inputs.size(); ++i) {
            if (i > 0) out += ", ";
            out += s.inputs[i];
        }
        out += ";";
        if (!s.selector.empty()) {
            out += " ";
            out += s.selector;
        }
        out += ")\n";
    }
    return out;
}

ConstructionTrace ConstructionTrace::parse(const std::string& text) {
    ConstructionTrace trace;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        auto fail = [&](const std::string& what) -> void {
            throw ConstructionError("parse error at line " + std::to_string(lineno) + ": " + what);
        };
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) fail("missing ' = '");
        const auto open = line.find('(', eq + 3);
        if (open == std::string::npos || line.back() != ')') fail("malformed call");
        ConstructionStep step;
        step.output = line.substr(0, eq);
        step.op = line.substr(eq + 3, open - (eq + 3));
        const std::string body = line.substr(open + 1, line.size() - open - 2);
        const auto semi = body.rfind(';');
        if (semi == std::string::npos) fail("missing ';' before the selector slot");
        step.selector = strip(body.substr(semi + 1));
        const std::string args = body.substr(0, semi);
        std::size_t pos = 0;
        while (pos < args.size()) {
            const auto comma = args.find(", ", pos);
            if (comma == std::string::npos) {
                step.inputs.push_back(args.substr(pos));
                break;
            }
            step.inputs.push_back(args.substr(pos, comma - pos));
            pos = comma + 2;
        }
        trace.apply(std::move(step));
    }
    return trace;
}

// ---- named constructions --------------------------------------------------

RadicalPoint golden_section_point(const RadicalPoint& p, const RadicalPoint& q) {
    if (radical_equal(p.x, q.x) && radical_equal(p.y, q.y)) {
        throw ConstructionError("golden_section_point of a degenerate segment");
    }
    auto o = golden_exact(p, q);
    if (!o) {
        throw ConstructionError("golden_section_point: coordinates leave the radical layer");
    }
    return *o;
}

ConstructionTrace build_golden_rectangle() {
    const std::string zero = to_string(Radical::from_qphi(QPhi(0)));
    const std::string one = to_string(Radical::from_qphi(QPhi(1)));

    ConstructionTrace t;
    t.apply({"B", "place_point", {zero, zero}, ""});
    t.apply({"C", "place_point", {one, zero}, ""});
    t.apply({"base", "line_through", {"B", "C"}, ""});
    t.apply({"side_B", "perpendicular_at", {"base", "B"}, ""});
    t.apply({"side_C", "perpendicular_at", {"base", "C"}, ""});
    // unit square BCFG on the base
    t.apply({"circ_B", "circle_center_through", {"B", "C"}, ""});
    t.apply({"G", "intersect", {"circ_B", "side_B"}, "y>0"});
    t.apply({"circ_C", "circle_center_through", {"C", "B"}, ""});
    t.apply({"F", "intersect", {"circ_C", "side_C"}, "y>0"});
    // midpoint of BG by the perpendicular-bisector construction
    t.apply({"circ_G", "circle_center_through", {"G", "B"}, ""});
    t.apply({"H1", "intersect", {"circ_B", "circ_G"}, "x>0"});
    t.apply({"H2", "intersect", {"circ_B", "circ_G"}, "x<0"});
    t.apply({"bisector", "line_through", {"H1", "H2"}, ""});
    t.apply({"M", "intersect", {"bisector", "side_B"}, ""});
    // the arc through the far corner F stretches BM to the golden height
    t.apply({"arc_M", "circle_center_through", {"M", "F"}, ""});
    t.apply({"A", "intersect", {"arc_M", "side_B"}, "y>0"});
    t.apply({"top", "perpendicular_at", {"side_B", "A"}, ""});
    t.apply({"D", "intersect", {"top", "side_C"}, ""});
    return t;
}

std::pair<ConstructionTrace, TriangleCertificate> construct_T2() {
    ConstructionTrace trace = build_golden_rectangle();
    trace.apply({"O", "golden_section_point", {"B", "C"}, ""});
    trace.apply({"arc_O", "circle_center_radius", {"O", "A", "C"}, ""});
    trace.apply({"ext_BA", "extend_segment", {"B", "A"}, ""});
    trace.apply({"E", "intersect", {"arc_O", "ext_BA"}, "beyond:B:A"});
    trace.apply({"hyp", "line_through", {"E", "C"}, ""});

    auto pt = [&](const char* id) -> const RadicalPoint& {
        const GeomObject& g = trace.object(id);
        if (!g.exact_point) {
            throw ConstructionError(std::string("'") + id + "' lost its exact coordinates");
        }
        return *g.exact_point;
    };
    auto sq = [](std::optional<QPhi> v, const char* what) -> QPhi {
        if (!v) throw ConstructionError(std::string(what) + " is not expressible over Q(phi)");
        return *std::move(v);
    };
    const RadicalPoint& b = pt("B");
    const RadicalPoint& o = pt("O");
    const RadicalPoint& c = pt("C");
    const RadicalPoint& a = pt("A");
    const RadicalPoint& e = pt("E");

    TriangleCertificate cert;
    cert.bo_sq = sq(dist_sq_exact(b, o), "BO^2");
    cert.oc_sq = sq(dist_sq_exact(o, c), "OC^2");
    cert.eo_sq = sq(dist_sq_exact(e, o), "EO^2");
    cert.be_sq = sq(dist_sq_exact(b, e), "BE^2");
    cert.ec_sq = sq(dist_sq_exact(e, c), "EC^2");
    const QPhi bc_sq = sq(dist_sq_exact(b, c), "BC^2");
    const QPhi phi = QPhi::phi();

    cert.bo_oc_ratio_is_phi = (cert.bo_sq == phi * phi * cert.oc_sq);
    cert.eo_matches_rect_diagonal = (cert.eo_sq == sq(dist_sq_exact(a, c), "AC^2"));
    cert.pythagoras = (bc_sq + cert.be_sq == cert.ec_sq);
    if (auto dot = dot_at_vertex(e, b, c)) {
        cert.right_angle_at_b = (dot->sign() == 0);
    }
    cert.side_short = Radical(QPhi(1), bc_sq);
    cert.side_mid = Radical(QPhi(1), cert.be_sq);
    cert.side_long = Radical(QPhi(1), cert.ec_sq);

    const GoldenTriangleEntry t2 = tn_entry(2);
    cert.matches_t2 = radical_equal(cert.side_short, t2.side_short) &&
                      radical_equal(cert.side_mid, t2.side_mid) &&
                      radical_equal(cert.side_long, t2.side_long);
    return {std::move(trace), cert};
}

VerifyReport verify_trace(const ConstructionTrace& trace, const std::vector<Claim>& claims) {
    static const Float50 kTol("1e-25");
    auto exact_of = [&](const std::string& id) -> const std::optional<RadicalPoint>& {
        const GeomObject& g = trace.object(id);
        if (g.kind != ObjectKind::point) {
            throw ConstructionError("claim refers to '" + id + "', which is not a point");
        }
        return g.exact_point;
    };
    auto num_of = [&](const std::string& id) -> std::array<Float50, 2> {
        const GeomObject& g = trace.object(id);
        return {g.num[0], g.num[1]};
    };
    auto num_dist = [&](const std::string& p, const std::string& q) -> Float50 {
        const auto a = num_of(p);
        const auto b = num_of(q);
        const Float50 dx = a[0] - b[0];
        const Float50 dy = a[1] - b[1];
        return sqrt(dx * dx + dy * dy);
    };

    VerifyReport report;
    for (const Claim& claim : claims) {
        ClaimOutcome outcome;
        outcome.label = claim.label;
        switch (claim.kind) {
            case Claim::Kind::segment_length: {
                const auto& p = exact_of(claim.points[0]);
                const auto& q = exact_of(claim.points[1]);
                std::optional<QPhi> d_sq;
                if (p && q) d_sq = dist_sq_exact(*p, *q);
                if (d_sq && claim.value.sign() >= 0) {
                    outcome.exact = true;
                    outcome.pass = (*d_sq == claim.value.square());
                } else {
                    const Float50 d = num_dist(claim.points[0], claim.points[1]);
                    outcome.pass = abs(d - to_float50(claim.value)) <= kTol;
                }
                break;
            }
            case Claim::Kind::segment_ratio: {
                const auto& p0 = exact_of(claim.points[0]);
                const auto& p1 = exact_of(claim.points[1]);
                const auto& p2 = exact_of(claim.points[2]);
                const auto& p3 = exact_of(claim.points[3]);
                std::optional<QPhi> top, bottom;
                if (p0 && p1 && p2 && p3) {
                    top = dist_sq_exact(*p0, *p1);
                    bottom = dist_sq_exact(*p2, *p3);
                }
                if (top && bottom && claim.value.sign() >= 0) {
                    outcome.exact = true;
                    outcome.pass = (*top == claim.value.square() * *bottom);
                } else {
                    const Float50 lhs = num_dist(claim.points[0], claim.points[1]);
                    const Float50 rhs = num_dist(claim.points[2], claim.points[3]);
                    outcome.pass = abs(lhs - to_float50(claim.value) * rhs) <= kTol;
                }
                break;
            }
            case Claim::Kind::right_angle: {
                const auto& p = exact_of(claim.points[0]);
                const auto& v = exact_of(claim.points[1]);
                const auto& q = exact_of(claim.points[2]);
                std::optional<QPhi> dot;
                if (p && v && q) dot = dot_at_vertex(*p, *v, *q);
                if (dot) {
                    outcome.exact = true;
                    outcome.pass = (dot->sign() == 0);
                } else {
                    const auto a = num_of(claim.points[0]);
                    const auto b = num_of(claim.points[1]);
                    const auto c = num_of(claim.points[2]);
                    const Float50 d =
                        (a[0] - b[0]) * (c[0] - b[0]) + (a[1] - b[1]) * (c[1] - b[1]);
                    outcome.pass = abs(d) <= kTol;
                }
                break;
            }
        }
        report.all_pass = report.all_pass && outcome.pass;
        report.claims.push_back(std::move(outcome));
    }
    return report;
}

}  // namespace goldenext
