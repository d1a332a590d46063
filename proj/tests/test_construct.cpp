#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "goldenext/construct.hpp"
#include "goldenext/goldenseq.hpp"
#include "goldenext/qphi.hpp"
#include "goldenext/radical.hpp"

#include <string>
#include <utility>
#include <vector>

using namespace goldenext;

namespace {

const QPhi kPhi = QPhi::phi();

std::string lit(const QPhi& v) { return to_string(Radical::from_qphi(v)); }

RadicalPoint rat_point(const QPhi& x, const QPhi& y) {
    return {Radical::from_qphi(x), Radical::from_qphi(y)};
}

QPhi exact_coord(const Radical& r) {
    auto q = r.as_qphi();
    REQUIRE(q.has_value());
    return *q;
}

// Unit circle about B plus the axes through it.
ConstructionTrace unit_circle_rig() {
    ConstructionTrace t;
    t.apply({"B", "place_point", {lit(QPhi(0)), lit(QPhi(0))}, ""});
    t.apply({"C", "place_point", {lit(QPhi(1)), lit(QPhi(0))}, ""});
    t.apply({"base", "line_through", {"B", "C"}, ""});
    t.apply({"side", "perpendicular_at", {"base", "B"}, ""});
    t.apply({"circ", "circle_center_through", {"B", "C"}, ""});
    return t;
}

}  // namespace

TEST_CASE("golden section of a segment is exact") {
    const RadicalPoint b = rat_point(QPhi(0), QPhi(0));
    const RadicalPoint c = rat_point(QPhi(1), QPhi(0));

    const RadicalPoint o = golden_section_point(b, c);
    CHECK(exact_coord(o.x) == kPhi - QPhi(1));
    CHECK(o.y.is_zero());

    const QPhi bo_sq = *dist_sq_exact(b, o);
    const QPhi oc_sq = *dist_sq_exact(o, c);
    const QPhi bc_sq = *dist_sq_exact(b, c);
    CHECK(bo_sq == QPhi(2, -1));
    CHECK(oc_sq == QPhi(5, -3));
    CHECK(bc_sq == QPhi(1));

    // |BO| / |OC| = phi, and |BO| is the geometric mean of |OC| and |BC|
    CHECK(bo_sq == kPhi * kPhi * oc_sq);
    CHECK(bo_sq == *sqrt_in_qphi(oc_sq) * *sqrt_in_qphi(bc_sq));
    CHECK(*sqrt_in_qphi(bo_sq) + *sqrt_in_qphi(oc_sq) == QPhi(1));

    // measuring from the other end lands at 2 - phi
    const RadicalPoint o2 = golden_section_point(c, b);
    CHECK(exact_coord(o2.x) == QPhi(2) - kPhi);

    // a slanted rational segment sections just as exactly
    const RadicalPoint p = rat_point(QPhi(1), QPhi(1));
    const RadicalPoint q = rat_point(QPhi(4), QPhi(5));
    const RadicalPoint m = golden_section_point(p, q);
    CHECK(exact_coord(m.x) == QPhi(-2, 3));
    CHECK(exact_coord(m.y) == QPhi(-3, 4));
    CHECK(*dist_sq_exact(p, m) == kPhi * kPhi * *dist_sq_exact(m, q));

    CHECK_THROWS_AS(golden_section_point(p, p), ConstructionError);
}

TEST_CASE("the golden rectangle construction lands on exact corners") {
    ConstructionTrace t = build_golden_rectangle();
    CHECK(t.steps().size() == 18);

    auto pt = [&](const char* id) -> const RadicalPoint& {
        const GeomObject& g = t.object(id);
        REQUIRE(g.kind == ObjectKind::point);
        REQUIRE(g.exact_point.has_value());
        return *g.exact_point;
    };

    const RadicalPoint& a = pt("A");
    CHECK(exact_coord(a.x) == QPhi(0));
    CHECK(exact_coord(a.y) == kPhi);

    const RadicalPoint& d = pt("D");
    CHECK(exact_coord(d.x) == QPhi(1));
    CHECK(exact_coord(d.y) == kPhi);

    CHECK(exact_coord(pt("G").y) == QPhi(1));
    CHECK(exact_coord(pt("F").x) == QPhi(1));
    CHECK(exact_coord(pt("F").y) == QPhi(1));
    CHECK(exact_coord(pt("M").y) == QPhi(BigRational(1, 2)));

    // the bisector construction passes through (+-sqrt(3)/2, 1/2)
    const RadicalPoint& h1 = pt("H1");
    CHECK(!h1.x.as_qphi().has_value());
    CHECK(h1.x.square() == QPhi(BigRational(3, 4)));
    CHECK(h1.x.sign() > 0);
    CHECK(exact_coord(h1.y) == QPhi(BigRational(1, 2)));
    CHECK(pt("H2").x.sign() < 0);

    // the finished rectangle: sides 1 and phi, diagonal sqrt(2 + phi)
    const RadicalPoint& b = pt("B");
    const RadicalPoint& c = pt("C");
    CHECK(*dist_sq_exact(a, b) == QPhi(1, 1));
    CHECK(*dist_sq_exact(b, c) == QPhi(1));
    CHECK(*dist_sq_exact(a, d) == QPhi(1));
    CHECK(*dist_sq_exact(a, b) == kPhi * kPhi * *dist_sq_exact(b, c));
    CHECK(*dist_sq_exact(a, c) == QPhi(2, 1));
    CHECK(*dist_sq_exact(b, d) == QPhi(2, 1));
}

TEST_CASE("the T2 construction certifies its own algebra") {
    auto [trace, cert] = construct_T2();
    CHECK(trace.steps().size() == 23);

    CHECK(cert.bo_sq == QPhi(2, -1));
    CHECK(cert.oc_sq == QPhi(5, -3));
    CHECK(cert.eo_sq == QPhi(2, 1));
    CHECK(cert.be_sq == QPhi(0, 2));
    CHECK(cert.ec_sq == QPhi(1, 2));

    CHECK(cert.bo_oc_ratio_is_phi);
    CHECK(cert.eo_matches_rect_diagonal);
    CHECK(cert.right_angle_at_b);
    CHECK(cert.pythagoras);
    CHECK(QPhi(1) + cert.be_sq == cert.ec_sq);
    CHECK(cert.matches_t2);

    const GeomObject& e = trace.object("E");
    REQUIRE(e.exact_point.has_value());
    CHECK(e.exact_point->x.is_zero());
    CHECK(e.exact_point->y.square() == QPhi(0, 2));
    CHECK(!e.exact_point->y.as_qphi().has_value());

    const GoldenTriangleEntry t2 = tn_entry(2);
    CHECK(radical_cmp(cert.side_short, t2.side_short) == std::strong_ordering::equal);
    CHECK(radical_cmp(cert.side_mid, t2.side_mid) == std::strong_ordering::equal);
    CHECK(radical_cmp(cert.side_long, t2.side_long) == std::strong_ordering::equal);
    CHECK(radical_equal(cert.side_mid, Radical(QPhi(1), QPhi(0, 2))));

    const std::string text = trace.serialize();
    CHECK(text.find("E = intersect(arc_O, ext_BA; beyond:B:A)") != std::string::npos);
    CHECK(text.find("O = golden_section_point(B, C;)") != std::string::npos);
}

TEST_CASE("every trace object keeps its float shadow in agreement") {
    auto [trace, cert] = construct_T2();
    const Float50 tol("1e-30");

    for (const auto& [id, g] : trace.objects()) {
        if (g.exact_point) {
            CHECK(abs(g.num[0] - to_float50(g.exact_point->x)) <= tol);
            CHECK(abs(g.num[1] - to_float50(g.exact_point->y)) <= tol);
        }
        if (g.exact_circle) {
            CHECK(abs(g.num[0] - to_float50((*g.exact_circle)[0])) <= tol);
            CHECK(abs(g.num[1] - to_float50((*g.exact_circle)[1])) <= tol);
            CHECK(abs(g.num[2] - to_float50((*g.exact_circle)[2])) <= tol);
        }
        if (g.exact_line) {
            // lines carry an arbitrary scale, so compare cross products
            const Float50 ea = to_float50((*g.exact_line)[0]);
            const Float50 eb = to_float50((*g.exact_line)[1]);
            const Float50 ec = to_float50((*g.exact_line)[2]);
            CHECK(abs(ea * g.num[1] - eb * g.num[0]) <= Float50("1e-28"));
            CHECK(abs(ea * g.num[2] - ec * g.num[0]) <= Float50("1e-28"));
            CHECK(abs(eb * g.num[2] - ec * g.num[1]) <= Float50("1e-28"));
        }
    }

    // every point of the two constructions stays exact
    for (const char* id : {"B", "C", "G", "F", "H1", "H2", "M", "A", "D", "O", "E"}) {
        CHECK(trace.object(id).exact_point.has_value());
    }
}

TEST_CASE("intersections fall back to fifty digits when exactness is impossible") {
    ConstructionTrace t = unit_circle_rig();
    t.apply({"P1", "place_point", {lit(QPhi(BigRational(1, 2))), lit(QPhi(0))}, ""});
    t.apply({"P2", "place_point", {lit(QPhi(BigRational(3, 2))), lit(QPhi(1))}, ""});
    t.apply({"cut", "line_through", {"P1", "P2"}, ""});

    // x^2 + (x - 1/2)^2 = 1 has discriminant 7: irrational roots with a
    // rational shift stay outside the single-radical layer
    const GeomObject& x = t.apply({"X", "intersect", {"circ", "cut"}, "y>0"});
    CHECK(!x.exact_point.has_value());
    CHECK(abs(x.num[0] * x.num[0] + x.num[1] * x.num[1] - 1) <= Float50("1e-45"));
    CHECK(abs(x.num[1] - (x.num[0] - Float50(1) / 2)) <= Float50("1e-45"));

    // golden sectioning a numeric-only point still works, minus the exact layer
    const GeomObject& m = t.apply({"Mx", "golden_section_point", {"B", "X"}, ""});
    CHECK(!m.exact_point.has_value());
    CHECK(m.num[0] > 0);
    CHECK(m.num[0] < x.num[0]);

    // claims about X are decided numerically
    std::vector<Claim> claims;
    claims.push_back({Claim::Kind::segment_length,
                      "X on the circle",
                      {"B", "X", "", ""},
                      Radical::from_qphi(QPhi(1))});
    claims.push_back({Claim::Kind::segment_ratio,
                      "BX : BC",
                      {"B", "X", "B", "C"},
                      Radical::from_qphi(QPhi(1))});
    const VerifyReport rep = verify_trace(t, claims);
    CHECK(rep.all_pass);
    REQUIRE(rep.claims.size() == 2);
    CHECK(rep.claims[0].pass);
    CHECK(!rep.claims[0].exact);
    CHECK(rep.claims[1].pass);
    CHECK(!rep.claims[1].exact);
}

TEST_CASE("selectors narrow candidates and reject the rest") {
    ConstructionTrace t = unit_circle_rig();

    CHECK_THROWS_AS(t.apply({"X", "intersect", {"circ", "side"}, ""}), ConstructionError);

    const GeomObject& top = t.apply({"T", "intersect", {"circ", "side"}, "y>0"});
    CHECK(exact_coord(top.exact_point->y) == QPhi(1));
    const GeomObject& bottom = t.apply({"U", "intersect", {"circ", "side"}, "y<0"});
    CHECK(exact_coord(bottom.exact_point->y) == QPhi(-1));

    // (0, 1) and (0, -1) are equidistant from C, so nearest:C cannot decide
    CHECK_THROWS_AS(t.apply({"X", "intersect", {"circ", "side"}, "nearest:C"}),
                    ConstructionError);

    t.apply({"N", "place_point", {lit(QPhi(0)), lit(QPhi(2))}, ""});
    const GeomObject& near_n = t.apply({"V", "intersect", {"circ", "side"}, "nearest:N"});
    CHECK(exact_coord(near_n.exact_point->y) == QPhi(1));

    // both candidates sit inside the ray BN, so beyond:B:N keeps neither
    CHECK_THROWS_AS(t.apply({"X", "intersect", {"circ", "side"}, "beyond:B:N"}),
                    ConstructionError);
    const GeomObject& past_b = t.apply({"W", "intersect", {"circ", "side"}, "beyond:N:B"});
    CHECK(exact_coord(past_b.exact_point->y) == QPhi(-1));

    CHECK_THROWS_AS(t.apply({"X", "intersect", {"circ", "side"}, "z>0"}), ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "intersect", {"circ", "side"}, "beyond:B"}),
                    ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "intersect", {"B", "side"}, "y>0"}), ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "frobnicate", {"B", "C"}, ""}), ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "line_through", {"B", "C"}, "y>0"}), ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "line_through", {"B", "nope"}, ""}), UnresolvedObjectError);
    CHECK_THROWS_AS(t.apply({"T", "place_point", {lit(QPhi(0)), lit(QPhi(0))}, ""}),
                    ConstructionError);
    CHECK_THROWS_AS(t.apply({"bad id", "place_point", {lit(QPhi(0)), lit(QPhi(0))}, ""}),
                    ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "line_through", {"B", "B"}, ""}), ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "circle_center_through", {"B", "B"}, ""}),
                    ConstructionError);
    CHECK_THROWS_AS(t.apply({"X", "golden_section_point", {"B", "B"}, ""}), ConstructionError);

    // parallel and coincident lines
    t.apply({"side2", "perpendicular_at", {"base", "C"}, ""});
    CHECK_THROWS_AS(t.apply({"X", "intersect", {"side", "side2"}, ""}), ConstructionError);
    t.apply({"side3", "perpendicular_at", {"base", "B"}, ""});
    CHECK_THROWS_AS(t.apply({"X", "intersect", {"side", "side3"}, ""}), ConstructionError);
}

TEST_CASE("traces serialize and parse without loss") {
    auto [trace, cert] = construct_T2();
    const std::string text = trace.serialize();

    ConstructionTrace copy = ConstructionTrace::parse(text);
    CHECK(copy.serialize() == text);
    CHECK(copy.steps() == trace.steps());
    CHECK(copy.objects().size() == trace.objects().size());

    for (const char* id : {"A", "E", "O", "M", "H1"}) {
        const GeomObject& lhs = trace.object(id);
        const GeomObject& rhs = copy.object(id);
        REQUIRE(lhs.exact_point.has_value());
        REQUIRE(rhs.exact_point.has_value());
        CHECK(radical_equal(lhs.exact_point->x, rhs.exact_point->x));
        CHECK(radical_equal(lhs.exact_point->y, rhs.exact_point->y));
        CHECK(lhs.num[0] == rhs.num[0]);
        CHECK(lhs.num[1] == rhs.num[1]);
    }
}

TEST_CASE("replay rebuilds the identical object table") {
    auto [trace, cert] = construct_T2();
    const Float50 ex = trace.object("E").num[0];
    const Float50 ey = trace.object("E").num[1];
    const std::size_t n_steps = trace.steps().size();
    const std::size_t n_objects = trace.objects().size();

    trace.replay();

    CHECK(trace.steps().size() == n_steps);
    CHECK(trace.objects().size() == n_objects);
    CHECK(trace.object("E").num[0] == ex);
    CHECK(trace.object("E").num[1] == ey);
    REQUIRE(trace.object("A").exact_point.has_value());
    CHECK(exact_coord(trace.object("A").exact_point->y) == kPhi);
}

TEST_CASE("the claim checker proves and refutes exactly") {
    auto [trace, cert] = construct_T2();

    std::vector<Claim> claims;
    claims.push_back({Claim::Kind::segment_length,
                      "AB = phi",
                      {"A", "B", "", ""},
                      Radical::from_qphi(kPhi)});
    claims.push_back({Claim::Kind::segment_length,
                      "diagonal AC",
                      {"A", "C", "", ""},
                      Radical(QPhi(1), QPhi(2, 1))});
    claims.push_back({Claim::Kind::segment_length,
                      "BE = sqrt(2 phi)",
                      {"B", "E", "", ""},
                      Radical(QPhi(1), QPhi(0, 2))});
    claims.push_back({Claim::Kind::segment_ratio,
                      "AB : BC = phi",
                      {"A", "B", "B", "C"},
                      Radical::from_qphi(kPhi)});
    claims.push_back({Claim::Kind::segment_ratio,
                      "BO : OC = phi",
                      {"B", "O", "O", "C"},
                      Radical::from_qphi(kPhi)});
    claims.push_back({Claim::Kind::right_angle,
                      "right angle at B",
                      {"E", "B", "C", ""},
                      Radical::from_qphi(QPhi(0))});

    VerifyReport rep = verify_trace(trace, claims);
    CHECK(rep.all_pass);
    REQUIRE(rep.claims.size() == claims.size());
    for (const ClaimOutcome& oc : rep.claims) {
        CHECK(oc.pass);
        CHECK(oc.exact);
    }

    // a deliberately false identity must fail, and exactly so
    claims.push_back({Claim::Kind::segment_length,
                      "BE = phi (false)",
                      {"B", "E", "", ""},
                      Radical::from_qphi(kPhi)});
    rep = verify_trace(trace, claims);
    CHECK(!rep.all_pass);
    CHECK(!rep.claims.back().pass);
    CHECK(rep.claims.back().exact);

    std::vector<Claim> bad;
    bad.push_back({Claim::Kind::segment_length,
                   "missing point",
                   {"B", "Z", "", ""},
                   Radical::from_qphi(kPhi)});
    CHECK_THROWS_AS(verify_trace(trace, bad), UnresolvedObjectError);

    std::vector<Claim> not_a_point;
    not_a_point.push_back({Claim::Kind::segment_length,
                           "line in a claim",
                           {"B", "base", "", ""},
                           Radical::from_qphi(QPhi(1))});
    CHECK_THROWS_AS(verify_trace(trace, not_a_point), ConstructionError);
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(ConstructionTrace::parse("B == place_point(a, b;)"), ConstructionError);
    CHECK_THROWS_AS(ConstructionTrace::parse("B = intersect(a, b)"), ConstructionError);
    CHECK_THROWS_AS(ConstructionTrace::parse("B = place_point(a, b;) extra"),
                    ConstructionError);
    CHECK_THROWS(ConstructionTrace::parse("B = place_point(garbage, garbage;)"));

    // blank lines and indentation are tolerated
    const std::string text = "\nB = place_point(" + lit(QPhi(0)) + ", " + lit(QPhi(0)) +
                             ";)\n\n  C = place_point(" + lit(QPhi(1)) + ", " + lit(QPhi(0)) +
                             ";)\n";
    ConstructionTrace t = ConstructionTrace::parse(text);
    CHECK(t.steps().size() == 2);
    CHECK(t.has_object("B"));
    CHECK(t.has_object("C"));
    CHECK(!t.has_object("D"));
    CHECK_THROWS_AS(t.object("D"), UnresolvedObjectError);
}

TEST_CASE("placed radical literals round-trip through the exact layer") {
    ConstructionTrace t;
    const Radical hx(QPhi(BigRational(1, 2)), QPhi(3));
    t.apply({"H", "place_point", {to_string(hx), lit(QPhi(BigRational(1, 2)))}, ""});

    const GeomObject& h = t.object("H");
    REQUIRE(h.exact_point.has_value());
    CHECK(radical_equal(h.exact_point->x, hx));
    CHECK(h.exact_point->x.square() == QPhi(BigRational(3, 4)));
    CHECK(abs(h.num[0] - sqrt(Float50(3)) / 2) <= Float50("1e-45"));
}
