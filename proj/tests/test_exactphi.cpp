#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "goldenext/fibonacci.hpp"
#include "goldenext/qphi.hpp"
#include "goldenext/radical.hpp"

#include <random>
#include <vector>

using namespace goldenext;

namespace {

const QPhi kPhi = QPhi::phi();

std::mt19937_64 make_rng() { return std::mt19937_64(0x9e3779b97f4a7c15ull); }

BigRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 20);
    return BigRational(num(rng), den(rng));
}

QPhi random_qphi(std::mt19937_64& rng) {
    return QPhi(random_rational(rng), random_rational(rng));
}

QPhi random_nonzero_qphi(std::mt19937_64& rng) {
    for (;;) {
        QPhi x = random_qphi(rng);
        if (!x.is_zero()) return x;
    }
}

QPhi random_positive_qphi(std::mt19937_64& rng) {
    for (;;) {
        QPhi x = random_qphi(rng);
        if (x.sign() > 0) return x;
    }
}

Radical random_positive_radical(std::mt19937_64& rng) {
    return Radical(random_positive_qphi(rng), random_positive_qphi(rng));
}

}  // namespace

TEST_CASE("multiplication reduces phi^2 to phi + 1") {
    CHECK(kPhi * kPhi == QPhi(1, 1));
    QPhi x(BigRational(7, 3), BigRational(-2, 5));
    CHECK(QPhi(1) * x == x);
    CHECK(kPhi.pow(3) == QPhi(1, 2));
    CHECK(qphi_mul(kPhi, kPhi) == QPhi(1, 1));
}

TEST_CASE("inverse examples") {
    CHECK(kPhi.inverse() == QPhi(-1, 1));
    CHECK(QPhi(1).inverse() == QPhi(1));
    CHECK(QPhi(1, 1).inverse() == QPhi(2, -1));
    CHECK(qphi_inv(QPhi(1, 1)) == QPhi(2, -1));
    CHECK_THROWS_AS(QPhi(0).inverse(), std::domain_error);
}

TEST_CASE("exact sign without floating point") {
    CHECK(qphi_sign(QPhi(1)) == 1);
    CHECK(qphi_sign(QPhi(-2, 1)) == -1);
    CHECK(qphi_sign(QPhi(-1, 1)) == 1);
    CHECK(qphi_sign(QPhi(0)) == 0);
    // phi - 1.618... straddles: 1618/1000 < phi < 1619/1000.
    CHECK(qphi_sign(QPhi(BigRational(-1618, 1000), 1)) == 1);
    CHECK(qphi_sign(QPhi(BigRational(-1619, 1000), 1)) == -1);
}

TEST_CASE("ordering follows sign of difference") {
    CHECK(QPhi(1, 1) < QPhi(1, 2));
    CHECK(kPhi > QPhi(BigRational(8, 5)));
    CHECK(kPhi < QPhi(BigRational(13, 8)));
    CHECK(kPhi.pow(2) == QPhi(1, 1));
}

TEST_CASE("decimal expansion, truncating") {
    CHECK(qphi_to_float(kPhi, 10) == "1.6180339887");
    CHECK(qphi_to_float(QPhi(1), 3) == "1.000");
    CHECK(qphi_to_float(QPhi(1, 2), 10) == "4.2360679774");
    CHECK(qphi_to_float(-kPhi, 5) == "-1.61803");
    CHECK(qphi_to_float(QPhi(BigRational(1, 2)) * kPhi, 12) == "0.809016994374");
}

TEST_CASE("decimal expansion, rounding to nearest") {
    CHECK(qphi_to_float(QPhi(BigRational(1, 2)) * kPhi, 12, Rounding::nearest) ==
          "0.809016994375");
    CHECK(qphi_to_float(QPhi(BigRational(3, 2)), 2, Rounding::nearest) == "1.50");
    CHECK(qphi_to_float(QPhi(BigRational(1, 3)), 4, Rounding::nearest) == "0.3333");
    CHECK(qphi_to_float(QPhi(BigRational(2, 3)), 4, Rounding::nearest) == "0.6667");
}

TEST_CASE("radical products check out through squares") {
    Radical root_phi(QPhi(1), kPhi);
    Radical prod = radical_mul(root_phi, root_phi);
    CHECK(radical_equal(prod, Radical::from_qphi(kPhi)));

    Radical root_2phi(QPhi(1), QPhi(0, 2));
    CHECK(radical_mul(root_2phi, root_2phi).square() == QPhi(0, 2) * QPhi(0, 2));
    CHECK(radical_equal(radical_mul(root_2phi, root_2phi),
                        Radical::from_qphi(QPhi(0, 2))));

    Radical root_phi3(QPhi(1), kPhi.pow(3));
    CHECK(radical_equal(radical_mul(root_phi, root_phi3),
                        Radical::from_qphi(kPhi.pow(2))));
}

TEST_CASE("radical comparison is exact") {
    Radical root_phi(QPhi(1), kPhi);
    Radical root_2phi(QPhi(1), QPhi(0, 2));
    CHECK(radical_cmp(root_phi, root_2phi) == std::strong_ordering::less);

    Radical root_phi3(QPhi(1), kPhi.pow(3));
    Radical phi_root_phi(kPhi, kPhi);
    CHECK(radical_cmp(root_phi3, phi_root_phi) == std::strong_ordering::equal);

    Radical neg_root2(QPhi(-1), QPhi(2));
    Radical zero(QPhi(1), QPhi(0));
    CHECK(zero.is_zero());
    CHECK(radical_cmp(neg_root2, zero) == std::strong_ordering::less);
    CHECK(radical_cmp(zero, neg_root2) == std::strong_ordering::greater);
}

TEST_CASE("radical decimal expansion") {
    CHECK(radical_to_float(Radical(QPhi(1), QPhi(0, 2)), 10) == "1.7989074399");
    CHECK(radical_to_float(Radical(QPhi(1), kPhi), 12) == "1.272019649514");
    CHECK(radical_to_float(Radical(QPhi(1), kPhi), 8, Rounding::nearest) ==
          "1.27201965");
    CHECK(radical_to_float(Radical(QPhi(1), QPhi(2, 1)), 15) == "1.902113032590307");
    CHECK(radical_to_float(Radical(kPhi, QPhi(2, 1)), 10) == "3.0776835371");
    CHECK(radical_to_float(Radical(QPhi(-3), QPhi(4)), 3) == "-6.000");
    CHECK(radical_to_float(Radical(QPhi(BigRational(3, 2)), QPhi(1)), 4) == "1.5000");
}

TEST_CASE("radical sums stay exact only for commensurable radicands") {
    Radical root8(QPhi(1), QPhi(8));
    Radical root2(QPhi(1), QPhi(2));
    auto sum = radical_add(root8, root2);
    REQUIRE(sum.has_value());
    CHECK(radical_equal(*sum, Radical(QPhi(3), QPhi(2))));

    Radical root_phi(QPhi(1), kPhi);
    Radical root_phi3(QPhi(1), kPhi.pow(3));
    auto mixed = radical_add(root_phi3, root_phi);
    REQUIRE(mixed.has_value());
    CHECK(radical_equal(*mixed, Radical(QPhi(1, 1), kPhi)));

    CHECK(!radical_add(root2, Radical(QPhi(1), QPhi(3))).has_value());
    CHECK(!radical_add(root_phi, Radical(QPhi(1), QPhi(0, 2))).has_value());

    auto cancel = radical_sub(root_phi, root_phi);
    REQUIRE(cancel.has_value());
    CHECK(cancel->is_zero());
}

TEST_CASE("square roots inside the field") {
    auto r = sqrt_in_qphi(kPhi.pow(2));
    REQUIRE(r.has_value());
    CHECK(*r == kPhi);

    r = sqrt_in_qphi(QPhi(BigRational(5, 4)));
    REQUIRE(r.has_value());
    CHECK(*r == QPhi(BigRational(-1, 2), 1));

    r = sqrt_in_qphi(QPhi(4));
    REQUIRE(r.has_value());
    CHECK(*r == QPhi(2));

    r = sqrt_in_qphi(kPhi.pow(6));
    REQUIRE(r.has_value());
    CHECK(*r == kPhi.pow(3));

    CHECK(!sqrt_in_qphi(QPhi(2, 1)).has_value());
    CHECK(!sqrt_in_qphi(QPhi(3, 4)).has_value());
    CHECK(!sqrt_in_qphi(QPhi(0, 2)).has_value());
    CHECK(!sqrt_in_qphi(QPhi(-1)).has_value());
    CHECK(sqrt_in_qphi(QPhi(0)) == QPhi(0));
}

TEST_CASE("as_qphi collapses square radicands") {
    CHECK(Radical(QPhi(1), kPhi.pow(2)).as_qphi() == kPhi);
    CHECK(!Radical(QPhi(1), QPhi(0, 2)).as_qphi().has_value());
    CHECK(Radical(QPhi(3), QPhi(0)).as_qphi() == QPhi(0));
}

TEST_CASE("string round-trips") {
    QPhi x(BigRational(-7, 3), BigRational(2, 5));
    CHECK(to_string(x) == "-7/3 + 2/5*phi");
    CHECK(qphi_parse(to_string(x)) == x);
    CHECK(to_string(kPhi) == "0 + 1*phi");
    CHECK(qphi_parse("0 + 1*phi") == kPhi);

    Radical rad(x, QPhi(2, 1));
    CHECK(to_string(rad) == "(-7/3 + 2/5*phi)*sqrt(2 + 1*phi)");
    Radical back = radical_parse(to_string(rad));
    CHECK(back.coeff() == rad.coeff());
    CHECK(back.radicand() == rad.radicand());

    CHECK_THROWS_AS(qphi_parse("1 - 2*phi"), std::invalid_argument);
    CHECK_THROWS_AS(radical_parse("1 + 0*phi"), std::invalid_argument);
}

TEST_CASE("fibonacci values") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(100) == BigInt("354224848179261915075"));
}

TEST_CASE("phi powers decompose into fibonacci pairs") {
    CHECK(phi_pow_decompose(0) == std::pair<BigInt, BigInt>(1, 0));
    CHECK(phi_pow_decompose(1) == std::pair<BigInt, BigInt>(1, 1));
    CHECK(phi_pow_decompose(3) == std::pair<BigInt, BigInt>(3, 2));

    QPhi power(1);
    for (unsigned n = 0; n <= 200; n++) {
        power *= kPhi;
        auto [f_next, f_n] = phi_pow_decompose(n);
        CHECK(power == QPhi(BigRational(f_n), BigRational(f_next)));
        CHECK(f_n == fib(n));
        CHECK(f_next == fib(n + 1));
    }
}

TEST_CASE("field axioms on random elements") {
    auto rng = make_rng();
    for (int i = 0; i < 300; i++) {
        QPhi x = random_qphi(rng);
        QPhi y = random_qphi(rng);
        QPhi z = random_qphi(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        QPhi nz = random_nonzero_qphi(rng);
        CHECK(nz * nz.inverse() == QPhi(1));
    }
}

TEST_CASE("conjugation is a ring homomorphism") {
    auto rng = make_rng();
    for (int i = 0; i < 300; i++) {
        QPhi x = random_qphi(rng);
        QPhi y = random_qphi(rng);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK(QPhi(x.norm()) == x * x.conj());
    }
}

TEST_CASE("sign agrees with the printed expansion") {
    auto rng = make_rng();
    for (int i = 0; i < 1000; i++) {
        QPhi x = random_qphi(rng);
        std::string s = qphi_to_float(x, 12);
        bool printed_negative = !s.empty() && s[0] == '-';
        CHECK((x.sign() < 0) == printed_negative);
    }
}

TEST_CASE("truncated expansions nest as digits grow") {
    auto rng = make_rng();
    for (int i = 0; i < 100; i++) {
        QPhi x = random_positive_qphi(rng);
        std::string shorter = qphi_to_float(x, 6);
        std::string longer = qphi_to_float(x, 14);
        CHECK(longer.substr(0, shorter.size()) == shorter);
    }
}

TEST_CASE("radical order matches 30-digit enclosures") {
    auto rng = make_rng();
    for (int i = 0; i < 300; i++) {
        Radical x = random_positive_radical(rng);
        Radical y = random_positive_radical(rng);
        for (int negate = 0; negate < 2; negate++) {
            Radical a = negate ? -x : x;
            Radical b = negate ? -y : y;
            auto order = radical_cmp(a, b);
            auto reversed = radical_cmp(b, a);
            if (order == std::strong_ordering::less) {
                CHECK(reversed == std::strong_ordering::greater);
            } else if (order == std::strong_ordering::greater) {
                CHECK(reversed == std::strong_ordering::less);
            } else {
                CHECK(reversed == std::strong_ordering::equal);
            }
            RationalInterval ia = radical_bounds(a, 30);
            RationalInterval ib = radical_bounds(b, 30);
            if (ia.hi < ib.lo) {
                CHECK(order == std::strong_ordering::less);
            } else if (ib.hi < ia.lo) {
                CHECK(order == std::strong_ordering::greater);
            }
        }
    }
}

TEST_CASE("bounds enclose tightly") {
    RationalInterval box = qphi_bounds(kPhi, 20);
    CHECK(box.lo <= box.hi);
    CHECK(box.hi - box.lo <= BigRational(1, pow10(20)));
    // phi = 1.61803398874989484820458683436563811772...
    BigRational known(BigInt("161803398874989484820"), pow10(20));
    CHECK(box.lo <= known + BigRational(1, pow10(19)));
    CHECK(box.hi >= known);

    // The enclosure of sqrt(2*phi) must straddle the exact square 2*phi.
    RationalInterval rbox = radical_bounds(Radical(QPhi(1), QPhi(0, 2)), 25);
    CHECK(rbox.lo <= rbox.hi);
    CHECK(rbox.hi - rbox.lo <= BigRational(1, pow10(25)));
    RationalInterval sq = qphi_bounds(QPhi(0, 2), 30);
    CHECK(rbox.lo * rbox.lo <= sq.hi);
    CHECK(rbox.hi * rbox.hi >= sq.lo);
}

TEST_CASE("double views are close") {
    CHECK(qphi_to_double(kPhi) == doctest::Approx(1.6180339887498949).epsilon(1e-15));
    CHECK(radical_to_double(Radical(QPhi(1), QPhi(0, 2))) ==
          doctest::Approx(1.7989074399478673).epsilon(1e-14));
    CHECK(radical_to_double(Radical(QPhi(-1), QPhi(4))) == doctest::Approx(-2.0));
}
