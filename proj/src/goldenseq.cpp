#include "goldenext/goldenseq.hpp"

#include <stdexcept>

namespace goldenext {

namespace {

BigRational fib_ratio(unsigned n) {
    return BigRational(fib(n + 1), fib(n));
}

}  // namespace

GoldenTriangleEntry tn_entry(unsigned n) {
    if (n < 1) {
        throw std::domain_error("tn_entry: n must be >= 1");
    }
    BigInt f_n = fib(n);
    BigInt f_n1 = fib(n + 1);
    GoldenTriangleEntry entry;
    entry.n = n;
    entry.side_short = Radical::from_qphi(QPhi(1));
    entry.side_mid = Radical(QPhi(1), QPhi(0, BigRational(f_n1, f_n)));
    // The hypotenuse radicand is the actual power phi^(n+1) over F_n, so the
    // verification below is the Fibonacci expansion of phi^(n+1), not a
    // tautology.
    QPhi phi_power = QPhi::phi().pow(static_cast<long long>(n) + 1);
    entry.side_long = Radical(QPhi(1), QPhi(BigRational(1, f_n)) * phi_power);
    entry.area = Radical(QPhi(BigRational(1, 2)), entry.side_mid.radicand());

    QPhi lhs = QPhi(1) + entry.side_mid.square();
    if (lhs != entry.side_long.square()) {
        throw std::logic_error("tn_entry: Pythagorean identity failed");
    }
    return entry;
}

Radical tn_area(unsigned n) {
    return tn_entry(n).area;
}

BoundsReport tn_area_bounds_check(unsigned n_max) {
    if (n_max < 2) {
        throw std::domain_error("tn_area_bounds_check: n_max must be >= 2");
    }
    BoundsReport report;
    report.n_max = n_max;
    Radical lower = tn_area(1);
    Radical upper = tn_area(2);
    for (unsigned n = 1; n <= n_max; n++) {
        Radical a = tn_area(n);
        auto vs_lower = radical_cmp(lower, a);
        auto vs_upper = radical_cmp(a, upper);
        if (vs_lower == std::strong_ordering::greater ||
            vs_upper == std::strong_ordering::greater) {
            report.counterexample = n;
            return report;
        }
        if (vs_lower == std::strong_ordering::equal ||
            vs_upper == std::strong_ordering::equal) {
            report.equality_at.push_back(n);
        }
    }
    report.alternation_ok = true;
    for (unsigned n = 1; n + 2 <= n_max; n++) {
        BigRational earlier = fib_ratio(n);
        BigRational later = fib_ratio(n + 2);
        bool ok = (n % 2 == 1) ? earlier < later : earlier > later;
        if (!ok) {
            report.alternation_ok = false;
            report.counterexample = n;
            return report;
        }
    }
    report.all_pass = true;
    return report;
}

LimitTriangle tn_limit() {
    LimitTriangle limit;
    limit.side_short = Radical::from_qphi(QPhi(1));
    limit.side_mid = Radical::from_qphi(QPhi::phi());
    // 1 + phi^2 = 2 + phi
    limit.side_long = Radical(QPhi(1), QPhi(2, 1));
    limit.area = Radical::from_qphi(QPhi(0, BigRational(1, 2)));
    return limit;
}

RationalInterval side_mid_gap(unsigned n, unsigned guard) {
    RationalInterval mid = radical_bounds(tn_entry(n).side_mid, guard + 1);
    RationalInterval phi = qphi_bounds(QPhi::phi(), guard + 1);
    RationalInterval diff{mid.lo - phi.hi, mid.hi - phi.lo};
    if (diff.lo >= 0) {
        return diff;
    }
    if (diff.hi <= 0) {
        return RationalInterval{-diff.hi, -diff.lo};
    }
    // Straddles zero: the magnitude is anywhere from 0 to the wider arm.
    BigRational arm = diff.hi > -diff.lo ? diff.hi : -diff.lo;
    return RationalInterval{0, arm};
}

bool sides_in_geometric_progression(const Radical& side_short,
                                    const Radical& side_mid,
                                    const Radical& side_long) {
    return radical_equal(side_mid * side_mid, side_short * side_long);
}

bool kepler_geometric_progression_check() {
    GoldenTriangleEntry t1 = tn_entry(1);
    return sides_in_geometric_progression(t1.side_short, t1.side_mid, t1.side_long);
}

}  // namespace goldenext
