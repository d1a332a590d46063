#pragma once

#include "goldenext/fibonacci.hpp"
#include "goldenext/radical.hpp"

#include <optional>
#include <vector>

namespace goldenext {

// Right triangle T_n with legs 1 and sqrt(phi*F_(n+1)/F_n) and hypotenuse
// sqrt(phi^(n+1)/F_n). The Pythagorean identity of these sides is exactly
// the Fibonacci expansion of phi^(n+1).
struct GoldenTriangleEntry {
    unsigned n = 0;
    Radical side_short;
    Radical side_mid;
    Radical side_long;
    Radical area;
};

// n >= 1 (F_0 = 0 makes n = 0 meaningless). The constructor path re-verifies
// 1 + side_mid^2 = side_long^2 componentwise before returning.
GoldenTriangleEntry tn_entry(unsigned n);

Radical tn_area(unsigned n);

struct BoundsReport {
    unsigned n_max = 0;
    bool all_pass = false;
    // n for which the area comparisons fail; empty on success.
    std::optional<unsigned> counterexample;
    // Indices attaining a bound with equality (1 and 2, and nothing else).
    std::vector<unsigned> equality_at;
    // Odd-indexed Fibonacci ratios increase, even-indexed decrease.
    bool alternation_ok = false;
};

// Exact check of area(T_1) <= area(T_n) <= area(T_2) for 1 <= n <= n_max.
BoundsReport tn_area_bounds_check(unsigned n_max);

// The n -> infinity triangle (1, phi, sqrt(1+phi^2)), area phi/2. Not a
// sequence member: it has no Fibonacci index.
struct LimitTriangle {
    Radical side_short;
    Radical side_mid;
    Radical side_long;
    Radical area;
};

LimitTriangle tn_limit();

// Exact rational enclosure of |side_mid(T_n) - phi|, width below 10^-guard.
RationalInterval side_mid_gap(unsigned n, unsigned guard);

// Sides of T_1 are in geometric progression (the Kepler triangle property).
bool kepler_geometric_progression_check();

// mid^2 = short * long by exact value comparison.
bool sides_in_geometric_progression(const Radical& side_short,
                                    const Radical& side_mid,
                                    const Radical& side_long);

}  // namespace goldenext
