#pragma once

#include "goldenext/qphi.hpp"

#include <utility>

namespace goldenext {

// F_0 = 0, F_1 = 1. The zero base case is the one forced by writing
// phi^(n+1) = F_(n+1)*phi + F_n at n = 0.
BigInt fib(unsigned n);

// Coefficients of phi^(n+1) = F_(n+1)*phi + F_n, returned as (F_(n+1), F_n).
// Self-checking: the pair is recomputed by actually raising phi to the power
// in QPhi and must match the Fibonacci recurrence exactly.
std::pair<BigInt, BigInt> phi_pow_decompose(unsigned n);

}  // namespace goldenext
