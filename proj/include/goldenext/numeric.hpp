#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

namespace goldenext {

using BigInt = boost::multiprecision::cpp_int;
// Canonical form is maintained by the backend: positive denominator, gcd 1.
using BigRational = boost::multiprecision::cpp_rational;

struct RationalInterval {
    BigRational lo;
    BigRational hi;
};

enum class Rounding { truncate, nearest };

BigInt pow10(unsigned k);

// floor toward negative infinity
BigInt floor_rational(const BigRational& r);

// Exact rational square root, or nullopt if r is not a perfect square. r >= 0.
std::optional<BigRational> exact_sqrt(const BigRational& r);

// Rational bounds on sqrt(r), r >= 0, accurate to ~10^-guard.
BigRational sqrt_lower(const BigRational& r, unsigned guard);
BigRational sqrt_upper(const BigRational& r, unsigned guard);

// Rational bounds on sqrt(5), accurate to 10^-guard.
RationalInterval sqrt5_interval(unsigned guard);

namespace detail {

// Formats a non-negative integer N = floor-or-round(value * 10^digits) as a
// fixed-point decimal string with `digits` fractional digits.
std::string format_scaled(const BigInt& n, unsigned digits);

}  // namespace detail

}  // namespace goldenext
