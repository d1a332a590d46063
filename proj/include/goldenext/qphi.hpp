#pragma once

#include "goldenext/numeric.hpp"

#include <compare>
#include <optional>
#include <string>

namespace goldenext {

// An element a + b*phi of Q(phi), phi = (1+sqrt(5))/2. The relation
// phi^2 = phi + 1 keeps every product in this two-coefficient form.
class QPhi {
   public:
    QPhi() : a_(0), b_(0) {}
    QPhi(int v) : a_(v), b_(0) {}
    QPhi(BigRational rational) : a_(std::move(rational)), b_(0) {}
    QPhi(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QPhi phi() { return QPhi(0, 1); }

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Image under the field automorphism phi -> 1 - phi.
    QPhi conj() const { return QPhi(a_ + b_, -b_); }

    // x * conj(x), always rational.
    BigRational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    QPhi inverse() const;
    QPhi pow(long long n) const;

    int sign() const;

    friend QPhi operator+(const QPhi& x, const QPhi& y) {
        return QPhi(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QPhi operator-(const QPhi& x, const QPhi& y) {
        return QPhi(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QPhi operator-(const QPhi& x) { return QPhi(-x.a_, -x.b_); }
    friend QPhi operator*(const QPhi& x, const QPhi& y) {
        return QPhi(x.a_ * y.a_ + x.b_ * y.b_,
                    x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_);
    }
    friend QPhi operator/(const QPhi& x, const QPhi& y) { return x * y.inverse(); }

    QPhi& operator+=(const QPhi& y) { return *this = *this + y; }
    QPhi& operator-=(const QPhi& y) { return *this = *this - y; }
    QPhi& operator*=(const QPhi& y) { return *this = *this * y; }
    QPhi& operator/=(const QPhi& y) { return *this = *this / y; }

    friend bool operator==(const QPhi& x, const QPhi& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QPhi& x, const QPhi& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

   private:
    BigRational a_;
    BigRational b_;
};

QPhi qphi_mul(const QPhi& x, const QPhi& y);
QPhi qphi_inv(const QPhi& x);
int qphi_sign(const QPhi& x);

// Fixed-point decimal expansion with `digits` fractional digits, obtained by
// shrinking a rational enclosure of sqrt(5) until the digit string stabilizes.
// Truncation is the default; Rounding::nearest rounds the last digit.
std::string qphi_to_float(const QPhi& x, unsigned digits,
                          Rounding mode = Rounding::truncate);

// Rational enclosure of x with width below 10^-guard.
RationalInterval qphi_bounds(const QPhi& x, unsigned guard);

double qphi_to_double(const QPhi& x);

// Canonical grammar "p/q + r/s*phi"; to_string and parse are exact inverses.
std::string to_string(const QPhi& x);
QPhi qphi_parse(const std::string& text);

// Exact square root within the field, when one exists. Used to collapse
// intersection discriminants that happen to be squares in Q(phi).
std::optional<QPhi> sqrt_in_qphi(const QPhi& x);

}  // namespace goldenext
