#pragma once

#include "goldenext/qphi.hpp"

#include <compare>
#include <optional>
#include <string>

namespace goldenext {

// A value c*sqrt(d) with c, d in Q(phi) and d >= 0. Multiplication is closed;
// equality and order go through signs and squares, so no canonical form of
// the radicand is ever needed. Zero is canonicalized to (0, 0).
class Radical {
   public:
    Radical() = default;
    Radical(QPhi c, QPhi d);

    static Radical from_qphi(const QPhi& value) { return Radical(value, QPhi(1)); }

    const QPhi& coeff() const { return c_; }
    const QPhi& radicand() const { return d_; }

    bool is_zero() const { return c_.is_zero(); }
    int sign() const { return c_.sign(); }

    // value^2, always representable in Q(phi).
    QPhi square() const { return c_ * c_ * d_; }

    // Collapses to a plain field element when the radicand is a square in
    // Q(phi); nullopt otherwise.
    std::optional<QPhi> as_qphi() const;

    friend Radical operator*(const Radical& x, const Radical& y) {
        return Radical(x.c_ * y.c_, x.d_ * y.d_);
    }
    friend Radical operator*(const QPhi& q, const Radical& x) {
        return Radical(q * x.c_, x.d_);
    }
    friend Radical operator-(const Radical& x) { return Radical(-x.c_, x.d_); }

   private:
    QPhi c_;
    QPhi d_;
};

Radical radical_mul(const Radical& x, const Radical& y);
std::strong_ordering radical_cmp(const Radical& x, const Radical& y);

inline bool radical_equal(const Radical& x, const Radical& y) {
    return radical_cmp(x, y) == std::strong_ordering::equal;
}

// Exact sum when it stays a single radical: the radicands must differ by a
// square factor in Q(phi) (this is also necessary). Otherwise nullopt, and
// the caller drops to high-precision floats.
std::optional<Radical> radical_add(const Radical& x, const Radical& y);
std::optional<Radical> radical_sub(const Radical& x, const Radical& y);

// Decimal expansion with the same digit semantics as qphi_to_float.
std::string radical_to_float(const Radical& x, unsigned digits,
                             Rounding mode = Rounding::truncate);

// Rational enclosure of the value with width below 10^-guard.
RationalInterval radical_bounds(const Radical& x, unsigned guard);

double radical_to_double(const Radical& x);

// Canonical grammar "(QPhi)*sqrt(QPhi)"; exact inverse of radical_parse.
std::string to_string(const Radical& x);
Radical radical_parse(const std::string& text);

}  // namespace goldenext
