#include "goldenext/radical.hpp"

#include <cmath>
#include <stdexcept>

namespace goldenext {

Radical::Radical(QPhi c, QPhi d) : c_(std::move(c)), d_(std::move(d)) {
    if (d_.sign() < 0) {
        throw std::domain_error("Radical: negative radicand");
    }
    if (c_.is_zero() || d_.is_zero()) {
        c_ = QPhi(0);
        d_ = QPhi(0);
    }
}

std::optional<QPhi> Radical::as_qphi() const {
    if (is_zero()) {
        return QPhi(0);
    }
    if (auto s = sqrt_in_qphi(d_)) {
        return c_ * *s;
    }
    return std::nullopt;
}

Radical radical_mul(const Radical& x, const Radical& y) {
    return x * y;
}

std::strong_ordering radical_cmp(const Radical& x, const Radical& y) {
    int sx = x.sign();
    int sy = y.sign();
    if (sx != sy) {
        return sx <=> sy;
    }
    if (sx == 0) {
        return std::strong_ordering::equal;
    }
    // Same nonzero sign: squaring is monotone for positives, antitone for
    // negatives.
    int dsq = (x.square() - y.square()).sign();
    if (sx < 0) {
        dsq = -dsq;
    }
    return dsq <=> 0;
}

std::optional<Radical> radical_add(const Radical& x, const Radical& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    // c1*sqrt(d1) + c2*sqrt(d2) stays a single radical iff d1/d2 is a square
    // s^2 in Q(phi); then sqrt(d1) = s*sqrt(d2) and the coefficients add.
    auto s = sqrt_in_qphi(x.radicand() / y.radicand());
    if (!s) {
        return std::nullopt;
    }
    return Radical(x.coeff() * *s + y.coeff(), y.radicand());
}

std::optional<Radical> radical_sub(const Radical& x, const Radical& y) {
    return radical_add(x, -y);
}

std::string radical_to_float(const Radical& x, unsigned digits, Rounding mode) {
    int s = x.sign();
    if (s < 0) {
        return "-" + radical_to_float(-x, digits, mode);
    }
    if (auto q = x.as_qphi()) {
        return qphi_to_float(*q, digits, mode);
    }
    QPhi sq = x.square();
    BigInt scale = pow10(digits);
    auto scaled = [&](const BigRational& v) {
        if (mode == Rounding::nearest) {
            return floor_rational(v * BigRational(scale) + BigRational(1, 2));
        }
        return floor_rational(v * BigRational(scale));
    };
    // Value is sqrt of an exactly known field element; refine a rational
    // enclosure of the square, take rational square-root bounds, and stop
    // once the digit string is pinned. The as_qphi branch above removed
    // every rational value, so boundary cases cannot stall the loop.
    for (unsigned guard = digits + 10;; guard *= 2) {
        RationalInterval box = qphi_bounds(sq, guard);
        if (box.lo < 0) {
            box.lo = 0;
        }
        BigInt lo = scaled(sqrt_lower(box.lo, guard));
        BigInt hi = scaled(sqrt_upper(box.hi, guard));
        if (lo == hi) {
            return detail::format_scaled(lo, digits);
        }
    }
}

RationalInterval radical_bounds(const Radical& x, unsigned guard) {
    int s = x.sign();
    if (s == 0) {
        return RationalInterval{0, 0};
    }
    if (s < 0) {
        RationalInterval pos = radical_bounds(-x, guard);
        return RationalInterval{-pos.hi, -pos.lo};
    }
    QPhi sq = x.square();
    BigRational width_cap(1, pow10(guard));
    for (unsigned g = guard + 2;; g *= 2) {
        RationalInterval box = qphi_bounds(sq, g);
        if (box.lo < 0) {
            box.lo = 0;
        }
        RationalInterval out{sqrt_lower(box.lo, g), sqrt_upper(box.hi, g)};
        if (out.hi - out.lo <= width_cap) {
            return out;
        }
    }
}

double radical_to_double(const Radical& x) {
    int s = x.sign();
    if (s == 0) {
        return 0.0;
    }
    double mag = std::sqrt(qphi_to_double(x.square()));
    return s < 0 ? -mag : mag;
}

std::string to_string(const Radical& x) {
    return "(" + to_string(x.coeff()) + ")*sqrt(" + to_string(x.radicand()) + ")";
}

Radical radical_parse(const std::string& text) {
    const std::string sep = ")*sqrt(";
    auto pos = text.find(sep);
    if (text.empty() || text.front() != '(' || text.back() != ')' ||
        pos == std::string::npos) {
        throw std::invalid_argument("radical_parse: bad form: " + text);
    }
    std::string coeff = text.substr(1, pos - 1);
    std::string radicand = text.substr(pos + sep.size(),
                                       text.size() - (pos + sep.size()) - 1);
    return Radical(qphi_parse(coeff), qphi_parse(radicand));
}

}  // namespace goldenext
