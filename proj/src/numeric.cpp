#include "goldenext/numeric.hpp"

#include <stdexcept>

namespace goldenext {

BigInt pow10(unsigned k) {
    BigInt p = 1;
    for (unsigned i = 0; i < k; i++) {
        p *= 10;
    }
    return p;
}

BigInt floor_rational(const BigRational& r) {
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) {
        q -= 1;
    }
    return q;
}

std::optional<BigRational> exact_sqrt(const BigRational& r) {
    if (r < 0) {
        throw std::domain_error("exact_sqrt: negative argument");
    }
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) {
        return std::nullopt;
    }
    return BigRational(sn, sd);
}

BigRational sqrt_lower(const BigRational& r, unsigned guard) {
    if (r < 0) {
        throw std::domain_error("sqrt_lower: negative argument");
    }
    // floor(sqrt(r * 10^(2g))) / 10^g <= sqrt(r), within 10^-g of it.
    BigInt scale = pow10(guard);
    BigInt scaled = floor_rational(r * BigRational(scale * scale));
    BigInt root = boost::multiprecision::sqrt(scaled);
    return BigRational(root, scale);
}

BigRational sqrt_upper(const BigRational& r, unsigned guard) {
    BigRational lo = sqrt_lower(r, guard);
    BigRational up = lo + BigRational(1, pow10(guard));
    // floor of the scaled value can undershoot; one extra step is always enough.
    if (up * up < r) {
        up += BigRational(1, pow10(guard));
    }
    return up;
}

RationalInterval sqrt5_interval(unsigned guard) {
    BigInt scale = pow10(guard);
    BigInt scaled = 5 * scale * scale;
    BigInt root = boost::multiprecision::sqrt(scaled);
    return RationalInterval{BigRational(root, scale), BigRational(root + 1, scale)};
}

namespace detail {

std::string format_scaled(const BigInt& n, unsigned digits) {
    if (n < 0) {
        throw std::invalid_argument("format_scaled: negative magnitude");
    }
    std::string s = n.str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    if (digits == 0) {
        return s;
    }
    return s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

}  // namespace detail

}  // namespace goldenext
