#include "goldenext/qphi.hpp"

#include <stdexcept>

namespace goldenext {

namespace {

int rational_sign(const BigRational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

// Enclosure of a positive x = p + q*sqrt(5) (p = (2a+b)/2, q = b/2) using a
// sqrt(5) interval of width 10^-guard.
RationalInterval enclose(const QPhi& x, unsigned guard) {
    BigRational p = (2 * x.a() + x.b()) / 2;
    BigRational q = x.b() / 2;
    RationalInterval s5 = sqrt5_interval(guard);
    if (q >= 0) {
        return RationalInterval{p + q * s5.lo, p + q * s5.hi};
    }
    return RationalInterval{p + q * s5.hi, p + q * s5.lo};
}

BigInt scaled_digits(const BigRational& value, const BigInt& scale, Rounding mode) {
    if (mode == Rounding::nearest) {
        return floor_rational(value * BigRational(scale) + BigRational(1, 2));
    }
    return floor_rational(value * BigRational(scale));
}

}  // namespace

QPhi QPhi::inverse() const {
    BigRational n = norm();
    if (n == 0) {
        throw std::domain_error("QPhi::inverse: zero has no inverse");
    }
    QPhi c = conj();
    return QPhi(c.a() / n, c.b() / n);
}

QPhi QPhi::pow(long long n) const {
    if (n < 0) {
        return inverse().pow(-n);
    }
    QPhi result(1);
    QPhi base = *this;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        base *= base;
        n >>= 1;
    }
    return result;
}

int QPhi::sign() const {
    // value = ((2a+b) + b*sqrt(5)) / 2
    BigRational p = 2 * a_ + b_;
    BigRational q = b_;
    int sp = rational_sign(p);
    int sq = rational_sign(q);
    if (sp == 0 && sq == 0) return 0;
    if (sp >= 0 && sq >= 0) return 1;
    if (sp <= 0 && sq <= 0) return -1;
    // Mixed signs: the term with the larger square dominates. p^2 = 5q^2 is
    // impossible for rational p, q not both zero (sqrt(5) is irrational).
    if (p * p > 5 * q * q) return sp;
    return sq;
}

QPhi qphi_mul(const QPhi& x, const QPhi& y) {
    return x * y;
}

QPhi qphi_inv(const QPhi& x) {
    return x.inverse();
}

int qphi_sign(const QPhi& x) {
    return x.sign();
}

std::string qphi_to_float(const QPhi& x, unsigned digits, Rounding mode) {
    if (digits < 1) {
        throw std::invalid_argument("qphi_to_float: digits must be >= 1");
    }
    int s = x.sign();
    if (s < 0) {
        return "-" + qphi_to_float(-x, digits, mode);
    }
    BigInt scale = pow10(digits);
    if (x.is_rational() || s == 0) {
        return detail::format_scaled(scaled_digits(x.a(), scale, mode), digits);
    }
    // Shrink the sqrt(5) enclosure until both endpoints land on the same digit
    // string. An irrational value never sits exactly on a digit boundary, so
    // this terminates.
    for (unsigned guard = digits + 10;; guard *= 2) {
        RationalInterval box = enclose(x, guard);
        BigInt lo = scaled_digits(box.lo, scale, mode);
        BigInt hi = scaled_digits(box.hi, scale, mode);
        if (lo == hi) {
            return detail::format_scaled(lo, digits);
        }
    }
}

RationalInterval qphi_bounds(const QPhi& x, unsigned guard) {
    if (x.is_rational()) {
        return RationalInterval{x.a(), x.a()};
    }
    // Enclosure width is |b|/2 * 10^-g; pad g until that is below 10^-guard.
    unsigned g = guard + 1;
    BigInt mag = boost::multiprecision::abs(floor_rational(x.b())) + 1;
    while (mag > 0) {
        mag /= 10;
        g += 1;
    }
    return enclose(x, g);
}

double qphi_to_double(const QPhi& x) {
    RationalInterval box = qphi_bounds(x, 25);
    BigRational mid = (box.lo + box.hi) / 2;
    return mid.convert_to<double>();
}

std::string to_string(const QPhi& x) {
    return x.a().str() + " + " + x.b().str() + "*phi";
}

QPhi qphi_parse(const std::string& text) {
    auto sep = text.find(" + ");
    if (sep == std::string::npos) {
        throw std::invalid_argument("qphi_parse: missing ' + ' separator: " + text);
    }
    std::string lhs = text.substr(0, sep);
    std::string rhs = text.substr(sep + 3);
    const std::string suffix = "*phi";
    if (rhs.size() < suffix.size() ||
        rhs.compare(rhs.size() - suffix.size(), suffix.size(), suffix) != 0) {
        throw std::invalid_argument("qphi_parse: missing '*phi' suffix: " + text);
    }
    rhs.resize(rhs.size() - suffix.size());
    return QPhi(BigRational(lhs), BigRational(rhs));
}

std::optional<QPhi> sqrt_in_qphi(const QPhi& x) {
    int s = x.sign();
    if (s < 0) {
        return std::nullopt;
    }
    if (s == 0) {
        return QPhi(0);
    }
    // Solve (u + v*phi)^2 = x componentwise: u^2 + v^2 = a, 2uv + v^2 = b.
    // Eliminating u gives 5w^2 - (4a+2b)w + b^2 = 0 with w = v^2.
    const BigRational& a = x.a();
    const BigRational& b = x.b();
    auto try_candidate = [&](const BigRational& u, const BigRational& v) -> std::optional<QPhi> {
        QPhi y(u, v);
        if (y * y == x) {
            return y.sign() >= 0 ? y : -y;
        }
        return std::nullopt;
    };
    if (b == 0) {
        if (auto r = exact_sqrt(a)) {
            return QPhi(*r);
        }
        // v^2 = 4a/5, u = -v/2 also squares to a rational.
        if (auto v = exact_sqrt(4 * a / 5)) {
            if (auto y = try_candidate(-*v / 2, *v)) {
                return y;
            }
        }
        return std::nullopt;
    }
    BigRational sum = 4 * a + 2 * b;
    BigRational disc = sum * sum - 20 * b * b;
    if (disc < 0) {
        return std::nullopt;
    }
    auto sd = exact_sqrt(disc);
    if (!sd) {
        return std::nullopt;
    }
    BigRational roots[2] = {BigRational((sum + *sd) / 10), BigRational((sum - *sd) / 10)};
    for (const BigRational& w : roots) {
        if (w <= 0) {
            continue;
        }
        auto v = exact_sqrt(w);
        if (!v) {
            continue;
        }
        BigRational u = (b - w) / (2 * *v);
        if (auto y = try_candidate(u, *v)) {
            return y;
        }
    }
    return std::nullopt;
}

}  // namespace goldenext
