#include "goldenext/pretty.hpp"

namespace goldenext {

namespace {

std::string pretty_rational(const BigRational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += "/";
        out += denominator(r).str();
    }
    return out;
}

}  // namespace

std::string pretty_qphi(const QPhi& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.a() != 0) out += pretty_rational(x.a());
    if (x.b() != 0) {
        BigRational coeff = x.b();
        if (!out.empty()) {
            out += (coeff > 0) ? " + " : " - ";
            coeff = abs(coeff);
        } else if (coeff < 0) {
            out += "-";
            coeff = abs(coeff);
        }
        if (coeff != 1) out += pretty_rational(coeff);
        out += "φ";
    }
    return out;
}

std::string pretty_radical(const Radical& x) {
    if (auto plain = x.as_qphi()) return pretty_qphi(*plain);

    QPhi coeff = x.coeff();
    QPhi radicand = x.radicand();
    const QPhi phi = QPhi::phi();
    if (auto s = sqrt_in_qphi(radicand / phi)) {
        coeff = coeff * ((s->sign() < 0) ? -*s : *s);
        radicand = phi;
    }
    const std::string root =
        (radicand == phi) ? "√φ" : "√(" + pretty_qphi(radicand) + ")";
    if (coeff == QPhi(1)) return root;
    if (coeff == QPhi(-1)) return "-" + root;
    std::string lead = pretty_qphi(coeff);
    if (lead.find(' ') != std::string::npos) lead = "(" + lead + ")";
    return lead + "·" + root;
}

}  // namespace goldenext
