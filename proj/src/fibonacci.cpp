#include "goldenext/fibonacci.hpp"

#include <stdexcept>

namespace goldenext {

BigInt fib(unsigned n) {
    BigInt prev = 0;
    BigInt cur = 1;
    for (unsigned i = 0; i < n; i++) {
        BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }
    return prev;
}

std::pair<BigInt, BigInt> phi_pow_decompose(unsigned n) {
    QPhi power = QPhi::phi().pow(static_cast<long long>(n) + 1);
    if (denominator(power.a()) != 1 || denominator(power.b()) != 1) {
        throw std::logic_error("phi_pow_decompose: non-integer coefficients");
    }
    BigInt f_n = numerator(power.a());
    BigInt f_n1 = numerator(power.b());
    if (f_n != fib(n) || f_n1 != fib(n + 1)) {
        throw std::logic_error("phi_pow_decompose: power disagrees with recurrence");
    }
    return {f_n1, f_n};
}

}  // namespace goldenext
