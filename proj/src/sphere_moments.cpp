#include "kkw/sphere_moments.hpp"

#include <string>

namespace kkw {

BigRational moment(const std::vector<int>& alpha, int n) {
    if (n < 4 || n % 2 != 0) throw ArithmeticError("moment: n must be even and >= 4");
    if (static_cast<int>(alpha.size()) != n - 1) {
        throw ArithmeticError("moment: exponent vector has length " + std::to_string(alpha.size()) +
                              ", expected " + std::to_string(n - 1));
    }
    long total = 0;
    BigRational num(1);
    for (int a : alpha) {
        if (a < 0) throw ArithmeticError("moment: negative exponent");
        if (a % 2 != 0) return BigRational(0);
        num *= double_factorial_odd(a / 2);
        total += a;
    }
    BigRational den(1);
    for (long k = 0; k < total / 2; ++k) den *= BigRational(n - 1 + 2 * k);
    return num / den;
}

BigRational moment(MonoKey alpha, int n) {
    if (n - 1 > mono::kMaxVars) throw ArithmeticError("moment: n too large for packed monomials");
    if (n - 1 < mono::kMaxVars && (alpha >> (4 * (n - 1))) != 0) {
        throw ArithmeticError("moment: monomial uses a variable beyond xi_{n-1}");
    }
    return moment(mono::to_exponents(alpha, n - 1), n);
}

}  // namespace kkw
