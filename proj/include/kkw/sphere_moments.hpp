#pragma once

// Averages of monomials in xi' = (xi_1, ..., xi_{n-1}) over the unit sphere
// S^{n-2}, as rational multiples of Vol(S^{n-2}).

#include "kkw/exact_arith.hpp"
#include "kkw/xi_poly.hpp"

#include <vector>

namespace kkw {

/// Integral of xi^alpha over S^{n-2} divided by Vol(S^{n-2}).
/// alpha must have length n - 1.
BigRational moment(const std::vector<int>& alpha, int n);

/// Same, with the exponents packed into a monomial key.
BigRational moment(MonoKey alpha, int n);

/// Linear extension of moment; the result multiplies Vol(S^{n-2}).
template <class C>
C integrate_polynomial(const XiPoly<C>& p, int n) {
    C acc{};
    for (const auto& [k, c] : p.terms()) {
        const BigRational m = moment(k, n);
        if (m.is_zero()) continue;
        acc += c * GaussianRational(m);
    }
    return acc;
}

/// Canonical representative of p modulo (xi_1^2 + ... + xi_{n-1}^2 - 1):
/// every xi_1^2 is rewritten as 1 - xi_2^2 - ... - xi_{n-1}^2, so the result
/// has xi_1-degree at most one in every monomial. Two polynomials agree on
/// the sphere iff their normal forms are equal.
template <class C>
XiPoly<C> sphere_normal_form(const XiPoly<C>& p, int n) {
    const int d = n - 1;
    XiPoly<C> work = p;
    XiPoly<C> done;
    while (!work.is_zero()) {
        XiPoly<C> next;
        for (const auto& [k, c] : work.terms()) {
            const int e1 = mono::exponent(k, 0);
            if (e1 < 2 || d < 2) {
                done.add_term(k, c);
                continue;
            }
            const MonoKey base = k - (MonoKey{2});
            next.add_term(base, c);
            for (int v = 1; v < d; ++v) {
                next.add_term(mono::multiply(base, MonoKey{2} << (4 * v)), -c);
            }
        }
        work = std::move(next);
    }
    return done;
}

}  // namespace kkw
