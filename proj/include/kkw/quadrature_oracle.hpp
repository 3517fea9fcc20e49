#pragma once

// Floating-point oracles for the exact residue machinery: Cauchy integrals on
// a circle around x = i, and real-line quadrature after x = tan(theta).

#include "kkw/xi_ratfun.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace kkw::oracle {

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

inline Real50 to_real50(const BigRational& r) {
    return Real50(r.numerator().get_str()) / Real50(r.denominator().get_str());
}

inline Complex50 to_complex50(const GaussianRational& z) {
    return Complex50(to_real50(z.re()), to_real50(z.im()));
}

inline Complex50 eval50(const PoleRational& f, const Complex50& x) {
    Complex50 acc(0);
    const auto& num = f.numerator();
    for (size_t k = num.size(); k-- > 0;) acc = acc * x + to_complex50(num[k]);
    const Complex50 i(0, 1);
    return acc / (pow(x - i, static_cast<int>(f.p())) * pow(x + i, static_cast<int>(f.q())));
}

/// m-th derivative at x = i by the trapezoid rule on |x - i| = 1.
inline Complex50 cauchy_derivative_at_i(const PoleRational& g, long m, int nodes = 256) {
    const Real50 pi = boost::math::constants::pi<Real50>();
    const Complex50 i(0, 1);
    Complex50 sum(0);
    for (int k = 0; k < nodes; ++k) {
        const Real50 theta = 2 * pi * k / nodes;
        const Complex50 w(cos(theta), sin(theta));
        sum += eval50(g, i + w) * pow(w, -static_cast<int>(m));
    }
    Real50 fact = 1;
    for (long j = 2; j <= m; ++j) fact *= j;
    return sum * fact / Real50(nodes);
}

/// Integral over the real line divided by pi, via x = tan(theta) and the
/// trapezoid rule on the (periodic, smooth) transformed integrand.
inline Complex50 real_line_integral_over_pi(const PoleRational& f, int nodes = 512) {
    const Real50 pi = boost::math::constants::pi<Real50>();
    Complex50 sum(0);
    for (int k = 0; k < nodes; ++k) {
        const Real50 theta = -pi / 2 + pi * (Real50(k) + Real50(0.5)) / nodes;
        const Real50 c = cos(theta);
        sum += eval50(f, Complex50(tan(theta), 0)) / (c * c);
    }
    return sum / Real50(nodes);
}

inline Real50 relative_error(const Complex50& approx, const GaussianRational& exact) {
    const Complex50 e = to_complex50(exact);
    const Real50 scale = abs(e);
    const Real50 diff = abs(approx - e);
    return scale == 0 ? diff : diff / scale;
}

}  // namespace kkw::oracle
