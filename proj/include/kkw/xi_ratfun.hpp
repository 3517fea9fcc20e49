#pragma once

// Rational functions of one variable x whose only poles are at x = +i and
// x = -i:  N(x) / ((x - i)^p (x + i)^q).

#include "kkw/exact_arith.hpp"

#include <string>
#include <vector>

namespace kkw {

/// Dense univariate polynomial over Q(i); coeffs[k] multiplies x^k.
using GaussPoly = std::vector<GaussianRational>;

namespace poly {
void trim(GaussPoly& a);
GaussPoly add(const GaussPoly& a, const GaussPoly& b);
GaussPoly mul(const GaussPoly& a, const GaussPoly& b);
GaussPoly scale(const GaussPoly& a, const GaussianRational& c);
GaussPoly derivative(const GaussPoly& a);
GaussianRational eval(const GaussPoly& a, const GaussianRational& x);
/// (x - root)^e
GaussPoly linear_power(const GaussianRational& root, long e);
/// Coefficients of a(root + t) in t.
GaussPoly shift(const GaussPoly& a, const GaussianRational& root);
/// Exact division by (x - root); the remainder must be zero.
GaussPoly divide_linear(const GaussPoly& a, const GaussianRational& root);
long degree(const GaussPoly& a);
}  // namespace poly

class PoleRational {
public:
    PoleRational() = default;
    PoleRational(GaussianRational c);  // NOLINT(google-explicit-constructor)
    PoleRational(GaussPoly num, long p, long q);

    static PoleRational variable();  // x
    /// x^b / (1 + x^2)^k
    static PoleRational power_over_unit_quadric(long b, long k);

    [[nodiscard]] const GaussPoly& numerator() const { return num_; }
    [[nodiscard]] long p() const { return p_; }
    [[nodiscard]] long q() const { return q_; }
    [[nodiscard]] bool is_zero() const { return num_.empty(); }
    /// Degree of the numerator, -1 for zero.
    [[nodiscard]] long num_degree() const { return static_cast<long>(num_.size()) - 1; }

    PoleRational& operator+=(const PoleRational& o);
    PoleRational& operator-=(const PoleRational& o);
    PoleRational& operator*=(const PoleRational& o);
    PoleRational& operator*=(const GaussianRational& c);

    friend PoleRational operator+(PoleRational a, const PoleRational& b) { return a += b; }
    friend PoleRational operator-(PoleRational a, const PoleRational& b) { return a -= b; }
    friend PoleRational operator*(PoleRational a, const PoleRational& b) { return a *= b; }
    friend PoleRational operator*(PoleRational a, const GaussianRational& c) { return a *= c; }
    friend PoleRational operator*(const GaussianRational& c, PoleRational a) { return a *= c; }
    PoleRational operator-() const;

    friend bool operator==(const PoleRational&, const PoleRational&) = default;

    /// Value at a point that is not a pole.
    [[nodiscard]] GaussianRational eval(const GaussianRational& x) const;

    [[nodiscard]] std::string to_string() const;

private:
    void canonicalize();

    GaussPoly num_;
    long p_ = 0;
    long q_ = 0;
};

/// d/dx.
PoleRational differentiate(const PoleRational& f);

/// Principal part at +i. Requires deg N < p + q.
PoleRational pi_plus(const PoleRational& f);

/// f - pi_plus(f): the part holomorphic in the upper half-plane.
PoleRational pi_minus_remainder(const PoleRational& f);

/// Residue of f at x = i.
GaussianRational residue_at_i(const PoleRational& f);

/// r with  integral over R of f dx = r * pi.  Requires deg N <= p + q - 2.
GaussianRational integrate_real_line(const PoleRational& f);

/// m-th derivative at x = i of g, where g has no pole at +i.
GaussianRational derivative_at(const PoleRational& g, long m);

/// First `count` Taylor coefficients at x = i of (x - i)^p f.
GaussPoly taylor_at_i(const PoleRational& f, long count);

}  // namespace kkw
