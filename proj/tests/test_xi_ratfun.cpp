#include "doctest.h"
#include "kkw/quadrature_oracle.hpp"
#include "kkw/xi_ratfun.hpp"
#include "random_values.hpp"

using kkw::ArithmeticError;
using kkw::BigRational;
using kkw::GaussianRational;
using kkw::GaussPoly;
using kkw::PoleRational;

namespace {

const GaussianRational I = GaussianRational::i();

PoleRational poly_over(GaussPoly num, long p, long q) { return {std::move(num), p, q}; }

PoleRational random_pole_rational(std::mt19937_64& rng, long max_p, long max_q, long slack) {
    std::uniform_int_distribution<long> dp(0, max_p);
    std::uniform_int_distribution<long> dq(0, max_q);
    long p = dp(rng);
    long q = dq(rng);
    // Keep deg N = p + q - slack >= 0 so the decay requirement is met.
    while (p + q < slack) (max_p > 0 && p < max_p) ? ++p : ++q;
    const long deg = p + q - slack;
    GaussPoly num(static_cast<size_t>(deg + 1));
    for (auto& c : num) c = kkw::testing::random_gaussian(rng);
    return {num, p, q};
}

}  // namespace

TEST_CASE("sum of simple poles combines over the common denominator") {
    const PoleRational a = poly_over({1}, 1, 0);
    const PoleRational b = poly_over({1}, 0, 1);
    CHECK(a + b == poly_over({0, 2}, 1, 1));
}

TEST_CASE("zero is canonical") {
    const PoleRational f = poly_over({1, 2, 3}, 3, 2);
    const PoleRational z = f * PoleRational(GaussianRational(0));
    CHECK(z.is_zero());
    CHECK(z.p() == 0);
    CHECK(z.q() == 0);
    CHECK((f - f) == PoleRational());
}

TEST_CASE("common linear factors cancel") {
    const PoleRational f = poly_over({I, 1}, 1, 1);  // (x+i)/((x-i)(x+i))
    CHECK(f == poly_over({1}, 1, 0));
    const PoleRational g = poly_over({1, 0, 1}, 2, 2);  // (1+x^2)/(1+x^2)^2
    CHECK(g == PoleRational::power_over_unit_quadric(0, 1));
}

TEST_CASE("differentiation examples") {
    const PoleRational f = PoleRational::power_over_unit_quadric(0, 1);
    CHECK(kkw::differentiate(f) == PoleRational::power_over_unit_quadric(1, 2) * GaussianRational(-2));
    // d/dx [x / (1+x^2)^2] = (1 - 3x^2) / (1+x^2)^3
    const PoleRational g = PoleRational::power_over_unit_quadric(1, 2);
    const PoleRational expected = poly_over({1, 0, -3}, 3, 3);
    CHECK(kkw::differentiate(g) == expected);
    CHECK(kkw::differentiate(PoleRational(GaussianRational(5))).is_zero());
}

TEST_CASE("differentiation obeys the product rule against the denominator") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const PoleRational f = random_pole_rational(rng, 3, 3, 0);
        const PoleRational den = poly_over(
            kkw::poly::mul(kkw::poly::linear_power(I, f.p()), kkw::poly::linear_power(-I, f.q())), 0, 0);
        const PoleRational lifted = f * den;
        CHECK(lifted.p() == 0);
        CHECK(lifted.q() == 0);
        CHECK(kkw::differentiate(lifted) == kkw::differentiate(f) * den + f * kkw::differentiate(den));
    }
}

TEST_CASE("pi_plus examples") {
    const PoleRational f = PoleRational::power_over_unit_quadric(0, 1);
    CHECK(kkw::pi_plus(f) == poly_over({GaussianRational(BigRational(0), BigRational(-1, 2))}, 1, 0));
    const PoleRational g = poly_over({1}, 2, 0);
    CHECK(kkw::pi_plus(g) == g);
    CHECK(kkw::pi_plus(poly_over({1}, 0, 1)).is_zero());
    CHECK_THROWS_AS(kkw::pi_plus(poly_over({0, 0, 1}, 1, 1)), ArithmeticError);
}

TEST_CASE("pi_plus is a partial-fraction split") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const PoleRational f = random_pole_rational(rng, 4, 4, 1);
        if (f.is_zero()) continue;
        const PoleRational plus = kkw::pi_plus(f);
        const PoleRational minus = kkw::pi_minus_remainder(f);
        CHECK(plus + minus == f);
        CHECK(plus.q() == 0);
        CHECK(plus.num_degree() < std::max(plus.p(), 1L));
        CHECK(minus.p() == 0);
        CHECK(minus.num_degree() < std::max(minus.q(), 1L));
        CHECK(kkw::pi_plus(plus) == plus);
    }
}

TEST_CASE("linearity of the residue operations") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const PoleRational f = random_pole_rational(rng, 4, 4, 2);
        const PoleRational g = random_pole_rational(rng, 4, 4, 2);
        const GaussianRational c = kkw::testing::random_gaussian(rng);
        CHECK(kkw::pi_plus(f + g * c) == kkw::pi_plus(f) + kkw::pi_plus(g) * c);
        CHECK(kkw::differentiate(f + g * c) == kkw::differentiate(f) + kkw::differentiate(g) * c);
        CHECK(kkw::residue_at_i(f + g * c) == kkw::residue_at_i(f) + kkw::residue_at_i(g) * c);
        CHECK(kkw::integrate_real_line(f + g * c) ==
              kkw::integrate_real_line(f) + kkw::integrate_real_line(g) * c);
        CHECK(kkw::integrate_real_line(f) == GaussianRational(BigRational(0), BigRational(2)) *
                                                 kkw::residue_at_i(f));
    }
}

TEST_CASE("real-line integrals") {
    CHECK(kkw::integrate_real_line(PoleRational::power_over_unit_quadric(0, 1)) == GaussianRational(1));
    CHECK(kkw::integrate_real_line(PoleRational::power_over_unit_quadric(0, 2)) ==
          GaussianRational(BigRational(1, 2)));
    CHECK(kkw::integrate_real_line(PoleRational::power_over_unit_quadric(1, 2)).is_zero());
    CHECK_THROWS_AS(kkw::integrate_real_line(PoleRational::power_over_unit_quadric(1, 1)), ArithmeticError);
}

TEST_CASE("real-line integrals agree with quadrature") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 25; ++t) {
        const PoleRational f = random_pole_rational(rng, 4, 4, 2);
        if (f.p() + f.q() < 2) continue;
        const GaussianRational r = kkw::integrate_real_line(f);
        CHECK(kkw::oracle::relative_error(kkw::oracle::real_line_integral_over_pi(f), r) < 1e-30);
    }
}

TEST_CASE("residues") {
    CHECK(kkw::residue_at_i(PoleRational::power_over_unit_quadric(0, 1)) ==
          GaussianRational(BigRational(0), BigRational(-1, 2)));
    CHECK(kkw::residue_at_i(PoleRational::power_over_unit_quadric(0, 2)) ==
          GaussianRational(BigRational(0), BigRational(-1, 4)));
    CHECK(kkw::residue_at_i(poly_over({I, 1}, 0, 1)).is_zero());
    CHECK(kkw::residue_at_i(poly_over({1, 1}, 0, 3)).is_zero());
}

TEST_CASE("derivative_at examples") {
    CHECK(kkw::derivative_at(poly_over({1}, 0, 1), 1) == GaussianRational(BigRational(1, 4)));
    CHECK(kkw::derivative_at(PoleRational(GaussianRational(3)), 2).is_zero());
    CHECK(kkw::derivative_at(PoleRational(GaussianRational(3)), 0) == GaussianRational(3));
    // i*4x / (8 (x+i)^3), fourth derivative at i; value frozen from an
    // independent symbolic differentiation.
    const PoleRational a7 = poly_over({0, GaussianRational(BigRational(0), BigRational(1, 2))}, 0, 3);
    CHECK(kkw::derivative_at(a7, 4) == GaussianRational(BigRational(0), BigRational(15, 32)));
    CHECK_THROWS_AS(kkw::derivative_at(poly_over({1}, 1, 0), 0), ArithmeticError);
}

TEST_CASE("derivative_at agrees with the Cauchy-integral oracle") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        PoleRational g = random_pole_rational(rng, 0, 6, -2);
        std::uniform_int_distribution<long> dm(0, 8);
        const long m = dm(rng);
        const GaussianRational exact = kkw::derivative_at(g, m);
        CHECK(kkw::oracle::relative_error(kkw::oracle::cauchy_derivative_at_i(g, m), exact) < 1e-30);
    }
}

TEST_CASE("evaluation and pole guard") {
    const PoleRational f = PoleRational::power_over_unit_quadric(0, 1);
    CHECK(f.eval(GaussianRational(1)) == GaussianRational(BigRational(1, 2)));
    CHECK_THROWS_AS((void)f.eval(I), ArithmeticError);
}
