#include "doctest.h"
#include "kkw/sphere_moments.hpp"
#include "sphere_oracle.hpp"

#include <algorithm>
#include <functional>
#include <vector>

using kkw::BigRational;
using kkw::GaussianRational;
using kkw::MonoKey;
using kkw::XiPoly;

using kkw::testing::for_each_exponent;
using kkw::testing::gaussian_oracle;

TEST_CASE("moment examples") {
    for (int n : {6, 8, 10}) {
        std::vector<int> a(n - 1, 0);
        a[0] = 1;
        CHECK(kkw::moment(a, n).is_zero());
        a[0] = 2;
        CHECK(kkw::moment(a, n) == BigRational(1, n - 1));
        a[0] = 4;
        CHECK(kkw::moment(a, n) == BigRational(3) / BigRational((n - 1) * (n + 1)));
        a[0] = 0;
        CHECK(kkw::moment(a, n) == BigRational(1));
    }
    CHECK_THROWS_AS(kkw::moment(std::vector<int>{2, 0}, 6), kkw::ArithmeticError);
    CHECK_THROWS_AS(kkw::moment(std::vector<int>{2, 0}, 3), kkw::ArithmeticError);
}

TEST_CASE("moments agree with the Gaussian-integral oracle") {
    for (int n = 4; n <= 14; n += 2) {
        for_each_exponent(std::min(n - 1, 5), 8, [&](const std::vector<int>& head) {
            std::vector<int> alpha(static_cast<size_t>(n - 1), 0);
            std::copy(head.begin(), head.end(), alpha.begin());
            CHECK(kkw::moment(alpha, n) == gaussian_oracle(alpha));
        });
    }
}

TEST_CASE("moments are permutation invariant") {
    const int n = 8;
    std::vector<int> alpha{4, 2, 0, 2, 0, 0, 0};
    const BigRational base = kkw::moment(alpha, n);
    std::sort(alpha.begin(), alpha.end());
    do {
        CHECK(kkw::moment(alpha, n) == base);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
}

TEST_CASE("multiplying by |xi'|^2 leaves the moment unchanged") {
    for (int n = 4; n <= 10; n += 2) {
        for_each_exponent(n - 1, 6, [&](const std::vector<int>& alpha) {
            BigRational sum(0);
            for (int i = 0; i < n - 1; ++i) {
                std::vector<int> b = alpha;
                b[static_cast<size_t>(i)] += 2;
                sum += kkw::moment(b, n);
            }
            CHECK(sum == kkw::moment(alpha, n));
        });
    }
}

TEST_CASE("polynomial integration") {
    const int n = 6;
    XiPoly<GaussianRational> sq;
    for (int i = 0; i < n - 1; ++i) {
        sq.add_term(kkw::mono::multiply(kkw::mono::variable(i), kkw::mono::variable(i)), GaussianRational(1));
    }
    CHECK(kkw::integrate_polynomial(sq, n) == GaussianRational(1));
    const auto cross = XiPoly<GaussianRational>::monomial(
        kkw::mono::multiply(kkw::mono::variable(0), kkw::mono::variable(1)), GaussianRational(1));
    CHECK(kkw::integrate_polynomial(cross, n).is_zero());
    const auto c = XiPoly<GaussianRational>::constant(GaussianRational(BigRational(2), BigRational(3)));
    CHECK(kkw::integrate_polynomial(c, n) == GaussianRational(BigRational(2), BigRational(3)));
}

TEST_CASE("sphere normal form identifies polynomials equal on the sphere") {
    const int n = 6;
    XiPoly<GaussianRational> sq;
    for (int i = 0; i < n - 1; ++i) {
        sq.add_term(kkw::mono::multiply(kkw::mono::variable(i), kkw::mono::variable(i)), GaussianRational(1));
    }
    CHECK(kkw::sphere_normal_form(sq, n) == XiPoly<GaussianRational>::constant(GaussianRational(1)));
    const auto x1 = XiPoly<GaussianRational>::monomial(kkw::mono::variable(1), GaussianRational(3));
    const auto lhs = sq * sq * x1;
    CHECK(kkw::sphere_normal_form(lhs, n) == x1);
    CHECK(kkw::integrate_polynomial(kkw::sphere_normal_form(sq * sq, n), n) ==
          kkw::integrate_polynomial(sq * sq, n));
}
