#include "doctest.h"
#include "kkw/expanded_symbols.hpp"
#include "kkw/sphere_moments.hpp"
#include "kkw/symbol_builder.hpp"

using kkw::BigRational;
using kkw::GaussianRational;
using kkw::JetProfile;
using kkw::PoleRational;
using kkw::RestrictedCoeff;
using kkw::RestrictedMV;
using kkw::SymbolBuilder;
using kkw::SymbolCoeff;
using kkw::SymbolExpression;
using kkw::SymbolMV;

namespace {

constexpr JetProfile kProfiles[] = {JetProfile::diagonal, JetProfile::conjugated};

const GaussianRational I = GaussianRational::i();

RestrictedCoeff pole(kkw::GaussPoly num, long p, long q) {
    return RestrictedCoeff::constant(PoleRational(std::move(num), p, q));
}

RestrictedMV scalar_mv(int n, const RestrictedCoeff& c) { return RestrictedMV::scalar(n, c); }

/// Folds |xi'|^2 = 1 into the xi'-polynomial part.
RestrictedMV on_sphere(const RestrictedMV& m, int n) {
    return m.map([n](const RestrictedCoeff& c) { return kkw::sphere_normal_form(c, n); });
}

/// Differentiates the xi'-polynomial part only (what d/dxi_i would do if
/// applied after u -> 1).
RestrictedCoeff naive_d_xi(const RestrictedCoeff& c, int var) {
    RestrictedCoeff r;
    for (const auto& [k, v] : c.terms()) {
        const int e = kkw::mono::exponent(k, var);
        if (e == 0) continue;
        r.add_term(k - kkw::mono::variable(var), v * GaussianRational(e));
    }
    return r;
}

int max_xi_degree(const RestrictedMV& m) {
    int d = 0;
    for (const auto& [s, c] : m.terms()) {
        for (const auto& [k, v] : c.terms()) d = std::max(d, kkw::mono::total_degree(k));
    }
    return d;
}

long max_pole_order(const RestrictedMV& m) {
    long p = 0;
    for (const auto& [s, c] : m.terms()) {
        for (const auto& [k, v] : c.terms()) p = std::max({p, v.p(), v.q()});
    }
    return p;
}

}  // namespace

TEST_CASE("sigma1 and sigma0 of D_J") {
    const int n = 6;
    const SymbolBuilder id(kkw::identity_jjet(n, BigRational(3, 2)));
    SymbolMV c_xi(n);
    for (int k = 0; k < n; ++k) c_xi += SymbolMV::generator(n, k, SymbolCoeff::xi(k, n));
    CHECK(id.sigma1().value() == c_xi.scaled(I));

    const SymbolBuilder flat(kkw::random_jjet(n, 4, JetProfile::conjugated));
    auto jet = flat.jet();
    jet.hprime = BigRational(0);
    CHECK(SymbolBuilder(jet).sigma0().value().is_zero());

    for (int m : {6, 8}) {
        for (auto profile : kProfiles) {
            const SymbolBuilder b(kkw::random_jjet(m, 9, profile));
            const SymbolMV s0 = b.sigma0().value();
            CHECK(kkw::trace(s0).is_zero());
            // -1/4 sum_{i,j,k} omega_{j,k}(e_i) c[J(e_i)] c(e_j) c(e_k)
            const auto& w = b.connection().omega;
            SymbolMV expect(m);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    for (int k = 0; k < m; ++k) {
                        const BigRational& v = w[i](j, k);
                        if (v.is_zero()) continue;
                        expect += (b.c_J_dx(i).value() * b.c_dx(j).value() * b.c_dx(k).value())
                                      .scaled(GaussianRational(v * BigRational(-1, 4)));
                    }
                }
            }
            CHECK(s0 == expect);
        }
    }
}

TEST_CASE("leading inverse: sigma_{-1} sigma_1 = 1 on |xi'| = 1") {
    for (int n : {6, 8}) {
        for (auto profile : kProfiles) {
            const SymbolBuilder b(kkw::random_jjet(n, 5, profile));
            const RestrictedMV prod = on_sphere((b.sigma_m1() * b.sigma1()).restrict(), n);
            CHECK(prod == scalar_mv(n, pole({GaussianRational(1)}, 0, 0)));
        }
    }
}

TEST_CASE("flat J = id data gives vanishing lower-order symbols") {
    for (int n : {6, 8}) {
        const SymbolBuilder b(kkw::identity_jjet(n, BigRational(0)));
        CHECK(b.sigma0().value().is_zero());
        CHECK(b.sigma_m2().restrict().is_zero());
        CHECK(b.sigma_mn2().restrict().is_zero());
    }
}

TEST_CASE("sigma_{-n+3} examples") {
    const SymbolBuilder b6(kkw::random_jjet(6, 2, JetProfile::conjugated));
    const RestrictedMV c6 = b6.c_J_xi().restrict();
    CHECK(b6.sigma_mn3().restrict() == c6.times(pole({I}, 2, 2)));

    const SymbolBuilder id(kkw::identity_jjet(8, BigRational(1)));
    SymbolMV c_xi(8);
    for (int k = 0; k < 8; ++k) c_xi += SymbolMV::generator(8, k, SymbolCoeff::xi(k, 8));
    CHECK(id.sigma_mn3().value() == c_xi.times(SymbolCoeff::norm_power(-3)).scaled(I));

    for (int n : {6, 8, 10}) {
        const SymbolBuilder b(kkw::random_jjet(n, 7, JetProfile::conjugated));
        const RestrictedMV s = b.sigma_mn3().restrict().scaled(-I);
        const RestrictedMV c = b.c_J_xi().restrict();
        // tr[c[J(xi)] |xi|^{-n+2} c[J(xi)]] = -2^{n/2} (1 + xi_n^2)^{2 - n/2}
        const RestrictedCoeff t = kkw::sphere_normal_form(kkw::trace_product(s, c), n);
        const long k = n / 2 - 2;
        CHECK(t == pole({GaussianRational(-kkw::spinor_dimension(n))}, k, k));
    }
}

TEST_CASE("derivation rules") {
    const int n = 6;
    const SymbolBuilder b(kkw::random_jjet(n, 3, JetProfile::diagonal));
    const SymbolExpression inv = b.norm_power(-1);
    const SymbolExpression expect =
        (SymbolExpression::scalar(n, SymbolCoeff::xi(2, n)) * b.norm_power(-2)).scaled(GaussianRational(-2));
    CHECK(inv.d_xi(2).value() == expect.value());

    const SymbolExpression U = b.norm_power(1);
    for (int j = 0; j < n - 1; ++j) CHECK(U.d_x(j).value().is_zero());
    CHECK(U.d_x(n - 1).value() ==
          SymbolMV::scalar(n, SymbolCoeff::u() * GaussianRational(b.jet().hprime)));

    // d/dx_n c(dx_h) = h'/2 c(dx_h) for tangential h, and 0 for h = n.
    CHECK(b.c_dx(1).d_x(n - 1).value() == b.c_dx(1).value().scaled(GaussianRational(b.jet().hprime / 2)));
    CHECK(b.c_dx(n - 1).d_x(n - 1).value().is_zero());
    CHECK(b.c_dx(1).d_x(0).value().is_zero());

    // A derived expression carries no second x-derivative.
    CHECK_THROWS_AS((void)b.sigma_m1().d_x(0).d_x(0), kkw::ArithmeticError);
}

TEST_CASE("restriction to |xi'| = 1") {
    const int n = 6;
    CHECK(SymbolCoeff::norm_power(-1).restrict() == RestrictedCoeff::constant(PoleRational({GaussianRational(1)}, 1, 1)));
    const SymbolCoeff u_xi1_sq = SymbolCoeff::u() * SymbolCoeff::xi(0, n) * SymbolCoeff::xi(0, n);
    const SymbolCoeff xi1_sq = SymbolCoeff::xi(0, n) * SymbolCoeff::xi(0, n);
    CHECK(u_xi1_sq.restrict() == xi1_sq.restrict());

    const SymbolBuilder b(kkw::random_jjet(n, 8, JetProfile::conjugated));
    CHECK(b.sigma_m1().restrict() == b.c_J_xi().restrict().times(pole({I}, 1, 1)));
}

TEST_CASE("tangential xi-derivatives must be taken before restricting") {
    const int n = 6;
    const SymbolBuilder b(kkw::random_jjet(n, 6, JetProfile::conjugated));
    const SymbolExpression s = b.sigma_m1();
    const RestrictedMV derived_first = s.d_xi(0).restrict();
    const RestrictedMV restricted_first = s.restrict().map([](const RestrictedCoeff& c) { return naive_d_xi(c, 0); });
    CHECK_FALSE(derived_first == restricted_first);
    // The normal variable is not touched by u -> 1, so that order is harmless.
    CHECK(s.d_xi(n - 1).restrict() == kkw::d_xin(s.restrict()));
}

TEST_CASE("built symbols stay within the expected degree and pole bounds") {
    for (int n : {6, 8}) {
        const SymbolBuilder b(kkw::random_jjet(n, 12, JetProfile::conjugated));
        for (const RestrictedMV& m : {b.sigma_m1().restrict(), b.sigma_m2().restrict(), b.sigma_mn3().restrict(),
                                      b.sigma_mn2().restrict()}) {
            CHECK(max_xi_degree(m) <= 3);
            CHECK(max_pole_order(m) <= n / 2 + 3);
        }
    }
}

TEST_CASE("sigma_{-2} equals its A1 + A2 - h' A3 split and the generic inverse formula") {
    for (int n : {6, 8}) {
        for (auto profile : kProfiles) {
            const SymbolBuilder b(kkw::random_jjet(n, 13, profile));
            const GaussianRational hp(b.jet().hprime);
            const auto parts = b.sigma_m2_parts();
            const RestrictedMV split = parts.a1.restrict() + parts.a2.restrict() - parts.a3.restrict().scaled(hp);
            CHECK(split == b.sigma_m2().restrict());

            const auto shown = kkw::expanded::sigma_m2_parts(b.jet(), b.sigma0().restrict());
            CHECK(shown.a1 == parts.a1.restrict());
            CHECK(shown.a2 == parts.a2.restrict());
            CHECK(shown.a3 == parts.a3.restrict());

            const auto pp = kkw::expanded::pi_plus_sigma_m2_parts(b.jet());
            CHECK(pp.a1 == kkw::pi_plus(parts.a1.restrict()));
            CHECK(pp.a2 == kkw::pi_plus(parts.a2.restrict()));
            CHECK(pp.minus_h_a3 == kkw::pi_plus(parts.a3.restrict()).scaled(-hp));
        }
    }
}

TEST_CASE("subleading bracket equals iterated composition of D_J^{-2}") {
    for (int n : {6, 8, 10}) {
        const SymbolBuilder b(kkw::random_jjet(n, 21, JetProfile::conjugated));
        const int m = (n - 2) / 2;
        const SymbolExpression p_sub = b.sigma_m3_square_inv();
        // Q_1 = P; Q_{k+1} = Q_k o P with
        // sub = lead_k p_sub + sub_k |xi|^{-2} - i sum_mu d_xi_mu lead_k d_x_mu |xi|^{-2}.
        SymbolExpression sub = p_sub;
        for (int k = 1; k < m; ++k) {
            SymbolExpression next = b.norm_power(-k) * p_sub + sub * b.norm_power(-1);
            for (int mu = 0; mu < n; ++mu) next -= (b.norm_power(-k).d_xi(mu) * b.norm_power(-1).d_x(mu)).scaled(I);
            sub = next;
        }
        CHECK(sub.restrict() == b.subleading_power_bracket().restrict());
    }
}

TEST_CASE("hand-expanded intermediate expressions match the builder") {
    for (int n : {6, 8, 10}) {
        for (auto profile : kProfiles) {
            for (std::uint64_t seed : {1U, 2U}) {
                const auto jet = kkw::random_jjet(n, seed, profile);
                const SymbolBuilder b(jet);
                const int last = n - 1;
                const SymbolExpression s1 = b.sigma_m1();
                const SymbolExpression s3 = b.sigma_mn3();
                for (int i = 0; i < last; ++i) {
                    CHECK(kkw::expanded::pi_plus_dxi_sigma_m1(jet, i) == kkw::pi_plus(s1.d_xi(i).restrict()));
                }
                CHECK(kkw::expanded::pi_plus_dxn_sigma_m1(jet) == kkw::pi_plus(s1.d_x(last).restrict()));
                CHECK(kkw::expanded::dxin2_sigma_mn3(jet) == s3.d_xi(last).d_xi(last).restrict());
                CHECK(kkw::expanded::pi_plus_dxin_sigma_m1(jet) == kkw::d_xin(kkw::pi_plus(s1.restrict())));
                CHECK(kkw::expanded::dxin_dxn_sigma_mn3(jet) == s3.d_xi(last).d_x(last).restrict());
                CHECK(kkw::expanded::dxin_sigma_mn3(jet) == s3.d_xi(last).restrict());
                CHECK(kkw::expanded::sigma_mn2(jet) == b.sigma_mn2().restrict());
            }
        }
    }
    CHECK_THROWS_AS(kkw::expanded::pi_plus_dxi_sigma_m1(kkw::random_jjet(6, 1, JetProfile::diagonal), 5),
                    kkw::ArithmeticError);
}

TEST_CASE("odd-length Clifford products with sigma_{-n+2} have zero trace") {
    const int n = 6;
    const SymbolBuilder b(kkw::random_jjet(n, 15, JetProfile::conjugated));
    const RestrictedMV s = b.sigma_mn2().restrict();
    // sigma_{-n+2} is a sum of odd monomials, so pairing with any even
    // monomial (including scalars) traces to zero.
    for (const auto& [mask, c] : s.terms()) CHECK(std::popcount(mask) % 2 == 1);
    const RestrictedMV e12 = RestrictedMV::blade(n, 0b11, pole({GaussianRational(1)}, 0, 0));
    CHECK(kkw::trace_product(s, e12).is_zero());
    CHECK(kkw::trace(s).is_zero());
}
