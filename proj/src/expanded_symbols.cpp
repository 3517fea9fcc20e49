#include "kkw/expanded_symbols.hpp"

namespace kkw::expanded {

namespace {

using G = GaussianRational;
using MV = RestrictedMV;
using Coef = RestrictedCoeff;

G gi(long re, long im) { return {BigRational(re), BigRational(im)}; }
G frac(long p, long q) { return G(BigRational(p, q)); }

/// N(x) / ((x - i)^p (x + i)^q) as a coefficient.
Coef f(GaussPoly num, long p, long q) { return Coef::constant(PoleRational(std::move(num), p, q)); }

Coef rat(const BigRational& x) { return Coef::constant(PoleRational(G(x))); }

Coef xi(int p) { return Coef::monomial(mono::variable(p), PoleRational(G(1))); }

struct Ctx {
    const JJet& jet;
    int n;
    int last;
    long h;
    BigRational hp;

    explicit Ctx(const JJet& j) : jet(j), n(j.n), last(j.n - 1), h(j.n / 2), hp(j.hprime) {}

    [[nodiscard]] MV zero() const { return MV(n); }
    [[nodiscard]] MV c(int k) const { return MV::generator(n, k, rat(BigRational(1))); }

    /// sum_{k < k_end} M(p, k) c(dx_k)
    [[nodiscard]] MV row(const RatMatrix& M, int p, int k_end) const {
        MV m(n);
        for (int k = 0; k < k_end; ++k) m.add_term(BladeMask{1} << k, rat(M(p, k)));
        return m;
    }
    [[nodiscard]] MV row(const RatMatrix& M, int p) const { return row(M, p, n); }

    /// sum_{k < k_end} sum_{p < n-1} xi_p M(p, k) c(dx_k)
    [[nodiscard]] MV xi_rows(const RatMatrix& M, int k_end) const {
        MV m(n);
        for (int p = 0; p < last; ++p) m += row(M, p, k_end).times(xi(p));
        return m;
    }
    [[nodiscard]] MV xi_rows(const RatMatrix& M) const { return xi_rows(M, n); }

    [[nodiscard]] const RatMatrix& A() const { return jet.A; }
    [[nodiscard]] const RatMatrix& DA(int j) const { return jet.DA[static_cast<size_t>(j)]; }
    [[nodiscard]] Coef xin() const { return Coef::constant(PoleRational::variable()); }
    /// c[J(xi)] with xi_n kept as the variable.
    [[nodiscard]] MV c_J_xi() const { return xi_rows(A()) + row(A(), last).times(xin()); }
};

}  // namespace

RestrictedMV pi_plus_dxi_sigma_m1(const JJet& jet, int i) {
    const Ctx x(jet);
    if (i < 0 || i >= x.last) throw ArithmeticError("pi_plus_dxi_sigma_m1: index must be tangential");
    MV r = x.row(x.A(), i).times(f({frac(1, 2)}, 1, 0));
    r += x.xi_rows(x.A()).times(xi(i) * f({gi(0, 1), frac(-1, 2)}, 2, 0));
    r += x.row(x.A(), x.last).times(xi(i) * f({frac(-1, 2)}, 2, 0));
    return r;
}

RestrictedMV pi_plus_dxn_sigma_m1(const JJet& jet) {
    const Ctx x(jet);
    const BigRational half_hp = x.hp / 2;
    const RatMatrix& D = x.DA(x.last);
    MV r = x.xi_rows(D).times(f({frac(1, 2)}, 1, 0));
    r += x.row(D, x.last).times(f({gi(0, 1) * frac(1, 2)}, 1, 0));
    r += x.xi_rows(x.A(), x.last).times(f({frac(1, 2)}, 1, 0) * rat(half_hp));
    r += x.row(x.A(), x.last, x.last).times(f({gi(0, 1) * frac(1, 2)}, 1, 0) * rat(half_hp));
    r += x.xi_rows(x.A()).times(f({gi(0, 2), G(-1)}, 2, 0) * rat(x.hp / 4));
    r += x.row(x.A(), x.last).times(f({frac(-1, 4)}, 2, 0) * rat(x.hp));
    return r;
}

RestrictedMV dxin2_sigma_mn3(const JJet& jet) {
    const Ctx x(jet);
    const G in2 = gi(0, x.n - 2);
    MV r = x.xi_rows(x.A()).times(f({-in2, 0, in2 * G(x.n - 1)}, x.h + 1, x.h + 1));
    r += x.row(x.A(), x.last).times(f({0, in2 * G(-3), 0, in2 * G(x.n - 3)}, x.h + 1, x.h + 1));
    return r;
}

RestrictedMV pi_plus_dxin_sigma_m1(const JJet& jet) {
    const Ctx x(jet);
    MV r = x.xi_rows(x.A()).times(f({frac(-1, 2)}, 2, 0));
    r += x.row(x.A(), x.last).times(f({gi(0, 1) * frac(-1, 2)}, 2, 0));
    return r;
}

RestrictedMV dxin_dxn_sigma_mn3(const JJet& jet) {
    const Ctx x(jet);
    const long h = x.h;
    const RatMatrix& D = x.DA(x.last);
    const BigRational half_hp = x.hp / 2;
    const G I = G::i();
    const GaussPoly odd = {0, -I * G(x.n - 2)};                 // -i(n-2) xi_n
    const GaussPoly even = {I, 0, -I * G(x.n - 3)};             // i[1 - (n-3) xi_n^2]
    MV r = x.xi_rows(D).times(f(odd, h, h));
    r += x.row(D, x.last).times(f(even, h, h));
    r += x.xi_rows(x.A(), x.last).times(f(odd, h, h) * rat(half_hp));
    r += x.row(x.A(), x.last, x.last).times(f(even, h, h) * rat(half_hp));
    r += x.xi_rows(x.A()).times(f({0, I * G((h - 1) * x.n)}, h + 1, h + 1) * rat(x.hp));
    r += x.row(x.A(), x.last).times(f({-I * G(h - 1), 0, I * G((h - 1) * (x.n - 1))}, h + 1, h + 1) * rat(x.hp));
    return r;
}

RestrictedMV dxin_sigma_mn3(const JJet& jet) {
    const Ctx x(jet);
    const G I = G::i();
    MV r = x.xi_rows(x.A()).times(f({0, -I * G(x.n - 2)}, x.h, x.h));
    r += x.row(x.A(), x.last).times(f({I, 0, -I * G(x.n - 3)}, x.h, x.h));
    return r;
}

RestrictedMV sigma_mn2(const JJet& jet) {
    const Ctx x(jet);
    const long h = x.h;
    const int n = x.n;
    const int last = x.last;
    const BigRational N(n);
    const RatMatrix& A = x.A();
    const MV cn = x.c(last);

    // sum_mu sum_{nu<n} a^mu_nu c(dx_mu) c(dx_n) c(dx_nu)
    MV w(n);
    for (int mu = 0; mu < n; ++mu) {
        for (int nu = 0; nu < last; ++nu) {
            if (!A(mu, nu).is_zero()) w += (x.c(mu) * cn * x.c(nu)).times(rat(A(mu, nu)));
        }
    }
    MV xi_tan(n);  // sum_{k<n} xi_k c(dx_k)
    for (int k = 0; k < last; ++k) xi_tan += x.c(k).times(xi(k));

    const BigRational n2a = N * N - 3 * N + 2;
    const BigRational n2b = 2 * N * N - 5 * N + 2;

    MV r = w.times(f({G(-x.hp / 4)}, h - 1, h - 1));
    r += (xi_tan * cn * x.xi_rows(A)).times(f({G(-(N - 2) * x.hp / 4)}, h, h));
    r += (xi_tan * cn * x.row(A, last)).times(f({0, G(-(N - 2) * x.hp / 4)}, h, h));
    r += x.xi_rows(A).times(f({0, G(n2b), 0, G(n2a)}, h + 1, h + 1) * rat(x.hp / 4));
    r += x.row(A, last).times(f({0, 0, G(n2b), 0, G(n2a)}, h + 1, h + 1) * rat(x.hp / 4));

    // c(dx_beta) c[(nabla_alpha J) xi*] c(dx_omega) terms
    MV nabla_sum(n);  // sum_{alpha,beta} a^beta_alpha c(dx_beta) c[(nabla_alpha J) xi*]
    for (int alpha = 0; alpha < n; ++alpha) {
        const RatMatrix N_a = nabla_J(jet, alpha);
        MV cnab(n);  // sum_gamma (sum_beta N(gamma, beta) xi_beta) c(dx_gamma)
        for (int gamma = 0; gamma < n; ++gamma) {
            Coef coef;
            for (int beta = 0; beta < last; ++beta) coef += xi(beta) * rat(N_a(gamma, beta));
            coef += x.xin() * rat(N_a(gamma, last));
            cnab.add_term(BladeMask{1} << gamma, coef);
        }
        MV left(n);
        for (int beta = 0; beta < n; ++beta) left += x.c(beta).times(rat(A(beta, alpha)));
        nabla_sum += left * cnab;
    }
    r += (nabla_sum * x.xi_rows(A)).times(f({G((N - 2) / 2)}, h, h));
    r += (nabla_sum * x.row(A, last)).times(f({0, G((N - 2) / 2)}, h, h));

    MV dj(n);  // sum_h sum_{j,p<n} xi_j xi_p d_j a^p_h c(dx_h)
    MV dj_n(n);  // sum_h sum_{j<n} xi_j d_j a^n_h c(dx_h)
    for (int j = 0; j < last; ++j) {
        dj += x.xi_rows(x.DA(j)).times(xi(j));
        dj_n += x.row(x.DA(j), last).times(xi(j));
    }
    const G m = G(-(N - 2));
    r += dj.times(f({m}, h, h));
    r += x.xi_rows(x.DA(last)).times(f({0, m}, h, h));
    r += dj_n.times(f({0, m}, h, h));
    r += x.row(x.DA(last), last).times(f({0, 0, m}, h, h));
    r += x.xi_rows(A, last).times(f({0, m}, h, h) * rat(x.hp / 2));
    r += x.row(A, last, last).times(f({0, 0, m}, h, h) * rat(x.hp / 2));
    return r;
}

SigmaM2Parts sigma_m2_parts(const JJet& jet, const RestrictedMV& sigma0) {
    const Ctx x(jet);
    const MV c = x.c_J_xi();
    SigmaM2Parts p;
    p.a1 = (c * sigma0 * c).times(f({G(1)}, 2, 2));
    MV bracket(x.n);
    for (int j = 0; j < x.n; ++j) {
        MV dc = x.xi_rows(x.DA(j)) + x.row(x.DA(j), x.last).times(x.xin());
        bracket += x.row(x.A(), j) * dc;
    }
    bracket += x.row(x.A(), x.last) * x.xi_rows(x.A(), x.last).times(rat(x.hp / 2));
    bracket += x.row(x.A(), x.last) * x.row(x.A(), x.last, x.last).times(x.xin() * rat(x.hp / 2));
    p.a2 = (c * bracket).times(f({G(1)}, 2, 2));
    p.a3 = (c * x.row(x.A(), x.last) * c).times(f({G(1)}, 3, 3));
    return p;
}

SigmaM2PiPlus pi_plus_sigma_m2_parts(const JJet& jet) {
    const Ctx x(jet);
    const int n = x.n;
    const int last = x.last;
    const RatMatrix& A = x.A();
    const G I = G::i();
    const MV cn = x.row(A, last);   // c[J(dx_n)]
    const MV cq = x.xi_rows(A);     // sum_{q<n} xi_q c[J(dx_q)]

    MV w(n);
    for (int mu = 0; mu < n; ++mu) {
        for (int nu = 0; nu < last; ++nu) {
            if (!A(mu, nu).is_zero()) w += (x.c(mu) * x.c(last) * x.c(nu)).times(rat(A(mu, nu)));
        }
    }
    SigmaM2PiPlus out;
    const Coef hp16 = rat(x.hp / 16);
    out.a1 = (cn * w * cn).times(f({0, I}, 2, 0) * hp16);
    out.a1 += (cq * w * cn).times(f({I}, 2, 0) * hp16);
    out.a1 += (cn * w * cq).times(f({I}, 2, 0) * hp16);
    out.a1 += (cq * w * cq).times(f({G(2), I}, 2, 0) * hp16);

    MV d_n(n);    // sum_j c[J(dx_j)] sum_h d_j a^n_h c(dx_h)
    MV d_tan(n);  // sum_j c[J(dx_j)] sum_h sum_{p<n} xi_p d_j a^p_h c(dx_h)
    for (int j = 0; j < n; ++j) {
        d_n += x.row(A, j) * x.row(x.DA(j), last);
        d_tan += x.row(A, j) * x.xi_rows(x.DA(j));
    }
    const MV tail_n = x.row(A, last, last);  // sum_{h<n} a^n_h c(dx_h)
    const MV tail_tan = x.xi_rows(A, last);  // sum_{p,h<n} xi_p a^p_h c(dx_h)
    const Coef q4 = rat(BigRational(-1, 4));
    const Coef q8 = rat(-x.hp / 8);
    out.a2 = (cn * d_n).times(f({0, I}, 2, 0) * q4);
    out.a2 += (cq * d_n).times(f({I}, 2, 0) * q4);
    out.a2 += (cn * d_tan).times(f({I}, 2, 0) * q4);
    out.a2 += (cq * d_tan).times(f({G(2), I}, 2, 0) * q4);
    out.a2 += (cn * cn * tail_n).times(f({0, I}, 2, 0) * q8);
    out.a2 += (cq * cn * tail_n).times(f({I}, 2, 0) * q8);
    out.a2 += (cn * cn * tail_tan).times(f({I}, 2, 0) * q8);
    out.a2 += (cq * cn * tail_tan).times(f({G(2), I}, 2, 0) * q8);

    out.minus_h_a3 = (cn * cn * cn).times(f({0, G(3), I}, 3, 0) * hp16);
    out.minus_h_a3 += (cq * cn * cn).times(f({G(3), I}, 3, 0) * hp16);
    out.minus_h_a3 += (cn * cn * cq).times(f({G(3), I}, 3, 0) * hp16);
    out.minus_h_a3 += (cq * cn * cq).times(f({gi(0, -8), G(9), gi(0, 3)}, 3, 0) * hp16);
    return out;
}

}  // namespace kkw::expanded
