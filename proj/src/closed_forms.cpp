#include "kkw/closed_forms.hpp"

#include <map>
#include <stdexcept>

namespace kkw {

namespace {

using G = GaussianRational;

G im(const BigRational& x) { return {BigRational(0), x}; }

}  // namespace

PoleRational ConstantDefinition::function() const {
    return PoleRational(poly::scale(numerator, G(denominator.inverse())), 0, pole_order);
}

const std::vector<std::string>& constant_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (int k = 0; k <= 14; ++k) v.push_back("A" + std::to_string(k));
        for (int k = 0; k <= 5; ++k) v.push_back("B" + std::to_string(k));
        for (int k = 0; k <= 6; ++k) v.push_back("C" + std::to_string(k));
        for (int k = 0; k <= 8; ++k) v.push_back("D" + std::to_string(k));
        return v;
    }();
    return names;
}

ConstantDefinition constant_definition(const std::string& name, int n) {
    if (n < 6 || n % 2 != 0) throw ArithmeticError("constants are defined for even n >= 6");
    const BigRational N(n);
    const long h = n / 2;
    const BigRational n2 = N * N;
    const BigRational n3 = n2 * N;
    // Numerators as ascending coefficient lists in x.
    using Def = ConstantDefinition;
    auto def = [&](GaussPoly num, BigRational c, long k, long m) { return Def{name, std::move(num), c, k, m}; };

    if (name == "A0") return def({im(1), 0, im(-(N - 3))}, 2, h, h);
    if (name == "A1") return def({-2, im(-1), 2 * (N - 3), im(N - 3)}, 2, h, h + 1);
    if (name == "A2") return def({0, im(N - 2)}, 2, h, h + 1);
    if (name == "A3") return def({im(-(N - 2)), 0, im(n2 - 3 * N + 2)}, 8, h + 1, h + 1);
    if (name == "A4") return def({0, 3 * (N - 2), 0, -(n2 - 5 * N + 6)}, 8, h + 1, h + 1);
    if (name == "A5") {
        return def({2 * (N - 2), im(N - 2), -2 * (n2 - 3 * N + 2), im(-(n2 - 3 * N + 2))}, 8, h + 1, h + 2);
    }
    if (name == "A6") return def({0, im(3 * (N - 2)), 0, im(-(n2 - 5 * N + 6))}, 8, h + 1, h + 2);
    if (name == "A7") return def({0, im(N - 2)}, 8, h, h + 1);
    if (name == "A8") return def({0, im(-N * (N - 2))}, 8, h + 1, h + 2);
    if (name == "A9") return def({1, 0, -(N - 3)}, 8, h, h + 1);
    if (name == "A10") return def({-(N - 2), 0, n2 - 3 * N + 2}, 8, h + 1, h + 2);
    if (name == "A11") return def({im(-(N - 2)), -(N - 2), im(N * (N - 2))}, 8, h + 1, h + 1);
    if (name == "A12") return def({im(1), 3 * N - 5, im(-(N - 3)), -(n2 - 4 * N + 3)}, 8, h + 1, h + 1);
    if (name == "A13") {
        return def({2 * (N - 2), im(-(n2 - 3 * N + 2)), -2 * (n2 - 3 * N + 2), im(-(n2 - 3 * N + 2))}, 8, h + 1,
                   h + 2);
    }
    if (name == "A14") return def({im(N - 2), 2 * (N - 2), im(-(n2 - 5 * N + 6))}, 8, h, h + 2);

    if (name == "B0") return def({-(N - 2), im(-(N - 2))}, 8, h, h + 1);
    if (name == "B1") return def({-1}, 8, h - 1, h);
    if (name == "B2") return def({0, 0, -(2 * n2 - 5 * N + 2), 0, -(n2 - 3 * N + 2)}, 8, h + 1, h + 2);
    if (name == "B3") return def({0, 0, N - 2}, 4, h, h + 1);
    if (name == "B4") return def({0, im(2 * n2 - 5 * N + 2), 0, im(n2 - 3 * N + 2)}, 8, h + 1, h + 2);
    if (name == "B5") return def({0, im(-(N - 2))}, 4, h, h + 1);

    if (name == "C0") return def({0, im(-1), 0, im(N - 3)}, 4, h, h + 1);
    if (name == "C1") return def({0, im(N - 2)}, 4, h, h + 1);
    if (name == "C2") return def({-2, im(-(2 * N - 3)), 2 * (N - 3), im(N - 3)}, 16, h, h + 1);
    if (name == "C3") return def({2, im(N - 1), -2 * (N - 3), im(-(N - 3))}, 4, h, h + 1);
    if (name == "C4") return def({0, 3, im(1), -3 * (N - 3), im(-(N - 3))}, 16, h, h + 2);
    if (name == "C5") {
        return def({im(8), -3 * (2 * N - 1), im(-5 * (2 * N - 5)), 9 * (N - 3), im(3 * (N - 3))}, 16, h, h + 2);
    }
    if (name == "C6") return def({2, im(-(-4 * N + 7)), -2 * (N - 3), im(-(N - 3))}, 16, h, h + 1);

    if (name == "D0") {
        return def({N - 6, im(n2 - 2 * N + 1), -(3 * n2 - 10 * N + 14), im(-(n2 - 3 * N + 2)), -(n2 - 5 * N + 8),
                    im(N - 3)},
                   8, h + 1, h + 2);
    }
    if (name == "D1") return def({im(1), 0, im(-(N - 3))}, 2, h, h);
    if (name == "D2") return def({-2 * N + 2, im(n2 - 7 * N + 8), 2 * (N - 3), im(N * (N - 3))}, 4 * (N - 1), h, h + 1);
    if (name == "D3") {
        return def({im(-N + 4), 1, im(n2 - 5 * N + 9), -(N - 3), im(-(N - 3))}, 8 * (N - 1), h + 1, h + 1);
    }
    if (name == "D4") return def({-1}, 8, h - 1, h);
    if (name == "D5") {
        return def({im(N), n2 - 1, im(2 * n2 - 6 * N + 5), -(n3 - 5 * n2 + 5 * N - 1), im(n2 - 4 * N + 3)},
                   8 * (N - 1), h + 1, h + 1);
    }
    if (name == "D6") return def({-1, im(-(n2 - 4 * N + 4)), n2 - 4 * N + 3}, 8 * (N - 1), h, h + 1);
    if (name == "D7") return def({-(N - 2), im(-(N - 2))}, 4 * (N - 1), h, h + 1);
    if (name == "D8") return def({0, im(-5 * (N - 2)), n2 - 3 * N + 2}, 4 * (N - 1), h, h + 1);

    throw std::invalid_argument("unknown constant '" + name + "'");
}

GaussianRational eval_constant(const std::string& name, int n) {
    const ConstantDefinition d = constant_definition(name, n);
    return derivative_at(d.function(), d.derivative_order);
}

namespace {

// invariant * multiplier * 2^{n/2} * (2 pi i / fact!) * constant, summed.
struct Summand {
    BigRational invariant;
    std::string constant;
    BigRational multiplier;
    long factorial_arg;
    std::string invariant_label;
};

class ConstantCache {
public:
    explicit ConstantCache(int n) : n_(n) {}
    const G& operator()(const std::string& name) {
        auto it = cache_.find(name);
        if (it == cache_.end()) it = cache_.emplace(name, eval_constant(name, n_)).first;
        return it->second;
    }

private:
    int n_;
    std::map<std::string, G> cache_;
};

PiVolScalar sum_terms(int n, const std::vector<Summand>& terms, const std::string& what) {
    ConstantCache constants(n);
    G acc;
    for (const auto& t : terms) {
        if (t.invariant.is_zero() || t.multiplier.is_zero()) continue;
        acc += constants(t.constant) * G(t.invariant * t.multiplier / factorial(t.factorial_arg));
    }
    acc *= G(BigRational(0), 2 * spinor_dimension(n));
    return real_pi_vol(acc, what);
}

struct FormContext {
    int n;
    long h;
    BigRational hp;
    BigRational inv_nm1;
    JetContractions c;

    FormContext(int n_, BigRational hprime, JetContractions contr)
        : n(n_), h(n_ / 2), hp(std::move(hprime)), inv_nm1(BigRational(1, n_ - 1)), c(std::move(contr)) {
        require_supported_dimension(n);
    }
    explicit FormContext(const JJet& jet) : FormContext(jet.n, jet.hprime, contractions(jet)) {}
};

std::vector<Summand> phi1_terms(const FormContext& f) {
    const auto& c = f.c;
    return {
        {c.s_tan, "A0", 1, f.h, "s_tan"},
        {c.s_tan * f.inv_nm1, "A1", 1, f.h + 1, "s_tan /(n-1)"},
        {c.s_ntan * f.inv_nm1, "A2", 1, f.h + 1, "s_ntan /(n-1)"},
    };
}

std::vector<Summand> phi2_terms(const FormContext& f) {
    const auto& c = f.c;
    return {
        {f.hp * c.q_tan * f.inv_nm1, "A3", 1, f.h + 1, "h' q_tan /(n-1)"},
        {f.hp * c.q_nt, "A4", 1, f.h + 1, "h' q_nt"},
        {f.hp * c.q_all * f.inv_nm1, "A5", 1, f.h + 2, "h' q_all /(n-1)"},
        {f.hp * c.q_nn, "A6", 1, f.h + 2, "h' q_nn"},
    };
}

std::vector<Summand> phi3_terms(const FormContext& f) {
    const auto& c = f.c;
    return {
        {f.hp * c.q_tan * f.inv_nm1, "A7", 1, f.h + 1, "h' q_tan /(n-1)"},
        {f.hp * c.q_all * f.inv_nm1, "A8", 1, f.h + 2, "h' q_all /(n-1)"},
        {f.hp * c.q_nt, "A9", 1, f.h + 1, "h' q_nt"},
        {f.hp * c.q_nn, "A10", 1, f.h + 2, "h' q_nn"},
    };
}

std::vector<Summand> phi4_terms(const FormContext& f) {
    const auto& c = f.c;
    const auto& hp = f.hp;
    const auto& r = f.inv_nm1;
    return {
        {hp * c.q_nt * r, "B0", 1, f.h + 1, "h' q_nt /(n-1)"},
        {hp * c.q_nt, "B1", 1, f.h, "h' q_nt"},
        {hp * c.t_diag * r, "B0", -1, f.h + 1, "h' t_diag /(n-1)"},
        {hp * c.t_diag, "B1", -1, f.h, "h' t_diag"},
        {hp * c.q_col_n, "B2", 1, f.h + 2, "h' q_col_n"},
        {hp * c.q_nt, "B3", 1, f.h + 1, "h' q_nt"},
        {hp * c.q_all * r, "B4", 1, f.h + 2, "h' q_all /(n-1)"},
        {hp * c.q_tan * r, "B5", 1, f.h + 1, "h' q_tan /(n-1)"},
        {c.q_all * c.g_alpha_n * r, "B5", 1, f.h + 1, "q_all g_alpha_n /(n-1)"},
        {c.g_n_i * r, "B0", -2, f.h + 1, "g_n_i /(n-1)"},
        {c.g_i_i * r, "B0", 2, f.h + 1, "g_i_i /(n-1)"},
        {c.q_nn * c.g_alpha_n, "B3", 1, f.h + 1, "q_nn g_alpha_n"},
        {c.s_tan * r, "B0", 4, f.h + 1, "s_tan /(n-1)"},
    };
}

std::vector<Summand> phi5_terms(const FormContext& f) {
    const auto& c = f.c;
    const auto& hp = f.hp;
    const auto& r = f.inv_nm1;
    return {
        {c.q_nn * c.s_full, "C0", 1, f.h + 1, "q_nn s_full"},
        {c.q_all * c.s_full * r, "C1", 1, f.h + 1, "q_all s_full /(n-1)"},
        {hp * c.q_nn * c.t_diag, "C0", BigRational(-1, 4), f.h + 1, "h' q_nn t_diag"},
        {hp * c.q_all * c.t_diag * r, "C2", 1, f.h + 1, "h' q_all t_diag /(n-1)"},
        {c.s_full * r, "C3", 1, f.h + 1, "s_full /(n-1)"},
        {hp * c.q_nn * c.q_nn, "C4", 1, f.h + 2, "h' q_nn q_nn"},
        {hp * c.q_nn * c.q_all * r, "C5", 1, f.h + 2, "h' q_nn q_all /(n-1)"},
        {hp * c.q_nt_row * c.q_nn, "C0", BigRational(3, 4), f.h + 1, "h' q_nt_row q_nn"},
        {hp * c.q_nt_row * c.q_all * r, "C6", 1, f.h + 1, "h' q_nt_row q_all /(n-1)"},
        {hp * c.q_tan * c.q_nn * r, "C3", BigRational(1, 2), f.h + 1, "h' q_tan q_nn /(n-1)"},
    };
}

std::vector<Summand> d_form_terms(const FormContext& f) {
    const auto& c = f.c;
    const auto& hp = f.hp;
    return {
        {hp, "D0", 1, f.h + 2, "h'"},
        {c.s_tan, "D1", 1, f.h, "s_tan"},
        {c.s_tan, "D2", 1, f.h + 1, "s_tan"},
        {hp * c.q_tan, "D3", 1, f.h + 1, "h' q_tan"},
        {hp * c.q_nt, "D4", 1, f.h, "h' q_nt"},
        {hp * c.q_nt, "D5", 1, f.h + 1, "h' q_nt"},
        {hp * c.t_diag, "D4", -1, f.h, "h' t_diag"},
        {hp * c.t_diag, "D6", 1, f.h + 1, "h' t_diag"},
        {c.g_i_n, "D7", -1, f.h + 1, "g_i_n"},
        {c.g_i_n, "D8", 1, f.h + 1, "g_i_n"},
    };
}

std::vector<Summand> case_terms(CaseId id, const FormContext& f) {
    switch (id) {
        case CaseId::aI: return phi1_terms(f);
        case CaseId::aII: return phi2_terms(f);
        case CaseId::aIII: return phi3_terms(f);
        case CaseId::b: return phi4_terms(f);
        case CaseId::c: return phi5_terms(f);
    }
    throw std::invalid_argument("unknown case");
}

std::vector<FormTerm> breakdown(const FormContext& f, const std::vector<Summand>& terms, const std::string& what) {
    std::vector<FormTerm> out;
    for (const auto& t : terms) {
        std::string label;
        if (t.multiplier != BigRational(1)) label += t.multiplier.to_string() + " ";
        label += t.constant + " * " + t.invariant_label + " / (n/2";
        if (t.factorial_arg > f.h) label += "+" + std::to_string(t.factorial_arg - f.h);
        if (t.factorial_arg < f.h) label += "-" + std::to_string(f.h - t.factorial_arg);
        label += ")!";
        out.push_back({label, sum_terms(f.n, {t}, what + " term " + label)});
    }
    return out;
}

}  // namespace

std::vector<FormTerm> case_form_breakdown(CaseId id, int n, const BigRational& hprime, const JetContractions& c) {
    const FormContext f(n, hprime, c);
    return breakdown(f, case_terms(id, f), case_name(id));
}

std::vector<FormTerm> d_form_breakdown(int n, const BigRational& hprime, const JetContractions& c) {
    const FormContext f(n, hprime, c);
    return breakdown(f, d_form_terms(f), "D form");
}

PiVolScalar phi_case_form(CaseId id, int n, const BigRational& hprime, const JetContractions& c) {
    const FormContext f(n, hprime, c);
    return sum_terms(f.n, case_terms(id, f), case_name(id) + " form");
}

PiVolScalar phi_case_form(CaseId id, const JJet& jet) {
    return phi_case_form(id, jet.n, jet.hprime, contractions(jet));
}

PiVolScalar phi_d_form(int n, const BigRational& hprime, const JetContractions& c) {
    const FormContext f(n, hprime, c);
    return sum_terms(f.n, d_form_terms(f), "D form");
}

PiVolScalar phi_d_form(const JJet& jet) { return phi_d_form(jet.n, jet.hprime, contractions(jet)); }

PiVolScalar phi_final_form(const JJet& jet) { return phi_final_form(jet.n, jet.hprime, contractions(jet)); }

PiVolScalar phi_final_form(int n_, const BigRational& hprime, const JetContractions& contr) {
    const FormContext f(n_, hprime, contr);
    const long n = f.n;
    const long h = f.h;
    const auto& c = f.c;
    const BigRational N(n);
    const BigRational two(2);
    BigRational acc;
    acc -= f.hp * N * (N * N * N * N - 5 * N * N * N - 16 * N * N + 68 * N - 48) * two.pow(-4 - n) *
           factorial(n - 3) / (factorial(h + 2) * factorial(h));
    acc += f.hp * c.q_tan * N * (N * N - 8 * N + 12) * two.pow(-3 - n) * factorial(n - 3) /
           (factorial(h + 1) * factorial(h));
    acc += f.hp * c.q_nt * (-2 * N * N + 7 * N - 2) / (N + 2) * two.pow(-n) * factorial(n - 3) /
           (factorial(h) * factorial(h - 2));
    acc -= c.g_i_n * (N * N - 8 * N + 12) * two.pow(-1 - n) * factorial(n - 2) / (factorial(h + 1) * factorial(h - 1));
    return {acc * spinor_dimension(f.n)};
}

BoundaryBracket boundary_bracket(const JJet& jet) { return boundary_bracket(jet.n, jet.hprime, contractions(jet)); }

BoundaryBracket boundary_bracket(int n_, const BigRational& hprime, const JetContractions& contr) {
    const FormContext f(n_, hprime, contr);
    const long n = f.n;
    const long h = f.h;
    const BigRational N(n);
    const BigRational two(2);
    BoundaryBracket b;
    b.k_value = extrinsic_curvature(connection_jet(hprime, f.n));
    // 2^{(4-n)/2}; n is even so the exponent is an integer.
    b.scale = two.pow((4 - n) / 2);
    const BigRational f1 = factorial(n - 3) / (factorial(h) * factorial(h - 2));
    b.p1 = (N - 2) * (N - 2) / (N * N + N - 2) * f1;
    b.p2 = f.c.jen_sq_sum * N * (N * N - 8 * N + 12) / (8 * (N - 1)) * factorial(n - 3) /
           (factorial(h + 1) * factorial(h));
    b.p3 = f.c.jnn_sq * (N * N - 3 * N - 2) / (N * N + N - 2) * f1;
    b.p4 = two.pow(-(2 + n) / 2) * f.c.g_alpha_n * (N * N - 8 * N + 12) * factorial(n - 2) /
           (factorial(h + 1) * factorial(h - 1));
    return b;
}

PiVolScalar boundary_integrand(const JJet& jet) { return {boundary_bracket(jet).total()}; }

PiVolScalar boundary_integrand(int n, const BigRational& hprime, const JetContractions& c) {
    return {boundary_bracket(n, hprime, c).total()};
}

BigRational interior_integrand(const InteriorInvariants& inv, int n) {
    if (n < 6 || n % 2 != 0) throw ArithmeticError("interior density is evaluated for even n >= 6");
    const long h = n / 2;
    const BigRational density = BigRational(1, 4) * inv.rjj - BigRational(1, 2) * inv.g1 - BigRational(1, 2) * inv.g2 -
                                BigRational(1, 4) * inv.g3 - BigRational(1, 4) * inv.g4 + BigRational(1, 4) * inv.g5 -
                                BigRational(5, 12) * inv.s;
    return BigRational(n - 2) / factorial(h - 1) * BigRational(2).pow(h) * density;
}

}  // namespace kkw
