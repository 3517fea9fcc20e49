#pragma once

// Closed-form evaluators: the residue constants, the per-case coefficient
// sums, the regrouped D-form, the four-term final form, the boundary
// integrand written with K and <J e_i, e_n>, and the interior density.
//
// Every boundary value is a PiVolScalar (multiple of pi * Vol(S^{n-2})) and
// already contains the spinor trace factor 2^{n/2}.

#include "kkw/boundary_pipeline.hpp"
#include "kkw/geometry_jets.hpp"
#include "kkw/xi_ratfun.hpp"

#include <string>
#include <vector>

namespace kkw {

/// [N(x) / (c (x + i)^k)]^{(m)} at x = i, with N, c, k, m depending on n.
struct ConstantDefinition {
    std::string name;
    GaussPoly numerator;
    BigRational denominator;  // c
    long pole_order = 0;      // k
    long derivative_order = 0;  // m

    [[nodiscard]] PoleRational function() const;
};

/// A0..A14, B0..B5, C0..C6, D0..D8 in this order.
const std::vector<std::string>& constant_names();

ConstantDefinition constant_definition(const std::string& name, int n);

GaussianRational eval_constant(const std::string& name, int n);

/// Per-case coefficient sums evaluated on the jet's contractions.
PiVolScalar phi_case_form(CaseId id, const JJet& jet);

// The forms only see the jet through n, h'(0) and the contractions; these
// overloads take those directly.
PiVolScalar phi_case_form(CaseId id, int n, const BigRational& hprime, const JetContractions& c);
PiVolScalar phi_d_form(int n, const BigRational& hprime, const JetContractions& c);
PiVolScalar phi_final_form(int n, const BigRational& hprime, const JetContractions& c);
PiVolScalar boundary_integrand(int n, const BigRational& hprime, const JetContractions& c);

/// One summand of a coefficient-sum form with a readable label such as
/// "-1 D7 * g_i_n / (n/2+1)!" (invariant names as in JetContractions).
struct FormTerm {
    std::string label;
    PiVolScalar value;
};

std::vector<FormTerm> case_form_breakdown(CaseId id, int n, const BigRational& hprime, const JetContractions& c);
std::vector<FormTerm> d_form_breakdown(int n, const BigRational& hprime, const JetContractions& c);

/// The nine-constant regrouping of the total.
PiVolScalar phi_d_form(const JJet& jet);

/// The four-term closed form of the total.
PiVolScalar phi_final_form(const JJet& jet);

/// The same total written with K = -(n-1) h'(0) / 2, sum_i <J e_i, e_n>^2,
/// <J e_n, e_n>^2 and sum_i g(J e_i, (nabla_i J) e_n).
PiVolScalar boundary_integrand(const JJet& jet);

/// The three K-weighted pieces and the nabla-J piece of the boundary
/// integrand, each as a multiple of pi (without the 2^{...} K prefactor).
struct BoundaryBracket {
    BigRational k_value;
    BigRational scale;   // 2^{(4-n)/2}
    BigRational p1;      // curvature-only piece
    BigRational p2;      // sum_i <J e_i, e_n>^2 piece
    BigRational p3;      // <J e_n, e_n>^2 piece (enters with a minus sign)
    BigRational p4;      // nabla-J piece (enters with a minus sign)
    [[nodiscard]] BigRational total() const { return scale * k_value * (p1 + p2 - p3) - p4; }
};

BoundaryBracket boundary_bracket(const JJet& jet);
BoundaryBracket boundary_bracket(int n, const BigRational& hprime, const JetContractions& c);

struct InteriorInvariants {
    BigRational rjj;
    BigRational g1, g2, g3, g4, g5;
    BigRational s;
};

/// Coefficient of pi^{n/2} in the interior density.
BigRational interior_integrand(const InteriorInvariants& inv, int n);

}  // namespace kkw
