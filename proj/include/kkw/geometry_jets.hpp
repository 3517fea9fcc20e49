#pragma once

// First-order jet of an almost product structure at a boundary point x0, and
// the connection data of the collar metric dx_n^2 + g^{dM}/h(x_n) there.
//
// Index convention: all indices are zero-based; index n-1 is the normal
// direction. A(p, h) is the coefficient a^p_h in J(dx_p) = sum_h a^p_h dx_h.

#include "kkw/exact_arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kkw {

class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(int n) : n_(n), v_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const std::vector<BigRational>& d);

    [[nodiscard]] int size() const { return n_; }
    BigRational& operator()(int r, int c) { return v_[index(r, c)]; }
    [[nodiscard]] const BigRational& operator()(int r, int c) const { return v_[index(r, c)]; }

    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_symmetric() const { return *this == transpose(); }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const BigRational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    [[nodiscard]] size_t index(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(n_) + static_cast<size_t>(c);
    }
    int n_ = 0;
    std::vector<BigRational> v_;
};

struct JJet {
    int n = 0;
    RatMatrix A;
    std::vector<RatMatrix> DA;  // DA[j] = d/dx_j of A at x0
    BigRational hprime;
};

/// Throws ArithmeticError naming the first violated jet constraint:
/// A symmetric, A^2 = I, each DA[j] symmetric and anticommuting with A.
void validate_jet(const JJet& jet);

/// Empty string if valid, otherwise a description of the first violation.
std::string jet_violation(const JJet& jet);

struct ConnectionJet {
    int n = 0;
    /// omega[i](s, t) = <nabla_{e_i} e_t, e_s>(x0)
    std::vector<RatMatrix> omega;
    /// christoffel[k](s, t) = Gamma^k_{st}(x0)
    std::vector<RatMatrix> christoffel;
    /// Gamma^k = sum_i Gamma^k_{ii}
    std::vector<BigRational> gamma_contracted;
};

ConnectionJet connection_jet(const BigRational& hprime, int n);

/// Mean-curvature trace K(x0) = -sum_{i<n} Gamma^n_{ii}(x0).
BigRational extrinsic_curvature(const ConnectionJet& conn);

/// N_alpha with N[gamma][beta] = g((nabla_{e_alpha} J) e_beta, e_gamma)(x0).
RatMatrix nabla_J(const JJet& jet, int alpha);

/// g(J e_a, (nabla_{e_b} J) e_c)(x0).
BigRational g_J_nablaJ(const JJet& jet, int a, int b, int c);

enum class JetProfile { diagonal, conjugated };

JetProfile parse_profile(const std::string& name);
std::string profile_name(JetProfile p);

/// Deterministic random valid jet. The involution always has both
/// eigenvalues +1 and -1 so that DA can be nonzero.
JJet random_jjet(int n, std::uint64_t seed, JetProfile profile);

/// J = id with the given h'(0); DA is forced to vanish.
JJet identity_jjet(int n, const BigRational& hprime);

/// DA = 0, h'(0) = 0, A = diag(eps).
JJet trivial_jjet(int n, const std::vector<int>& eps);

/// Scalar contractions of jet data used by the closed forms.
/// Sums written with i, nu < n range over tangential indices only.
struct JetContractions {
    BigRational q_tan;        // sum_{i,nu<n} (a^i_nu)^2
    BigRational q_nt;         // sum_{i<n} (a^i_n)^2
    BigRational q_nt_row;     // sum_{nu<n} (a^n_nu)^2
    BigRational q_col_n;      // sum_l (a^l_n)^2
    BigRational q_all;        // sum_h sum_{i<n} (a^i_h)^2
    BigRational q_nn;         // sum_h (a^n_h)^2
    BigRational t_diag;       // sum_{i<n} a^i_i a^n_n
    BigRational s_tan;        // sum_h sum_{i<n} a^i_h d_i a^n_h
    BigRational s_ntan;       // sum_h sum_{i<n} a^n_h d_i a^i_h
    BigRational s_full;       // sum_h sum_j a^j_h d_j a^n_h
    BigRational g_alpha_n;    // sum_alpha g(J e_alpha, (nabla_alpha J) e_n)
    BigRational g_n_i;        // sum_{i<n} g(J e_i, (nabla_n J) e_i)
    BigRational g_i_i;        // sum_{i<n} g(J e_n, (nabla_i J) e_i)
    BigRational g_i_n;        // sum_{i<n} g(J e_i, (nabla_i J) e_n)
    BigRational jen_sq_sum;   // sum_i <J e_i, e_n>^2
    BigRational jnn_sq;       // <J e_n, e_n>^2
    friend bool operator==(const JetContractions&, const JetContractions&) = default;
};

JetContractions contractions(const JJet& jet);

/// Contractions of a valid jet written through the free parameters they
/// actually depend on: a = a^n_n, tr A, s_tan and h'(0). Uses A^2 = I,
/// A symmetric, A * DA_j antisymmetric and the form of omega; agrees with
/// contractions(jet) for every valid jet.
JetContractions reduced_contractions(int n, const BigRational& hprime, const BigRational& a_nn,
                                     const BigRational& trace_A, const BigRational& s_tan);

/// tr A.
BigRational trace(const RatMatrix& a);

}  // namespace kkw
