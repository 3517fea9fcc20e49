#pragma once

// Clifford-valued symbols at the boundary point x0 as functions of
// xi' = (xi_1..xi_{n-1}), the formal variable u = |xi'|^2 and xi_n.
//
// Scalar coefficients are sums of  c * xi'^alpha * u^a * xi_n^b * U^{-k}
// with U = u + xi_n^2 = |xi|^2. x-derivatives at x0 are carried as a first
// order jet: an expression optionally stores d/dx_j of itself for every j,
// and products propagate it by the Leibniz rule. Derived quantities whose
// own x-derivative is never needed carry no jet; asking for it throws.

#include "kkw/clifford.hpp"
#include "kkw/geometry_jets.hpp"
#include "kkw/xi_poly.hpp"
#include "kkw/xi_ratfun.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace kkw {

struct SymKey {
    MonoKey alpha = 0;  // exponents of xi_1..xi_{n-1}
    int a = 0;          // power of u
    int b = 0;          // power of xi_n
    int k = 0;          // power of U^{-1}
    friend auto operator<=>(const SymKey&, const SymKey&) = default;
};

class SymbolCoeff {
public:
    using Terms = std::map<SymKey, GaussianRational>;

    SymbolCoeff() = default;
    SymbolCoeff(GaussianRational c);  // NOLINT(google-explicit-constructor)

    /// xi_i for i < n-1, xi_n for i == n-1 (zero-based).
    static SymbolCoeff xi(int i, int n);
    static SymbolCoeff u();
    /// U^e for any integer e; positive powers are expanded in u and xi_n.
    static SymbolCoeff norm_power(int e);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    void add_term(const SymKey& key, const GaussianRational& c);

    SymbolCoeff& operator+=(const SymbolCoeff& o);
    SymbolCoeff& operator-=(const SymbolCoeff& o);
    SymbolCoeff operator-() const;
    friend SymbolCoeff operator+(SymbolCoeff a, const SymbolCoeff& b) { return a += b; }
    friend SymbolCoeff operator-(SymbolCoeff a, const SymbolCoeff& b) { return a -= b; }
    friend SymbolCoeff operator*(const SymbolCoeff& a, const SymbolCoeff& b);
    friend SymbolCoeff operator*(const SymbolCoeff& a, const GaussianRational& c);
    friend bool operator==(const SymbolCoeff&, const SymbolCoeff&) = default;

    /// d/dxi_i, zero-based; i == n-1 is xi_n.
    [[nodiscard]] SymbolCoeff d_xi(int i, int n) const;

    /// u -> 1; coefficients become functions of xi_n with poles at +-i.
    [[nodiscard]] XiPoly<PoleRational> restrict() const;

private:
    Terms terms_;
};

using SymbolMV = Multivector<SymbolCoeff>;
using RestrictedCoeff = XiPoly<PoleRational>;
using RestrictedMV = Multivector<RestrictedCoeff>;

class SymbolExpression {
public:
    SymbolExpression() = default;
    explicit SymbolExpression(SymbolMV value) : value_(std::move(value)) {}
    SymbolExpression(SymbolMV value, std::vector<SymbolMV> dx);

    /// Constant in x: every x-derivative vanishes.
    static SymbolExpression x_constant(SymbolMV value);
    static SymbolExpression scalar(int n, const SymbolCoeff& c);

    [[nodiscard]] int dimension() const { return value_.dimension(); }
    [[nodiscard]] const SymbolMV& value() const { return value_; }
    [[nodiscard]] bool has_x_jet() const { return dx_.has_value(); }

    SymbolExpression& operator+=(const SymbolExpression& o);
    SymbolExpression& operator-=(const SymbolExpression& o);
    SymbolExpression operator-() const;
    friend SymbolExpression operator+(SymbolExpression a, const SymbolExpression& b) { return a += b; }
    friend SymbolExpression operator-(SymbolExpression a, const SymbolExpression& b) { return a -= b; }
    friend SymbolExpression operator*(const SymbolExpression& a, const SymbolExpression& b);
    [[nodiscard]] SymbolExpression scaled(const GaussianRational& c) const;

    /// d/dxi_i, zero-based (i == n-1 is xi_n); commutes with d/dx.
    [[nodiscard]] SymbolExpression d_xi(int i) const;
    /// d/dx_j at x0; the result carries no further jet.
    [[nodiscard]] SymbolExpression d_x(int j) const;

    [[nodiscard]] RestrictedMV restrict() const;

private:
    SymbolMV value_;
    std::optional<std::vector<SymbolMV>> dx_;
};

/// Apply an additive map to every PoleRational coefficient.
template <class F>
RestrictedMV map_pole(const RestrictedMV& m, F&& f) {
    return m.map([&](const RestrictedCoeff& c) { return c.map(f); });
}

/// pi+ in xi_n applied coefficientwise.
RestrictedMV pi_plus(const RestrictedMV& m);
/// d/dxi_n applied coefficientwise (commutes with restriction).
RestrictedMV d_xin(const RestrictedMV& m);

/// Builds symbols of D_J and its powers at x0 from jet data.
class SymbolBuilder {
public:
    explicit SymbolBuilder(JJet jet);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const JJet& jet() const { return jet_; }
    [[nodiscard]] const ConnectionJet& connection() const { return conn_; }

    // Building blocks (indices zero-based).
    [[nodiscard]] SymbolExpression c_dx(int h) const;      // c(dx_h)
    [[nodiscard]] SymbolExpression c_J_dx(int p) const;    // c[J(dx_p)]
    [[nodiscard]] SymbolExpression c_J_xi() const;         // c[J(xi)]
    [[nodiscard]] SymbolExpression norm_power(int e) const;  // |xi|^{2e}
    [[nodiscard]] SymbolMV spin_connection(int i) const;   // sigma_i
    [[nodiscard]] SymbolMV c_nablaJ_xi(int alpha) const;   // c[(nabla_alpha J) xi*]

    [[nodiscard]] SymbolExpression sigma1() const;        // of D_J
    [[nodiscard]] SymbolExpression sigma0() const;        // of D_J
    [[nodiscard]] SymbolExpression sigma_m1() const;      // sigma_{-1}(D_J^{-1})
    [[nodiscard]] SymbolExpression sigma_m2() const;      // sigma_{-2}(D_J^{-1})
    /// sigma_{-2}(D_J^{-1}) = A1 + A2 - h'(0) A3 once u = 1: A1 = c sigma_0 c / U^2,
    /// A2 = c / U^2 sum_j c[J dx_j] d_j c, A3 = c c[J dx_n] c / U^3, c = c[J(xi)].
    struct SigmaM2Parts {
        SymbolExpression a1, a2, a3;
    };
    [[nodiscard]] SigmaM2Parts sigma_m2_parts() const;
    [[nodiscard]] SymbolExpression sigma1_square() const;  // sigma_1(D_J^2)
    [[nodiscard]] SymbolExpression sigma_m3_square_inv() const;  // sigma_{-3}(D_J^{-2})
    [[nodiscard]] SymbolExpression sigma_mn3() const;     // sigma_{-n+3}(D_J^{-n+3})
    [[nodiscard]] SymbolExpression sigma_mn2() const;     // sigma_{-n+2}(D_J^{-n+3})

    /// The factor multiplying sigma_1(D_J) from the right in sigma_mn2:
    /// the subleading symbol of (D_J^{-2})^{(n-2)/2}.
    [[nodiscard]] SymbolExpression subleading_power_bracket() const;

private:
    JJet jet_;
    int n_;
    ConnectionJet conn_;
    std::vector<RatMatrix> nabla_;
};

}  // namespace kkw
