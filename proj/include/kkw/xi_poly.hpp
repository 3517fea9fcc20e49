#pragma once

// Sparse polynomials in the tangential variables xi_1..xi_{d} (d <= 15) with
// coefficients in an arbitrary commutative ring C. Monomials are packed
// four bits per variable into a 64-bit key, so each exponent is at most 15.

#include "kkw/exact_arith.hpp"

#include <cstdint>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

namespace kkw {

using MonoKey = std::uint64_t;

namespace mono {

inline constexpr int kMaxVars = 15;
inline constexpr int kMaxExp = 15;

inline int exponent(MonoKey k, int var) { return static_cast<int>((k >> (4 * var)) & 0xF); }

inline int total_degree(MonoKey k) {
    int d = 0;
    for (; k != 0; k >>= 4) d += static_cast<int>(k & 0xF);
    return d;
}

inline MonoKey variable(int var) {
    if (var < 0 || var >= kMaxVars) throw ArithmeticError("monomial variable index out of range");
    return MonoKey{1} << (4 * var);
}

/// Product of monomials; throws if an exponent would exceed kMaxExp.
inline MonoKey multiply(MonoKey a, MonoKey b) {
    // A nibble overflow shows up as a carry into the low bit of the next nibble.
    const MonoKey r = a + b;
    if (((a ^ b ^ r) & 0x1111111111111110ULL) != 0) throw ArithmeticError("monomial exponent overflow");
    return r;
}

inline MonoKey from_exponents(const std::vector<int>& e) {
    if (static_cast<int>(e.size()) > kMaxVars) throw ArithmeticError("too many monomial variables");
    MonoKey r = 0;
    for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] < 0 || e[v] > kMaxExp) throw ArithmeticError("monomial exponent out of range");
        r |= static_cast<MonoKey>(e[v]) << (4 * v);
    }
    return r;
}

inline std::vector<int> to_exponents(MonoKey k, int nvars) {
    std::vector<int> e(static_cast<size_t>(nvars));
    for (int v = 0; v < nvars; ++v) e[static_cast<size_t>(v)] = exponent(k, v);
    return e;
}

}  // namespace mono

template <class C>
class XiPoly {
public:
    using Terms = std::map<MonoKey, C>;

    XiPoly() = default;
    static XiPoly constant(C c) { return monomial(0, std::move(c)); }
    static XiPoly monomial(MonoKey k, C c) {
        XiPoly p;
        if (!c.is_zero()) p.terms_.emplace(k, std::move(c));
        return p;
    }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] size_t size() const { return terms_.size(); }

    void add_term(MonoKey k, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    XiPoly& operator+=(const XiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    XiPoly& operator-=(const XiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
    friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a -= b; }
    XiPoly operator-() const {
        XiPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend XiPoly operator*(const XiPoly& a, const XiPoly& b) {
        XiPoly r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) r.add_term(mono::multiply(ka, kb), ca * cb);
        }
        return r;
    }
    XiPoly& operator*=(const XiPoly& o) { return *this = *this * o; }

    /// Multiply every coefficient by a scalar s (any type with C * S -> C).
    template <class S>
    [[nodiscard]] XiPoly scaled(const S& s) const {
        XiPoly r;
        for (const auto& [k, c] : terms_) {
            C v = c * s;
            if (!v.is_zero()) r.terms_.emplace(k, std::move(v));
        }
        return r;
    }

    /// Apply f to every coefficient (f must be additive for sums to stay meaningful).
    template <class F>
    [[nodiscard]] auto map(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        XiPoly<D> r;
        for (const auto& [k, c] : terms_) r.add_term(k, f(c));
        return r;
    }

    friend XiPoly operator*(const XiPoly& a, const GaussianRational& s) { return a.scaled(s); }

    friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

}  // namespace kkw
