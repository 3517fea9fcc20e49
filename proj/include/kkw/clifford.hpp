#pragma once

// Clifford algebra Cl(n) with e_i e_j + e_j e_i = -2 delta_ij over a
// commutative coefficient ring R. Basis monomials e_S are indexed by bit
// masks (bit i <-> e_{i+1}), so n <= 32.
//
// Requirements on R: default construction gives zero, is_zero(), +=, -=,
// unary -, R * R, and R * GaussianRational.

#include "kkw/exact_arith.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace kkw {

using BladeMask = std::uint32_t;

namespace clifford {

/// Exponent of -1 in e_A e_B = (-1)^k e_{A xor B}.
inline int product_sign_exponent(BladeMask a, BladeMask b) {
    int swaps = 0;
    for (BladeMask s = a >> 1; s != 0; s >>= 1) swaps += std::popcount(s & b);
    return swaps + std::popcount(a & b);
}

/// Exponent of -1 in e_S e_S, i.e. |S|(|S|+1)/2.
inline int square_sign_exponent(BladeMask s) {
    const int k = std::popcount(s);
    return k * (k + 1) / 2;
}

}  // namespace clifford

template <class R>
class Multivector {
public:
    using Terms = std::map<BladeMask, R>;

    Multivector() = default;
    explicit Multivector(int n) : n_(n) {
        if (n < 0 || n > 32) throw ArithmeticError("Multivector: dimension out of range");
    }

    static Multivector scalar(int n, R c) { return blade(n, 0, std::move(c)); }
    static Multivector blade(int n, BladeMask s, R c) {
        Multivector m(n);
        if (n < 32 && (s >> n) != 0) throw ArithmeticError("Multivector: blade outside Cl(n)");
        if (!c.is_zero()) m.terms_.emplace(s, std::move(c));
        return m;
    }
    /// e_{i+1} with coefficient c (i is zero-based).
    static Multivector generator(int n, int i, R c) {
        if (i < 0 || i >= n) throw ArithmeticError("Multivector: generator index out of range");
        return blade(n, BladeMask{1} << i, std::move(c));
    }

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] R coefficient(BladeMask s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? R{} : it->second;
    }
    [[nodiscard]] R scalar_part() const { return coefficient(0); }

    void add_term(BladeMask s, const R& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& o) {
        check_dim(o);
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        check_dim(o);
        for (const auto& [s, c] : o.terms_) add_term(s, -c);
        return *this;
    }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    Multivector operator-() const {
        Multivector r(n_);
        for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
        return r;
    }

    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.check_dim(b);
        Multivector r(a.n_);
        for (const auto& [sa, ca] : a.terms_) {
            for (const auto& [sb, cb] : b.terms_) {
                R c = ca * cb;
                if (clifford::product_sign_exponent(sa, sb) & 1) c = -c;
                r.add_term(sa ^ sb, c);
            }
        }
        return r;
    }
    Multivector& operator*=(const Multivector& o) { return *this = *this * o; }

    /// Multiply every coefficient by a ring element.
    [[nodiscard]] Multivector times(const R& c) const {
        Multivector r(n_);
        if (c.is_zero()) return r;
        for (const auto& [s, v] : terms_) r.add_term(s, v * c);
        return r;
    }
    /// Multiply every coefficient by an exact scalar.
    [[nodiscard]] Multivector scaled(const GaussianRational& c) const {
        Multivector r(n_);
        if (c.is_zero()) return r;
        for (const auto& [s, v] : terms_) r.add_term(s, v * c);
        return r;
    }

    /// Apply an additive map to every coefficient.
    template <class F>
    [[nodiscard]] auto map(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const R&>()))>;
        Multivector<D> r(n_);
        for (const auto& [s, c] : terms_) r.add_term(s, f(c));
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check_dim(const Multivector& o) const {
        if (n_ != o.n_) {
            throw ArithmeticError("Multivector: dimension mismatch (" + std::to_string(n_) + " vs " +
                                  std::to_string(o.n_) + ")");
        }
    }

    int n_ = 0;
    Terms terms_;
};

/// 2^{n/2}: trace of the identity on spinors, n even.
inline BigRational spinor_dimension(int n) {
    if (n % 2 != 0) throw ArithmeticError("spinor trace requires even n");
    return BigRational(2).pow(n / 2);
}

/// Spinor trace: 2^{n/2} times the scalar part.
template <class R>
R trace(const Multivector<R>& a) {
    return a.scalar_part() * GaussianRational(spinor_dimension(a.dimension()));
}

/// trace(a * b) without forming the full product.
template <class R>
R trace_product(const Multivector<R>& a, const Multivector<R>& b) {
    if (a.dimension() != b.dimension()) throw ArithmeticError("trace_product: dimension mismatch");
    R acc{};
    const auto& small = a.terms().size() <= b.terms().size() ? a.terms() : b.terms();
    const auto& large = a.terms().size() <= b.terms().size() ? b.terms() : a.terms();
    for (const auto& [s, cs] : small) {
        auto it = large.find(s);
        if (it == large.end()) continue;
        R c = cs * it->second;
        if (clifford::square_sign_exponent(s) & 1) c = -c;
        acc += c;
    }
    return acc * GaussianRational(spinor_dimension(a.dimension()));
}

/// sum_h v[h] e_{h+1}.
template <class R>
Multivector<R> clifford_of_covector(const std::vector<R>& v) {
    const int n = static_cast<int>(v.size());
    Multivector<R> m(n);
    for (int h = 0; h < n; ++h) m.add_term(BladeMask{1} << h, v[static_cast<size_t>(h)]);
    return m;
}

}  // namespace kkw
