#pragma once

// Exact rational and Gaussian-rational arithmetic.
//
// BigRational is a thin value wrapper over GMP's mpq_class that keeps the
// canonical form (denominator > 0, reduced, zero = 0/1) after every
// operation. GaussianRational is Q(i) built on top of it.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kkw {

/// Raised on division by zero and on out-of-domain combinatorial requests.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(int v) : v_(static_cast<long>(v)) {}  // NOLINT
    BigRational(long num, long den);
    explicit BigRational(const mpz_class& num) : v_(num) {}
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(mpq_class v);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
    static BigRational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] double to_double() const { return v_.get_d(); }

    /// "p/q", or "p" when q == 1.
    [[nodiscard]] std::string to_string() const;

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return BigRational(mpq_class(-v_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] BigRational inverse() const;
    /// Integer power; negative exponents invert (error on zero base).
    [[nodiscard]] BigRational pow(long e) const;
    [[nodiscard]] BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

private:
    mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Exact element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(long re) : re_(re) {}                    // NOLINT
    GaussianRational(int re) : re_(re) {}                     // NOLINT
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    [[nodiscard]] const BigRational& re() const { return re_; }
    [[nodiscard]] const BigRational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 as a rational.
    [[nodiscard]] BigRational norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] GaussianRational inverse() const;
    [[nodiscard]] GaussianRational pow(long e) const;

    /// "a", "b*i" or "a+b*i" with rational a, b in p/q form.
    [[nodiscard]] std::string to_string() const;

private:
    BigRational re_;
    BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// k! as an exact rational.
BigRational factorial(long k);

/// C(m, k) for 0 <= k <= m.
BigRational binomial(long m, long k);

/// (2k-1)!! with the convention (-1)!! = 1.
BigRational double_factorial_odd(long k);

}  // namespace kkw
