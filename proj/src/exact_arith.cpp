#include "kkw/exact_arith.hpp"

#include <ostream>
#include <sstream>

namespace kkw {

BigRational::BigRational(long num, long den) {
    if (den == 0) throw ArithmeticError("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ArithmeticError("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational::BigRational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw ArithmeticError("BigRational: zero denominator");
    v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t\n\r");
        const auto e = t.find_last_not_of(" \t\n\r");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    auto parse_int = [](const std::string& t) {
        mpz_class z;
        if (t.empty() || z.set_str(t, 10) != 0) {
            throw std::invalid_argument("malformed integer '" + t + "'");
        }
        return z;
    };
    if (slash == std::string::npos) return BigRational(parse_int(s));
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    trim(num);
    trim(den);
    const mpz_class d = parse_int(den);
    if (d == 0) throw ArithmeticError("rational literal '" + s + "' has zero denominator");
    return {parse_int(num), d};
}

std::string BigRational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw ArithmeticError("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw ArithmeticError("BigRational: inverse of zero");
    return BigRational(mpq_class(1 / v_));
}

BigRational BigRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return {num, den};
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    BigRational re = re_ * o.re_ - im_ * o.im_;
    BigRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw ArithmeticError("GaussianRational: division by zero");
    return *this *= o.inverse();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw ArithmeticError("GaussianRational: inverse of zero");
    const BigRational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational result(1);
    GaussianRational base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::ostringstream os;
    if (!re_.is_zero()) {
        os << re_.to_string() << (im_.sign() > 0 ? "+" : "");
    }
    os << im_.to_string() << "*i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

BigRational factorial(long k) {
    if (k < 0) throw ArithmeticError("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return BigRational(f);
}

BigRational binomial(long m, long k) {
    if (k < 0 || m < 0 || k > m) {
        throw ArithmeticError("binomial(" + std::to_string(m) + ", " + std::to_string(k) +
                              ") out of range");
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return BigRational(c);
}

BigRational double_factorial_odd(long k) {
    if (k < 0) throw ArithmeticError("double factorial of negative index");
    mpz_class r = 1;
    for (long j = 1; j <= k; ++j) r *= (2 * j - 1);
    return BigRational(r);
}

}  // namespace kkw
