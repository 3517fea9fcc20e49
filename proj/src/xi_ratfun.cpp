#include "kkw/xi_ratfun.hpp"

#include <algorithm>
#include <sstream>

namespace kkw {

namespace poly {

void trim(GaussPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

long degree(const GaussPoly& a) { return static_cast<long>(a.size()) - 1; }

GaussPoly add(const GaussPoly& a, const GaussPoly& b) {
    GaussPoly r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    trim(r);
    return r;
}

GaussPoly mul(const GaussPoly& a, const GaussPoly& b) {
    if (a.empty() || b.empty()) return {};
    GaussPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

GaussPoly scale(const GaussPoly& a, const GaussianRational& c) {
    if (c.is_zero()) return {};
    GaussPoly r(a);
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

GaussPoly derivative(const GaussPoly& a) {
    if (a.size() <= 1) return {};
    GaussPoly r(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * GaussianRational(static_cast<long>(k));
    trim(r);
    return r;
}

GaussianRational eval(const GaussPoly& a, const GaussianRational& x) {
    GaussianRational acc;
    for (size_t k = a.size(); k-- > 0;) {
        acc *= x;
        acc += a[k];
    }
    return acc;
}

GaussPoly linear_power(const GaussianRational& root, long e) {
    GaussPoly r{GaussianRational(1)};
    const GaussPoly lin{-root, GaussianRational(1)};
    for (long k = 0; k < e; ++k) r = mul(r, lin);
    return r;
}

GaussPoly shift(const GaussPoly& a, const GaussianRational& root) {
    // Horner in t with x = root + t.
    GaussPoly r;
    const GaussPoly lin{root, GaussianRational(1)};
    for (size_t k = a.size(); k-- > 0;) {
        r = mul(r, lin);
        if (r.empty()) r.resize(1);
        r[0] += a[k];
        trim(r);
    }
    return r;
}

GaussPoly divide_linear(const GaussPoly& a, const GaussianRational& root) {
    if (a.empty()) return {};
    // Synthetic division from the top coefficient down.
    GaussPoly qt(a.size() - 1);
    GaussianRational carry;
    for (size_t k = a.size(); k-- > 1;) {
        carry = a[k] + carry * root;
        qt[k - 1] = carry;
    }
    const GaussianRational rem = a[0] + carry * root;
    if (!rem.is_zero()) throw ArithmeticError("divide_linear: nonzero remainder");
    trim(qt);
    return qt;
}

}  // namespace poly

namespace {

const GaussianRational kI = GaussianRational::i();
const GaussianRational kMinusI = -GaussianRational::i();

}  // namespace

PoleRational::PoleRational(GaussianRational c) {
    if (!c.is_zero()) num_.push_back(std::move(c));
}

PoleRational::PoleRational(GaussPoly num, long p, long q) : num_(std::move(num)), p_(p), q_(q) {
    if (p < 0 || q < 0) throw ArithmeticError("PoleRational: negative pole order");
    canonicalize();
}

PoleRational PoleRational::variable() { return {GaussPoly{GaussianRational(0), GaussianRational(1)}, 0, 0}; }

PoleRational PoleRational::power_over_unit_quadric(long b, long k) {
    GaussPoly num(static_cast<size_t>(b) + 1);
    num[static_cast<size_t>(b)] = GaussianRational(1);
    return {std::move(num), k, k};
}

void PoleRational::canonicalize() {
    poly::trim(num_);
    if (num_.empty()) {
        p_ = q_ = 0;
        return;
    }
    while (p_ > 0 && poly::eval(num_, kI).is_zero()) {
        num_ = poly::divide_linear(num_, kI);
        --p_;
    }
    while (q_ > 0 && poly::eval(num_, kMinusI).is_zero()) {
        num_ = poly::divide_linear(num_, kMinusI);
        --q_;
    }
}

PoleRational& PoleRational::operator+=(const PoleRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long P = std::max(p_, o.p_);
    const long Q = std::max(q_, o.q_);
    auto lift = [&](const PoleRational& f) {
        GaussPoly r = f.num_;
        if (P > f.p_) r = poly::mul(r, poly::linear_power(kI, P - f.p_));
        if (Q > f.q_) r = poly::mul(r, poly::linear_power(kMinusI, Q - f.q_));
        return r;
    };
    num_ = poly::add(lift(*this), lift(o));
    p_ = P;
    q_ = Q;
    canonicalize();
    return *this;
}

PoleRational& PoleRational::operator-=(const PoleRational& o) { return *this += -o; }

PoleRational& PoleRational::operator*=(const PoleRational& o) {
    num_ = poly::mul(num_, o.num_);
    p_ += o.p_;
    q_ += o.q_;
    canonicalize();
    return *this;
}

PoleRational& PoleRational::operator*=(const GaussianRational& c) {
    num_ = poly::scale(num_, c);
    if (num_.empty()) p_ = q_ = 0;
    return *this;
}

PoleRational PoleRational::operator-() const {
    PoleRational r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
}

GaussianRational PoleRational::eval(const GaussianRational& x) const {
    const GaussianRational den = (x - kI).pow(p_) * (x + kI).pow(q_);
    if (den.is_zero()) throw ArithmeticError("PoleRational::eval at a pole");
    return poly::eval(num_, x) / den;
}

std::string PoleRational::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << num_[k] << ")";
        if (k > 0) os << "*x^" << k;
    }
    if (first) os << "0";
    os << ")";
    if (p_ > 0) os << "/(x-i)^" << p_;
    if (q_ > 0) os << "/(x+i)^" << q_;
    return os.str();
}

PoleRational differentiate(const PoleRational& f) {
    if (f.is_zero()) return {};
    const GaussPoly& N = f.numerator();
    const GaussPoly quad{GaussianRational(1), GaussianRational(0), GaussianRational(1)};
    const GaussPoly xm{kMinusI, GaussianRational(1)};  // x - i
    const GaussPoly xp{kI, GaussianRational(1)};       // x + i
    GaussPoly num = poly::mul(poly::derivative(N), quad);
    num = poly::add(num, poly::scale(poly::mul(N, xp), GaussianRational(-f.p())));
    num = poly::add(num, poly::scale(poly::mul(N, xm), GaussianRational(-f.q())));
    return {std::move(num), f.p() + 1, f.q() + 1};
}

GaussPoly taylor_at_i(const PoleRational& f, long count) {
    if (count <= 0 || f.is_zero()) return GaussPoly(static_cast<size_t>(std::max(count, 0L)));
    GaussPoly a = poly::shift(f.numerator(), kI);
    a.resize(static_cast<size_t>(count));
    GaussPoly s(static_cast<size_t>(count));
    const long q = f.q();
    if (q == 0) {
        s[0] = GaussianRational(1);
    } else {
        // (2i + t)^{-q} = (2i)^{-q} sum_j C(q+j-1, j) (-1)^j (2i)^{-j} t^j
        const GaussianRational two_i = kI * GaussianRational(2);
        const GaussianRational inv = two_i.inverse();
        GaussianRational base = two_i.pow(-q);
        for (long j = 0; j < count; ++j) {
            GaussianRational c = base * GaussianRational(binomial(q + j - 1, j));
            if (j % 2 == 1) c = -c;
            s[static_cast<size_t>(j)] = c;
            base *= inv;
        }
    }
    GaussPoly out(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (long j = 0; i + j < count; ++j) {
            out[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
        }
    }
    return out;
}

GaussianRational residue_at_i(const PoleRational& f) {
    if (f.p() == 0) return {};
    return taylor_at_i(f, f.p())[static_cast<size_t>(f.p() - 1)];
}

PoleRational pi_plus(const PoleRational& f) {
    if (f.is_zero()) return {};
    if (f.num_degree() >= f.p() + f.q()) {
        throw ArithmeticError("pi_plus: input does not vanish at infinity: " + f.to_string());
    }
    if (f.p() == 0) return {};
    const GaussPoly c = taylor_at_i(f, f.p());
    GaussPoly num;
    for (long j = 0; j < f.p(); ++j) {
        num = poly::add(num, poly::scale(poly::linear_power(kI, j), c[static_cast<size_t>(j)]));
    }
    return {std::move(num), f.p(), 0};
}

PoleRational pi_minus_remainder(const PoleRational& f) { return f - pi_plus(f); }

GaussianRational integrate_real_line(const PoleRational& f) {
    if (f.is_zero()) return {};
    if (f.num_degree() > f.p() + f.q() - 2) {
        throw ArithmeticError("integrate_real_line: integrand not integrable: " + f.to_string());
    }
    return GaussianRational(BigRational(0), BigRational(2)) * residue_at_i(f);
}

GaussianRational derivative_at(const PoleRational& g, long m) {
    if (g.p() != 0) throw ArithmeticError("derivative_at: function has a pole at +i");
    if (m < 0) throw ArithmeticError("derivative_at: negative order");
    const GaussPoly c = taylor_at_i(g, m + 1);
    return c[static_cast<size_t>(m)] * GaussianRational(factorial(m));
}

}  // namespace kkw
