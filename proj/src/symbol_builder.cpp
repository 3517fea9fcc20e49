#include "kkw/symbol_builder.hpp"

namespace kkw {

// ---------------------------------------------------------------- SymbolCoeff

SymbolCoeff::SymbolCoeff(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(SymKey{}, std::move(c));
}

SymbolCoeff SymbolCoeff::xi(int i, int n) {
    if (i < 0 || i >= n) throw ArithmeticError("SymbolCoeff::xi: index out of range");
    SymbolCoeff s;
    SymKey k;
    if (i < n - 1) {
        k.alpha = mono::variable(i);
    } else {
        k.b = 1;
    }
    s.terms_.emplace(k, GaussianRational(1));
    return s;
}

SymbolCoeff SymbolCoeff::u() {
    SymbolCoeff s;
    s.terms_.emplace(SymKey{0, 1, 0, 0}, GaussianRational(1));
    return s;
}

SymbolCoeff SymbolCoeff::norm_power(int e) {
    SymbolCoeff s;
    if (e <= 0) {
        s.terms_.emplace(SymKey{0, 0, 0, -e}, GaussianRational(1));
        return s;
    }
    for (int j = 0; j <= e; ++j) {
        s.add_term(SymKey{0, j, 2 * (e - j), 0}, GaussianRational(binomial(e, j)));
    }
    return s;
}

void SymbolCoeff::add_term(const SymKey& key, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolCoeff& SymbolCoeff::operator+=(const SymbolCoeff& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SymbolCoeff& SymbolCoeff::operator-=(const SymbolCoeff& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SymbolCoeff SymbolCoeff::operator-() const {
    SymbolCoeff r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

SymbolCoeff operator*(const SymbolCoeff& x, const SymbolCoeff& y) {
    SymbolCoeff r;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            r.add_term(SymKey{mono::multiply(kx.alpha, ky.alpha), kx.a + ky.a, kx.b + ky.b, kx.k + ky.k}, cx * cy);
        }
    }
    return r;
}

SymbolCoeff operator*(const SymbolCoeff& x, const GaussianRational& c) {
    SymbolCoeff r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : x.terms_) r.terms_.emplace(k, v * c);
    return r;
}

SymbolCoeff SymbolCoeff::d_xi(int i, int n) const {
    if (i < 0 || i >= n) throw ArithmeticError("SymbolCoeff::d_xi: index out of range");
    SymbolCoeff r;
    if (i == n - 1) {
        for (const auto& [key, c] : terms_) {
            if (key.b > 0) r.add_term(SymKey{key.alpha, key.a, key.b - 1, key.k}, c * GaussianRational(key.b));
            if (key.k > 0) {
                r.add_term(SymKey{key.alpha, key.a, key.b + 1, key.k + 1}, c * GaussianRational(-2 * key.k));
            }
        }
        return r;
    }
    const MonoKey var = mono::variable(i);
    for (const auto& [key, c] : terms_) {
        const int e = mono::exponent(key.alpha, i);
        if (e > 0) r.add_term(SymKey{key.alpha - var, key.a, key.b, key.k}, c * GaussianRational(e));
        const MonoKey up = key.a > 0 || key.k > 0 ? mono::multiply(key.alpha, var) : 0;
        if (key.a > 0) r.add_term(SymKey{up, key.a - 1, key.b, key.k}, c * GaussianRational(2 * key.a));
        if (key.k > 0) r.add_term(SymKey{up, key.a, key.b, key.k + 1}, c * GaussianRational(-2 * key.k));
    }
    return r;
}

XiPoly<PoleRational> SymbolCoeff::restrict() const {
    // Collect xi_n-polynomial numerators per (alpha, k) before canonicalizing.
    std::map<std::pair<MonoKey, int>, GaussPoly> grouped;
    for (const auto& [key, c] : terms_) {
        GaussPoly& num = grouped[{key.alpha, key.k}];
        if (static_cast<int>(num.size()) <= key.b) num.resize(static_cast<size_t>(key.b) + 1);
        num[static_cast<size_t>(key.b)] += c;
    }
    XiPoly<PoleRational> out;
    for (auto& [ak, num] : grouped) {
        out.add_term(ak.first, PoleRational(std::move(num), ak.second, ak.second));
    }
    return out;
}

// ----------------------------------------------------------- SymbolExpression

SymbolExpression::SymbolExpression(SymbolMV value, std::vector<SymbolMV> dx) : value_(std::move(value)) {
    if (static_cast<int>(dx.size()) != value_.dimension()) {
        throw ArithmeticError("SymbolExpression: jet must have one entry per coordinate");
    }
    for (const auto& d : dx) {
        if (d.dimension() != value_.dimension()) throw ArithmeticError("SymbolExpression: jet dimension mismatch");
    }
    dx_ = std::move(dx);
}

SymbolExpression SymbolExpression::x_constant(SymbolMV value) {
    const int n = value.dimension();
    return {std::move(value), std::vector<SymbolMV>(static_cast<size_t>(n), SymbolMV(n))};
}

SymbolExpression SymbolExpression::scalar(int n, const SymbolCoeff& c) { return x_constant(SymbolMV::scalar(n, c)); }

SymbolExpression& SymbolExpression::operator+=(const SymbolExpression& o) {
    value_ += o.value_;
    if (dx_ && o.dx_) {
        for (size_t j = 0; j < dx_->size(); ++j) (*dx_)[j] += (*o.dx_)[j];
    } else {
        dx_.reset();
    }
    return *this;
}

SymbolExpression& SymbolExpression::operator-=(const SymbolExpression& o) { return *this += -o; }

SymbolExpression SymbolExpression::operator-() const {
    SymbolExpression r;
    r.value_ = -value_;
    if (dx_) {
        std::vector<SymbolMV> d;
        for (const auto& m : *dx_) d.push_back(-m);
        r.dx_ = std::move(d);
    }
    return r;
}

SymbolExpression operator*(const SymbolExpression& x, const SymbolExpression& y) {
    SymbolExpression r;
    r.value_ = x.value_ * y.value_;
    if (x.dx_ && y.dx_) {
        std::vector<SymbolMV> d;
        for (size_t j = 0; j < x.dx_->size(); ++j) d.push_back((*x.dx_)[j] * y.value_ + x.value_ * (*y.dx_)[j]);
        r.dx_ = std::move(d);
    }
    return r;
}

SymbolExpression SymbolExpression::scaled(const GaussianRational& c) const {
    SymbolExpression r;
    r.value_ = value_.scaled(c);
    if (dx_) {
        std::vector<SymbolMV> d;
        for (const auto& m : *dx_) d.push_back(m.scaled(c));
        r.dx_ = std::move(d);
    }
    return r;
}

SymbolExpression SymbolExpression::d_xi(int i) const {
    const int n = dimension();
    auto f = [&](const SymbolCoeff& c) { return c.d_xi(i, n); };
    SymbolExpression r;
    r.value_ = value_.map(f);
    if (dx_) {
        std::vector<SymbolMV> d;
        for (const auto& m : *dx_) d.push_back(m.map(f));
        r.dx_ = std::move(d);
    }
    return r;
}

SymbolExpression SymbolExpression::d_x(int j) const {
    if (!dx_) throw ArithmeticError("d_x requested on an expression without an x-jet");
    if (j < 0 || j >= dimension()) throw ArithmeticError("d_x: index out of range");
    return SymbolExpression((*dx_)[static_cast<size_t>(j)]);
}

RestrictedMV SymbolExpression::restrict() const {
    return value_.map([](const SymbolCoeff& c) { return c.restrict(); });
}

RestrictedMV pi_plus(const RestrictedMV& m) {
    return map_pole(m, [](const PoleRational& f) { return kkw::pi_plus(f); });
}

RestrictedMV d_xin(const RestrictedMV& m) {
    return map_pole(m, [](const PoleRational& f) { return differentiate(f); });
}

// -------------------------------------------------------------- SymbolBuilder

SymbolBuilder::SymbolBuilder(JJet jet) : jet_(std::move(jet)), n_(jet_.n) {
    validate_jet(jet_);
    conn_ = connection_jet(jet_.hprime, n_);
    for (int a = 0; a < n_; ++a) nabla_.push_back(nabla_J(jet_, a));
}

namespace {

SymbolCoeff rat(const BigRational& r) { return SymbolCoeff(GaussianRational(r)); }

const GaussianRational kI = GaussianRational::i();

}  // namespace

SymbolExpression SymbolBuilder::c_dx(int h) const {
    const int last = n_ - 1;
    SymbolMV value = SymbolMV::generator(n_, h, SymbolCoeff(GaussianRational(1)));
    std::vector<SymbolMV> dx(static_cast<size_t>(n_), SymbolMV(n_));
    if (h < last) dx[static_cast<size_t>(last)] = value.scaled(GaussianRational(jet_.hprime * BigRational(1, 2)));
    return {std::move(value), std::move(dx)};
}

SymbolExpression SymbolBuilder::c_J_dx(int p) const {
    SymbolMV value(n_);
    std::vector<SymbolMV> dx(static_cast<size_t>(n_), SymbolMV(n_));
    for (int h = 0; h < n_; ++h) {
        const SymbolExpression e = c_dx(h);
        const SymbolMV& eh = e.value();
        value += eh.times(rat(jet_.A(p, h)));
        for (int j = 0; j < n_; ++j) {
            dx[static_cast<size_t>(j)] += eh.times(rat(jet_.DA[static_cast<size_t>(j)](p, h)));
            dx[static_cast<size_t>(j)] += e.d_x(j).value().times(rat(jet_.A(p, h)));
        }
    }
    return {std::move(value), std::move(dx)};
}

SymbolExpression SymbolBuilder::c_J_xi() const {
    SymbolExpression acc = SymbolExpression::x_constant(SymbolMV(n_));
    for (int p = 0; p < n_; ++p) acc += SymbolExpression::scalar(n_, SymbolCoeff::xi(p, n_)) * c_J_dx(p);
    return acc;
}

SymbolExpression SymbolBuilder::norm_power(int e) const {
    const int last = n_ - 1;
    SymbolMV value = SymbolMV::scalar(n_, SymbolCoeff::norm_power(e));
    std::vector<SymbolMV> dx(static_cast<size_t>(n_), SymbolMV(n_));
    // d/dx_n |xi|^2 = h'(0) u at x0; tangential derivatives vanish.
    dx[static_cast<size_t>(last)] = SymbolMV::scalar(
        n_, SymbolCoeff::norm_power(e - 1) * SymbolCoeff::u() * GaussianRational(jet_.hprime * BigRational(e)));
    return {std::move(value), std::move(dx)};
}

SymbolMV SymbolBuilder::spin_connection(int i) const {
    SymbolMV s(n_);
    const RatMatrix& w = conn_.omega[static_cast<size_t>(i)];
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (w(a, b).is_zero()) continue;
            const SymbolMV ea = SymbolMV::generator(n_, a, SymbolCoeff(GaussianRational(1)));
            const SymbolMV eb = SymbolMV::generator(n_, b, SymbolCoeff(GaussianRational(1)));
            s += (ea * eb).times(rat(w(a, b) * BigRational(-1, 4)));
        }
    }
    return s;
}

SymbolMV SymbolBuilder::c_nablaJ_xi(int alpha) const {
    const RatMatrix& N = nabla_[static_cast<size_t>(alpha)];
    SymbolMV m(n_);
    for (int g = 0; g < n_; ++g) {
        SymbolCoeff coef;
        for (int b = 0; b < n_; ++b) {
            if (!N(g, b).is_zero()) coef += SymbolCoeff::xi(b, n_) * GaussianRational(N(g, b));
        }
        m.add_term(BladeMask{1} << g, coef);
    }
    return m;
}

SymbolExpression SymbolBuilder::sigma1() const { return c_J_xi().scaled(kI); }

SymbolExpression SymbolBuilder::sigma0() const {
    SymbolMV s(n_);
    for (int i = 0; i < n_; ++i) s += c_J_dx(i).value() * spin_connection(i);
    return SymbolExpression(std::move(s));
}

SymbolExpression SymbolBuilder::sigma_m1() const { return (c_J_xi() * norm_power(-1)).scaled(kI); }

SymbolExpression SymbolBuilder::sigma_m2() const {
    const SymbolExpression c = c_J_xi();
    const SymbolExpression U = norm_power(1);
    SymbolExpression bracket{SymbolMV(n_)};
    for (int j = 0; j < n_; ++j) {
        const SymbolExpression inner = c.d_x(j) * U - c * U.d_x(j);
        bracket += SymbolExpression(c_J_dx(j).value()) * inner;
    }
    return c * sigma0() * c * norm_power(-2) + c * norm_power(-3) * bracket;
}

SymbolBuilder::SigmaM2Parts SymbolBuilder::sigma_m2_parts() const {
    const SymbolExpression c = c_J_xi();
    SymbolExpression bracket{SymbolMV(n_)};
    for (int j = 0; j < n_; ++j) bracket += SymbolExpression(c_J_dx(j).value()) * c.d_x(j);
    SigmaM2Parts p;
    p.a1 = c * sigma0() * c * norm_power(-2);
    p.a2 = c * norm_power(-2) * bracket;
    p.a3 = c * norm_power(-3) * SymbolExpression(c_J_dx(n_ - 1).value()) * c;
    return p;
}

SymbolExpression SymbolBuilder::sigma1_square() const {
    SymbolMV p(n_);
    for (int k = 0; k < n_; ++k) {
        const SymbolCoeff xk = SymbolCoeff::xi(k, n_);
        p += spin_connection(k).times(xk * GaussianRational(-2));
        p += SymbolMV::scalar(n_, xk * GaussianRational(conn_.gamma_contracted[static_cast<size_t>(k)]));
    }
    for (int a = 0; a < n_; ++a) p += c_J_dx(a).value() * c_nablaJ_xi(a);
    return SymbolExpression(p.scaled(kI));
}

SymbolExpression SymbolBuilder::sigma_m3_square_inv() const {
    const SymbolExpression U = norm_power(1);
    SymbolExpression tail{SymbolMV(n_)};
    for (int j = 0; j < n_; ++j) tail += SymbolExpression::scalar(n_, SymbolCoeff::xi(j, n_)) * U.d_x(j);
    return -(norm_power(-2) * sigma1_square()) - (norm_power(-3) * tail).scaled(kI * GaussianRational(2));
}

SymbolExpression SymbolBuilder::sigma_mn3() const { return (c_J_xi() * norm_power(-(n_ - 2) / 2)).scaled(kI); }

SymbolExpression SymbolBuilder::subleading_power_bracket() const {
    const int half = n_ / 2;
    SymbolExpression acc =
        (norm_power(-half + 2) * sigma_m3_square_inv()).scaled(GaussianRational(BigRational(n_ - 2, 2)));
    const SymbolExpression inv = norm_power(-1);
    for (int k = 0; k <= half - 3; ++k) {
        const SymbolExpression lead = norm_power(-half + k + 2);
        for (int mu = 0; mu < n_; ++mu) {
            acc -= (lead.d_xi(mu) * inv.d_x(mu) * norm_power(-k)).scaled(kI);
        }
    }
    return acc;
}

SymbolExpression SymbolBuilder::sigma_mn2() const {
    const SymbolExpression lead = norm_power(-(n_ - 2) / 2);
    const SymbolExpression s1 = sigma1();
    SymbolExpression acc = lead * sigma0();
    for (int j = 0; j < n_; ++j) acc -= (lead.d_xi(j) * s1.d_x(j)).scaled(kI);
    acc += subleading_power_bracket() * s1;
    return acc;
}

}  // namespace kkw
