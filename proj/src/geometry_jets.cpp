#include "kkw/geometry_jets.hpp"

#include <random>

namespace kkw {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = BigRational(1);
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<BigRational>& d) {
    RatMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.size(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(n_);
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : v_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

namespace {

void require_same_size(const RatMatrix& a, const RatMatrix& b) {
    if (a.size() != b.size()) throw ArithmeticError("RatMatrix: size mismatch");
}

}  // namespace

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    require_same_size(a, b);
    RatMatrix r(a.size());
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) r(i, j) = a(i, j) + b(i, j);
    }
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    require_same_size(a, b);
    RatMatrix r(a.size());
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) r(i, j) = a(i, j) - b(i, j);
    }
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    require_same_size(a, b);
    const int n = a.size();
    RatMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return r;
}

RatMatrix operator*(const BigRational& s, const RatMatrix& a) {
    RatMatrix r(a.size());
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) r(i, j) = s * a(i, j);
    }
    return r;
}

std::string jet_violation(const JJet& jet) {
    const int n = jet.n;
    if (jet.A.size() != n) return "A has size " + std::to_string(jet.A.size()) + ", expected " + std::to_string(n);
    if (static_cast<int>(jet.DA.size()) != n) {
        return "DA has " + std::to_string(jet.DA.size()) + " matrices, expected " + std::to_string(n);
    }
    if (!jet.A.is_symmetric()) return "A is not symmetric";
    if (!(jet.A * jet.A == RatMatrix::identity(n))) return "A*A is not the identity";
    for (int j = 0; j < n; ++j) {
        const RatMatrix& d = jet.DA[static_cast<size_t>(j)];
        if (d.size() != n) return "DA[" + std::to_string(j) + "] has the wrong size";
        if (!d.is_symmetric()) return "DA[" + std::to_string(j) + "] is not symmetric";
        if (!(d * jet.A + jet.A * d).is_zero()) {
            return "DA[" + std::to_string(j) + "] does not anticommute with A";
        }
    }
    return {};
}

void validate_jet(const JJet& jet) {
    const std::string v = jet_violation(jet);
    if (!v.empty()) throw ArithmeticError("invalid jet: " + v);
}

ConnectionJet connection_jet(const BigRational& hprime, int n) {
    if (n < 4 || n % 2 != 0) throw ArithmeticError("connection_jet: n must be even and >= 4");
    ConnectionJet c;
    c.n = n;
    c.omega.assign(static_cast<size_t>(n), RatMatrix(n));
    c.christoffel.assign(static_cast<size_t>(n), RatMatrix(n));
    c.gamma_contracted.assign(static_cast<size_t>(n), BigRational(0));
    const int last = n - 1;
    const BigRational half = hprime * BigRational(1, 2);
    for (int i = 0; i < last; ++i) {
        c.omega[static_cast<size_t>(i)](last, i) = half;
        c.omega[static_cast<size_t>(i)](i, last) = -half;
        c.christoffel[static_cast<size_t>(last)](i, i) = half;
        c.christoffel[static_cast<size_t>(i)](last, i) = -half;
        c.christoffel[static_cast<size_t>(i)](i, last) = -half;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) c.gamma_contracted[static_cast<size_t>(k)] += c.christoffel[static_cast<size_t>(k)](i, i);
    }
    return c;
}

BigRational extrinsic_curvature(const ConnectionJet& conn) {
    BigRational k(0);
    const int last = conn.n - 1;
    for (int i = 0; i < last; ++i) k -= conn.christoffel[static_cast<size_t>(last)](i, i);
    return k;
}

RatMatrix nabla_J(const JJet& jet, int alpha) {
    if (alpha < 0 || alpha >= jet.n) throw ArithmeticError("nabla_J: index out of range");
    const ConnectionJet conn = connection_jet(jet.hprime, jet.n);
    const RatMatrix& w = conn.omega[static_cast<size_t>(alpha)];
    return jet.DA[static_cast<size_t>(alpha)] + (w * jet.A - jet.A * w);
}

BigRational g_J_nablaJ(const JJet& jet, int a, int b, int c) {
    const RatMatrix N = nabla_J(jet, b);
    BigRational s(0);
    for (int k = 0; k < jet.n; ++k) s += jet.A(k, a) * N(k, c);
    return s;
}

JetProfile parse_profile(const std::string& name) {
    if (name == "diagonal") return JetProfile::diagonal;
    if (name == "conjugated") return JetProfile::conjugated;
    throw std::invalid_argument("unknown jet profile '" + name + "'");
}

std::string profile_name(JetProfile p) { return p == JetProfile::diagonal ? "diagonal" : "conjugated"; }

namespace {

// std::mt19937_64 output is fixed by the standard; distributions are not,
// so values are drawn with plain modular reduction.
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

BigRational small_rational(std::mt19937_64& rng) { return {draw(rng, -3, 3), draw(rng, 1, 4)}; }

BigRational nonzero_rational(std::mt19937_64& rng) {
    long num = 0;
    while (num == 0) num = draw(rng, -5, 5);
    return {num, draw(rng, 1, 4)};
}

RatMatrix givens(int n, int p, int q, const BigRational& c, const BigRational& s) {
    RatMatrix g = RatMatrix::identity(n);
    g(p, p) = c;
    g(q, q) = c;
    g(p, q) = -s;
    g(q, p) = s;
    return g;
}

}  // namespace

JJet random_jjet(int n, std::uint64_t seed, JetProfile profile) {
    if (n < 6 || n % 2 != 0) throw ArithmeticError("random_jjet: n must be even and >= 6");
    std::mt19937_64 rng(seed);
    std::vector<int> eps(static_cast<size_t>(n));
    for (;;) {
        int plus = 0;
        for (auto& e : eps) {
            e = draw(rng, 0, 1) == 0 ? 1 : -1;
            plus += e > 0;
        }
        if (plus > 0 && plus < n) break;
    }
    JJet jet;
    jet.n = n;
    std::vector<BigRational> d;
    for (int e : eps) d.emplace_back(e);
    jet.A = RatMatrix::diagonal(d);
    for (int j = 0; j < n; ++j) {
        RatMatrix m(n);
        for (int i = 0; i < n; ++i) {
            for (int k = i + 1; k < n; ++k) {
                if (eps[static_cast<size_t>(i)] == eps[static_cast<size_t>(k)]) continue;
                const BigRational v = small_rational(rng);
                m(i, k) = v;
                m(k, i) = v;
            }
        }
        jet.DA.push_back(std::move(m));
    }
    jet.hprime = nonzero_rational(rng);
    if (profile == JetProfile::conjugated) {
        static const long triples[3][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
        RatMatrix Q = RatMatrix::identity(n);
        for (int r = 0; r < n; ++r) {
            const int p = static_cast<int>(draw(rng, 0, n - 1));
            int q = static_cast<int>(draw(rng, 0, n - 2));
            if (q >= p) ++q;
            const auto& t = triples[draw(rng, 0, 2)];
            const BigRational c(t[0], t[2]);
            BigRational s(t[1], t[2]);
            if (draw(rng, 0, 1) == 1) s = -s;
            Q = givens(n, p, q, c, s) * Q;
        }
        const RatMatrix Qt = Q.transpose();
        jet.A = Q * jet.A * Qt;
        for (auto& m : jet.DA) m = Q * m * Qt;
    }
    validate_jet(jet);
    return jet;
}

JJet identity_jjet(int n, const BigRational& hprime) {
    JJet jet;
    jet.n = n;
    jet.A = RatMatrix::identity(n);
    jet.DA.assign(static_cast<size_t>(n), RatMatrix(n));
    jet.hprime = hprime;
    return jet;
}

JJet trivial_jjet(int n, const std::vector<int>& eps) {
    if (static_cast<int>(eps.size()) != n) throw ArithmeticError("trivial_jjet: eps has wrong length");
    JJet jet;
    jet.n = n;
    std::vector<BigRational> d;
    for (int e : eps) {
        if (e != 1 && e != -1) throw ArithmeticError("trivial_jjet: eps entries must be +-1");
        d.emplace_back(e);
    }
    jet.A = RatMatrix::diagonal(d);
    jet.DA.assign(static_cast<size_t>(n), RatMatrix(n));
    jet.hprime = BigRational(0);
    return jet;
}

JetContractions contractions(const JJet& jet) {
    const int n = jet.n;
    const int last = n - 1;
    const RatMatrix& A = jet.A;
    const auto& DA = jet.DA;
    JetContractions c;
    for (int i = 0; i < n; ++i) {
        for (int h = 0; h < n; ++h) {
            const BigRational sq = A(i, h) * A(i, h);
            if (i < last && h < last) c.q_tan += sq;
            if (i < last) c.q_all += sq;
            if (i == last) c.q_nn += sq;
        }
    }
    for (int i = 0; i < last; ++i) {
        c.q_nt += A(i, last) * A(i, last);
        c.q_nt_row += A(last, i) * A(last, i);
        c.t_diag += A(i, i) * A(last, last);
    }
    for (int h = 0; h < n; ++h) {
        for (int j = 0; j < n; ++j) {
            const BigRational v = A(j, h) * DA[static_cast<size_t>(j)](last, h);
            c.s_full += v;
            if (j < last) {
                c.s_tan += v;
                c.s_ntan += A(last, h) * DA[static_cast<size_t>(j)](j, h);
            }
        }
    }
    std::vector<RatMatrix> N;
    for (int a = 0; a < n; ++a) N.push_back(nabla_J(jet, a));
    auto g = [&](int a, int b, int cc) {
        BigRational s(0);
        for (int k = 0; k < n; ++k) s += A(k, a) * N[static_cast<size_t>(b)](k, cc);
        return s;
    };
    for (int a = 0; a < n; ++a) {
        c.g_alpha_n += g(a, a, last);
        c.jen_sq_sum += A(last, a) * A(last, a);
        c.q_col_n += A(a, last) * A(a, last);
    }
    for (int i = 0; i < last; ++i) {
        c.g_n_i += g(i, last, i);
        c.g_i_i += g(last, i, i);
        c.g_i_n += g(i, i, last);
    }
    c.jnn_sq = A(last, last) * A(last, last);
    return c;
}

JetContractions reduced_contractions(int n, const BigRational& hprime, const BigRational& a_nn,
                                     const BigRational& trace_A, const BigRational& s_tan) {
    const BigRational N(n);
    const BigRational half = hprime * BigRational(1, 2);
    JetContractions c;
    c.q_nn = BigRational(1);
    c.q_col_n = BigRational(1);
    c.jen_sq_sum = BigRational(1);
    c.q_all = N - 1;
    c.jnn_sq = a_nn * a_nn;
    c.q_nt = 1 - c.jnn_sq;
    c.q_nt_row = c.q_nt;
    c.q_tan = N - 2 + c.jnn_sq;
    c.t_diag = (trace_A - a_nn) * a_nn;
    c.s_tan = s_tan;
    c.s_ntan = -s_tan;
    c.s_full = s_tan;
    // (A N_i)(i, n) summed over i < n, with N_i = DA_i + omega_i A - A omega_i.
    c.g_i_n = s_tan + half * c.q_nt - half * c.t_diag + (N - 1) * half;
    c.g_alpha_n = c.g_i_n;
    c.g_i_i = -c.g_i_n;
    c.g_n_i = BigRational(0);
    return c;
}

BigRational trace(const RatMatrix& a) {
    BigRational t(0);
    for (int i = 0; i < a.size(); ++i) t += a(i, i);
    return t;
}

}  // namespace kkw
