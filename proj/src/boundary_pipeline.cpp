#include "kkw/boundary_pipeline.hpp"

#include "kkw/sphere_moments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace kkw {

PiVolScalar real_pi_vol(const GaussianRational& z, const std::string& what) {
    if (!z.is_real()) throw ArithmeticError(what + ": expected a real multiple of pi*Vol, got " + z.to_string());
    return {z.re()};
}

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::aI: return "aI";
        case CaseId::aII: return "aII";
        case CaseId::aIII: return "aIII";
        case CaseId::b: return "b";
        case CaseId::c: return "c";
    }
    return "?";
}

CaseId parse_case(const std::string& name) {
    for (CaseId id : kAllCases) {
        if (case_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown case '" + name + "'");
}

GaussianRational case_prefactor(CaseId id) {
    // (|alpha|, j, k) per case
    int alpha = 0;
    int j = 0;
    int k = 0;
    switch (id) {
        case CaseId::aI: alpha = 1; break;
        case CaseId::aII: j = 1; break;
        case CaseId::aIII: k = 1; break;
        case CaseId::b:
        case CaseId::c: break;
    }
    const GaussianRational minus_i = -GaussianRational::i();
    return minus_i.pow(alpha + j + k + 1) / GaussianRational(factorial(alpha) * factorial(j + k + 1));
}

void require_supported_dimension(int n) {
    if (n % 2 != 0 || n < 6) {
        throw ArithmeticError("boundary computation needs even n >= 6, got " + std::to_string(n));
    }
}

CaseFactors case_factors(CaseId id, const SymbolBuilder& b) {
    const int last = b.n() - 1;
    CaseFactors f;
    auto push = [&f](RestrictedMV l, RestrictedMV r) {
        f.left.push_back(std::move(l));
        f.right.push_back(std::move(r));
    };
    switch (id) {
        case CaseId::aI: {
            const SymbolExpression s1 = b.sigma_m1();
            const SymbolExpression s3 = b.sigma_mn3().d_xi(last);
            for (int i = 0; i < last; ++i) push(pi_plus(s1.d_xi(i).restrict()), s3.d_x(i).restrict());
            break;
        }
        case CaseId::aII: {
            const SymbolExpression s3 = b.sigma_mn3();
            push(pi_plus(b.sigma_m1().d_x(last).restrict()), s3.d_xi(last).d_xi(last).restrict());
            break;
        }
        case CaseId::aIII: {
            const SymbolExpression s3 = b.sigma_mn3();
            push(d_xin(pi_plus(b.sigma_m1().restrict())), s3.d_xi(last).d_x(last).restrict());
            break;
        }
        case CaseId::b:
            push(pi_plus(b.sigma_m1().restrict()), b.sigma_mn2().d_xi(last).restrict());
            break;
        case CaseId::c: {
            const auto parts = b.sigma_m2_parts();
            const GaussianRational hp(b.jet().hprime);
            RestrictedMV left = pi_plus(parts.a1.restrict()) + pi_plus(parts.a2.restrict());
            left -= pi_plus(parts.a3.restrict()).scaled(hp);
            push(std::move(left), b.sigma_mn3().d_xi(last).restrict());
            break;
        }
    }
    return f;
}

namespace {

CaseReport run_case(CaseId id, const SymbolBuilder& builder) {
    CaseReport rep;
    rep.id = id;
    rep.n = builder.n();
    rep.prefactor = case_prefactor(id);
    try {
        const CaseFactors f = case_factors(id, builder);
        for (size_t t = 0; t < f.left.size(); ++t) rep.trace_polynomial += trace_product(f.left[t], f.right[t]);
        rep.sphere_integrated = integrate_polynomial(rep.trace_polynomial, rep.n);
        rep.line_integral = integrate_real_line(rep.sphere_integrated);
    } catch (const ArithmeticError& e) {
        throw ArithmeticError("case " + case_name(id) + ": " + e.what());
    }
    rep.value = real_pi_vol(rep.prefactor * rep.line_integral, "case " + case_name(id));
    return rep;
}

}  // namespace

CaseReport phi_case(CaseId id, const JJet& jet) {
    require_supported_dimension(jet.n);
    const SymbolBuilder builder(jet);
    return run_case(id, builder);
}

TotalReport phi_total(const JJet& jet, unsigned threads) {
    require_supported_dimension(jet.n);
    const SymbolBuilder builder(jet);
    TotalReport out;
    out.cases.resize(kAllCases.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, kAllCases.size()));
    if (workers == 1) {
        for (size_t t = 0; t < kAllCases.size(); ++t) out.cases[t] = run_case(kAllCases[t], builder);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errors(kAllCases.size());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t t = next++; t < kAllCases.size(); t = next++) {
                    try {
                        out.cases[t] = run_case(kAllCases[t], builder);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    for (const auto& c : out.cases) out.total += c.value;
    return out;
}

}  // namespace kkw
