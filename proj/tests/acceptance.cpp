// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include "kkw/chain_verdicts.hpp"
#include "kkw/clifford.hpp"
#include "kkw/sphere_moments.hpp"
#include "kkw/verify_run.hpp"
#include "kkw/xi_ratfun.hpp"
#include "random_values.hpp"
#include "sphere_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace kkw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> notes;  // printed indented under the line

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 20) notes.push_back("failed: " + what);
        }
    }
};

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

// ---- criterion 1 ----------------------------------------------------------

PoleRational random_pole(std::mt19937_64& rng, long slack) {
    std::uniform_int_distribution<long> d(0, 4);
    long p = d(rng);
    long q = d(rng);
    while (p + q < slack + 1) ++p;
    GaussPoly num(static_cast<size_t>(p + q - slack));
    for (auto& c : num) c = testing::random_gaussian(rng);
    return {num, p, q};
}

using MV = Multivector<GaussianRational>;

MV random_mv(std::mt19937_64& rng, int n, int terms) {
    std::uniform_int_distribution<BladeMask> blade(0, (BladeMask{1} << n) - 1);
    MV m(n);
    for (int t = 0; t < terms; ++t) m.add_term(blade(rng), testing::random_gaussian(rng));
    return m;
}

// Exponent multisets with total <= max_total and at most `slots` parts.
void for_each_partition(int max_total, int slots, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        f(parts);
        if (static_cast<int>(parts.size()) == slots) return;
        for (int a = std::min(left, cap); a >= 1; --a) {
            parts.push_back(a);
            rec(left - a, a);
            parts.pop_back();
        }
    };
    rec(max_total, max_total);
}

Outcome kernel_suites() {
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    int checks = 0;
    for (int t = 0; t < 300; ++t) {
        const GaussianRational a = testing::random_gaussian(rng);
        const GaussianRational b = testing::random_gaussian(rng);
        const GaussianRational c = testing::random_nonzero_gaussian(rng);
        o.require((a + b) + c == a + (b + c) && a + b == b + a, "additive axioms");
        o.require((a * b) * c == a * (b * c) && a * b == b * a, "multiplicative axioms");
        o.require(a * (b + c) == a * b + a * c, "distributivity");
        o.require(c * c.inverse() == GaussianRational(1) && (a / c) * c == a, "inverses");
        o.require(a - a == GaussianRational(0) && a * GaussianRational(1) == a, "identities");
        checks += 5;
    }
    for (int t = 0; t < 200; ++t) {
        const PoleRational f = random_pole(rng, 2);
        const PoleRational g = random_pole(rng, 2);
        const GaussianRational c = testing::random_gaussian(rng);
        o.require(pi_plus(f + g * c) == pi_plus(f) + pi_plus(g) * c, "pi+ linearity");
        o.require(pi_plus(pi_plus(f)) == pi_plus(f), "pi+ idempotence");
        o.require(integrate_real_line(f) == GaussianRational(BigRational(0), BigRational(2)) * residue_at_i(f),
                  "integral = 2 i residue");
        checks += 3;
    }
    for (int n = 4; n <= 14; n += 2) {
        const int d = n - 1;
        for_each_partition(8, d, [&](const std::vector<int>& parts) {
            std::vector<int> alpha(static_cast<size_t>(d), 0);
            std::copy(parts.begin(), parts.end(), alpha.begin());
            std::shuffle(alpha.begin(), alpha.end(), rng);
            o.require(moment(alpha, n) == testing::gaussian_oracle(alpha), "sphere moment n=" + std::to_string(n));
            ++checks;
        });
    }
    for (int n = 2; n <= 12; n += 2) {
        const MV one = MV::scalar(n, GaussianRational(1));
        o.require(trace(one) == GaussianRational(spinor_dimension(n)), "tr[id] = 2^{n/2}");
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const MV ei = MV::generator(n, i, GaussianRational(1));
                const MV ej = MV::generator(n, j, GaussianRational(1));
                o.require(ei * ej + ej * ei == (i == j ? MV::scalar(n, GaussianRational(-2)) : MV(n)),
                          "anticommutation");
            }
        }
        for (BladeMask s = 1; s < (BladeMask{1} << n); ++s) {
            o.require(trace(MV::blade(n, s, GaussianRational(1))).is_zero(), "trace of a monomial");
        }
        for (int t = 0; t < 10; ++t) {
            const MV a = random_mv(rng, n, 6);
            const MV b = random_mv(rng, n, 6);
            const MV c = random_mv(rng, n, 6);
            o.require((a * b) * c == a * (b * c), "Clifford associativity");
            o.require(trace(a * b) == trace(b * a), "trace cyclicity");
        }
        checks += n * n + static_cast<int>(BladeMask{1} << n) + 20;
    }
    const double secs = seconds_since(t0);
    o.require(secs < 30.0, "runtime under 30 s");
    o.summary = std::to_string(checks) + " exact checks in " + fmt_seconds(secs);
    return o;
}

// ---- criterion 2 ----------------------------------------------------------

Outcome constants() {
    Outcome o;
    const auto t0 = Clock::now();
    int count = 0;
    for (int n = 6; n <= 16; n += 2) {
        for (const auto& c : constant_checks(n)) {
            o.require(c.pass, "n=" + std::to_string(n) + " " + c.name + " " + c.detail);
            ++count;
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 10.0, "runtime under 10 s");
    o.summary = std::to_string(constant_names().size()) + " constants x 6 dimensions vs quadrature plus identities (" +
                std::to_string(count) + " checks) in " + fmt_seconds(secs);
    return o;
}

// ---- criteria 3 and 4 -----------------------------------------------------

std::map<int, std::vector<JetVerification>> g_runs;

Outcome pipeline_vs_case_forms() {
    Outcome o;
    std::ostringstream times;
    int links = 0;
    int expansions = 0;
    for (int n : {6, 8, 10}) {
        const auto t0 = Clock::now();
        for (auto profile : {JetProfile::diagonal, JetProfile::conjugated}) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const JJet jet = random_jjet(n, seed, profile);
                const std::string label = profile_name(profile) + " seed " + std::to_string(seed);
                JetVerification v = verify_jet(jet, label, 1);
                for (const auto& l : v.case_links) {
                    o.require(l.verdict == Verdict::match, "n=" + std::to_string(n) + " " + label + " " + l.lhs_name +
                                                                " " + l.lhs.to_string() + " vs " + l.rhs.to_string());
                    ++links;
                }
                for (const auto& c : expansion_checks(jet)) {
                    o.require(c.pass, "n=" + std::to_string(n) + " " + label + " " + c.name);
                    ++expansions;
                }
                g_runs[n].push_back(std::move(v));
            }
        }
        const double secs = seconds_since(t0);
        o.require(secs < 60.0, "n=" + std::to_string(n) + " runtime under 60 s");
        times << (n == 6 ? "" : ", ") << "n=" << n << " " << fmt_seconds(secs);
    }
    o.summary = std::to_string(links) + " case equalities and " + std::to_string(expansions) +
                " intermediate-expression equalities on 10 jets per n (" + times.str() + ")";
    return o;
}

bool same_localization(const Localization& a, const Localization& b) {
    if (a.differing.size() != b.differing.size() || a.terms.size() != b.terms.size()) return false;
    for (size_t k = 0; k < a.differing.size(); ++k) {
        if (a.differing[k].lhs != b.differing[k].lhs || a.differing[k].rhs != b.differing[k].rhs) return false;
    }
    for (size_t k = 0; k < a.terms.size(); ++k) {
        if (a.terms[k].label != b.terms[k].label || a.terms[k].coefficient != b.terms[k].coefficient) return false;
    }
    return true;
}

Outcome chain_verdicts() {
    Outcome o;
    int matched = 0;
    int localized = 0;
    for (const auto& [n, runs] : g_runs) {
        std::optional<size_t> first;
        for (const auto& v : runs) {
            for (size_t k = 0; k < v.chain_links.size(); ++k) {
                const auto& l = v.chain_links[k];
                if (l.verdict == Verdict::match) {
                    ++matched;
                    continue;
                }
                // A mismatch counts only when it is the recorded first
                // failure or comes after it, and the first one is localized.
                const bool ok = v.first_chain_failure && *v.first_chain_failure <= k && v.localization &&
                                v.localization->model_exact && !v.localization->differing.empty() &&
                                !v.localization->terms.empty();
                o.require(ok, "n=" + std::to_string(n) + " " + v.label + " unlocalized mismatch " + l.lhs_name + " -> " +
                                  l.rhs_name);
                ++localized;
            }
            if (v.first_chain_failure) {
                o.require(same_localization(*v.localization, localize_link(n, *v.first_chain_failure)),
                          "n=" + std::to_string(n) + " localization reproducible");
                if (!first) first = v.first_chain_failure;
                o.require(*first == *v.first_chain_failure, "n=" + std::to_string(n) + " same first failure for all jets");
            }
        }
        if (first) {
            const auto loc = localize_link(n, *first);
            std::ostringstream note;
            note << "n=" << n << ": first failing link " << loc.lhs_name << " -> " << loc.rhs_name << ";";
            for (const auto& d : loc.differing) {
                note << " " << d.direction << " " << d.lhs.to_string() << " vs " << d.rhs.to_string() << ";";
            }
            const auto& l = runs.front().chain_links[*first];
            note << " e.g. " << runs.front().label << ": " << l.lhs.to_string() << " vs " << l.rhs.to_string();
            o.notes.push_back(note.str());
        } else {
            o.notes.push_back("n=" + std::to_string(n) + ": all links match");
        }
    }
    o.summary = std::to_string(matched) + " links match, " + std::to_string(localized) +
                " mismatching links localized and reproducible";
    return o;
}

// ---- criterion 5 ----------------------------------------------------------

Outcome vanishing() {
    Outcome o;
    for (int n : {6, 8, 10}) {
        for (const auto& c : vanishing_checks(n)) o.require(c.pass, "n=" + std::to_string(n) + " " + c.name + " " + c.detail);
    }
    for (int n = 6; n <= 16; n += 2) {
        const JJet trivial = trivial_jjet(n, std::vector<int>(static_cast<size_t>(n), 1));
        o.require(phi_d_form(trivial).q.is_zero() && phi_final_form(trivial).q.is_zero() &&
                      boundary_integrand(trivial).q.is_zero(),
                  "trivial forms n=" + std::to_string(n));
        for (const BigRational& hp : {BigRational(1), BigRational(-5, 3)}) {
            o.require(boundary_bracket(identity_jjet(n, hp)).total().is_zero(), "J = id bracket n=" + std::to_string(n));
        }
    }
    const auto b6 = boundary_bracket(identity_jjet(6, BigRational(1)));
    const auto b8 = boundary_bracket(identity_jjet(8, BigRational(1)));
    o.require(b6.p1 == BigRational(2, 5) && b6.p2.is_zero() && b6.p3 == BigRational(2, 5), "n=6 bracket components");
    o.require(b8.p1 == BigRational(9, 7) && b8.p2 == BigRational(1, 14) && b8.p3 == BigRational(19, 14),
              "n=8 bracket components");
    o.summary = "trivial jets zero in all cases and forms; J = id bracket zero for n = 6..16; n=6 components " +
                b6.p1.to_string() + " pi + " + b6.p2.to_string() + " pi - " + b6.p3.to_string() + " pi, n=8 " +
                b8.p1.to_string() + " pi + " + b8.p2.to_string() + " pi - " + b8.p3.to_string() + " pi";
    return o;
}

// ---- criterion 6 ----------------------------------------------------------

Outcome geometry() {
    Outcome o;
    int jets = 0;
    for (int n = 6; n <= 12; n += 2) {
        for (auto profile : {JetProfile::diagonal, JetProfile::conjugated}) {
            for (std::uint64_t seed = 1; seed <= 8; ++seed) {
                const JJet jet = random_jjet(n, seed, profile);
                ++jets;
                const std::string tag = "n=" + std::to_string(n) + " " + profile_name(profile) + " seed " +
                                        std::to_string(seed);
                o.require(jet_violation(jet).empty(), tag + " structure constraints");
                const int last = n - 1;
                BigRational vanishing_sum(0);
                BigRational lhs(0);
                BigRational rhs(0);
                for (int i = 0; i < last; ++i) {
                    vanishing_sum += g_J_nablaJ(jet, i, last, i);
                    lhs += g_J_nablaJ(jet, last, i, i);
                    rhs += g_J_nablaJ(jet, i, i, last);
                }
                o.require(vanishing_sum.is_zero(), tag + " nabla J vanishing sum");
                o.require(lhs == -rhs, tag + " nabla J sign identity");
            }
        }
        for (const BigRational& hp : {BigRational(1), BigRational(-2, 7)}) {
            o.require(extrinsic_curvature(connection_jet(hp, n)) == -BigRational(n - 1) * hp / BigRational(2),
                      "K = -(n-1) h'/2 at n=" + std::to_string(n));
        }
    }
    o.summary = std::to_string(jets) + " jets satisfy the structure and nabla J identities; K = -(n-1) h'/2 for n = 6..12";
    return o;
}

// ---- criterion 7 ----------------------------------------------------------

Outcome interior() {
    Outcome o;
    for (const auto& c : interior_checks()) o.require(c.pass, c.name + " " + c.detail);
    InteriorInvariants rjj;
    rjj.rjj = BigRational(1);
    o.summary = "all-zero -> 0, RJJ = 5s/3 -> 0, RJJ-only n=6 -> " + interior_integrand(rjj, 6).to_string() + " pi^3";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"kernel property suites", kernel_suites},
        {"constant recomputation", constants},
        {"pipeline vs case forms", pipeline_vs_case_forms},
        {"chain verdicts", chain_verdicts},
        {"vanishing checks", vanishing},
        {"geometry identities", geometry},
        {"interior evaluator", interior},
    };
    bool all = true;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL") << ": "
                  << o.summary << "\n";
        for (const auto& note : o.notes) std::cout << "    " << note << "\n";
    }
    return all ? 0 : 1;
}
