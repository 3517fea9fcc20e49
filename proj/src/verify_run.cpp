#include "kkw/verify_run.hpp"

#include "kkw/expanded_symbols.hpp"
#include "kkw/quadrature_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace kkw {

RunMode parse_mode(const std::string& s) {
    if (s == "constants") return RunMode::constants;
    if (s == "pipeline") return RunMode::pipeline;
    if (s == "interior") return RunMode::interior;
    if (s == "all") return RunMode::all;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

namespace {

std::string mode_name(RunMode m) {
    switch (m) {
        case RunMode::constants: return "constants";
        case RunMode::pipeline: return "pipeline";
        case RunMode::interior: return "interior";
        case RunMode::all: return "all";
    }
    return "all";
}

int parse_int(const std::string& t) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != t.size()) throw std::invalid_argument("malformed dimension '" + t + "'");
    return v;
}

void check_dimension(int n) {
    if (n < 6 || n > 16 || n % 2 != 0) {
        throw std::invalid_argument("dimension " + std::to_string(n) + " is not an even value in [6, 16]");
    }
}

}  // namespace

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            const int n = parse_int(item);
            check_dimension(n);
            out.push_back(n);
            continue;
        }
        const int lo = parse_int(item.substr(0, dots));
        const int hi = parse_int(item.substr(dots + 2));
        check_dimension(lo);
        check_dimension(hi);
        if (lo > hi) throw std::invalid_argument("empty dimension range '" + item + "'");
        for (int n = lo; n <= hi; n += 2) out.push_back(n);
    }
    if (out.empty()) throw std::invalid_argument("no dimensions given");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

unsigned resolve_threads(unsigned requested) {
    unsigned t = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
    if (const char* env = std::getenv("KKW_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) t = std::min(t, static_cast<unsigned>(cap));
    }
    return std::max(1U, t);
}

std::vector<NamedCheck> expansion_checks(const JJet& jet) {
    const SymbolBuilder b(jet);
    const int last = jet.n - 1;
    const SymbolExpression s1 = b.sigma_m1();
    const SymbolExpression s3 = b.sigma_mn3();
    std::vector<NamedCheck> out;
    auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok, ""}); };
    for (int i = 0; i < last; ++i) {
        add("pi+ d/dxi_" + std::to_string(i + 1) + " sigma_{-1}",
            expanded::pi_plus_dxi_sigma_m1(jet, i) == pi_plus(s1.d_xi(i).restrict()));
    }
    add("pi+ d/dx_n sigma_{-1}", expanded::pi_plus_dxn_sigma_m1(jet) == pi_plus(s1.d_x(last).restrict()));
    add("d^2/dxi_n^2 sigma_{-n+3}", expanded::dxin2_sigma_mn3(jet) == s3.d_xi(last).d_xi(last).restrict());
    add("pi+ d/dxi_n sigma_{-1}", expanded::pi_plus_dxin_sigma_m1(jet) == d_xin(pi_plus(s1.restrict())));
    add("d/dxi_n d/dx_n sigma_{-n+3}", expanded::dxin_dxn_sigma_mn3(jet) == s3.d_xi(last).d_x(last).restrict());
    add("d/dxi_n sigma_{-n+3}", expanded::dxin_sigma_mn3(jet) == s3.d_xi(last).restrict());
    add("sigma_{-n+2}", expanded::sigma_mn2(jet) == b.sigma_mn2().restrict());

    const auto parts = b.sigma_m2_parts();
    const GaussianRational hp(jet.hprime);
    const auto shown = expanded::sigma_m2_parts(jet, b.sigma0().restrict());
    add("sigma_{-2} part A1", shown.a1 == parts.a1.restrict());
    add("sigma_{-2} part A2", shown.a2 == parts.a2.restrict());
    add("sigma_{-2} part A3", shown.a3 == parts.a3.restrict());
    add("sigma_{-2} = A1 + A2 - h' A3",
        parts.a1.restrict() + parts.a2.restrict() - parts.a3.restrict().scaled(hp) == b.sigma_m2().restrict());
    const auto pp = expanded::pi_plus_sigma_m2_parts(jet);
    add("pi+ A1", pp.a1 == pi_plus(parts.a1.restrict()));
    add("pi+ A2", pp.a2 == pi_plus(parts.a2.restrict()));
    add("-h' pi+ A3", pp.minus_h_a3 == pi_plus(parts.a3.restrict()).scaled(-hp));
    return out;
}

std::vector<NamedCheck> constant_checks(int n, Json* values) {
    std::vector<NamedCheck> out;
    const oracle::Real50 tol("1e-20");
    for (const auto& name : constant_names()) {
        const auto def = constant_definition(name, n);
        const GaussianRational exact = eval_constant(name, n);
        const auto approx = oracle::cauchy_derivative_at_i(def.function(), def.derivative_order);
        const oracle::Real50 err = oracle::relative_error(approx, exact);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1e", static_cast<double>(err));
        const bool ok = err <= tol;
        out.push_back({name + " vs quadrature", ok, std::string("relative error ") + (err == 0 ? "0" : buf)});
        if (values != nullptr) {
            values->push_back(Json{{"name", name},
                                   {"value", to_json(exact)},
                                   {"pole_order", def.pole_order},
                                   {"derivative_order", def.derivative_order},
                                   {"oracle_relative_error", err == 0 ? std::string("0") : std::string(buf)},
                                   {"verdict", ok ? "match" : "mismatch"}});
        }
    }
    auto c = [n](const char* name) { return eval_constant(name, n); };
    out.push_back({"A11 = A3 + A7", c("A11") == c("A3") + c("A7"), ""});
    out.push_back({"A12 = A4 + A9", c("A12") == c("A4") + c("A9"), ""});
    out.push_back({"A13 = A5 + A8", c("A13") == c("A5") + c("A8"), ""});
    out.push_back({"A14 = A6 + A10", c("A14") == c("A6") + c("A10"), ""});
    out.push_back({"D4 = B1", c("D4") == c("B1"), ""});
    return out;
}

std::vector<NamedCheck> vanishing_checks(int n) {
    std::vector<NamedCheck> out;
    std::vector<int> eps(static_cast<size_t>(n), 1);
    for (int k = 0; k < n; k += 2) eps[static_cast<size_t>(k)] = -1;
    const JJet trivial = trivial_jjet(n, eps);
    const auto total = phi_total(trivial);
    for (const auto& r : total.cases) out.push_back({"trivial jet: pipeline " + case_name(r.id), r.value.q.is_zero(), r.value.to_string()});
    for (CaseId id : kAllCases) {
        const auto v = phi_case_form(id, trivial);
        out.push_back({"trivial jet: " + case_name(id) + " form", v.q.is_zero(), v.to_string()});
    }
    const auto d = phi_d_form(trivial);
    const auto f = phi_final_form(trivial);
    const auto t = boundary_integrand(trivial);
    out.push_back({"trivial jet: D-form", d.q.is_zero(), d.to_string()});
    out.push_back({"trivial jet: four-term form", f.q.is_zero(), f.to_string()});
    out.push_back({"trivial jet: boundary integrand", t.q.is_zero(), t.to_string()});

    const JJet id = identity_jjet(n, BigRational(1));
    const auto b = boundary_bracket(id);
    out.push_back({"J = id: bracket", b.total().is_zero(),
                   "K = " + b.k_value.to_string() + ", terms " + b.p1.to_string() + " + " + b.p2.to_string() + " - " +
                       b.p3.to_string()});
    const auto pt = phi_total(id).total;
    out.push_back({"J = id: pipeline total", pt.q.is_zero(), pt.to_string()});
    return out;
}

std::vector<NamedCheck> interior_checks() {
    std::vector<NamedCheck> out;
    const InteriorInvariants zero;
    out.push_back({"all-zero invariants", interior_integrand(zero, 6).is_zero(), ""});
    InteriorInvariants cancel;
    cancel.s = BigRational(3);
    cancel.rjj = BigRational(5);
    out.push_back({"RJJ = 5s/3", interior_integrand(cancel, 6).is_zero(), ""});
    InteriorInvariants rjj;
    rjj.rjj = BigRational(1);
    const BigRational v = interior_integrand(rjj, 6);
    out.push_back({"RJJ = 1 at n = 6 gives 4 pi^3", v == BigRational(4), v.to_string() + " pi^3"});
    return out;
}

std::vector<std::pair<std::string, JJet>> campaign_jets(const RunConfig& cfg, int n) {
    std::vector<std::pair<std::string, JJet>> out;
    for (int k = 0; k < cfg.jets_per_n; ++k) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(k);
        out.emplace_back(profile_name(cfg.profile) + " seed " + std::to_string(seed), random_jjet(n, seed, cfg.profile));
    }
    return out;
}

namespace {

struct Tally {
    int hard = 0;
    Json failures = Json::array();
    Json soft = Json::array();

    Json record(const std::string& scope, const std::vector<NamedCheck>& checks) {
        Json arr = Json::array();
        for (const auto& c : checks) {
            ++hard;
            Json e{{"check", c.name}, {"verdict", c.pass ? "match" : "mismatch"}};
            if (!c.detail.empty()) e["detail"] = c.detail;
            arr.push_back(e);
            if (!c.pass) failures.push_back(scope + ": " + c.name);
        }
        return arr;
    }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

RunResult run(const RunConfig& cfg) {
    Tally tally;
    Json report;
    report["schema"] = kReportSchema;
    Json ns = Json::array();
    for (int n : cfg.n_list) ns.push_back(n);
    report["config"] = Json{{"mode", mode_name(cfg.mode)},
                            {"n", ns},
                            {"jets_per_n", cfg.jets_per_n},
                            {"seed", cfg.seed},
                            {"profile", profile_name(cfg.profile)},
                            {"jet_file", cfg.jet_file ? Json(*cfg.jet_file) : Json(nullptr)}};
    Json timing = Json::object();
    const bool want_constants = cfg.mode == RunMode::constants || cfg.mode == RunMode::all;
    const bool want_pipeline = cfg.mode == RunMode::pipeline || cfg.mode == RunMode::all;
    const bool want_interior = cfg.mode == RunMode::interior || cfg.mode == RunMode::all;

    if (want_constants) {
        const auto t0 = Clock::now();
        Json section = Json::array();
        for (int n : cfg.n_list) {
            Json values = Json::array();
            const auto checks = constant_checks(n, &values);
            std::vector<NamedCheck> identities(checks.end() - 5, checks.end());
            std::vector<NamedCheck> oracle(checks.begin(), checks.end() - 5);
            tally.record("constants n=" + std::to_string(n), oracle);
            section.push_back(Json{{"n", n},
                                   {"constants", values},
                                   {"identities", tally.record("constants n=" + std::to_string(n), identities)}});
        }
        report["constants"] = section;
        timing["constants_ms"] = ms_since(t0);
    }

    if (want_pipeline) {
        const auto t0 = Clock::now();
        struct Task {
            int n;
            std::string label;
            JJet jet;
        };
        std::vector<Task> tasks;
        if (cfg.jet_file) {
            JJet jet = read_jet_file(*cfg.jet_file);
            const int n = jet.n;
            tasks.push_back({n, "file " + *cfg.jet_file, std::move(jet)});
        } else {
            for (int n : cfg.n_list) {
                for (auto& [label, jet] : campaign_jets(cfg, n)) tasks.push_back({n, label, std::move(jet)});
            }
        }
        std::vector<JetVerification> verifications(tasks.size());
        std::vector<std::vector<NamedCheck>> expansions(tasks.size());
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t k = next++; k < tasks.size(); k = next++) {
                verifications[k] = verify_jet(tasks[k].jet, tasks[k].label, 1);
                expansions[k] = expansion_checks(tasks[k].jet);
            }
        };
        const unsigned workers = std::min<unsigned>(resolve_threads(cfg.threads), static_cast<unsigned>(tasks.size()));
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        Json jets = Json::array();
        for (size_t k = 0; k < tasks.size(); ++k) {
            const auto& v = verifications[k];
            const std::string scope = "n=" + std::to_string(v.n) + " " + v.label;
            Json j = to_json(v);
            std::vector<NamedCheck> links;
            for (const auto& l : v.case_links) {
                links.push_back({l.lhs_name + " = " + l.rhs_name, l.verdict == Verdict::match,
                                 l.lhs.to_string() + " vs " + l.rhs.to_string()});
            }
            tally.record(scope, links);
            j["expansion_checks"] = tally.record(scope, expansions[k]);
            if (v.first_chain_failure) {
                const auto& l = v.chain_links[*v.first_chain_failure];
                tally.soft.push_back(scope + ": " + l.lhs_name + " -> " + l.rhs_name + " (" + l.lhs.to_string() +
                                     " vs " + l.rhs.to_string() + ")");
            }
            jets.push_back(j);
        }
        Json vanishing = Json::array();
        std::vector<int> dims = cfg.n_list;
        if (cfg.jet_file) dims = {tasks.front().n};
        for (int n : dims) {
            vanishing.push_back(Json{{"n", n}, {"checks", tally.record("vanishing n=" + std::to_string(n), vanishing_checks(n))}});
        }
        report["pipeline"] = Json{{"jets", jets}, {"vanishing", vanishing}};
        timing["pipeline_ms"] = ms_since(t0);
    }

    if (want_interior) {
        Json section{{"spot_checks", tally.record("interior", interior_checks())}};
        if (cfg.invariants_file) {
            const auto inv = read_invariants_file(*cfg.invariants_file);
            Json values = Json::array();
            for (int n : cfg.n_list) {
                values.push_back(Json{{"n", n}, {"coefficient_of_pi_to_n_over_2", to_json(interior_integrand(inv, n))}});
            }
            section["values"] = values;
        }
        report["interior"] = section;
    }

    const bool pass = tally.failures.empty();
    report["summary"] = Json{{"hard_pass", pass},
                             {"hard_checks", tally.hard},
                             {"hard_failures", tally.failures},
                             {"soft_mismatches", tally.soft}};
    if (cfg.timing) report["timing"] = timing;
    return {report, pass ? 0 : 2};
}

namespace {

void md_checks(std::ostringstream& os, const Json& checks) {
    for (const auto& c : checks) {
        os << "- " << c["check"].get<std::string>() << ": " << c["verdict"].get<std::string>();
        if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
        os << "\n";
    }
}

}  // namespace

std::string render_markdown(const Json& r) {
    std::ostringstream os;
    const auto& s = r["summary"];
    os << "# Verification report\n\n";
    os << "Mode `" << r["config"]["mode"].get<std::string>() << "`, hard checks " << s["hard_checks"].get<int>()
       << ", " << (s["hard_pass"].get<bool>() ? "all match" : "FAILURES") << ".\n\n";
    if (!s["hard_failures"].empty()) {
        os << "## Hard failures\n\n";
        for (const auto& f : s["hard_failures"]) os << "- " << f.get<std::string>() << "\n";
        os << "\n";
    }
    if (!s["soft_mismatches"].empty()) {
        os << "## Chain mismatches\n\n";
        for (const auto& f : s["soft_mismatches"]) os << "- " << f.get<std::string>() << "\n";
        os << "\n";
    }
    if (r.contains("constants")) {
        os << "## Constants\n\n";
        for (const auto& block : r["constants"]) {
            os << "### n = " << block["n"].get<int>() << "\n\n| name | value | oracle rel. error | verdict |\n|---|---|---|---|\n";
            for (const auto& c : block["constants"]) {
                os << "| " << c["name"].get<std::string>() << " | " << c["value"]["re"].get<std::string>() << " + ("
                   << c["value"]["im"].get<std::string>() << ") i | " << c["oracle_relative_error"].get<std::string>()
                   << " | " << c["verdict"].get<std::string>() << " |\n";
            }
            os << "\n";
            md_checks(os, block["identities"]);
            os << "\n";
        }
    }
    if (r.contains("pipeline")) {
        os << "## Pipeline\n\n";
        for (const auto& j : r["pipeline"]["jets"]) {
            os << "### n = " << j["n"].get<int>() << ", " << j["jet"].get<std::string>() << "\n\n";
            os << "| case | pipeline q | form q | verdict |\n|---|---|---|---|\n";
            for (const auto& l : j["case_links"]) {
                os << "| " << l["lhs"].get<std::string>() << " | " << l["lhs_q"].get<std::string>() << " | "
                   << l["rhs_q"].get<std::string>() << " | " << l["verdict"].get<std::string>() << " |\n";
            }
            os << "\nChain:\n\n";
            for (const auto& l : j["chain_links"]) {
                os << "- " << l["lhs"].get<std::string>() << " -> " << l["rhs"].get<std::string>() << ": "
                   << l["verdict"].get<std::string>() << " (" << l["lhs_q"].get<std::string>() << " vs "
                   << l["rhs_q"].get<std::string>() << ")\n";
            }
            if (j.contains("localization")) {
                const auto& loc = j["localization"];
                os << "\nFirst failing link `" << loc["link"].get<std::string>() << "`; differing directions:\n\n";
                for (const auto& d : loc["differing_directions"]) {
                    os << "- " << d["direction"].get<std::string>() << ": " << d["lhs"].get<std::string>() << " vs "
                       << d["rhs"].get<std::string>() << "\n";
                }
                os << "\nContributing terms:\n\n";
                for (const auto& t : loc["contributing_terms"]) {
                    os << "- [" << t["side"].get<std::string>() << "] " << t["term"].get<std::string>() << " along "
                       << t["direction"].get<std::string>() << ": " << t["coefficient"].get<std::string>() << "\n";
                }
            }
            size_t bad = 0;
            for (const auto& c : j["expansion_checks"]) bad += c["verdict"] != "match";
            os << "\nIntermediate expression checks: " << j["expansion_checks"].size() - bad << "/"
               << j["expansion_checks"].size() << " match.\n\n";
        }
        for (const auto& v : r["pipeline"]["vanishing"]) {
            os << "### Vanishing checks, n = " << v["n"].get<int>() << "\n\n";
            md_checks(os, v["checks"]);
            os << "\n";
        }
    }
    if (r.contains("interior")) {
        os << "## Interior density\n\n";
        md_checks(os, r["interior"]["spot_checks"]);
        if (r["interior"].contains("values")) {
            for (const auto& v : r["interior"]["values"]) {
                os << "- n = " << v["n"].get<int>() << ": " << v["coefficient_of_pi_to_n_over_2"].get<std::string>()
                   << " pi^(n/2)\n";
            }
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace kkw
