#include "kkw/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace kkw {

Json to_json(const BigRational& r) { return r.to_string(); }

Json to_json(const GaussianRational& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

Json to_json(const PoleRational& f) {
    Json num = Json::array();
    for (const auto& c : f.numerator()) num.push_back(to_json(c));
    return Json{{"num", num}, {"p", f.p()}, {"q", f.q()}};
}

Json to_json(const RestrictedCoeff& p, int n) {
    Json out = Json::array();
    for (const auto& [k, c] : p.terms()) {
        Json e = Json::array();
        for (int v = 0; v < n - 1; ++v) e.push_back(mono::exponent(k, v));
        out.push_back(Json{{"exponents", e}, {"coeff", to_json(c)}});
    }
    return out;
}

namespace {

Json matrix_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

[[noreturn]] void fail(const std::string& where, const std::string& pointer, const std::string& what) {
    throw InputError(where + ":" + (pointer.empty() ? "/" : pointer) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where, const std::string& pointer) {
    if (!j.is_object()) fail(where, pointer, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, pointer, std::string("missing key \"") + key + "\"");
    return *it;
}

BigRational rational_at(const Json& j, const std::string& where, const std::string& pointer) {
    if (j.is_number_integer()) return BigRational(j.get<long>());
    if (!j.is_string()) fail(where, pointer, "expected a rational as \"p/q\" or an integer");
    try {
        return BigRational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, pointer, e.what());
    }
}

RatMatrix matrix_at(const Json& j, int n, const std::string& where, const std::string& pointer) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) fail(where, pointer, "expected " + std::to_string(n) + " rows");
    RatMatrix m(n);
    for (int r = 0; r < n; ++r) {
        const std::string rp = pointer + "/" + std::to_string(r);
        const Json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            fail(where, rp, "expected " + std::to_string(n) + " entries");
        }
        for (int c = 0; c < n; ++c) m(r, c) = rational_at(row[static_cast<size_t>(c)], where, rp + "/" + std::to_string(c));
    }
    return m;
}

}  // namespace

Json to_json(const JJet& jet) {
    Json da = Json::array();
    for (const auto& d : jet.DA) da.push_back(matrix_json(d));
    return Json{{"n", jet.n}, {"A", matrix_json(jet.A)}, {"DA", da}, {"hprime", to_json(jet.hprime)}};
}

Json to_json(const CaseReport& r) {
    Json inter{{"prefactor", to_json(r.prefactor)},
               {"trace_polynomial", to_json(r.trace_polynomial, r.n)},
               {"sphere_integrated", to_json(r.sphere_integrated)},
               {"line_integral_over_pi", to_json(r.line_integral)}};
    return Json{{"case", case_name(r.id)}, {"q", to_json(r.value.q)}, {"intermediates", inter}};
}

Json to_json(const LinkVerdict& v) {
    return Json{{"lhs", v.lhs_name},
                {"rhs", v.rhs_name},
                {"verdict", verdict_name(v.verdict)},
                {"lhs_q", to_json(v.lhs.q)},
                {"rhs_q", to_json(v.rhs.q)}};
}

Json to_json(const Localization& loc) {
    Json diffs = Json::array();
    for (const auto& d : loc.differing) {
        diffs.push_back(Json{{"direction", d.direction}, {"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}});
    }
    Json terms = Json::array();
    for (const auto& t : loc.terms) {
        terms.push_back(Json{{"side", t.side},
                             {"term", t.label},
                             {"direction", t.direction},
                             {"coefficient", to_json(t.coefficient)}});
    }
    return Json{{"n", loc.n},
                {"link", loc.lhs_name + " -> " + loc.rhs_name},
                {"direction_model_exact", loc.model_exact},
                {"differing_directions", diffs},
                {"contributing_terms", terms}};
}

Json to_json(const JetVerification& v) {
    Json cases = Json::array();
    for (const auto& r : v.pipeline.cases) cases.push_back(to_json(r));
    Json case_links = Json::array();
    for (const auto& l : v.case_links) case_links.push_back(to_json(l));
    Json chain = Json::array();
    for (const auto& l : v.chain_links) chain.push_back(to_json(l));
    Json out{{"n", v.n},
             {"jet", v.label},
             {"cases", cases},
             {"total_q", to_json(v.pipeline.total.q)},
             {"case_links", case_links},
             {"chain_links", chain}};
    if (v.first_chain_failure) {
        out["first_chain_failure"] = *v.first_chain_failure;
        out["localization"] = to_json(*v.localization);
    } else {
        out["first_chain_failure"] = nullptr;
    }
    return out;
}

BigRational rational_from_json(const Json& j, const std::string& where) { return rational_at(j, where, ""); }

JJet jet_from_json(const Json& j, const std::string& where) {
    JJet jet;
    const Json& jn = member(j, "n", where, "");
    if (!jn.is_number_integer()) fail(where, "/n", "expected an integer");
    jet.n = jn.get<int>();
    if (jet.n < 6 || jet.n % 2 != 0 || jet.n > 16) fail(where, "/n", "n must be even with 6 <= n <= 16");
    jet.A = matrix_at(member(j, "A", where, ""), jet.n, where, "/A");
    const Json& da = member(j, "DA", where, "");
    if (!da.is_array() || static_cast<int>(da.size()) != jet.n) {
        fail(where, "/DA", "expected " + std::to_string(jet.n) + " matrices");
    }
    for (int k = 0; k < jet.n; ++k) {
        jet.DA.push_back(matrix_at(da[static_cast<size_t>(k)], jet.n, where, "/DA/" + std::to_string(k)));
    }
    jet.hprime = rational_at(member(j, "hprime", where, ""), where, "/hprime");
    const std::string bad = jet_violation(jet);
    if (!bad.empty()) fail(where, "", "invalid jet: " + bad);
    return jet;
}

InteriorInvariants invariants_from_json(const Json& j, const std::string& where) {
    InteriorInvariants inv;
    auto get = [&](const char* key) { return rational_at(member(j, key, where, ""), where, std::string("/") + key); };
    inv.rjj = get("RJJ");
    inv.g1 = get("G1");
    inv.g2 = get("G2");
    inv.g3 = get("G3");
    inv.g4 = get("G4");
    inv.g5 = get("G5");
    inv.s = get("s");
    return inv;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

JJet read_jet_file(const std::string& path) { return jet_from_json(read_json_file(path), path); }

InteriorInvariants read_invariants_file(const std::string& path) {
    return invariants_from_json(read_json_file(path), path);
}

void write_file_atomically(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error(tmp.string() + ": cannot open for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error(tmp.string() + ": write failed");
    }
    fs::rename(tmp, target);
}

}  // namespace kkw
