#include "kkw/chain_verdicts.hpp"

#include <stdexcept>

namespace kkw {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::skipped: return "skipped";
    }
    return "skipped";
}

LinkVerdict compare(std::string lhs_name, const PiVolScalar& lhs, std::string rhs_name, const PiVolScalar& rhs) {
    return {std::move(lhs_name), std::move(rhs_name), lhs, rhs, lhs == rhs ? Verdict::match : Verdict::mismatch};
}

const std::vector<std::string>& chain_stage_names() {
    static const std::vector<std::string> names = {"sum of case forms", "D-form", "four-term form",
                                                   "boundary integrand"};
    return names;
}

PiVolScalar chain_stage_value(size_t stage, int n, const BigRational& hprime, const JetContractions& c) {
    switch (stage) {
        case 0: {
            PiVolScalar s;
            for (CaseId id : kAllCases) s += phi_case_form(id, n, hprime, c);
            return s;
        }
        case 1: return phi_d_form(n, hprime, c);
        case 2: return phi_final_form(n, hprime, c);
        case 3: return boundary_integrand(n, hprime, c);
        default: throw std::out_of_range("chain stage index");
    }
}

const std::vector<std::string>& direction_names() {
    static const std::vector<std::string> names = {"h'", "h' (a^n_n)^2", "h' a^n_n tr A", "s_tan"};
    return names;
}

std::vector<BigRational> as_vector(const DirectionCoefficients& d) { return {d.h, d.h_ann_sq, d.h_ann_tr, d.s_tan}; }

namespace {

PiVolScalar at(const FormEvaluator& form, int n, long hp, long a, long tr, long s) {
    const BigRational h(hp);
    return form(h, reduced_contractions(n, h, BigRational(a), BigRational(tr), BigRational(s)));
}

}  // namespace

DirectionCoefficients direction_coefficients(const FormEvaluator& form, int n) {
    DirectionCoefficients d;
    const BigRational base = at(form, n, 1, 0, 0, 0).q;
    const BigRational unit_a = at(form, n, 1, 1, 0, 0).q;
    d.h = base;
    d.h_ann_sq = unit_a - base;
    d.h_ann_tr = at(form, n, 1, 1, 1, 0).q - unit_a;
    d.s_tan = at(form, n, 0, 0, 0, 1).q;
    return d;
}

bool direction_model_holds(const FormEvaluator& form, int n, const DirectionCoefficients& d) {
    const long points[3][4] = {{3, 2, -5, 7}, {-2, -3, 4, -1}, {0, 5, 2, 0}};
    for (const auto& p : points) {
        const BigRational hp(p[0]);
        const BigRational a(p[1]);
        const BigRational tr(p[2]);
        const BigRational s(p[3]);
        const BigRational model = hp * (d.h + d.h_ann_sq * a * a + d.h_ann_tr * a * tr) + d.s_tan * s;
        if (form(hp, reduced_contractions(n, hp, a, tr, s)).q != model) return false;
    }
    return true;
}

namespace {

struct LabelledForm {
    std::string label;
    FormEvaluator form;
};

std::vector<LabelledForm> stage_terms(size_t stage, int n) {
    std::vector<LabelledForm> out;
    auto pick = [](auto breakdown_fn, size_t k) {
        return [breakdown_fn, k](const BigRational& hp, const JetContractions& c) { return breakdown_fn(hp, c)[k].value; };
    };
    if (stage == 0) {
        for (CaseId id : kAllCases) {
            auto fn = [id, n](const BigRational& hp, const JetContractions& c) {
                return case_form_breakdown(id, n, hp, c);
            };
            const auto sample = fn(BigRational(0), reduced_contractions(n, BigRational(0), BigRational(0),
                                                                         BigRational(0), BigRational(0)));
            for (size_t k = 0; k < sample.size(); ++k) {
                out.push_back({case_name(id) + ": " + sample[k].label, pick(fn, k)});
            }
        }
    } else if (stage == 1) {
        auto fn = [n](const BigRational& hp, const JetContractions& c) { return d_form_breakdown(n, hp, c); };
        const auto sample =
            fn(BigRational(0), reduced_contractions(n, BigRational(0), BigRational(0), BigRational(0), BigRational(0)));
        for (size_t k = 0; k < sample.size(); ++k) out.push_back({sample[k].label, pick(fn, k)});
    } else {
        out.push_back({chain_stage_names().at(stage), [stage, n](const BigRational& hp, const JetContractions& c) {
                           return chain_stage_value(stage, n, hp, c);
                       }});
    }
    return out;
}

}  // namespace

Localization localize_link(int n, size_t link) {
    if (link + 1 >= chain_stage_names().size()) throw std::out_of_range("chain link index");
    Localization loc;
    loc.n = n;
    loc.lhs_name = chain_stage_names()[link];
    loc.rhs_name = chain_stage_names()[link + 1];
    auto stage_form = [n](size_t s) -> FormEvaluator {
        return [n, s](const BigRational& hp, const JetContractions& c) { return chain_stage_value(s, n, hp, c); };
    };
    const FormEvaluator lhs = stage_form(link);
    const FormEvaluator rhs = stage_form(link + 1);
    const DirectionCoefficients dl = direction_coefficients(lhs, n);
    const DirectionCoefficients dr = direction_coefficients(rhs, n);
    loc.model_exact = direction_model_holds(lhs, n, dl) && direction_model_holds(rhs, n, dr);
    const auto vl = as_vector(dl);
    const auto vr = as_vector(dr);
    std::vector<size_t> bad;
    for (size_t k = 0; k < vl.size(); ++k) {
        if (vl[k] != vr[k]) {
            bad.push_back(k);
            loc.differing.push_back({direction_names()[k], vl[k], vr[k]});
        }
    }
    for (size_t side : {link, link + 1}) {
        for (const auto& term : stage_terms(side, n)) {
            const auto v = as_vector(direction_coefficients(term.form, n));
            for (size_t k : bad) {
                if (!v[k].is_zero()) {
                    loc.terms.push_back({chain_stage_names()[side], term.label, direction_names()[k], v[k]});
                }
            }
        }
    }
    return loc;
}

bool JetVerification::hard_pass() const {
    for (const auto& l : case_links) {
        if (l.verdict != Verdict::match) return false;
    }
    return true;
}

JetVerification verify_jet(const JJet& jet, std::string label, unsigned threads) {
    validate_jet(jet);
    JetVerification v;
    v.n = jet.n;
    v.label = std::move(label);
    v.pipeline = phi_total(jet, threads);
    const JetContractions c = contractions(jet);
    for (const auto& r : v.pipeline.cases) {
        v.case_links.push_back(compare("pipeline " + case_name(r.id), r.value, case_name(r.id) + " form",
                                       phi_case_form(r.id, jet.n, jet.hprime, c)));
    }
    std::vector<PiVolScalar> stages;
    for (size_t s = 0; s < chain_stage_names().size(); ++s) stages.push_back(chain_stage_value(s, jet.n, jet.hprime, c));
    for (size_t s = 0; s + 1 < stages.size(); ++s) {
        v.chain_links.push_back(compare(chain_stage_names()[s], stages[s], chain_stage_names()[s + 1], stages[s + 1]));
        if (!v.first_chain_failure && v.chain_links.back().verdict == Verdict::mismatch) v.first_chain_failure = s;
    }
    if (v.first_chain_failure) v.localization = localize_link(jet.n, *v.first_chain_failure);
    return v;
}

}  // namespace kkw
