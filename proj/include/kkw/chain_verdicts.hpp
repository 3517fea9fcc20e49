#pragma once

// Cross-checks between the pipeline and the closed forms for one jet.
//
// Hard links: each pipeline case against its coefficient-sum form.
// Soft links, in order: sum of case forms -> D-form -> four-term form ->
// boundary integrand. The first failing soft link is localized by writing
// both sides along the independent directions of reduced_contractions and
// listing which summands carry the differing directions.

#include "kkw/boundary_pipeline.hpp"
#include "kkw/closed_forms.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kkw {

enum class Verdict { match, mismatch, skipped };

std::string verdict_name(Verdict v);

struct LinkVerdict {
    std::string lhs_name;
    std::string rhs_name;
    PiVolScalar lhs;
    PiVolScalar rhs;
    Verdict verdict = Verdict::skipped;
};

LinkVerdict compare(std::string lhs_name, const PiVolScalar& lhs, std::string rhs_name, const PiVolScalar& rhs);

/// Names of the soft-chain stages, in order.
const std::vector<std::string>& chain_stage_names();

/// Stage value from n, h'(0) and contractions; index into chain_stage_names().
PiVolScalar chain_stage_value(size_t stage, int n, const BigRational& hprime, const JetContractions& c);

/// Every form is h' * (p0 + p1 a^2 + p2 a trA) + q s_tan in the parameters
/// of reduced_contractions (a = a^n_n). These are the four coefficients.
struct DirectionCoefficients {
    BigRational h;          // h'
    BigRational h_ann_sq;   // h' (a^n_n)^2
    BigRational h_ann_tr;   // h' a^n_n tr A
    BigRational s_tan;      // sum_h sum_{i<n} a^i_h d_i a^n_h
    friend bool operator==(const DirectionCoefficients&, const DirectionCoefficients&) = default;
};

const std::vector<std::string>& direction_names();
std::vector<BigRational> as_vector(const DirectionCoefficients& d);

using FormEvaluator = std::function<PiVolScalar(const BigRational& hprime, const JetContractions& c)>;

DirectionCoefficients direction_coefficients(const FormEvaluator& form, int n);

/// Whether form agrees with its direction model at a few extra points.
bool direction_model_holds(const FormEvaluator& form, int n, const DirectionCoefficients& d);

struct DirectionDiff {
    std::string direction;
    BigRational lhs;
    BigRational rhs;
};

struct TermDirection {
    std::string side;    // stage name
    std::string label;   // summand label
    std::string direction;
    BigRational coefficient;
};

/// Localization of a failing soft link at dimension n; jet independent.
struct Localization {
    int n = 0;
    std::string lhs_name;
    std::string rhs_name;
    bool model_exact = true;  // the direction model reproduced both sides
    std::vector<DirectionDiff> differing;
    std::vector<TermDirection> terms;  // summands along differing directions
};

/// Localizes the soft link between stage `link` and stage `link + 1`.
Localization localize_link(int n, size_t link);

struct JetVerification {
    int n = 0;
    std::string label;
    TotalReport pipeline;
    std::vector<LinkVerdict> case_links;   // hard
    std::vector<LinkVerdict> chain_links;  // soft
    std::optional<size_t> first_chain_failure;
    std::optional<Localization> localization;

    [[nodiscard]] bool hard_pass() const;
};

JetVerification verify_jet(const JJet& jet, std::string label, unsigned threads = 1);

}  // namespace kkw
