#pragma once

// The five boundary cases of the residue sum. Each case builds the two
// symbols it needs, applies its derivative pattern, projects the left factor
// with pi+, takes the spinor trace, integrates over |xi'| = 1 and then over
// the real xi_n line. Results are rational multiples of pi * Vol(S^{n-2}).

#include "kkw/geometry_jets.hpp"
#include "kkw/symbol_builder.hpp"
#include "kkw/xi_ratfun.hpp"

#include <array>
#include <string>
#include <vector>

namespace kkw {

struct PiVolScalar {
    BigRational q;

    PiVolScalar& operator+=(const PiVolScalar& o) {
        q += o.q;
        return *this;
    }
    friend PiVolScalar operator+(PiVolScalar a, const PiVolScalar& b) { return a += b; }
    friend PiVolScalar operator-(const PiVolScalar& a, const PiVolScalar& b) { return {a.q - b.q}; }
    friend bool operator==(const PiVolScalar&, const PiVolScalar&) = default;
    [[nodiscard]] std::string to_string() const { return q.to_string(); }
};

/// Require a vanishing imaginary part and wrap the real part.
PiVolScalar real_pi_vol(const GaussianRational& z, const std::string& what);

enum class CaseId { aI, aII, aIII, b, c };

inline constexpr std::array<CaseId, 5> kAllCases = {CaseId::aI, CaseId::aII, CaseId::aIII, CaseId::b, CaseId::c};

std::string case_name(CaseId id);
CaseId parse_case(const std::string& name);

/// (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!) for the case's index pattern.
GaussianRational case_prefactor(CaseId id);

struct CaseReport {
    CaseId id = CaseId::aI;
    int n = 0;
    GaussianRational prefactor;
    RestrictedCoeff trace_polynomial;   // trace as a polynomial in xi'
    PoleRational sphere_integrated;     // after integrating over |xi'| = 1
    GaussianRational line_integral;     // r with  integral dxi_n = r * pi
    PiVolScalar value;                  // prefactor * r
};

/// The left (pi+-projected) and right factors whose trace a case integrates,
/// one pair per summand (case a-I sums over tangential directions).
struct CaseFactors {
    std::vector<RestrictedMV> left;
    std::vector<RestrictedMV> right;
};

CaseFactors case_factors(CaseId id, const SymbolBuilder& builder);

/// Rejects odd n and n < 6.
void require_supported_dimension(int n);

CaseReport phi_case(CaseId id, const JJet& jet);

struct TotalReport {
    std::vector<CaseReport> cases;  // ordered as kAllCases
    PiVolScalar total;
};

/// Runs the five cases on up to `threads` worker threads (0 means one).
TotalReport phi_total(const JJet& jet, unsigned threads = 1);

}  // namespace kkw
