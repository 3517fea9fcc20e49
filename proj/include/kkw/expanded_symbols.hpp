#pragma once

// Hand-expanded intermediate expressions of the boundary computation at the
// base point, restricted to |xi'| = 1. Each one is built directly from the
// jet entries, the connection tables and Clifford generators, so it serves
// as an independent hand expansion to compare with what SymbolBuilder
// derives. Indices are zero-based; n-1 is the normal direction.

#include "kkw/symbol_builder.hpp"

#include <string>
#include <vector>

namespace kkw::expanded {

/// pi+ d/dxi_i sigma_{-1}(D_J^{-1}), tangential i.
RestrictedMV pi_plus_dxi_sigma_m1(const JJet& jet, int i);

/// pi+ d/dx_n sigma_{-1}(D_J^{-1}): six terms.
RestrictedMV pi_plus_dxn_sigma_m1(const JJet& jet);

/// d^2/dxi_n^2 sigma_{-n+3}(D_J^{-n+3}).
RestrictedMV dxin2_sigma_mn3(const JJet& jet);

/// pi+ d/dxi_n sigma_{-1}(D_J^{-1}): two terms.
RestrictedMV pi_plus_dxin_sigma_m1(const JJet& jet);

/// d/dxi_n d/dx_n sigma_{-n+3}(D_J^{-n+3}): six terms.
RestrictedMV dxin_dxn_sigma_mn3(const JJet& jet);

/// d/dxi_n sigma_{-n+3}(D_J^{-n+3}).
RestrictedMV dxin_sigma_mn3(const JJet& jet);

/// sigma_{-n+2}(D_J^{-n+3}): the thirteen-term expansion (twelve sums, the
/// last split by h < n).
RestrictedMV sigma_mn2(const JJet& jet);

/// sigma_{-2}(D_J^{-1}) split as A1 + A2 - h'(0) A3.
struct SigmaM2Parts {
    RestrictedMV a1;  // c[J xi] sigma_0 c[J xi] / |xi|^4
    RestrictedMV a2;  // c[J xi] / |xi|^4 times the first-derivative bracket
    RestrictedMV a3;  // c[J xi] c[J dx_n] c[J xi] / |xi|^6
};

/// sigma0 is passed in because A1 is defined through sigma_0(D_J).
SigmaM2Parts sigma_m2_parts(const JJet& jet, const RestrictedMV& sigma0);

/// The expanded pi+ of each part: pi+(A1), pi+(A2) and -h'(0) pi+(A3).
struct SigmaM2PiPlus {
    RestrictedMV a1;
    RestrictedMV a2;
    RestrictedMV minus_h_a3;
};

SigmaM2PiPlus pi_plus_sigma_m2_parts(const JJet& jet);

}  // namespace kkw::expanded
