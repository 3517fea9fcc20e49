#pragma once

// Verification campaigns behind the command-line tool: constant
// recomputation, pipeline-vs-form comparisons with chain verdicts, vanishing
// checks and interior spot values, assembled into one deterministic report.

#include "kkw/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kkw {

enum class RunMode { constants, pipeline, interior, all };
enum class ReportFormat { json, markdown };

RunMode parse_mode(const std::string& s);

/// "6,8,10", "6..16" (even values in the range) or a mix of both.
/// Throws std::invalid_argument for odd values or values outside [6, 16].
std::vector<int> parse_n_list(const std::string& text);

/// min(requested or hardware concurrency, KKW_THREADS if set), at least 1.
unsigned resolve_threads(unsigned requested);

struct RunConfig {
    std::vector<int> n_list = {6};
    int jets_per_n = 1;
    std::uint64_t seed = 1;
    JetProfile profile = JetProfile::diagonal;
    RunMode mode = RunMode::all;
    std::optional<std::string> jet_file;
    std::optional<std::string> invariants_file;
    ReportFormat format = ReportFormat::json;
    unsigned threads = 1;
    bool timing = false;  // adds wall-clock times; breaks byte-identical output
};

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // values compared, when useful
};

/// Hand-expanded intermediate symbols vs SymbolBuilder on one jet.
std::vector<NamedCheck> expansion_checks(const JJet& jet);

/// Every named constant at n against the Cauchy-integral oracle (relative
/// error <= 1e-20) plus the exact combination identities.
std::vector<NamedCheck> constant_checks(int n, Json* values = nullptr);

/// Trivial jet gives zero in all cases and forms; J = id gives a zero
/// bracket and pipeline total.
std::vector<NamedCheck> vanishing_checks(int n);

/// Interior density spot values (all-zero, constructed cancellation,
/// RJJ-only at n = 6).
std::vector<NamedCheck> interior_checks();

/// The jets a campaign runs at dimension n: seeds seed, seed+1, ...
std::vector<std::pair<std::string, JJet>> campaign_jets(const RunConfig& cfg, int n);

struct RunResult {
    Json report;
    int exit_code = 0;  // 0 all hard checks pass, 2 a hard check failed
};

RunResult run(const RunConfig& cfg);

std::string render_markdown(const Json& report);

}  // namespace kkw
