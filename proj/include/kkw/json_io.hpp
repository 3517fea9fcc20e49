#pragma once

// JSON encodings of the exact values, jets, invariants and reports.
// Rationals are strings "p/q" (or "p"), Gaussian rationals {"re","im"},
// pole rationals {"num": [...], "p", "q"} with the numerator listed from the
// constant coefficient up.

#include "kkw/boundary_pipeline.hpp"
#include "kkw/chain_verdicts.hpp"
#include "kkw/closed_forms.hpp"
#include "kkw/geometry_jets.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace kkw {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Malformed input; the message starts with the location (file, JSON
/// pointer or byte offset) of the problem.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const BigRational& r);
Json to_json(const GaussianRational& z);
Json to_json(const PoleRational& f);
/// List of {"exponents": [...], "coeff": PoleRational} over n-1 variables.
Json to_json(const RestrictedCoeff& p, int n);
Json to_json(const JJet& jet);
Json to_json(const CaseReport& r);
Json to_json(const LinkVerdict& v);
Json to_json(const Localization& loc);
Json to_json(const JetVerification& v);

/// `where` prefixes error messages, e.g. a file name.
BigRational rational_from_json(const Json& j, const std::string& where);
JJet jet_from_json(const Json& j, const std::string& where);
InteriorInvariants invariants_from_json(const Json& j, const std::string& where);

/// Reads and parses a JSON file; syntax errors report the byte offset.
Json read_json_file(const std::string& path);

JJet read_jet_file(const std::string& path);
InteriorInvariants read_invariants_file(const std::string& path);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace kkw
