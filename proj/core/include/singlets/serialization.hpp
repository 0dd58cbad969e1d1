#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "singlets/bigint.hpp"
#include "singlets/characters.hpp"
#include "singlets/laurent_polynomial.hpp"
#include "singlets/verification.hpp"

namespace singlets {

// JSON documents. Big integers are decimal strings; output is compact, keys in
// the order shown, and terms/weights sorted lexicographically by exponent.
// Parsers throw FormatError on malformed input.

/// {"rank": r, "terms": [{"e": [...], "c": "<decimal>"}, ...]}
std::string polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(std::string_view text);

/// {"rank": r, "label": "...", "weights": [{"w": [...], "m": k}, ...]}
std::string character_spec_to_json(const CharacterSpec& spec);
CharacterSpec character_spec_from_json(std::string_view text);
CharacterSpec load_weight_file(const std::filesystem::path& path);

/// {"group": "SU(N)", "rep": "...", "n": k, "dimension": "<decimal>"}
struct DimensionRecord {
  std::string group;
  std::string rep;
  int n = 0;
  BigInt dimension;

  friend bool operator==(const DimensionRecord&, const DimensionRecord&) = default;
};
std::string dimension_record_to_json(const DimensionRecord& record);
DimensionRecord dimension_record_from_json(std::string_view text);

/// {"check": "...", "range": [a, b], "status": "pass"|"fail", "first_violation": k}
/// The last key is present only on failure with a located violation.
std::string check_report_to_json(const CheckReport& report);
CheckReport check_report_from_json(std::string_view text);

/// OEIS b-file: one "n a(n)" line per term, n starting at `offset`.
void write_bfile(std::ostream& out, std::span<const BigInt> terms, long offset = 0);

}  // namespace singlets
