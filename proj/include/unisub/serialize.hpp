#ifndef UNISUB_SERIALIZE_HPP
#define UNISUB_SERIALIZE_HPP

/*
  JSON and CSV boundary. Polynomials also serialize to the canonical text
  form produced by to_text(). All renderers emit deterministic output:
  object keys are ordered, numbers carry shortest round-trip forms, and
  big integers travel as decimal strings.
*/

#include <string>

#include "unisub/flagsearch.hpp"
#include "unisub/patterns.hpp"
#include "unisub/subspaces.hpp"

namespace unisub {

/// JSON array of {"coeff": "<decimal>", "exps": [..]} records, leading
/// term first.
std::string polynomial_json(const Polynomial& p);

struct ParsedPattern {
  bool odd = false;
  ZeroPattern pattern;          // validated n x n pattern (inner one for odd)
  std::optional<OddPattern> odd_pattern;
};

/// {"n": .., "pairs": [[i,j],..], "odd": bool?}
ParsedPattern parse_pattern_json(const std::string& text);

std::string pattern_json(const ZeroPattern& p);
std::string odd_pattern_json(const OddPattern& p);

std::string certificate_json(const PatternCertificate& cert);

/// {"group":"A","n":3,"weights":[[1,-1,0],..]}
WeightMultiset parse_weights_json(const std::string& text);

std::string verdict_json(const UniversalityVerdict& verdict);

/// {"matrix": [[[re,im],..],..], "pattern": {..}, "tolerance"?, "restarts"?, "seed"?}
FlagProblem parse_problem_json(const std::string& text);

struct VerifyReport {
  FlagCountReport count_report;
  PsiScanReport psi_report;
  bool bitriangular = false;
  BigInt expected_count;  // |C_I|, meaningful when bitriangular
  int match = -1;         // 1 match, 0 mismatch, -1 not applicable
};

/// count_flags + psi scan + the bitriangular MATCH comparison.
VerifyReport run_verify(const FlagProblem& problem, unsigned jobs, std::uint64_t psi_samples);

std::string verify_report_json(const FlagProblem& problem, const VerifyReport& report);

std::string enumeration_csv_header();
std::string enumeration_csv_row(std::uint64_t mask, const PatternCertificate& cert);

}  // namespace unisub

#endif
