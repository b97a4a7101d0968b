#include "unisub/capi.h"

#include <cstring>
#include <memory>
#include <string>

#include "unisub/selftest.hpp"
#include "unisub/serialize.hpp"

namespace {

thread_local std::string g_last_error;
thread_local long long g_payload_a = 0;
thread_local long long g_payload_b = 0;

struct StatusError {
  us_status status;
  std::string message;
};

us_status status_from_code(unisub::ErrorCode code) {
  using unisub::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return US_E_INVALID_ARGUMENT;
    case ErrorCode::VarMismatch: return US_E_VAR_MISMATCH;
    case ErrorCode::WrongCardinality: return US_E_WRONG_CARDINALITY;
    case ErrorCode::DiagonalPair: return US_E_DIAGONAL_PAIR;
    case ErrorCode::DuplicatePair: return US_E_DUPLICATE_PAIR;
    case ErrorCode::IndexRange: return US_E_INDEX_RANGE;
    case ErrorCode::FamilyMismatch: return US_E_FAMILY_MISMATCH;
    case ErrorCode::DegreeMismatch: return US_E_DEGREE_MISMATCH;
    case ErrorCode::ZeroWeight: return US_E_ZERO_WEIGHT;
    case ErrorCode::NoExtension: return US_E_NO_EXTENSION;
    case ErrorCode::BoundExceeded: return US_E_BOUND_EXCEEDED;
    case ErrorCode::UnstableCount: return US_E_UNSTABLE_COUNT;
    case ErrorCode::Precondition: return US_E_PRECONDITION;
    case ErrorCode::ParseError: return US_E_PARSE;
    case ErrorCode::Internal: return US_E_INTERNAL;
  }
  return US_E_INTERNAL;
}

template <typename Fn>
us_status guarded(Fn&& fn) {
  g_last_error.clear();
  g_payload_a = 0;
  g_payload_b = 0;
  try {
    fn();
    return US_OK;
  } catch (const StatusError& e) {
    g_last_error = e.message;
    return e.status;
  } catch (const unisub::Error& e) {
    g_last_error = e.what();
    g_payload_a = e.payload_a();
    g_payload_b = e.payload_b();
    return status_from_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return US_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return US_E_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

struct us_pattern {
  unisub::ParsedPattern parsed;
};

struct us_certificate {
  unisub::PatternCertificate cert;
  std::string verdict;
};

struct us_flag_report {
  unisub::FlagProblem problem;
  unisub::VerifyReport report;
};

extern "C" {

const char* us_status_name(us_status status) {
  switch (status) {
    case US_OK: return "OK";
    case US_E_INVALID_ARGUMENT: return "InvalidArgument";
    case US_E_VAR_MISMATCH: return "VarMismatch";
    case US_E_WRONG_CARDINALITY: return "WrongCardinality";
    case US_E_DIAGONAL_PAIR: return "DiagonalPair";
    case US_E_DUPLICATE_PAIR: return "DuplicatePair";
    case US_E_INDEX_RANGE: return "IndexRange";
    case US_E_FAMILY_MISMATCH: return "FamilyMismatch";
    case US_E_DEGREE_MISMATCH: return "DegreeMismatch";
    case US_E_ZERO_WEIGHT: return "ZeroWeight";
    case US_E_NO_EXTENSION: return "NoExtension";
    case US_E_BOUND_EXCEEDED: return "BoundExceeded";
    case US_E_UNSTABLE_COUNT: return "UnstableCount";
    case US_E_PRECONDITION: return "Precondition";
    case US_E_PARSE: return "ParseError";
    case US_E_INTERNAL: return "Internal";
    case US_E_IO: return "IO";
  }
  return "Unknown";
}

const char* us_last_error(void) { return g_last_error.c_str(); }
long long us_last_error_payload_a(void) { return g_payload_a; }
long long us_last_error_payload_b(void) { return g_payload_b; }

void us_string_free(char* text) { delete[] text; }

const char* us_version(void) { return "1.0.0"; }

us_status us_pattern_from_json(const char* json_text, us_pattern** out) {
  if (!json_text || !out) return US_E_INVALID_ARGUMENT;
  return guarded([&] {
    auto handle = std::make_unique<us_pattern>();
    handle->parsed = unisub::parse_pattern_json(json_text);
    *out = handle.release();
  });
}

void us_pattern_free(us_pattern* pattern) { delete pattern; }

unsigned us_pattern_n(const us_pattern* pattern) { return pattern ? pattern->parsed.pattern.n : 0; }

int us_pattern_is_odd(const us_pattern* pattern) {
  return pattern && pattern->parsed.odd ? 1 : 0;
}

int us_pattern_is_simple(const us_pattern* pattern) {
  return pattern && unisub::is_simple(pattern->parsed.pattern) ? 1 : 0;
}

int us_pattern_is_bitriangular(const us_pattern* pattern) {
  return pattern && unisub::is_bitriangular(pattern->parsed.pattern) ? 1 : 0;
}

us_status us_certify(const us_pattern* pattern, char family, us_certificate** out) {
  if (!pattern || !out) return US_E_INVALID_ARGUMENT;
  return guarded([&] {
    const unisub::Family fam = unisub::family_from_letter(family);
    auto handle = std::make_unique<us_certificate>();
    if (pattern->parsed.odd) {
      handle->cert = unisub::certify(*pattern->parsed.odd_pattern, fam);
    } else {
      handle->cert = unisub::certify(pattern->parsed.pattern, fam);
    }
    handle->verdict = unisub::verdict_name(handle->cert.verdict);
    *out = handle.release();
  });
}

void us_certificate_free(us_certificate* cert) { delete cert; }

us_status us_certificate_json(const us_certificate* cert, char** out) {
  if (!cert || !out) return US_E_INVALID_ARGUMENT;
  return guarded([&] { *out = copy_string(unisub::certificate_json(cert->cert)); });
}

const char* us_certificate_verdict(const us_certificate* cert) {
  return cert ? cert->verdict.c_str() : "";
}

us_status us_certificate_c_i(const us_certificate* cert, char** out_decimal) {
  if (!cert || !out_decimal) return US_E_INVALID_ARGUMENT;
  return guarded([&] { *out_decimal = copy_string(cert->cert.C_I.get_str()); });
}

int us_certificate_positive(const us_certificate* cert) {
  return cert && cert->cert.C_V != 0 ? 1 : 0;
}

const char* us_enumeration_csv_header(void) { return "bitmask,simple,bitriangular,C_I,verdict"; }

us_status us_enumerate(const us_enum_options* options, us_enum_row_fn row_fn, void* user,
                       us_enum_summary* summary) {
  if (!options) return US_E_INVALID_ARGUMENT;
  return guarded([&] {
    unisub::EnumerationOptions opts;
    opts.n = options->n;
    opts.family = unisub::family_from_letter(options->family ? options->family : 'A');
    opts.filter = unisub::pattern_filter_from_name(options->filter ? options->filter : "none");
    opts.jobs = options->jobs == 0 ? 1 : options->jobs;
    opts.bound = options->bound == 0 ? 5 : options->bound;
    opts.force = options->force != 0;

    bool aborted = false;
    auto sink = [&](std::uint64_t mask, const unisub::PatternCertificate& cert) {
      if (aborted || !row_fn) return;
      const std::string row = unisub::enumeration_csv_row(mask, cert);
      if (row_fn(user, row.c_str()) != 0) aborted = true;
    };
    const unisub::EnumerationSummary result = unisub::enumerate_patterns(opts, sink);
    if (aborted) throw StatusError{US_E_IO, "row callback requested abort"};
    if (summary) {
      summary->rows = result.rows;
      summary->simple = result.simple;
      summary->bitriangular = result.bitriangular;
      summary->zero_c_i = result.zero_c_i;
    }
  });
}

us_status us_verify_json(const char* problem_json, const us_verify_options* options,
                         us_flag_report** out) {
  if (!problem_json || !out) return US_E_INVALID_ARGUMENT;
  return guarded([&] {
    unisub::FlagProblem problem = unisub::parse_problem_json(problem_json);
    unsigned jobs = 1;
    std::uint64_t psi_samples = 1000;
    if (options) {
      if (options->jobs > 0) jobs = options->jobs;
      if (options->psi_samples > 0) psi_samples = options->psi_samples;
      if (options->tolerance_override > 0) problem.tolerance = options->tolerance_override;
      if (options->restarts_override > 0) problem.restarts = options->restarts_override;
      if (options->has_seed_override) problem.rng_seed = options->seed_override;
    }
    auto handle = std::make_unique<us_flag_report>();
    handle->report = unisub::run_verify(problem, jobs, psi_samples);
    handle->problem = std::move(problem);
    *out = handle.release();
  });
}

void us_flag_report_free(us_flag_report* report) { delete report; }

us_status us_flag_report_json(const us_flag_report* report, char** out) {
  if (!report || !out) return US_E_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = copy_string(unisub::verify_report_json(report->problem, report->report)); });
}

unsigned long long us_flag_report_count(const us_flag_report* report) {
  return report ? report->report.count_report.count() : 0;
}

int us_flag_report_stable(const us_flag_report* report) {
  return report && report->report.count_report.stable ? 1 : 0;
}

int us_flag_report_bitriangular(const us_flag_report* report) {
  return report && report->report.bitriangular ? 1 : 0;
}

int us_flag_report_match(const us_flag_report* report) {
  return report ? report->report.match : -1;
}

us_status us_subspace_verdict_json(const char* weights_json, char** out) {
  if (!weights_json || !out) return US_E_INVALID_ARGUMENT;
  return guarded([&] {
    const unisub::WeightMultiset ws = unisub::parse_weights_json(weights_json);
    const unisub::UniversalityVerdict verdict = unisub::universality_verdict(ws);
    *out = copy_string(unisub::verdict_json(verdict));
  });
}

us_status us_selftest(unsigned n_max, int inject_fault, char** table, int* all_pass) {
  return guarded([&] {
    const auto results = unisub::run_selftest(n_max == 0 ? 3 : n_max, inject_fault != 0);
    if (table) *table = copy_string(unisub::selftest_table(results));
    if (all_pass) *all_pass = unisub::all_pass(results) ? 1 : 0;
  });
}

}  // extern "C"
