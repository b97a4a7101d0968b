// Command-line front end. Links the C API only; all math lives behind
// opaque handles in libunisub_c.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "unisub/capi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitBound = 4;
constexpr int kExitMismatch = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("input", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { us_string_free(value); }
};

void report_error(const char* command, us_status status) {
  std::cerr << command << ": " << us_status_name(status) << ": " << us_last_error() << '\n';
}

/// Output path must carry the expected extension; empty means stdout.
bool check_extension(const std::string& path, const std::string& expected) {
  if (path.empty()) return true;
  const auto dot = path.find_last_of('.');
  return dot != std::string::npos && path.substr(dot) == expected;
}

int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << payload;
  if (!payload.empty() && payload.back() != '\n') out << '\n';
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

int run_certify(const std::string& input, const std::string& out_path, char family) {
  std::string text;
  try {
    text = read_file(input);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  }

  us_pattern* pattern = nullptr;
  us_status status = us_pattern_from_json(text.c_str(), &pattern);
  if (status != US_OK) {
    report_error("certify", status);
    return kExitValidation;
  }

  us_certificate* cert = nullptr;
  status = us_certify(pattern, family, &cert);
  us_pattern_free(pattern);
  if (status != US_OK) {
    report_error("certify", status);
    return kExitValidation;
  }

  OwnedString json;
  status = us_certificate_json(cert, &json.value);
  if (status != US_OK) {
    us_certificate_free(cert);
    report_error("certify", status);
    return kExitValidation;
  }
  const bool positive = us_certificate_positive(cert) != 0;
  const std::string verdict = us_certificate_verdict(cert);
  us_certificate_free(cert);

  const int write_rc = write_output(out_path, json.value);
  if (write_rc != kExitOk) return write_rc;
  std::cerr << "verdict: " << verdict << '\n';
  return positive ? kExitOk : kExitInconclusive;
}

struct EnumSink {
  std::ostream* stream;
  bool failed = false;
};

extern "C" int enum_row_trampoline(void* user, const char* row) {
  auto* sink = static_cast<EnumSink*>(user);
  (*sink->stream) << row << '\n';
  if (!*sink->stream) {
    sink->failed = true;
    return 1;
  }
  return 0;
}

int run_enumerate(unsigned n, char family, const std::string& filter, unsigned jobs,
                  unsigned bound, bool force, const std::string& out_path) {
  std::ofstream file;
  std::ostream* stream = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << out_path << '\n';
      return kExitValidation;
    }
    stream = &file;
  }

  us_enum_options options{};
  options.n = n;
  options.family = family;
  options.filter = filter.c_str();
  options.jobs = jobs;
  options.bound = bound;
  options.force = force ? 1 : 0;

  EnumSink sink{stream};
  (*stream) << us_enumeration_csv_header() << '\n';
  us_enum_summary summary{};
  const us_status status = us_enumerate(&options, enum_row_trampoline, &sink, &summary);
  if (status == US_E_BOUND_EXCEEDED) {
    report_error("enumerate", status);
    std::cerr << "projected rows: " << us_last_error_payload_a()
              << " (rerun with --force to proceed)\n";
    return kExitBound;
  }
  if (status != US_OK) {
    report_error("enumerate", status);
    return kExitValidation;
  }
  std::cout << "total=" << summary.rows << " simple=" << summary.simple
            << " bitriangular=" << summary.bitriangular << " zero_C_I=" << summary.zero_c_i
            << '\n';
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& out_path, unsigned jobs,
               double tolerance, unsigned long long restarts, std::optional<unsigned long long> seed,
               unsigned long long psi_samples) {
  std::string text;
  try {
    text = read_file(input);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  }

  us_verify_options options{};
  options.jobs = jobs;
  options.psi_samples = psi_samples;
  options.tolerance_override = tolerance;
  options.restarts_override = restarts;
  options.has_seed_override = seed.has_value() ? 1 : 0;
  options.seed_override = seed.value_or(0);

  us_flag_report* report = nullptr;
  us_status status = us_verify_json(text.c_str(), &options, &report);
  if (status == US_E_UNSTABLE_COUNT) {
    report_error("verify", status);
    std::cerr << "counts: " << us_last_error_payload_a() << " then " << us_last_error_payload_b()
              << '\n';
    return kExitMismatch;
  }
  if (status != US_OK) {
    report_error("verify", status);
    return kExitValidation;
  }

  OwnedString json;
  status = us_flag_report_json(report, &json.value);
  if (status != US_OK) {
    us_flag_report_free(report);
    report_error("verify", status);
    return kExitValidation;
  }

  const unsigned long long count = us_flag_report_count(report);
  const bool stable = us_flag_report_stable(report) != 0;
  const bool bitriangular = us_flag_report_bitriangular(report) != 0;
  const int match = us_flag_report_match(report);
  us_flag_report_free(report);

  const int write_rc = write_output(out_path, json.value);
  if (write_rc != kExitOk) return write_rc;

  std::cout << "count=" << count << " stable=" << (stable ? "yes" : "no") << '\n';
  if (!stable) {
    std::cerr << "UNSTABLE: restart doubling kept changing the count\n";
    return kExitMismatch;
  }
  if (bitriangular) {
    std::cout << (match == 1 ? "MATCH" : "MISMATCH")
              << " (bitriangular pattern: count vs |C_I|)\n";
    return match == 1 ? kExitOk : kExitMismatch;
  }
  std::cout << "no MATCH verdict (pattern is not bitriangular)\n";
  return kExitOk;
}

int run_selftest(unsigned n_max, bool inject_fault) {
  OwnedString table;
  int pass = 0;
  const us_status status = us_selftest(n_max, inject_fault ? 1 : 0, &table.value, &pass);
  if (status != US_OK) {
    report_error("selftest", status);
    return kExitValidation;
  }
  std::cout << table.value;
  return pass ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal-subspace certification toolkit"};
  app.require_subcommand(1);
  app.footer(
      "exit codes: 0 certified/match, 2 validation error, 3 inconclusive,\n"
      "            4 enumeration bound exceeded, 5 count mismatch or unstable\n"
      "environment overrides use the UNISUB_ prefix (e.g. UNISUB_JOBS)");

  std::string family = "A";
  std::string input;
  std::string out_path;
  unsigned n = 3;
  unsigned jobs = 1;
  unsigned bound = 5;
  bool force = false;
  std::string filter = "none";
  double tolerance = 0.0;
  unsigned long long restarts = 0;
  std::optional<unsigned long long> seed;
  unsigned long long psi_samples = 1000;
  unsigned n_max = 3;
  bool inject_fault = false;

  auto* certify = app.add_subcommand("certify", "certify a zero pattern from a JSON file");
  certify->add_option("pattern", input, "pattern JSON file")->required();
  certify->add_option("--family", family, "group family A|B|C|D")
      ->check(CLI::IsMember({"A", "B", "C", "D"}))
      ->envname("UNISUB_FAMILY");
  certify->add_option("--out", out_path, "output path (.json)");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate all patterns at a given size");
  enumerate->add_option("--n", n, "matrix size")->required();
  enumerate->add_option("--family", family, "group family A|B|C|D")
      ->check(CLI::IsMember({"A", "B", "C", "D"}))
      ->envname("UNISUB_FAMILY");
  enumerate->add_option("--filter", filter, "none|simple|bitriangular")
      ->check(CLI::IsMember({"none", "simple", "bitriangular"}));
  enumerate->add_option("--jobs", jobs, "worker threads")->envname("UNISUB_JOBS");
  enumerate->add_option("--bound", bound, "largest n without --force")->envname("UNISUB_BOUND");
  enumerate->add_flag("--force", force, "enumerate past the bound");
  enumerate->add_option("--out", out_path, "output path (.csv)");

  auto* verify = app.add_subcommand("verify", "numerically count flags for a problem file");
  verify->add_option("problem", input, "problem JSON file")->required();
  verify->add_option("--jobs", jobs, "worker threads")->envname("UNISUB_JOBS");
  verify->add_option("--tolerance", tolerance, "residual tolerance override")
      ->envname("UNISUB_TOLERANCE");
  verify->add_option("--restarts", restarts, "restart budget override")
      ->envname("UNISUB_RESTARTS");
  verify->add_option("--seed", seed, "RNG seed override")->envname("UNISUB_SEED");
  verify->add_option("--psi-samples", psi_samples, "determinant sign scan sample count");
  verify->add_option("--out", out_path, "output path (.json)");

  auto* selftest = app.add_subcommand("selftest", "run the cross-module invariant suite");
  selftest->add_option("--n-max", n_max, "largest rank exercised");
  selftest->add_flag("--inject-fault", inject_fault, "negative control: corrupt f0")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  if (certify->parsed()) {
    if (!check_extension(out_path, ".json")) {
      std::cerr << "certify writes JSON; --out must end in .json\n";
      return kExitValidation;
    }
    return run_certify(input, out_path, family[0]);
  }
  if (enumerate->parsed()) {
    if (!check_extension(out_path, ".csv")) {
      std::cerr << "enumerate writes CSV; --out must end in .csv\n";
      return kExitValidation;
    }
    return run_enumerate(n, family[0], filter, jobs, bound, force, out_path);
  }
  if (verify->parsed()) {
    if (!check_extension(out_path, ".json")) {
      std::cerr << "verify writes JSON; --out must end in .json\n";
      return kExitValidation;
    }
    return run_verify(input, out_path, jobs, tolerance, restarts, seed, psi_samples);
  }
  if (selftest->parsed()) {
    return run_selftest(n_max, inject_fault);
  }
  return kExitUsage;
}
