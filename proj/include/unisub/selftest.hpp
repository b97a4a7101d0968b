#ifndef UNISUB_SELFTEST_HPP
#define UNISUB_SELFTEST_HPP

#include <string>
#include <vector>

namespace unisub {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Cross-module invariant suite over all families up to rank n_max.
/// inject_fault corrupts the fundamental harmonic fed into the checks
/// (negative control: the run must then fail).
std::vector<CheckResult> run_selftest(unsigned n_max, bool inject_fault);

std::string selftest_table(const std::vector<CheckResult>& results);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace unisub

#endif
