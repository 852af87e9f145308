#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace firefight {

struct SuiteOptions {
  int trials = 1000;
  std::uint64_t seed = 1;
  int n_max = 14;
  std::string counterexample_path;  // written on the first failure, if set
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  long long checks = 0;  // individual inequalities evaluated
  int failures = 0;
  int skipped = 0;
  std::optional<double> max_ratio;
  std::string counterexample;  // serialized instance plus a comment header

  bool passed() const { return failures == 0; }
};

std::vector<std::string> suite_names();

// Throws Error(UnknownSuite).
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace firefight
