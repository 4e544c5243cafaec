#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fockideal {

/// One verification suite run: a name, a pass verdict, the worst observed
/// violation (suite-specific normalization) and a one-line detail string.
struct SuiteResult {
  std::string name;
  bool pass = false;
  double metric = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  /// Documented default: bare runs are reproducible.
  std::uint64_t seed = 20240614ull;
};

const std::vector<std::string>& suite_names();

/// Runs one suite by name (throws std::invalid_argument for unknown names).
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt = {});

std::string format_suite_line(const SuiteResult& r);

}  // namespace fockideal
