#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hardy {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  /// Largest point count of a random instance.
  std::size_t size = 10;
  /// Sandwich suite: instances pass when max(lb/est, est/lb) is below this.
  double sandwichBound = 32.0;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// First few failing instances.
  std::vector<std::string> failures;
  /// Extra deterministic output (histograms, extremes).
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const { return passed == total; }
};

/// Names accepted by run_suite, in report order.
const std::vector<std::string>& suite_names();

/// Runs one randomized property suite. Throws std::invalid_argument for an
/// unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Relative closeness with equal infinities treated as equal.
bool close_relative(double a, double b, double tolerance);

}  // namespace hardy
