#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/problem_file.hpp"
#include "hardy/verify.hpp"

namespace hardy {

using Report = nlohmann::ordered_json;

struct Input {
  ProblemFile file;
  std::string path;
  std::string digest;
};

Input read_input(const std::string& path);

/// Minorant of u, the variational value and its LP cross-check. Sets
/// "consistent" to false when the two disagree.
Report minorant_report(const Input& input);

/// Best-constant estimate for the (p, q) regime plus oracle bounds.
Report constant_report(const Input& input, OuterExponent outer, std::uint64_t seed);

/// lambda, nu and w of the half-line reduction.
Report reduce_report(const Input& input);

/// Randomized property suites; "status" is "pass" or "fail".
Report verify_report(const SuiteOptions& options, const std::vector<std::string>& suites);

/// One "path,value" line per leaf, in document order.
std::string to_csv(const Report& report);

}  // namespace hardy
