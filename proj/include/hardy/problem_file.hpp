#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/hardy.hpp"
#include "hardy/metric.hpp"

namespace hardy {

/// Validation failure tied to a field path such as "coremap[2].tau".
class ProblemFileError : public std::runtime_error {
 public:
  ProblemFileError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : "field '" + field + "': " + message),
        field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ProblemKind { generic, coremap, metric };

const char* to_string(ProblemKind kind);

struct CoreMapItem {
  std::string label;
  Rational tau;
  /// Index into `core`; nullopt is the empty ball.
  std::optional<std::size_t> ball;

  friend bool operator==(const CoreMapItem&, const CoreMapItem&) = default;
};

/// Parsed problem document. Optional members record which keys were present
/// so that serialization reproduces the input.
///
///   generic: core + (omega, v) or (tau, eta | u); Y = U and B(s) is the
///            smallest core set containing s.
///   coremap: core + coremap items + (eta | u).
///   metric:  dist + anchor + omega + v (+ strict).
struct ProblemFile {
  ProblemKind kind = ProblemKind::generic;
  std::vector<std::string> points;
  std::vector<Rational> mu;
  Rational p{1};
  Rational q{1};
  std::vector<PointSet> core;
  std::vector<CoreMapItem> coremap;
  std::optional<std::vector<Rational>> omega;
  std::optional<std::vector<Rational>> v;
  std::optional<std::vector<Rational>> tau;
  std::optional<std::vector<Rational>> eta;
  std::optional<std::vector<Rational>> u;
  /// Test function for the minorant cross-check; 1 everywhere when absent.
  std::optional<std::vector<Rational>> f;
  std::vector<std::vector<Rational>> dist;
  std::size_t anchor = 0;
  bool strict = true;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Parses and validates a JSON document. Throws ProblemFileError.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
/// JSON text; rationals as "num/den" strings.
std::string serialize_problem(const ProblemFile& file);

MeasureSpace make_space(const ProblemFile& file);
/// Chain from the file (generic, coremap) or the anchored ball core (metric).
OrderedCore make_core(const ProblemFile& file);
MetricSpace make_metric(const ProblemFile& file);
/// eta = u mu when u is given.
std::vector<Rational> make_eta(const ProblemFile& file);
HardyProblem make_hardy_problem(const ProblemFile& file);
/// Present for files with omega and v.
std::optional<TwoWeightProblem> make_two_weight(const ProblemFile& file);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

}  // namespace hardy
