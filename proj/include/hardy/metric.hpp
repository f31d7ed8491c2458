#pragma once

#include <utility>
#include <vector>

#include "hardy/hardy.hpp"

namespace hardy {

/// Finite metric measure space with a distinguished anchor point a.
class MetricSpace {
 public:
  MetricSpace() = default;
  /// Validates symmetry, zero diagonal and non-negativity; with `strict` the
  /// triangle inequality is checked as well. Throws std::invalid_argument.
  MetricSpace(std::vector<std::vector<Rational>> dist, std::size_t anchor, MeasureSpace space,
              bool strict = true);

  [[nodiscard]] const std::vector<std::vector<Rational>>& dist() const { return dist_; }
  [[nodiscard]] const Rational& dist(std::size_t a, std::size_t b) const { return dist_[a][b]; }
  [[nodiscard]] std::size_t anchor() const { return anchor_; }
  [[nodiscard]] const MeasureSpace& space() const { return space_; }
  [[nodiscard]] bool strict() const { return strict_; }
  [[nodiscard]] std::size_t size() const { return space_.size(); }

 private:
  std::vector<std::vector<Rational>> dist_;
  std::size_t anchor_ = 0;
  MeasureSpace space_;
  bool strict_ = true;
};

/// Closed anchored balls at the distinct anchor distances, and the core map
/// x -> ball of radius |x|_a with tau(x) = weight(x).
std::pair<OrderedCore, CoreMap> ball_core(const MetricSpace& m, const std::vector<Rational>& weight);

/// Ball core alone.
OrderedCore ball_core(const MetricSpace& m);

/// v_(x) = essinf of v over the closed ball of radius |x|_a.
ScalarField metric_minorant(const MetricSpace& m, const ScalarField& v);

/// Two-weight problem with B(x) the closed ball of radius |x|_a.
TwoWeightProblem metric_problem(const MetricSpace& m, const std::vector<Rational>& omega,
                                const std::vector<Rational>& v, const Rational& p,
                                const Rational& q);

/// p = 1 best constant with tau = omega mu and eta = v mu.
ConstantEstimate metric_constant_p1(const MetricSpace& m, const std::vector<Rational>& omega,
                             const std::vector<Rational>& v, const Rational& q,
                             OuterExponent outer = OuterExponent::homogeneous);

/// p > 1 condition for the regime of (p, q). Rejects p <= 1 and q = 1.
ConstantEstimate metric_condition(const MetricSpace& m, const std::vector<Rational>& omega,
                           const std::vector<Rational>& v, const Rational& p, const Rational& q);

/// Dispatches a two-weight problem with p > 1 to the matching condition.
ConstantEstimate two_weight_condition(const TwoWeightProblem& problem);

}  // namespace hardy
