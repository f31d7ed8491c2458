#include "hardy/metric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hardy/minorant.hpp"

namespace hardy {

MetricSpace::MetricSpace(std::vector<std::vector<Rational>> dist, std::size_t anchor,
                         MeasureSpace space, bool strict)
    : dist_(std::move(dist)), anchor_(anchor), space_(std::move(space)), strict_(strict) {
  const std::size_t n = space_.size();
  if (n == 0) throw std::invalid_argument("metric space needs at least one point");
  if (anchor_ >= n) throw std::invalid_argument("anchor out of range");
  if (dist_.size() != n) throw std::invalid_argument("distance matrix has wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) {
      throw std::invalid_argument("distance row " + std::to_string(i) + " has wrong length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(dist_[i][i]) != 0) throw std::invalid_argument("nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(dist_[i][j]) < 0) throw std::invalid_argument("negative distance");
      if (dist_[i][j] != dist_[j][i]) {
        throw std::invalid_argument("distance not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
  if (!strict_) return;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dist_[i][j] > dist_[i][k] + dist_[k][j]) {
          throw std::invalid_argument("triangle inequality fails for (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") via " + std::to_string(k));
        }
      }
    }
  }
}

OrderedCore ball_core(const MetricSpace& m) {
  const std::size_t n = m.size();
  std::vector<Rational> radii;
  for (std::size_t x = 0; x < n; ++x) radii.push_back(m.dist(m.anchor(), x));
  std::vector<Rational> distinct = radii;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> ranks(n);
  for (std::size_t x = 0; x < n; ++x) {
    ranks[x] = static_cast<std::size_t>(
                   std::lower_bound(distinct.begin(), distinct.end(), radii[x]) - distinct.begin()) +
               1;
  }
  return OrderedCore::from_ranks(std::move(ranks));
}

std::pair<OrderedCore, CoreMap> ball_core(const MetricSpace& m, const std::vector<Rational>& weight) {
  if (weight.size() != m.size()) throw std::invalid_argument("ball_core: weight length mismatch");
  OrderedCore core = ball_core(m);
  std::vector<PointSet> sets;
  for (std::size_t i = 1; i <= core.size(); ++i) sets.push_back(core.set(i));
  std::vector<std::optional<std::size_t>> index(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) index[x] = core.rank(x) - 1;
  CoreMap cm = CoreMap::from_indices(m.size(), sets, m.space().labels(), weight, index);
  return {std::move(core), std::move(cm)};
}

ScalarField metric_minorant(const MetricSpace& m, const ScalarField& v) {
  return greatest_minorant(ball_core(m), m.space(), v).minorant;
}

TwoWeightProblem metric_problem(const MetricSpace& m, const std::vector<Rational>& omega,
                                const std::vector<Rational>& v, const Rational& p,
                                const Rational& q) {
  TwoWeightProblem problem{m.space(), ball_core(m), omega, v, p, q};
  problem.validate();
  return problem;
}

ConstantEstimate metric_constant_p1(const MetricSpace& m, const std::vector<Rational>& omega,
                             const std::vector<Rational>& v, const Rational& q,
                             OuterExponent outer) {
  return best_constant_p1(to_hardy_problem(metric_problem(m, omega, v, Rational(1), q)), outer);
}

ConstantEstimate two_weight_condition(const TwoWeightProblem& problem) {
  const Rational& p = problem.p;
  const Rational& q = problem.q;
  if (p <= 1) throw std::invalid_argument("p > 1 required; use the p = 1 constant");
  if (q == 1) throw std::invalid_argument("q = 1 < p is not covered by the p > 1 conditions");
  if (p <= q) return condition_p_le_q(problem);
  return condition_q_lt_p(problem, q < 1 ? QLessThanPRegime::qBelowOne : QLessThanPRegime::qAboveOne);
}

ConstantEstimate metric_condition(const MetricSpace& m, const std::vector<Rational>& omega,
                           const std::vector<Rational>& v, const Rational& p, const Rational& q) {
  if (p <= 1) throw std::invalid_argument("metric_condition requires p > 1");
  return two_weight_condition(metric_problem(m, omega, v, p, q));
}

}  // namespace hardy
