#include "hardy/random.hpp"

#include <algorithm>
#include <string>

namespace hardy {

std::size_t InstanceGenerator::uniform(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

bool InstanceGenerator::chance(unsigned percent) { return rng_() % 100 < percent; }

Rational InstanceGenerator::positive() {
  const auto num = static_cast<long>(uniform(1, 20));
  const auto den = static_cast<long>(uniform(1, 20));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational InstanceGenerator::weight(unsigned zeroPercent) {
  return chance(zeroPercent) ? Rational(0) : positive();
}

std::vector<Rational> InstanceGenerator::weights(std::size_t n, unsigned zeroPercent) {
  std::vector<Rational> out(n);
  for (auto& w : out) w = weight(zeroPercent);
  return out;
}

ScalarField InstanceGenerator::field(std::size_t n, unsigned zeroPercent) {
  return to_field(weights(n, zeroPercent));
}

MeasureSpace InstanceGenerator::space(std::size_t n, unsigned zeroPercent) {
  return MeasureSpace::with_weights(weights(n, zeroPercent));
}

OrderedCore InstanceGenerator::core(std::size_t n, std::size_t maxSets) {
  const std::size_t k = uniform(1, std::min(n, maxSets));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform(0, i - 1)]);
  std::vector<std::size_t> ranks(n);
  for (std::size_t i = 0; i < n; ++i) ranks[order[i]] = i < k ? i + 1 : uniform(1, k);
  return OrderedCore::from_ranks(std::move(ranks));
}

ScalarField InstanceGenerator::layered_field(const OrderedCore& core, unsigned zeroPercent) {
  ScalarField out(core.point_count());
  for (std::size_t i = 1; i <= core.size(); ++i) {
    const Extended value(weight(zeroPercent));
    for (auto s : core.layer(i)) out[s] = value;
  }
  return out;
}

CoreMap InstanceGenerator::core_map(const OrderedCore& core, std::size_t items) {
  std::vector<PointSet> sets;
  for (std::size_t i = 1; i <= core.size(); ++i) sets.push_back(core.set(i));
  // Occasionally keep the balls below the top set so that U0 is proper.
  const std::size_t top = chance(25) && core.size() > 1 ? uniform(1, core.size() - 1) : core.size();
  std::vector<std::string> labels;
  std::vector<Rational> tau;
  std::vector<std::optional<std::size_t>> index;
  for (std::size_t y = 0; y < items; ++y) {
    labels.push_back("y" + std::to_string(y));
    tau.push_back(weight(15));
    if (chance(10)) {
      index.emplace_back(std::nullopt);
    } else {
      index.emplace_back(uniform(0, top - 1));
    }
  }
  return CoreMap::from_indices(core.point_count(), sets, std::move(labels), std::move(tau), index);
}

HardyProblem InstanceGenerator::hardy_problem(std::size_t maxSize, const Rational& q,
                                              const Rational& p) {
  const std::size_t n = uniform(1, maxSize);
  MeasureSpace sp = space(n);
  const OrderedCore c = core(n);
  CoreMap cm = core_map(c, uniform(1, 8));
  std::vector<Rational> eta = weights(n, 5);
  HardyProblem problem{std::move(sp), std::move(eta), std::move(cm), p, q};
  problem.validate();
  return problem;
}

}  // namespace hardy
