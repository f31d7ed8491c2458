#include "hardy/core_spaces.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hardy {

PointSet make_point_set(std::vector<std::size_t> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// --- MeasureSpace ----------------------------------------------------------

MeasureSpace::MeasureSpace(std::vector<std::string> labels, std::vector<Rational> mu)
    : labels_(std::move(labels)), mu_(std::move(mu)) {
  if (labels_.size() != mu_.size()) {
    throw std::invalid_argument("measure space: label count differs from weight count");
  }
  std::set<std::string> seen;
  for (std::size_t s = 0; s < mu_.size(); ++s) {
    if (sgn(mu_[s]) < 0) {
      throw std::invalid_argument("measure space: negative weight at point " + labels_[s]);
    }
    if (!seen.insert(labels_[s]).second) {
      throw std::invalid_argument("measure space: duplicate label " + labels_[s]);
    }
  }
}

MeasureSpace MeasureSpace::with_weights(std::vector<Rational> mu) {
  std::vector<std::string> labels(mu.size());
  for (std::size_t s = 0; s < mu.size(); ++s) labels[s] = "s" + std::to_string(s);
  return MeasureSpace(std::move(labels), std::move(mu));
}

Rational MeasureSpace::measure(const PointSet& set) const {
  Rational total = 0;
  for (auto s : set) total += mu_.at(s);
  return total;
}

Rational MeasureSpace::total() const {
  Rational total = 0;
  for (const auto& m : mu_) total += m;
  return total;
}

MeasureSpace MeasureSpace::restrict_to(const std::vector<std::size_t>& kept) const {
  std::vector<std::string> labels;
  std::vector<Rational> mu;
  labels.reserve(kept.size());
  mu.reserve(kept.size());
  for (auto s : kept) {
    labels.push_back(labels_.at(s));
    mu.push_back(mu_.at(s));
  }
  return MeasureSpace(std::move(labels), std::move(mu));
}

// --- OrderedCore -----------------------------------------------------------

OrderedCore::OrderedCore(std::size_t pointCount, std::vector<PointSet> chain)
    : ranks_(pointCount, 0) {
  PointSet previous;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    PointSet current = make_point_set(std::move(chain[i]));
    if (!current.empty() && current.back() >= pointCount) {
      throw std::invalid_argument("ordered core: point index out of range in chain member " +
                                  std::to_string(i + 1));
    }
    if (current.size() <= previous.size() ||
        !std::includes(current.begin(), current.end(), previous.begin(), previous.end())) {
      throw std::invalid_argument("ordered core: chain member " + std::to_string(i + 1) +
                                  " does not strictly contain its predecessor");
    }
    PointSet layer;
    std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(),
                        std::back_inserter(layer));
    for (auto s : layer) ranks_[s] = i + 1;
    layers_.push_back(std::move(layer));
    previous = std::move(current);
  }
  if (previous.size() != pointCount) {
    throw std::invalid_argument("ordered core: last chain member is not the whole point set");
  }
}

OrderedCore OrderedCore::prefixes(std::size_t pointCount) {
  std::vector<std::size_t> ranks(pointCount);
  std::iota(ranks.begin(), ranks.end(), std::size_t{1});
  return from_ranks(std::move(ranks));
}

OrderedCore OrderedCore::from_ranks(std::vector<std::size_t> ranks) {
  const std::size_t k = ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
  std::vector<PointSet> layers(k);
  for (std::size_t s = 0; s < ranks.size(); ++s) {
    if (ranks[s] == 0 || ranks[s] > k) throw std::invalid_argument("ordered core: rank out of range");
    layers[ranks[s] - 1].push_back(s);
  }
  std::vector<PointSet> chain;
  PointSet acc;
  for (auto& layer : layers) {
    if (layer.empty()) throw std::invalid_argument("ordered core: unused rank");
    acc.insert(acc.end(), layer.begin(), layer.end());
    chain.push_back(acc);
  }
  return OrderedCore(ranks.size(), std::move(chain));
}

PointSet OrderedCore::set(std::size_t i) const {
  if (i > layers_.size()) throw std::out_of_range("ordered core: chain index out of range");
  PointSet out;
  for (std::size_t j = 0; j < i; ++j) out.insert(out.end(), layers_[j].begin(), layers_[j].end());
  return make_point_set(std::move(out));
}

// --- CoreMap ---------------------------------------------------------------

CoreMap::CoreMap(std::size_t pointCount, std::vector<std::string> labels,
                 std::vector<Rational> tau, std::vector<PointSet> balls)
    : pointCount_(pointCount), labels_(std::move(labels)), tau_(std::move(tau)),
      balls_(std::move(balls)) {
  if (labels_.size() != tau_.size() || tau_.size() != balls_.size()) {
    throw std::invalid_argument("core map: labels, tau and balls differ in length");
  }
  for (std::size_t y = 0; y < balls_.size(); ++y) {
    if (sgn(tau_[y]) < 0) throw std::invalid_argument("core map: negative tau at item " + labels_[y]);
    balls_[y] = make_point_set(std::move(balls_[y]));
    if (!balls_[y].empty() && balls_[y].back() >= pointCount_) {
      throw std::invalid_argument("core map: point index out of range in ball of " + labels_[y]);
    }
  }
  // Sorting by cardinality reduces the total-order check to consecutive pairs.
  std::vector<std::size_t> order(balls_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return balls_[a].size() < balls_[b].size(); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& small = balls_[order[i - 1]];
    const auto& large = balls_[order[i]];
    if (!std::includes(large.begin(), large.end(), small.begin(), small.end())) {
      throw std::invalid_argument("core map: balls of " + labels_[order[i - 1]] + " and " +
                                  labels_[order[i]] + " are not ordered by inclusion");
    }
  }
}

CoreMap CoreMap::from_indices(std::size_t pointCount, const std::vector<PointSet>& sets,
                              std::vector<std::string> labels, std::vector<Rational> tau,
                              const std::vector<std::optional<std::size_t>>& ballIndex) {
  std::vector<PointSet> balls;
  balls.reserve(ballIndex.size());
  for (const auto& index : ballIndex) {
    if (!index) {
      balls.emplace_back();
    } else if (*index >= sets.size()) {
      throw std::invalid_argument("core map: ball index " + std::to_string(*index) +
                                  " out of range");
    } else {
      balls.push_back(sets[*index]);
    }
  }
  return CoreMap(pointCount, std::move(labels), std::move(tau), std::move(balls));
}

CoreMap CoreMap::scaled(const Rational& factor) const {
  std::vector<Rational> tau = tau_;
  for (auto& t : tau) t *= factor;
  return CoreMap(pointCount_, labels_, std::move(tau), balls_);
}

// --- operations ------------------------------------------------------------

std::size_t rank_of(const OrderedCore& core, std::size_t s) {
  if (s >= core.point_count()) throw std::out_of_range("rank_of: point index out of range");
  return core.rank(s);
}

bool core_order_leq(const OrderedCore& core, std::size_t u, std::size_t v) {
  return rank_of(core, u) <= rank_of(core, v);
}

bool is_core_decreasing(const OrderedCore& core, const ScalarField& f) {
  if (f.size() != core.point_count()) return false;
  std::optional<Extended> previous;
  for (std::size_t i = 1; i <= core.size(); ++i) {
    const auto& layer = core.layer(i);
    const Extended& value = f[layer.front()];
    for (auto s : layer) {
      if (f[s] != value) return false;
    }
    if (previous && value > *previous) return false;
    previous = value;
  }
  return true;
}

bool is_down_set(const OrderedCore& core, const PointSet& set) {
  // Down-sets are exactly the unions of the first j layers.
  std::vector<bool> member(core.point_count(), false);
  std::size_t maxRank = 0;
  for (auto s : set) {
    member.at(s) = true;
    maxRank = std::max(maxRank, core.rank(s));
  }
  for (std::size_t s = 0; s < core.point_count(); ++s) {
    if (core.rank(s) <= maxRank && !member[s]) return false;
  }
  return true;
}

InducedCore induced_core(const CoreMap& cm, const MeasureSpace& space) {
  if (cm.point_count() != space.size()) {
    throw std::invalid_argument("induced_core: core map and space have different point counts");
  }
  InducedCore out;
  std::vector<bool> covered(space.size(), false);
  for (const auto& ball : cm.balls()) {
    for (auto s : ball) covered[s] = true;
  }
  std::vector<std::size_t> restrictedIndex(space.size(), space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    if (covered[s]) {
      restrictedIndex[s] = out.kept.size();
      out.kept.push_back(s);
    }
  }
  out.restricted = out.kept.size() != space.size();
  out.space = space.restrict_to(out.kept);

  // Distinct non-empty balls, ordered by size; nesting is a CoreMap invariant.
  std::vector<std::size_t> sizes;
  for (const auto& ball : cm.balls()) {
    if (!ball.empty()) sizes.push_back(ball.size());
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  std::vector<PointSet> chain(sizes.size());
  out.itemIndex.assign(cm.size(), std::nullopt);
  for (std::size_t y = 0; y < cm.size(); ++y) {
    const auto& ball = cm.ball(y);
    if (ball.empty()) continue;
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(sizes.begin(), sizes.end(), ball.size()) - sizes.begin());
    out.itemIndex[y] = idx + 1;
    if (chain[idx].empty()) {
      for (auto s : ball) chain[idx].push_back(restrictedIndex[s]);
    }
  }
  out.core = OrderedCore(out.kept.size(), std::move(chain));
  return out;
}

ScalarField restrict_field(const ScalarField& field, const std::vector<std::size_t>& kept) {
  ScalarField out;
  out.reserve(kept.size());
  for (auto s : kept) out.push_back(field.at(s));
  return out;
}

}  // namespace hardy
