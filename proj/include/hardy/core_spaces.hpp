#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hardy/rational.hpp"

namespace hardy {

/// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<std::size_t>;

/// Finite point set with exact non-negative weights. The sigma-algebra is the
/// power set.
class MeasureSpace {
 public:
  MeasureSpace() = default;
  MeasureSpace(std::vector<std::string> labels, std::vector<Rational> mu);

  /// Unit-labelled space "s0", "s1", ...
  static MeasureSpace with_weights(std::vector<Rational> mu);

  [[nodiscard]] std::size_t size() const { return mu_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Rational>& mu() const { return mu_; }
  [[nodiscard]] const Rational& mu(std::size_t s) const { return mu_.at(s); }
  [[nodiscard]] bool has_mass(std::size_t s) const { return sgn(mu_.at(s)) > 0; }

  [[nodiscard]] Rational measure(const PointSet& set) const;
  [[nodiscard]] Rational total() const;

  /// Sub-space on the listed points, in the listed order.
  [[nodiscard]] MeasureSpace restrict_to(const std::vector<std::size_t>& kept) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> mu_;
};

/// Strictly nested chain A_1 < A_2 < ... < A_k whose last member is the whole
/// point set. The empty set is the implicit A_0. Chain indices are 1-based so
/// that rank_of(s) = i means s first appears in A_i.
class OrderedCore {
 public:
  OrderedCore() = default;
  /// Validates strict nesting and fullness; throws std::invalid_argument.
  OrderedCore(std::size_t pointCount, std::vector<PointSet> chain);

  /// Chain of prefixes {0}, {0,1}, ..., {0..n-1}.
  static OrderedCore prefixes(std::size_t pointCount);
  /// Chain built from per-point ranks (1-based, every rank in 1..k used).
  static OrderedCore from_ranks(std::vector<std::size_t> ranks);

  [[nodiscard]] std::size_t point_count() const { return ranks_.size(); }
  /// Number of non-empty chain members k.
  [[nodiscard]] std::size_t size() const { return layers_.size(); }
  [[nodiscard]] std::size_t rank(std::size_t s) const { return ranks_.at(s); }
  [[nodiscard]] const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// Layer A_i \ A_{i-1}, 1-based.
  [[nodiscard]] const PointSet& layer(std::size_t i) const { return layers_.at(i - 1); }
  /// Chain member A_i, 1-based.
  [[nodiscard]] PointSet set(std::size_t i) const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<PointSet> layers_;
};

/// Index set Y with weights tau and a ball B(y) per item. The non-empty
/// balls must be totally ordered by inclusion; they need not cover U.
class CoreMap {
 public:
  CoreMap() = default;
  /// Throws std::invalid_argument on out-of-range points, negative weights,
  /// or two incomparable balls.
  CoreMap(std::size_t pointCount, std::vector<std::string> labels, std::vector<Rational> tau,
          std::vector<PointSet> balls);

  /// Items reference entries of `sets` by index; nullopt is the empty ball.
  static CoreMap from_indices(std::size_t pointCount, const std::vector<PointSet>& sets,
                              std::vector<std::string> labels, std::vector<Rational> tau,
                              const std::vector<std::optional<std::size_t>>& ballIndex);

  [[nodiscard]] std::size_t point_count() const { return pointCount_; }
  [[nodiscard]] std::size_t size() const { return tau_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Rational>& tau() const { return tau_; }
  [[nodiscard]] const Rational& tau(std::size_t y) const { return tau_.at(y); }
  [[nodiscard]] const PointSet& ball(std::size_t y) const { return balls_.at(y); }
  [[nodiscard]] const std::vector<PointSet>& balls() const { return balls_; }

  /// Same balls with every tau multiplied by `factor` (>= 0).
  [[nodiscard]] CoreMap scaled(const Rational& factor) const;

 private:
  std::size_t pointCount_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> tau_;
  std::vector<PointSet> balls_;
};

/// Result of inducing an ordered core from a core map. When the balls do not
/// cover every point, `space` is restricted to their union U0 and `kept`
/// maps restricted indices back to the original ones.
struct InducedCore {
  OrderedCore core;
  MeasureSpace space;
  std::vector<std::size_t> kept;
  /// Per item: 1-based chain index of B(y) in `core`, nullopt for B(y) empty.
  std::vector<std::optional<std::size_t>> itemIndex;
  bool restricted = false;
};

std::size_t rank_of(const OrderedCore& core, std::size_t s);
bool core_order_leq(const OrderedCore& core, std::size_t u, std::size_t v);
/// Constant on every layer and non-increasing in rank.
bool is_core_decreasing(const OrderedCore& core, const ScalarField& f);
bool is_down_set(const OrderedCore& core, const PointSet& set);
InducedCore induced_core(const CoreMap& cm, const MeasureSpace& space);

/// Picks out the entries of `field` at the `kept` indices.
ScalarField restrict_field(const ScalarField& field, const std::vector<std::size_t>& kept);

/// Normalizes a list of point indices into a PointSet.
PointSet make_point_set(std::vector<std::size_t> points);

}  // namespace hardy
