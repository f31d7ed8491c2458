#pragma once

#include <cstdint>
#include <random>

#include "hardy/hardy.hpp"

namespace hardy {

/// Seeded source of small random instances. Rationals have numerator and
/// denominator in 1..20; sequences are reproducible for a given seed.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool chance(unsigned percent);

  Rational positive();
  /// Zero with the given chance, otherwise positive().
  Rational weight(unsigned zeroPercent);
  std::vector<Rational> weights(std::size_t n, unsigned zeroPercent);
  ScalarField field(std::size_t n, unsigned zeroPercent);

  MeasureSpace space(std::size_t n, unsigned zeroPercent = 20);
  /// Random full chain of at most `maxSets` members.
  OrderedCore core(std::size_t n, std::size_t maxSets = 6);
  /// Field constant on every layer.
  ScalarField layered_field(const OrderedCore& core, unsigned zeroPercent);
  /// Balls drawn from the chain, sometimes empty, sometimes not covering U.
  CoreMap core_map(const OrderedCore& core, std::size_t items);
  /// p = 1 unless given; eta mostly positive.
  HardyProblem hardy_problem(std::size_t maxSize, const Rational& q, const Rational& p = 1);

 private:
  std::mt19937_64 rng_;
};

}  // namespace hardy
