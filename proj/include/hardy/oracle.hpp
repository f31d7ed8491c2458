#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hardy/hardy.hpp"

namespace hardy {

/// LHS / RHS of the Hardy inequality at f, with 0/0 = 0 and positive/0 = inf.
/// Evaluated directly from the balls, independently of the core machinery.
double ratio(const HardyProblem& problem, const std::vector<double>& f);

struct ExactNorm {
  double value = 0.0;
  /// Present at q = 1.
  std::optional<Rational> exact;
  /// Point whose point mass attains the maximum.
  std::optional<std::size_t> argmax;
};

/// Operator norm for p = 1, q >= 1: the largest ratio over point masses,
/// using u itself rather than its minorant.
ExactNorm exact_norm_p1(const HardyProblem& problem);

/// Optimum of  min sum g u mu  s.t.  sum_{A_i} g mu >= sum_{A_i} f mu  for all
/// core sets, g >= 0, solved with the exact simplex. Inputs must be finite.
Rational lp_variational(const OrderedCore& core, const MeasureSpace& space, const ScalarField& f,
                        const ScalarField& u);

/// Pointwise maximum of every per-layer value vector h that is non-increasing
/// in rank and below g on positive-mass points, with values drawn from
/// {0, +inf} and the values of |g|. Exhaustive; keep the core small.
ScalarField brute_force_minorant(const OrderedCore& core, const MeasureSpace& space,
                                 const ScalarField& g);

struct RatioReport {
  double lowerBound = 0.0;
  std::vector<double> argmax;
  std::size_t iterations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
};

struct RatioSearchOptions {
  std::size_t restarts = 8;
  /// Coordinate sweeps (or power steps for large p > 1 problems) per restart.
  std::size_t budget = 200;
  std::uint64_t seed = 1;
  /// Pairs are enumerated only when at most this many points carry mass.
  std::size_t maxPairPoints = 64;
};

/// Lower bound for the best constant: point masses, two-point supports with a
/// golden-section split, then multi-start coordinate ascent with the
/// right-hand side normalised to 1. Deterministic given the seed.
RatioReport maximize_ratio(const HardyProblem& problem, const RatioSearchOptions& options = {});

}  // namespace hardy
