#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/core_spaces.hpp"
#include "hardy/transition.hpp"

namespace hardy {

/// One instance of
///   ( sum_y ( sum_{s in B(y)} f mu )^q tau(y) )^{1/q} <= C ( sum_s f^p eta )^{1/p}.
struct HardyProblem {
  MeasureSpace space;
  std::vector<Rational> eta;
  CoreMap cm;
  Rational p{1};
  Rational q{1};

  /// Throws std::invalid_argument when sizes disagree, p < 1, q <= 0 or a
  /// weight is negative.
  void validate() const;
};

/// Two-weight problem on a point-indexed core: Y = U, B(x) is the smallest
/// core set containing x, tau = omega mu and eta = v mu. Metric ball cores
/// are the motivating case.
struct TwoWeightProblem {
  MeasureSpace space;
  OrderedCore core;
  std::vector<Rational> omega;
  std::vector<Rational> v;
  Rational p{1};
  Rational q{1};

  void validate() const;
};

HardyProblem to_hardy_problem(const TwoWeightProblem& problem);

enum class EstimateKind { exact, equivalent };

struct ConstantEstimate {
  double value = 0.0;
  /// Present when no irrational power was needed.
  std::optional<Rational> exact;
  EstimateKind kind = EstimateKind::equivalent;
  std::string notes;
};

const char* to_string(EstimateKind kind);

struct Exponents {
  Rational p;
  Rational q;
  /// p / (p - 1); empty for p = 1 (infinite).
  std::optional<Rational> pPrime;
  /// 1/r = 1/q - 1/p; empty when q = p (infinite).
  std::optional<Rational> r;
};

Exponents make_exponents(const Rational& p, const Rational& q);

/// Outer exponent used for the q in (0,1) display.
enum class OuterExponent {
  homogeneous,  ///< (1 - q) / q, scales as tau^{1/q}
  inverseQ,     ///< 1 / q
};

struct EtaDecomposition {
  /// eta / mu on positive-mass points, +inf on mu-null points.
  ScalarField u;
  /// A positive-mass, eta-null point lies in a ball of positive tau weight.
  bool infinite = false;
  /// mu-null points carrying eta mass.
  std::vector<std::size_t> dropped;
};

EtaDecomposition decompose_eta(const HardyProblem& problem);

/// tau({y : s in B(y)}) for every point.
std::vector<Rational> reach(const HardyProblem& problem);

/// Best constant for p = 1. Exact for q >= 1, equivalent for q in (0,1).
ConstantEstimate best_constant_p1(const HardyProblem& problem,
                                   OuterExponent outer = OuterExponent::homogeneous);

/// ( sum_z ( sum_{x <= z} nu(x) / w_(x) )^{q/(1-q)} nu(z) )^E over the atoms
/// of nu, where w_(x) is the minimum of w over the lambda atoms in [0, x].
ConstantEstimate halfline_constant(const LineMeasure& lambda, const LineField& w,
                                   const LineMeasure& nu, const Rational& q,
                                   OuterExponent outer = OuterExponent::homogeneous);

struct HalfLineReduction {
  LineMeasure lambda;
  LineMeasure nu;
  /// R applied to the greatest core-decreasing minorant of u.
  LineField w;
};

HalfLineReduction reduce_to_halfline(const HardyProblem& problem);

/// Two-weight supremum over core sets A of
///   (sum_{s not in A} omega mu)^{1/q} (sum_{s in A} v^{1-p'} mu)^{1/p'}
/// for 1 < p <= q.
ConstantEstimate condition_p_le_q(const TwoWeightProblem& problem);

enum class QLessThanPRegime {
  qBelowOne,  ///< 0 < q < 1 < p
  qAboveOne,  ///< 1 < q < p
};

/// Integral condition for q < p, returned without an outer power.
ConstantEstimate condition_q_lt_p(const TwoWeightProblem& problem, QLessThanPRegime regime);

/// v^{1-p'} per point as binary64 (exact when the exponent is an integer).
std::vector<double> dual_weight(const TwoWeightProblem& problem);

}  // namespace hardy
