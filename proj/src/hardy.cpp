#include "hardy/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hardy/minorant.hpp"

namespace hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double power(double base, const Rational& exponent) {
  if (base == kInf) return sgn(exponent) > 0 ? kInf : 0.0;
  if (base == 0.0) return sgn(exponent) > 0 ? 0.0 : (sgn(exponent) == 0 ? 1.0 : kInf);
  if (exponent == 1) return base;
  return std::pow(base, to_double(exponent));
}

/// x^e for an integer exponent, exactly.
Rational integer_power(const Rational& x, const mpz_class& e) {
  Rational base = e < 0 ? Rational(1 / x) : x;
  mpz_class n = abs(e);
  Rational out = 1;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

void check_weights(const std::vector<Rational>& w, std::size_t n, const char* what) {
  if (w.size() != n) throw std::invalid_argument(std::string(what) + ": length differs from point count");
  for (const auto& x : w) {
    if (sgn(x) < 0) throw std::invalid_argument(std::string(what) + ": negative weight");
  }
}

}  // namespace

void HardyProblem::validate() const {
  check_weights(eta, space.size(), "eta");
  if (cm.point_count() != space.size()) throw std::invalid_argument("core map point count mismatch");
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (sgn(q) <= 0) throw std::invalid_argument("q must be positive");
}

void TwoWeightProblem::validate() const {
  check_weights(omega, space.size(), "omega");
  check_weights(v, space.size(), "v");
  if (core.point_count() != space.size()) throw std::invalid_argument("core point count mismatch");
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (sgn(q) <= 0) throw std::invalid_argument("q must be positive");
}

HardyProblem to_hardy_problem(const TwoWeightProblem& problem) {
  problem.validate();
  const std::size_t n = problem.space.size();
  std::vector<Rational> eta(n);
  std::vector<Rational> tau(n);
  std::vector<PointSet> balls(n);
  std::vector<PointSet> chain(problem.core.size());
  for (std::size_t i = 1; i <= problem.core.size(); ++i) chain[i - 1] = problem.core.set(i);
  for (std::size_t s = 0; s < n; ++s) {
    eta[s] = problem.v[s] * problem.space.mu(s);
    tau[s] = problem.omega[s] * problem.space.mu(s);
    balls[s] = chain[problem.core.rank(s) - 1];
  }
  return HardyProblem{problem.space, std::move(eta),
                      CoreMap(n, problem.space.labels(), std::move(tau), std::move(balls)),
                      problem.p, problem.q};
}

const char* to_string(EstimateKind kind) {
  return kind == EstimateKind::exact ? "exact" : "equivalent";
}

Exponents make_exponents(const Rational& p, const Rational& q) {
  Exponents e{p, q, std::nullopt, std::nullopt};
  if (p != 1) e.pPrime = Rational(p / (p - 1));
  if (q != p) e.r = Rational(1 / (Rational(1 / q) - Rational(1 / p)));
  return e;
}

EtaDecomposition decompose_eta(const HardyProblem& problem) {
  problem.validate();
  const auto& space = problem.space;
  const auto reachable = reach(problem);
  EtaDecomposition out;
  out.u.resize(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    if (space.has_mass(s)) {
      out.u[s] = Extended(Rational(problem.eta[s] / space.mu(s)));
      if (sgn(problem.eta[s]) == 0 && sgn(reachable[s]) > 0) out.infinite = true;
    } else {
      out.u[s] = Extended::infinity();
      if (sgn(problem.eta[s]) > 0) out.dropped.push_back(s);
    }
  }
  return out;
}

std::vector<Rational> reach(const HardyProblem& problem) {
  // The balls are nested, so s is in B(y) iff B(y) reaches s's rank in the
  // induced chain; a suffix sum over chain indices gives every reach at once.
  const InducedCore induced = induced_core(problem.cm, problem.space);
  std::vector<Rational> byIndex(induced.core.size() + 2, Rational(0));
  for (std::size_t y = 0; y < problem.cm.size(); ++y) {
    if (induced.itemIndex[y]) byIndex[*induced.itemIndex[y]] += problem.cm.tau(y);
  }
  for (std::size_t j = induced.core.size(); j >= 1; --j) byIndex[j] += byIndex[j + 1];
  std::vector<Rational> out(problem.space.size(), Rational(0));
  for (std::size_t i = 0; i < induced.kept.size(); ++i) {
    out[induced.kept[i]] = byIndex[induced.core.rank(i)];
  }
  return out;
}

namespace {

ConstantEstimate infinite_estimate(EstimateKind kind, std::string notes) {
  ConstantEstimate e;
  e.value = kInf;
  e.kind = kind;
  e.notes = std::move(notes);
  return e;
}

ConstantEstimate constant_q_at_least_one(const HardyProblem& problem, const EtaDecomposition& eta) {
  const InducedCore induced = induced_core(problem.cm, problem.space);
  const ScalarField u = restrict_field(eta.u, induced.kept);
  const MinorantResult lower = greatest_minorant(induced.core, induced.space, u);
  const auto reachable = reach(problem);

  // Compare reach^{1/q} / u_ through reach^b / u_^a for q = a/b so that the
  // maximiser is found exactly and only one power is taken.
  const mpz_class a = problem.q.get_num();
  const mpz_class b = problem.q.get_den();
  const bool exactCompare = a <= 64 && b <= 64;

  std::optional<std::size_t> best;
  Rational bestKey = 0;
  double bestValue = 0.0;
  for (std::size_t i = 0; i < induced.kept.size(); ++i) {
    const Rational& r = reachable[induced.kept[i]];
    const Extended& m = lower.minorant[i];
    if (sgn(r) == 0 || m.is_infinite()) continue;
    if (m.is_zero()) return infinite_estimate(EstimateKind::exact, "minorant vanishes on a reachable point");
    if (exactCompare) {
      Rational key = integer_power(r, b) / integer_power(m.value(), a);
      if (!best || key > bestKey) {
        best = i;
        bestKey = key;
      }
    } else {
      const double value = power(to_double(r), Rational(1 / problem.q)) / m.to_double();
      if (!best || value > bestValue) {
        best = i;
        bestValue = value;
      }
    }
  }

  ConstantEstimate out;
  out.kind = EstimateKind::exact;
  out.notes = "sup_s tau({y : s in B(y)})^{1/q} / u_(s)";
  if (problem.q == 1) out.exact = Rational(0);
  if (!best) return out;
  const Rational& r = reachable[induced.kept[*best]];
  const Rational& m = lower.minorant[*best].value();
  if (problem.q == 1) {
    out.exact = Rational(r / m);
    out.value = to_double(*out.exact);
  } else {
    out.value = power(to_double(r), Rational(1 / problem.q)) / to_double(m);
  }
  return out;
}

/// Sum over z of inner(z)^{q/(1-q)} weight(z), raised to the outer exponent.
ConstantEstimate nested_sum_estimate(const std::vector<Extended>& inner,
                                     const std::vector<Rational>& weight, const Rational& q,
                                     OuterExponent outer, std::string notes) {
  const Rational innerExponent = q / (1 - q);
  const Rational outerExponent =
      outer == OuterExponent::homogeneous ? Rational((1 - q) / q) : Rational(1 / q);
  double total = 0.0;
  for (std::size_t z = 0; z < inner.size(); ++z) {
    if (sgn(weight[z]) == 0) continue;
    if (inner[z].is_infinite()) return infinite_estimate(EstimateKind::equivalent, notes);
    total += power(inner[z].to_double(), innerExponent) * to_double(weight[z]);
  }
  ConstantEstimate out;
  out.kind = EstimateKind::equivalent;
  out.value = power(total, outerExponent);
  out.notes = std::move(notes);
  return out;
}

ConstantEstimate constant_q_below_one(const HardyProblem& problem, const EtaDecomposition& eta,
                                      OuterExponent outer) {
  const InducedCore induced = induced_core(problem.cm, problem.space);
  const ScalarField u = restrict_field(eta.u, induced.kept);
  const MinorantResult lower = greatest_minorant(induced.core, induced.space, u);
  ScalarField inverse(lower.minorant.size());
  std::transform(lower.minorant.begin(), lower.minorant.end(), inverse.begin(),
                 [](const Extended& x) { return x.reciprocal(); });
  const LineMeasure lambda = induced_line_measure(induced.core, induced.space);
  const LineField rInverse = R_map(induced.core, induced.space, inverse);

  std::map<Rational, Extended> atValue;
  for (std::size_t i = 0; i < lambda.size(); ++i) atValue.emplace(lambda[i].position, rInverse[i]);

  // h(y) = R(1/u_) at mu(B(y)); position 0 carries no lambda mass and gives 0.
  const std::size_t m = problem.cm.size();
  std::vector<Rational> phi(m);
  std::vector<Extended> h(m, Extended(0));
  for (std::size_t y = 0; y < m; ++y) {
    phi[y] = problem.space.measure(problem.cm.ball(y));
    if (auto it = atValue.find(phi[y]); it != atValue.end()) h[y] = it->second;
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return phi[a] < phi[b]; });
  std::vector<Extended> inner(m);
  Extended running(0);
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && phi[order[j]] == phi[order[i]]) {
      running += h[order[j]] * Extended(problem.cm.tau(order[j]));
      ++j;
    }
    for (std::size_t k = i; k < j; ++k) inner[order[k]] = running;
    i = j;
  }
  return nested_sum_estimate(inner, problem.cm.tau(), problem.q, outer,
                             "nested sum over phi(y) <= phi(z) of R(1/u_)(phi(y)) tau(y)");
}

}  // namespace

ConstantEstimate best_constant_p1(const HardyProblem& problem, OuterExponent outer) {
  problem.validate();
  if (problem.p != 1) throw std::invalid_argument("best_constant_p1 requires p = 1");
  const EtaDecomposition eta = decompose_eta(problem);
  const EstimateKind kind = problem.q >= 1 ? EstimateKind::exact : EstimateKind::equivalent;
  if (eta.infinite) {
    return infinite_estimate(kind, "positive-mass eta-null point inside a tau-charged ball");
  }
  if (problem.q >= 1) return constant_q_at_least_one(problem, eta);
  return constant_q_below_one(problem, eta, outer);
}

ConstantEstimate halfline_constant(const LineMeasure& lambda, const LineField& w,
                                   const LineMeasure& nu, const Rational& q,
                                   OuterExponent outer) {
  if (w.size() != lambda.size()) throw std::invalid_argument("halfline_constant: w does not match lambda");
  if (sgn(q) <= 0 || q >= 1) throw std::invalid_argument("halfline_constant requires q in (0,1)");
  std::vector<Extended> inner(nu.size());
  std::vector<Rational> weight(nu.size());
  Extended running(0);
  Extended lowest = Extended::infinity();
  std::size_t next = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    while (next < lambda.size() && lambda[next].position <= nu[i].position) {
      lowest = std::min(lowest, w[next]);
      ++next;
    }
    running += lowest.reciprocal() * Extended(nu[i].mass);
    inner[i] = running;
    weight[i] = nu[i].mass;
  }
  return nested_sum_estimate(inner, weight, q, outer,
                             "half-line nested sum of nu / w_ over [0, x]");
}

HalfLineReduction reduce_to_halfline(const HardyProblem& problem) {
  problem.validate();
  if (problem.p != 1) throw std::invalid_argument("reduce_to_halfline requires p = 1");
  const EtaDecomposition eta = decompose_eta(problem);
  const InducedCore induced = induced_core(problem.cm, problem.space);
  const ScalarField u = restrict_field(eta.u, induced.kept);
  const MinorantResult lower = greatest_minorant(induced.core, induced.space, u);
  HalfLineReduction out;
  out.lambda = induced_line_measure(induced.core, induced.space);
  out.nu = pushforward_measure(problem.cm, problem.space);
  out.w = R_map(induced.core, induced.space, lower.minorant);
  return out;
}

std::vector<double> dual_weight(const TwoWeightProblem& problem) {
  const Exponents e = make_exponents(problem.p, problem.q);
  if (!e.pPrime) throw std::invalid_argument("dual weight requires p > 1");
  const Rational exponent = 1 - *e.pPrime;
  std::vector<double> out(problem.space.size(), 0.0);
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (!problem.space.has_mass(s)) continue;
    if (sgn(problem.v[s]) == 0) {
      out[s] = kInf;
    } else if (exponent.get_den() == 1) {
      out[s] = to_double(integer_power(problem.v[s], exponent.get_num()));
    } else {
      out[s] = power(to_double(problem.v[s]), exponent);
    }
  }
  return out;
}

namespace {

struct BallSums {
  /// tail[j]: sum of omega mu over ranks > j, for j = 0..k.
  std::vector<Rational> tail;
  /// ball[j]: sum of v^{1-p'} mu over ranks <= j, for j = 0..k.
  std::vector<double> ball;
};

BallSums ball_sums(const TwoWeightProblem& problem, const std::vector<double>& dual) {
  const std::size_t k = problem.core.size();
  std::vector<Rational> layerOmega(k + 1, Rational(0));
  BallSums out{std::vector<Rational>(k + 1, Rational(0)), std::vector<double>(k + 1, 0.0)};
  for (std::size_t i = 1; i <= k; ++i) {
    double layerDual = 0.0;
    for (auto s : problem.core.layer(i)) {
      if (!problem.space.has_mass(s)) continue;
      layerOmega[i] += problem.omega[s] * problem.space.mu(s);
      layerDual += dual[s] * to_double(problem.space.mu(s));
    }
    out.ball[i] = out.ball[i - 1] + layerDual;
  }
  for (std::size_t j = k; j-- > 0;) out.tail[j] = out.tail[j + 1] + layerOmega[j + 1];
  return out;
}

}  // namespace

ConstantEstimate condition_p_le_q(const TwoWeightProblem& problem) {
  problem.validate();
  if (!(problem.p > 1 && problem.p <= problem.q)) {
    throw std::invalid_argument("condition_p_le_q requires 1 < p <= q");
  }
  const Exponents e = make_exponents(problem.p, problem.q);
  const auto dual = dual_weight(problem);
  const BallSums sums = ball_sums(problem, dual);
  const Rational invQ = 1 / problem.q;
  const Rational invPPrime = 1 / *e.pPrime;
  double best = 0.0;
  for (std::size_t j = 1; j <= problem.core.size(); ++j) {
    const double tail = to_double(sums.tail[j]);
    if (tail == 0.0) continue;
    best = std::max(best, power(tail, invQ) * power(sums.ball[j], invPPrime));
  }
  ConstantEstimate out;
  out.value = best;
  out.kind = EstimateKind::equivalent;
  out.notes = "sup over core sets of tail(omega)^{1/q} ball(v^{1-p'})^{1/p'}";
  return out;
}

ConstantEstimate condition_q_lt_p(const TwoWeightProblem& problem, QLessThanPRegime regime) {
  problem.validate();
  const Rational& p = problem.p;
  const Rational& q = problem.q;
  if (regime == QLessThanPRegime::qBelowOne && !(sgn(q) > 0 && q < 1 && p > 1)) {
    throw std::invalid_argument("regime 0 < q < 1 < p does not match the exponents");
  }
  if (regime == QLessThanPRegime::qAboveOne && !(q > 1 && q < p)) {
    throw std::invalid_argument("regime 1 < q < p does not match the exponents");
  }
  const Exponents e = make_exponents(p, q);
  const auto dual = dual_weight(problem);
  const BallSums sums = ball_sums(problem, dual);
  const Rational& r = *e.r;
  Rational tailExponent;
  Rational ballExponent;
  if (regime == QLessThanPRegime::qBelowOne) {
    tailExponent = r / p;
    ballExponent = r / *e.pPrime;
  } else {
    const Rational qPrime = q / (q - 1);
    tailExponent = r / q;
    ballExponent = r / qPrime;
  }
  double total = 0.0;
  for (std::size_t s = 0; s < problem.space.size(); ++s) {
    if (!problem.space.has_mass(s)) continue;
    const std::size_t j = problem.core.rank(s);
    const double tail = to_double(sums.tail[j]);
    if (tail == 0.0) continue;
    const double density = regime == QLessThanPRegime::qBelowOne
                               ? to_double(problem.omega[s]) * to_double(problem.space.mu(s))
                               : dual[s] * to_double(problem.space.mu(s));
    total += power(tail, tailExponent) * power(sums.ball[j], ballExponent) * density;
  }
  ConstantEstimate out;
  out.value = total;
  out.kind = EstimateKind::equivalent;
  out.notes = regime == QLessThanPRegime::qBelowOne
                  ? "sum_s tail^{r/p} ball^{r/p'} omega(s) mu(s)"
                  : "sum_s tail^{r/q} ball^{r/q'} v^{1-p'}(s) mu(s)";
  return out;
}

}  // namespace hardy
