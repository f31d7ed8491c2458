#include "hardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "hardy/metric.hpp"
#include "hardy/minorant.hpp"
#include "hardy/oracle.hpp"
#include "hardy/random.hpp"

namespace hardy {

bool close_relative(double a, double b, double tolerance) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b) || std::isnan(a) || std::isnan(b)) return false;
  return std::abs(a - b) <= tolerance * std::max(std::abs(a), std::abs(b));
}

namespace {

using Check = std::function<std::string(InstanceGenerator&, std::size_t)>;

std::string fmt(double x) { return format_double(x); }

/// Runs `check` once per instance; an empty string means the instance passed.
SuiteResult run_checks(const std::string& name, const SuiteOptions& options, std::uint64_t salt,
                       const Check& check) {
  SuiteResult result;
  result.name = name;
  InstanceGenerator gen(options.seed * 0x9E3779B97F4A7C15ULL + salt);
  for (std::size_t i = 0; i < options.count; ++i) {
    std::string failure;
    try {
      failure = check(gen, i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++result.total;
    if (failure.empty()) {
      ++result.passed;
    } else if (result.failures.size() < 5) {
      result.failures.push_back("instance " + std::to_string(i) + ": " + failure);
    }
  }
  return result;
}

Rational pick(InstanceGenerator& gen, const std::vector<Rational>& values) {
  return values[gen.uniform(0, values.size() - 1)];
}

/// Greatest minorant of u = eta / mu over the induced core, in original indices.
ScalarField minorant_of_u(const HardyProblem& problem) {
  const EtaDecomposition eta = decompose_eta(problem);
  const InducedCore induced = induced_core(problem.cm, problem.space);
  const MinorantResult lower =
      greatest_minorant(induced.core, induced.space, restrict_field(eta.u, induced.kept));
  ScalarField out = eta.u;
  for (std::size_t i = 0; i < induced.kept.size(); ++i) out[induced.kept[i]] = lower.minorant[i];
  return out;
}

bool same_estimate(const ConstantEstimate& a, const ConstantEstimate& b, double tolerance) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return close_relative(a.value, b.value, tolerance);
}

std::string duality(InstanceGenerator& gen, const SuiteOptions& o) {
  const std::size_t n = gen.uniform(1, o.size);
  const MeasureSpace space = gen.space(n);
  const OrderedCore core = gen.core(n);
  const ScalarField f = gen.field(n, 20);
  const ScalarField u = gen.field(n, 10);
  const Extended formula = variational_value(core, space, f, u);
  const Rational lp = lp_variational(core, space, f, u);
  if (!(formula == Extended(lp))) return "formula " + to_string(formula) + " != LP " + to_string(lp);
  const ScalarField g = push_mass_witness(core, space, f, u);
  for (std::size_t i = 1; i <= core.size(); ++i) {
    Extended have(0);
    Extended need(0);
    for (auto s : core.set(i)) {
      have += g[s] * Extended(space.mu(s));
      need += f[s] * Extended(space.mu(s));
    }
    if (have < need) return "witness infeasible on A_" + std::to_string(i);
  }
  if (!(weighted_sum(space, g, u) == formula)) return "witness objective differs";
  return {};
}

std::string minorant(InstanceGenerator& gen, const SuiteOptions& o) {
  const std::size_t n = gen.uniform(1, o.size);
  const MeasureSpace space = gen.space(n);
  const OrderedCore core = gen.core(n);
  const ScalarField g = gen.field(n, 15);
  const MinorantResult fast = greatest_minorant(core, space, g);
  if (fast.minorant != brute_force_minorant(core, space, g)) return "differs from enumeration";
  if (!is_core_decreasing(core, fast.minorant)) return "not core-decreasing";
  if (greatest_minorant(core, space, fast.minorant).minorant != fast.minorant) return "not idempotent";
  return {};
}

std::string transition(InstanceGenerator& gen, const SuiteOptions& o) {
  const std::size_t n = gen.uniform(1, o.size);
  const MeasureSpace space = gen.space(n);
  const OrderedCore core = gen.core(n);
  const LineMeasure lambda = induced_line_measure(core, space);
  LineField phi(lambda.size());
  for (auto& x : phi) x = Extended(gen.weight(15));

  // (i) R Q phi = phi.
  if (!lambda.empty() && R_map(core, space, Q_map(core, space, phi)) != phi) return "(i) RQ != id";

  // (ii) Q R f = f on positive-mass points for layer-constant f.
  const ScalarField layered = gen.layered_field(core, 15);
  if (!lambda.empty()) {
    const ScalarField back = Q_map(core, space, R_map(core, space, layered));
    for (std::size_t s = 0; s < n; ++s) {
      if (space.has_mass(s) && !(back[s] == layered[s])) return "(ii) QR != id";
    }
  }

  // (iii) integrals over core sets are carried over for any f and phi.
  const ScalarField f = gen.field(n, 20);
  const LineField rf = R_map(core, space, f);
  const ScalarField qphi = lambda.empty() ? ScalarField(n, Extended(0)) : Q_map(core, space, phi);
  for (std::size_t j = 1; j <= core.size(); ++j) {
    const PointSet a = core.set(j);
    Extended lhs(0);
    for (auto s : a) lhs += f[s] * qphi[s] * Extended(space.mu(s));
    const Rational edge = space.measure(a);
    Extended rhs(0);
    for (std::size_t i = 0; i < lambda.size() && lambda[i].position <= edge; ++i) {
      rhs += rf[i] * phi[i] * Extended(lambda[i].mass);
    }
    if (!(lhs == rhs)) return "(iii) fails on A_" + std::to_string(j);
  }

  // (iv) R is multiplicative on layer-constant fields.
  const ScalarField other = gen.layered_field(core, 15);
  ScalarField product(n);
  for (std::size_t s = 0; s < n; ++s) product[s] = layered[s] * other[s];
  const LineField rProduct = R_map(core, space, product);
  const LineField r1 = R_map(core, space, layered);
  const LineField r2 = R_map(core, space, other);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (!(rProduct[i] == r1[i] * r2[i])) return "(iv) R(fg) != R(f)R(g)";
  }

  // (v) equal integrals over every core set iff equal on positive-mass points.
  ScalarField changed = layered;
  for (std::size_t i = 1; i <= core.size(); ++i) {
    if (!gen.chance(30)) continue;
    const Extended value(gen.weight(15));
    for (auto s : core.layer(i)) changed[s] = value;
  }
  bool sameIntegrals = true;
  for (std::size_t j = 1; j <= core.size(); ++j) {
    Extended a(0);
    Extended b(0);
    for (auto s : core.set(j)) {
      a += layered[s] * Extended(space.mu(s));
      b += changed[s] * Extended(space.mu(s));
    }
    sameIntegrals = sameIntegrals && a == b;
  }
  bool samePositive = true;
  for (std::size_t s = 0; s < n; ++s) {
    if (space.has_mass(s)) samePositive = samePositive && layered[s] == changed[s];
  }
  if (sameIntegrals != samePositive) return "(v) integrals do not determine the field";
  return {};
}

std::string equimeasurability(InstanceGenerator& gen, const SuiteOptions& o) {
  const std::size_t n = gen.uniform(1, std::min<std::size_t>(o.size, 8));
  const MeasureSpace space = gen.space(n);
  const OrderedCore core = gen.core(n);
  const CoreMap cm = gen.core_map(core, gen.uniform(1, 8));
  const ScalarField f = gen.field(n, 20);
  if (!check_equimeasurable(cm, space, f)) return "distribution functions differ";
  const LineMeasure nu = pushforward_measure(cm, space);
  std::vector<Rational> probes{Rational(0)};
  for (std::size_t y = 0; y < cm.size(); ++y) {
    const Rational x = space.measure(cm.ball(y));
    probes.push_back(x);
    probes.push_back(x + Rational(1, 2));
  }
  for (const auto& x : probes) {
    Rational direct = 0;
    for (std::size_t y = 0; y < cm.size(); ++y) {
      if (space.measure(cm.ball(y)) <= x) direct += cm.tau(y);
    }
    if (nu.mass_up_to(x) != direct) return "nu([0,x]) differs at x = " + to_string(x);
  }
  return {};
}

std::string exact_constant(InstanceGenerator& gen, const SuiteOptions& o, std::size_t i) {
  static const std::vector<Rational> qs{Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  const Rational q = qs[i % qs.size()];
  HardyProblem problem = gen.hardy_problem(o.size, q);
  const double tol = 1e-12;
  const ConstantEstimate est = best_constant_p1(problem);
  const ExactNorm norm = exact_norm_p1(problem);
  if (q == 1) {
    if (std::isinf(est.value) != std::isinf(norm.value)) return "infinite flag differs from oracle";
    if (!std::isinf(est.value) && *est.exact != *norm.exact) {
      return "formula " + to_string(*est.exact) + " != oracle " + to_string(*norm.exact);
    }
  } else if (!close_relative(est.value, norm.value, tol)) {
    return "formula " + fmt(est.value) + " != oracle " + fmt(norm.value);
  }

  double pointMax = 0.0;
  for (std::size_t s = 0; s < problem.space.size(); ++s) {
    if (!problem.space.has_mass(s)) continue;
    std::vector<double> f(problem.space.size(), 0.0);
    f[s] = 1.0;
    pointMax = std::max(pointMax, ratio(problem, f));
  }
  if (!close_relative(pointMax, norm.value, tol)) return "oracle is not the point-mass maximum";

  // Replacing u by its minorant changes neither side.
  const ScalarField lower = minorant_of_u(problem);
  HardyProblem replaced = problem;
  for (std::size_t s = 0; s < problem.space.size(); ++s) {
    if (problem.space.has_mass(s)) replaced.eta[s] = lower[s].value() * problem.space.mu(s);
  }
  const ConstantEstimate est2 = best_constant_p1(replaced);
  const ExactNorm norm2 = exact_norm_p1(replaced);
  if (!(est2.value == est.value) || est2.exact != est.exact) return "formula moved under u -> u_";
  if (q == 1 ? norm2.exact != norm.exact : !close_relative(norm2.value, norm.value, tol)) {
    return "oracle moved under u -> u_";
  }
  return {};
}

std::string halfline_identity(InstanceGenerator& gen, const SuiteOptions& o, std::size_t i) {
  static const std::vector<Rational> qs{Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                        Rational(1, 3), Rational(2, 3)};
  const Rational q = qs[i % qs.size()];
  const HardyProblem problem = gen.hardy_problem(o.size, q);
  const HalfLineReduction red = reduce_to_halfline(problem);
  for (auto outer : {OuterExponent::homogeneous, OuterExponent::inverseQ}) {
    const double direct = best_constant_p1(problem, outer).value;
    const double line = halfline_constant(red.lambda, red.w, red.nu, q, outer).value;
    if (!close_relative(direct, line, 1e-12)) return "direct " + fmt(direct) + " != half-line " + fmt(line);
  }
  return {};
}

std::string scaling(InstanceGenerator& gen, const SuiteOptions& o, std::size_t i) {
  static const std::vector<Rational> qs{Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                        Rational(1),    Rational(3, 2), Rational(2)};
  static const std::vector<Rational> ts{Rational(2), Rational(3), Rational(1, 2), Rational(7, 3)};
  const Rational q = qs[i % qs.size()];
  const Rational t = pick(gen, ts);
  const HardyProblem problem = gen.hardy_problem(o.size, q);
  const double tol = 1e-12;
  const double base = best_constant_p1(problem).value;
  const double tauFactor = std::pow(to_double(t), 1.0 / to_double(q));

  HardyProblem tauScaled = problem;
  tauScaled.cm = problem.cm.scaled(t);
  if (!close_relative(best_constant_p1(tauScaled).value, base * tauFactor, tol)) return "tau scaling";

  HardyProblem uScaled = problem;
  for (auto& e : uScaled.eta) e *= t;
  if (!close_relative(best_constant_p1(uScaled).value, base / to_double(t), tol)) return "u scaling";

  if (q >= 1) {
    const double norm = exact_norm_p1(problem).value;
    if (!close_relative(exact_norm_p1(tauScaled).value, norm * tauFactor, tol)) return "oracle tau scaling";
    if (!close_relative(exact_norm_p1(uScaled).value, norm / to_double(t), tol)) return "oracle u scaling";
  }

  // Enlarging one tau weight cannot lower the estimate.
  std::vector<Rational> tau = problem.cm.tau();
  tau[gen.uniform(0, tau.size() - 1)] += gen.positive();
  HardyProblem heavier = problem;
  heavier.cm = CoreMap(problem.space.size(), problem.cm.labels(), tau, problem.cm.balls());
  if (best_constant_p1(heavier).value < base * (1 - tol)) return "not monotone in tau";
  return {};
}

std::string singularity(InstanceGenerator& gen, const SuiteOptions& o, std::size_t i) {
  static const std::vector<Rational> qs{Rational(1, 2), Rational(1), Rational(2)};
  const Rational q = qs[i % qs.size()];
  HardyProblem problem = gen.hardy_problem(o.size, q);
  const std::size_t n = problem.space.size();
  const std::size_t s = gen.uniform(0, n - 1);
  std::vector<Rational> mu = problem.space.mu();
  if (sgn(mu[s]) == 0) mu[s] = gen.positive();
  problem.space = MeasureSpace(problem.space.labels(), mu);
  problem.eta[s] = 0;
  // An item whose ball is all of U with positive weight reaches s.
  std::vector<std::string> labels = problem.cm.labels();
  std::vector<Rational> tau = problem.cm.tau();
  std::vector<PointSet> balls = problem.cm.balls();
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  labels.push_back("y_full");
  tau.push_back(gen.positive());
  balls.push_back(all);
  problem.cm = CoreMap(n, labels, tau, balls);

  if (!decompose_eta(problem).infinite) return "singular point not flagged";
  if (!std::isinf(best_constant_p1(problem).value)) return "constant is finite";
  std::vector<double> f(n, 0.0);
  f[s] = 1.0;
  if (!(ratio(problem, f) > 1e6)) return "targeted point mass ratio " + fmt(ratio(problem, f));
  RatioSearchOptions search;
  search.seed = o.seed + i;
  search.restarts = 1;
  search.budget = 1;
  if (!(maximize_ratio(problem, search).lowerBound > 1e6)) return "search misses the singular point";
  return {};
}

MetricSpace random_line_metric(InstanceGenerator& gen, std::size_t n) {
  std::vector<Rational> x(n);
  for (auto& c : x) {
    c = Rational(static_cast<long>(gen.uniform(0, 6)), static_cast<long>(gen.uniform(1, 3)));
    c.canonicalize();
  }
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) dist[a][b] = abs(Rational(x[a] - x[b]));
  }
  return MetricSpace(std::move(dist), gen.uniform(0, n - 1), gen.space(n));
}

std::string metric(InstanceGenerator& gen, const SuiteOptions& o, std::size_t i) {
  static const std::vector<Rational> qs{Rational(1, 2), Rational(1), Rational(2)};
  const Rational q = qs[i % qs.size()];
  const std::size_t n = gen.uniform(1, o.size);
  const MetricSpace m = random_line_metric(gen, n);
  const std::vector<Rational> omega = gen.weights(n, 10);
  const std::vector<Rational> v = gen.weights(n, 5);
  const MeasureSpace& space = m.space();
  const std::size_t a = m.anchor();

  std::vector<Rational> radii;
  for (std::size_t x = 0; x < n; ++x) radii.push_back(m.dist(a, x));
  std::sort(radii.begin(), radii.end());
  const auto distinct = static_cast<std::size_t>(std::unique(radii.begin(), radii.end()) - radii.begin());
  if (ball_core(m).size() != distinct) return "chain length differs from distinct radii";

  // Problem built straight from the distances.
  std::vector<Rational> tau(n);
  std::vector<Rational> eta(n);
  std::vector<PointSet> balls(n);
  ScalarField lower(n, Extended::infinity());
  for (std::size_t x = 0; x < n; ++x) {
    tau[x] = omega[x] * space.mu(x);
    eta[x] = v[x] * space.mu(x);
    for (std::size_t t = 0; t < n; ++t) {
      if (m.dist(a, t) > m.dist(a, x)) continue;
      balls[x].push_back(t);
      if (space.has_mass(t)) lower[x] = std::min(lower[x], Extended(v[t]));
    }
  }
  if (metric_minorant(m, to_field(v)) != lower) return "minorant differs from ball essinf";
  const HardyProblem direct{space, eta, CoreMap(n, space.labels(), tau, balls), Rational(1), q};
  if (!same_estimate(metric_constant_p1(m, omega, v, q), best_constant_p1(direct), 0.0)) {
    return "metric front-end differs from the direct problem";
  }
  return {};
}

std::string ball_condition(InstanceGenerator& gen, const SuiteOptions& o, std::size_t i) {
  static const std::vector<std::pair<Rational, Rational>> pq{
      {Rational(2), Rational(2)}, {Rational(2), Rational(3)}, {Rational(3, 2), Rational(3, 2)},
      {Rational(3, 2), Rational(2)}};
  const auto& [p, q] = pq[i % pq.size()];
  const std::size_t n = gen.uniform(1, o.size);
  const MetricSpace m = random_line_metric(gen, n);
  const std::vector<Rational> omega = gen.weights(n, 10);
  const std::vector<Rational> v = gen.weights(n, 0);
  const TwoWeightProblem problem = metric_problem(m, omega, v, p, q);
  const double condition = condition_p_le_q(problem).value;
  const std::vector<double> sigma = dual_weight(problem);
  const HardyProblem hardy = to_hardy_problem(problem);
  double best = 0.0;
  for (std::size_t j = 1; j <= problem.core.size(); ++j) {
    std::vector<double> f(n, 0.0);
    for (auto s : problem.core.set(j)) f[s] = sigma[s];
    best = std::max(best, ratio(hardy, f));
  }
  if (best < condition * (1 - 1e-12)) return "targeted ratio " + fmt(best) + " < condition " + fmt(condition);
  return {};
}

SuiteResult sandwich(const SuiteOptions& o) {
  static const std::vector<Rational> qs{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  const std::vector<double> edges{1, 2, 4, 8, 16, 32};
  std::vector<std::size_t> histogram(edges.size() + 1, 0);
  double worst = 1.0;
  double lowest = std::numeric_limits<double>::infinity();
  SuiteResult result = run_checks("sandwich", o, 8, [&](InstanceGenerator& gen, std::size_t i) {
    const Rational q = qs[i % qs.size()];
    const HardyProblem problem = gen.hardy_problem(o.size, q);
    const double estimate = best_constant_p1(problem).value;
    RatioSearchOptions search;
    search.seed = o.seed + i;
    search.restarts = 4;
    search.budget = 40;
    const double bound = maximize_ratio(problem, search).lowerBound;
    double factor = 1.0;
    if (estimate != bound) {
      const bool degenerate = estimate == 0.0 || bound == 0.0 || std::isinf(estimate) || std::isinf(bound);
      factor = degenerate ? std::numeric_limits<double>::infinity()
                          : std::max(bound / estimate, estimate / bound);
    }
    worst = std::max(worst, factor);
    if (bound > 0.0 && estimate > 0.0 && std::isfinite(bound) && std::isfinite(estimate)) {
      lowest = std::min(lowest, bound / estimate);
    }
    std::size_t bin = 0;
    while (bin < edges.size() && factor >= edges[bin]) ++bin;
    ++histogram[bin];
    if (factor < o.sandwichBound) return std::string();
    return "factor " + fmt(factor) + " (estimate " + fmt(estimate) + ", lower bound " + fmt(bound) + ")";
  });
  std::string line = "factor histogram:";
  for (std::size_t b = 1; b <= edges.size(); ++b) {
    const std::string hi = b < edges.size() ? fmt(edges[b]) : "inf";
    line += " [" + fmt(edges[b - 1]) + "," + hi + "):" + std::to_string(histogram[b]);
  }
  result.notes.push_back(line);
  result.notes.push_back("largest factor: " + fmt(worst));
  if (std::isfinite(lowest)) result.notes.push_back("smallest lower bound / estimate: " + fmt(lowest));
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "duality",  "minorant", "transition", "equimeasurability", "exact-constant", "halfline-identity",
      "scaling",  "sandwich", "singularity", "metric",           "ball-condition"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  using Indexed = std::string (*)(InstanceGenerator&, const SuiteOptions&, std::size_t);
  using Plain = std::string (*)(InstanceGenerator&, const SuiteOptions&);
  static const std::map<std::string, Plain> plain{{"duality", duality},
                                                  {"minorant", minorant},
                                                  {"transition", transition},
                                                  {"equimeasurability", equimeasurability}};
  static const std::map<std::string, Indexed> indexed{{"exact-constant", exact_constant},
                                                      {"halfline-identity", halfline_identity},
                                                      {"scaling", scaling},
                                                      {"singularity", singularity},
                                                      {"metric", metric},
                                                      {"ball-condition", ball_condition}};
  const auto position = std::find(suite_names().begin(), suite_names().end(), name);
  if (position == suite_names().end()) throw std::invalid_argument("unknown suite: " + name);
  const auto salt = static_cast<std::uint64_t>(position - suite_names().begin());
  if (name == "sandwich") return sandwich(o);
  if (auto it = plain.find(name); it != plain.end()) {
    return run_checks(name, o, salt, [&](InstanceGenerator& gen, std::size_t) { return it->second(gen, o); });
  }
  const Indexed check = indexed.at(name);
  return run_checks(name, o, salt, [&](InstanceGenerator& gen, std::size_t i) { return check(gen, o, i); });
}

}  // namespace hardy
