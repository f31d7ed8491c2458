#include "hardy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "hardy/minorant.hpp"
#include "hardy/simplex.hpp"

namespace hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double quotient(double lhs, double rhs) {
  if (lhs == 0.0) return 0.0;
  if (rhs == 0.0) return kInf;
  return lhs / rhs;
}

}  // namespace

double ratio(const HardyProblem& problem, const std::vector<double>& f) {
  problem.validate();
  if (f.size() != problem.space.size()) throw std::invalid_argument("ratio: f length mismatch");
  const double p = to_double(problem.p);
  const double q = to_double(problem.q);
  double lhs = 0.0;
  for (std::size_t y = 0; y < problem.cm.size(); ++y) {
    double inner = 0.0;
    for (auto s : problem.cm.ball(y)) inner += f[s] * to_double(problem.space.mu(s));
    if (inner > 0.0) lhs += std::pow(inner, q) * to_double(problem.cm.tau(y));
  }
  double rhs = 0.0;
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (f[s] > 0.0) rhs += std::pow(f[s], p) * to_double(problem.eta[s]);
  }
  return quotient(std::pow(lhs, 1.0 / q), std::pow(rhs, 1.0 / p));
}

ExactNorm exact_norm_p1(const HardyProblem& problem) {
  problem.validate();
  if (problem.p != 1 || problem.q < 1) throw std::invalid_argument("exact_norm_p1 requires p = 1, q >= 1");
  const bool unitQ = problem.q == 1;
  ExactNorm out;
  Rational bestExact = 0;
  for (std::size_t s = 0; s < problem.space.size(); ++s) {
    if (!problem.space.has_mass(s)) continue;
    // Point mass at s: LHS = mu(s) tau({y : s in B(y)})^{1/q}, RHS = eta(s).
    Rational reached = 0;
    for (std::size_t y = 0; y < problem.cm.size(); ++y) {
      const auto& ball = problem.cm.ball(y);
      if (std::binary_search(ball.begin(), ball.end(), s)) reached += problem.cm.tau(y);
    }
    if (sgn(reached) == 0) continue;
    if (sgn(problem.eta[s]) == 0) {
      out.value = kInf;
      out.exact.reset();
      out.argmax = s;
      return out;
    }
    const double value = to_double(problem.space.mu(s)) *
                         std::pow(to_double(reached), 1.0 / to_double(problem.q)) /
                         to_double(problem.eta[s]);
    if (unitQ) {
      Rational exact = problem.space.mu(s) * reached / problem.eta[s];
      if (!out.argmax || exact > bestExact) {
        bestExact = exact;
        out.argmax = s;
      }
    } else if (!out.argmax || value > out.value) {
      out.value = value;
      out.argmax = s;
    }
  }
  if (unitQ) {
    out.exact = bestExact;
    out.value = to_double(bestExact);
  }
  return out;
}

Rational lp_variational(const OrderedCore& core, const MeasureSpace& space, const ScalarField& f,
                        const ScalarField& u) {
  const std::size_t n = space.size();
  if (f.size() != n || u.size() != n || core.point_count() != n) {
    throw std::invalid_argument("lp_variational: size mismatch");
  }
  // Variables: g on positive-mass points; mu-null points neither help the
  // constraints nor cost anything.
  std::vector<std::size_t> vars;
  for (std::size_t s = 0; s < n; ++s) {
    if (space.has_mass(s)) vars.push_back(s);
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (f[s].is_infinite() || u[s].is_infinite()) {
      throw std::invalid_argument("lp_variational: inputs must be finite");
    }
  }
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (std::size_t i = 1; i <= core.size(); ++i) {
    const PointSet members = core.set(i);
    std::vector<Rational> row(vars.size(), Rational(0));
    Rational rhs = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (std::binary_search(members.begin(), members.end(), vars[v])) row[v] = space.mu(vars[v]);
    }
    for (auto s : members) rhs += f[s].value() * space.mu(s);
    A.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  std::vector<Rational> cost(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) cost[v] = u[vars[v]].value() * space.mu(vars[v]);
  const LpResult result = minimize_exact(A, b, cost);
  if (result.status != LpStatus::optimal) {
    throw std::logic_error("lp_variational: the prefix LP must have an optimum");
  }
  return result.objective;
}

ScalarField brute_force_minorant(const OrderedCore& core, const MeasureSpace& space,
                                 const ScalarField& g) {
  const std::size_t k = core.size();
  std::vector<Extended> grid{Extended(0), Extended::infinity()};
  std::vector<Extended> cap(k, Extended::infinity());
  for (std::size_t s = 0; s < core.point_count(); ++s) {
    if (!space.has_mass(s)) continue;
    const Extended value = g[s].is_infinite() ? g[s] : Extended(Rational(abs(g[s].value())));
    grid.push_back(value);
    cap[core.rank(s) - 1] = std::min(cap[core.rank(s) - 1], value);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<std::optional<Extended>> best(k);
  std::vector<std::size_t> chosen(k);
  // Depth-first over layers; choice indices are non-increasing along ranks.
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t layer, std::size_t limit) {
    if (layer == k) {
      for (std::size_t i = 0; i < k; ++i) {
        if (!best[i] || grid[chosen[i]] > *best[i]) best[i] = grid[chosen[i]];
      }
      return;
    }
    for (std::size_t c = 0; c <= limit; ++c) {
      if (grid[c] > cap[layer]) break;
      chosen[layer] = c;
      visit(layer + 1, c);
    }
  };
  visit(0, grid.size() - 1);

  ScalarField out(core.point_count());
  for (std::size_t s = 0; s < core.point_count(); ++s) out[s] = best[core.rank(s) - 1].value_or(Extended(0));
  return out;
}

// --- ratio maximisation ----------------------------------------------------

namespace {

/// Ratio evaluation through the induced chain: O(k + n) per full evaluation
/// and O(k) per single-coordinate change.
class ChainRatio {
 public:
  explicit ChainRatio(const HardyProblem& problem)
      : p_(to_double(problem.p)), q_(to_double(problem.q)) {
    const InducedCore induced = induced_core(problem.cm, problem.space);
    k_ = induced.core.size();
    weight_.assign(k_ + 1, 0.0);
    for (std::size_t y = 0; y < problem.cm.size(); ++y) {
      if (induced.itemIndex[y]) weight_[*induced.itemIndex[y]] += to_double(problem.cm.tau(y));
    }
    std::vector<double> suffix(k_ + 2, 0.0);
    for (std::size_t j = k_; j >= 1; --j) suffix[j] = suffix[j + 1] + weight_[j];
    for (std::size_t i = 0; i < induced.kept.size(); ++i) {
      const std::size_t s = induced.kept[i];
      if (!problem.space.has_mass(s)) continue;
      const std::size_t rank = induced.core.rank(i);
      if (suffix[rank] == 0.0) continue;  // f(s) never reaches the left side
      if (sgn(problem.eta[s]) == 0) {
        singular_.push_back(s);
        continue;
      }
      points_.push_back(s);
      rank_.push_back(rank);
      mu_.push_back(to_double(problem.space.mu(s)));
      eta_.push_back(to_double(problem.eta[s]));
    }
  }

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& points() const { return points_; }
  [[nodiscard]] const std::vector<std::size_t>& singular() const { return singular_; }
  [[nodiscard]] double eta(std::size_t i) const { return eta_[i]; }
  [[nodiscard]] double p() const { return p_; }

  /// Loads f and caches the prefix sums.
  double load(const std::vector<double>& f) {
    f_ = f;
    prefix_.assign(k_ + 1, 0.0);
    for (std::size_t i = 0; i < f_.size(); ++i) prefix_[rank_[i]] += f_[i] * mu_[i];
    for (std::size_t j = 1; j <= k_; ++j) prefix_[j] += prefix_[j - 1];
    rhs_ = 0.0;
    for (std::size_t i = 0; i < f_.size(); ++i) rhs_ += term(f_[i]) * eta_[i];
    lhs_ = 0.0;
    for (std::size_t j = 1; j <= k_; ++j) lhs_ += weight_[j] * power_q(prefix_[j]);
    return value(lhs_, rhs_);
  }

  /// Ratio if coordinate i were set to t, without committing.
  [[nodiscard]] double trial(std::size_t i, double t) const {
    const double delta = (t - f_[i]) * mu_[i];
    double lhs = lhs_;
    for (std::size_t j = rank_[i]; j <= k_; ++j) {
      lhs += weight_[j] * (power_q(prefix_[j] + delta) - power_q(prefix_[j]));
    }
    const double rhs = rhs_ + (term(t) - term(f_[i])) * eta_[i];
    return value(lhs, rhs);
  }

  void commit(std::size_t i, double t) {
    f_[i] = t;
    load(std::vector<double>(f_));
  }

  [[nodiscard]] const std::vector<double>& f() const { return f_; }

  /// One nonlinear power step f <- (grad LHS^q / eta)^{1/(p-1)} for p > 1.
  [[nodiscard]] std::vector<double> power_step() const {
    std::vector<double> suffix(k_ + 2, 0.0);
    for (std::size_t j = k_; j >= 1; --j) {
      const double pj = prefix_[j];
      const double contribution = pj > 0.0 ? weight_[j] * std::pow(pj, q_ - 1.0) : 0.0;
      suffix[j] = suffix[j + 1] + contribution;
    }
    std::vector<double> next(f_.size());
    for (std::size_t i = 0; i < f_.size(); ++i) {
      next[i] = std::pow(mu_[i] * suffix[rank_[i]] / eta_[i], 1.0 / (p_ - 1.0));
    }
    return next;
  }

  /// Scales f so that the right-hand side equals 1.
  [[nodiscard]] std::vector<double> normalized(std::vector<double> f) const {
    double rhs = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) rhs += term(f[i]) * eta_[i];
    if (rhs > 0.0 && std::isfinite(rhs)) {
      const double scale = std::pow(rhs, -1.0 / p_);
      for (auto& x : f) x *= scale;
    }
    return f;
  }

 private:
  [[nodiscard]] double power_q(double x) const { return x > 0.0 ? std::pow(x, q_) : 0.0; }
  [[nodiscard]] double term(double x) const { return x > 0.0 ? std::pow(x, p_) : 0.0; }
  [[nodiscard]] double value(double lhs, double rhs) const {
    if (lhs <= 0.0) return 0.0;
    if (rhs <= 0.0) return kInf;
    return std::pow(lhs, 1.0 / q_) / std::pow(rhs, 1.0 / p_);
  }

  double p_;
  double q_;
  std::size_t k_ = 0;
  std::vector<double> weight_;
  std::vector<std::size_t> points_;
  std::vector<std::size_t> singular_;
  std::vector<std::size_t> rank_;
  std::vector<double> mu_;
  std::vector<double> eta_;
  std::vector<double> f_;
  std::vector<double> prefix_;
  double lhs_ = 0.0;
  double rhs_ = 0.0;
};

/// Maximises a function on [lo, hi] by a geometric scan followed by golden
/// section in the best bracket.
std::pair<double, double> line_search(const std::function<double(double)>& objective, double lo,
                                      double hi) {
  std::vector<double> grid{lo};
  for (int e = 24; e >= 0; --e) grid.push_back(lo + (hi - lo) * std::ldexp(1.0, -e));
  std::size_t bestIndex = 0;
  double bestValue = objective(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double value = objective(grid[i]);
    if (value > bestValue) {
      bestValue = value;
      bestIndex = i;
    }
  }
  double a = grid[bestIndex == 0 ? 0 : bestIndex - 1];
  double b = grid[std::min(bestIndex + 1, grid.size() - 1)];
  const double ratioGolden = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratioGolden * (b - a);
  double d = a + ratioGolden * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  double bestX = grid[bestIndex];
  for (int it = 0; it < 60 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratioGolden * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratioGolden * (b - a);
      fd = objective(d);
    }
  }
  if (fc > bestValue) {
    bestValue = fc;
    bestX = c;
  }
  if (fd > bestValue) {
    bestValue = fd;
    bestX = d;
  }
  return {bestX, bestValue};
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

RatioReport maximize_ratio(const HardyProblem& problem, const RatioSearchOptions& options) {
  problem.validate();
  RatioReport report;
  report.seed = options.seed;
  ChainRatio chain(problem);
  const std::size_t n = chain.size();

  auto finish = [&](const std::vector<double>& local) {
    report.argmax.assign(problem.space.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) report.argmax[chain.points()[i]] = local[i];
    report.lowerBound = ratio(problem, report.argmax);
    return report;
  };

  if (!chain.singular().empty()) {
    // Point mass on a reachable eta-null point: positive left side, zero right side.
    report.argmax.assign(problem.space.size(), 0.0);
    report.argmax[chain.singular().front()] = 1.0;
    report.lowerBound = ratio(problem, report.argmax);
    report.converged = true;
    return report;
  }
  if (n == 0) {
    report.converged = true;
    return finish({});
  }

  const double p = chain.p();
  std::vector<double> best(n, 0.0);
  double bestValue = -1.0;
  auto consider = [&](const std::vector<double>& f) {
    const double value = chain.load(f);
    if (value > bestValue) {
      bestValue = value;
      best = f;
    }
    return value;
  };

  // Point masses, scaled so the right-hand side is 1.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> f(n, 0.0);
    f[i] = std::pow(chain.eta(i), -1.0 / p);
    consider(f);
  }

  // Two-point supports: f_a^p eta_a = theta, f_b^p eta_b = 1 - theta.
  if (n <= options.maxPairPoints) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        auto split = [&](double theta) {
          std::vector<double> f(n, 0.0);
          f[a] = std::pow(theta / chain.eta(a), 1.0 / p);
          f[b] = std::pow((1.0 - theta) / chain.eta(b), 1.0 / p);
          return f;
        };
        const auto [theta, value] =
            line_search([&](double t) { return chain.load(split(t)); }, 0.0, 1.0);
        (void)value;
        consider(split(theta));
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  bool anyConverged = false;
  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    std::vector<double> f(n);
    if (restart == 0) {
      f = best;
    } else {
      for (auto& x : f) x = uniform01(rng);
    }
    f = chain.normalized(f);
    double current = chain.load(f);

    if (p > 1.0) {
      // Nonlinear power iteration; only improving steps are kept.
      for (std::size_t step = 0; step < options.budget * 50; ++step) {
        const std::vector<double> next = chain.normalized(chain.power_step());
        const double value = chain.load(next);
        ++report.iterations;
        if (!(value > current)) {
          chain.load(f);
          break;
        }
        const double gain = value - current;
        f = next;
        current = value;
        if (gain <= 1e-15 * current) break;
      }
    }

    bool converged = false;
    for (std::size_t sweep = 0; sweep < options.budget && !converged; ++sweep) {
      ++report.iterations;
      const double before = current;
      for (std::size_t i = 0; i < n; ++i) {
        const double reach = 4.0 * std::max(chain.f()[i], std::pow(chain.eta(i), -1.0 / p));
        const auto [t, value] =
            line_search([&](double x) { return chain.trial(i, x); }, 0.0, reach);
        if (value > current) {
          chain.commit(i, t);
          current = chain.load(chain.normalized(chain.f()));
        }
      }
      converged = current - before <= 1e-12 * std::max(current, 1e-300);
    }
    anyConverged = anyConverged || converged;
    consider(chain.f());
  }
  report.converged = anyConverged;
  return finish(best);
}

}  // namespace hardy
