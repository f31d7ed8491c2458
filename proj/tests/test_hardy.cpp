#include <doctest.h>

#include <cmath>

#include "hardy/hardy.hpp"
#include "hardy/minorant.hpp"

using namespace hardy;

namespace {
std::vector<Rational> weights(std::initializer_list<Rational> values) { return {values.begin(), values.end()}; }

HardyProblem unit_fixture(const Rational& q, std::vector<Rational> eta = {1, 1, 1}) {
  const auto space = MeasureSpace::with_weights({1, 1, 1});
  const CoreMap cm(3, {"y1", "y2", "y3"}, {1, 1, 1}, {{0}, {0, 1}, {0, 1, 2}});
  return HardyProblem{space, std::move(eta), cm, Rational(1), q};
}

/// tail/ball sums recomputed on the half line: per lambda atom, layer masses of
/// omega and v^{1-p'}.
double half_line_q_lt_p(const std::vector<Rational>& mu, const std::vector<std::size_t>& ranks,
                        const std::vector<double>& omega, const std::vector<double>& sigma, double p,
                        double q, bool belowOne) {
  const double r = 1.0 / (1.0 / q - 1.0 / p);
  const double pp = p / (p - 1.0);
  const double qq = q / (q - 1.0);
  std::size_t k = 0;
  for (auto x : ranks) k = std::max(k, x);
  std::vector<double> om(k + 1, 0.0);
  std::vector<double> sg(k + 1, 0.0);
  for (std::size_t s = 0; s < mu.size(); ++s) {
    om[ranks[s]] += omega[s] * to_double(mu[s]);
    sg[ranks[s]] += sigma[s] * to_double(mu[s]);
  }
  double total = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    double tail = 0.0;
    double ball = 0.0;
    for (std::size_t j = i + 1; j <= k; ++j) tail += om[j];
    for (std::size_t j = 1; j <= i; ++j) ball += sg[j];
    if (belowOne) {
      total += std::pow(tail, r / p) * std::pow(ball, r / pp) * om[i];
    } else {
      total += std::pow(tail, r / q) * std::pow(ball, r / qq) * sg[i];
    }
  }
  return total;
}
}  // namespace

TEST_CASE("decompose_eta") {
  HardyProblem plain = unit_fixture(1, {2, 6, 1});
  const EtaDecomposition d = decompose_eta(plain);
  CHECK(d.u[0] == Extended(2));
  CHECK(d.u[1] == Extended(6));
  CHECK_FALSE(d.infinite);

  const auto two = MeasureSpace::with_weights({1, 1});
  const HardyProblem singular{two, {0, 1}, CoreMap(2, {"y1"}, {1}, {{0}}), 1, 1};
  CHECK(decompose_eta(singular).infinite);
  CHECK(std::isinf(best_constant_p1(singular).value));

  const auto nullSecond = MeasureSpace::with_weights({1, 0});
  const HardyProblem dropped{nullSecond, {1, 5}, CoreMap(2, {"y1"}, {1}, {{0, 1}}), 1, 1};
  const EtaDecomposition dd = decompose_eta(dropped);
  CHECK(dd.dropped == std::vector<std::size_t>{1});
  CHECK(dd.u[0] == Extended(1));
}

TEST_CASE("p = 1 constants on the unit fixture") {
  const ConstantEstimate one = best_constant_p1(unit_fixture(1));
  CHECK(one.kind == EstimateKind::exact);
  CHECK(*one.exact == 3);
  const ConstantEstimate half = best_constant_p1(unit_fixture(Rational(1, 2)));
  CHECK(half.kind == EstimateKind::equivalent);
  CHECK(half.value == doctest::Approx(6.0).epsilon(1e-14));
  const ConstantEstimate inverse = best_constant_p1(unit_fixture(Rational(1, 2)), OuterExponent::inverseQ);
  CHECK(inverse.value == doctest::Approx(36.0).epsilon(1e-14));
  for (const Rational q : {Rational(1), Rational(1, 2), Rational(2)}) {
    const double base = best_constant_p1(unit_fixture(q)).value;
    const double scaled = best_constant_p1(unit_fixture(q, {3, 3, 3})).value;
    CHECK(scaled == doctest::Approx(base / 3).epsilon(1e-14));
  }
}

TEST_CASE("half-line evaluator") {
  const LineMeasure three({{1, 1}, {2, 1}, {3, 1}});
  const LineField ones(3, Extended(1));
  CHECK(halfline_constant(three, ones, three, Rational(1, 2)).value == doctest::Approx(6.0));
  LineField bumpy{Extended(1), Extended(5), Extended(2)};
  CHECK(halfline_constant(three, bumpy, three, Rational(1, 3)).value ==
        doctest::Approx(halfline_constant(three, ones, three, Rational(1, 3)).value));

  // One atom of mass m with w = c: (c^{-q/(1-q)} m^{1/(1-q)})^{(1-q)/q}.
  const LineMeasure single({{Rational(5, 2), Rational(5, 2)}});
  const double c = 3.0;
  const double m = 2.5;
  const double q = 0.25;
  const double expected = std::pow(std::pow(c, -q / (1 - q)) * std::pow(m, 1 / (1 - q)), (1 - q) / q);
  CHECK(halfline_constant(single, {Extended(3)}, single, Rational(1, 4)).value ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("reduction to the half line") {
  const HalfLineReduction red = reduce_to_halfline(unit_fixture(1, {5, 2, 3}));
  CHECK(red.w == LineField{Extended(5), Extended(2), Extended(2)});
  CHECK(red.lambda == LineMeasure({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(red.nu == LineMeasure({{1, 1}, {2, 1}, {3, 1}}));
  const HalfLineReduction dec = reduce_to_halfline(unit_fixture(1, {7, 4, 1}));
  CHECK(dec.w == LineField{Extended(7), Extended(4), Extended(1)});
  for (const Rational q : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
    const HardyProblem problem = unit_fixture(q, {5, 2, 3});
    const HalfLineReduction r = reduce_to_halfline(problem);
    CHECK(best_constant_p1(problem).value ==
          doctest::Approx(halfline_constant(r.lambda, r.w, r.nu, q).value).epsilon(1e-12));
  }
}

TEST_CASE("exponents") {
  const Exponents e = make_exponents(Rational(3), Rational(2));
  CHECK(*e.pPrime == Rational(3, 2));
  CHECK(*e.r == 6);
  CHECK_FALSE(make_exponents(Rational(1), Rational(2)).pPrime);
  CHECK_FALSE(make_exponents(Rational(2), Rational(2)).r);
}

TEST_CASE("conditions for p > 1 vanish in degenerate cases") {
  const auto space = MeasureSpace::with_weights({1, 1, 1});
  const OrderedCore prefix = OrderedCore::prefixes(3);
  const TwoWeightProblem zero{space, prefix, {0, 0, 0}, {1, 2, 3}, 2, 2};
  CHECK(condition_p_le_q(zero).value == 0.0);
  TwoWeightProblem low = zero;
  low.q = Rational(1, 2);
  CHECK(condition_q_lt_p(low, QLessThanPRegime::qBelowOne).value == 0.0);
  const TwoWeightProblem single{MeasureSpace::with_weights({2}), OrderedCore::prefixes(1), {3}, {1}, 2, 3};
  CHECK(condition_p_le_q(single).value == 0.0);
  TwoWeightProblem singleLow = single;
  singleLow.q = Rational(1, 2);
  CHECK(condition_q_lt_p(singleLow, QLessThanPRegime::qBelowOne).value == 0.0);
}

TEST_CASE("condition for p <= q on a hand-computed case") {
  // Sets {0}, {0,1}: tails 2+3 and 3, balls of 1/v: 1, 1 + 1/2.
  const TwoWeightProblem problem{MeasureSpace::with_weights({1, 1, 1}), OrderedCore::prefixes(3),
                                 {1, 2, 3}, {1, 2, 4}, 2, 2};
  const double expected = std::max(std::sqrt(5.0) * 1.0, std::sqrt(3.0) * std::sqrt(1.5));
  CHECK(condition_p_le_q(problem).value == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("conditions for q < p match the half-line recomputation") {
  const std::vector<Rational> mu{1, Rational(1, 2), 2};
  const std::vector<std::size_t> ranks{1, 2, 2};
  const TwoWeightProblem low{MeasureSpace::with_weights(mu), OrderedCore::from_ranks(ranks),
                             {Rational(3), Rational(1, 2), Rational(2)}, {1, 4, Rational(1, 3)}, 2, Rational(1, 2)};
  const std::vector<double> omega{3.0, 0.5, 2.0};
  const std::vector<double> sigma{1.0, 0.25, 3.0};
  CHECK(condition_q_lt_p(low, QLessThanPRegime::qBelowOne).value ==
        doctest::Approx(half_line_q_lt_p(mu, ranks, omega, sigma, 2, 0.5, true)).epsilon(1e-12));

  const std::vector<Rational> mu4{1, 1, 2, Rational(1, 3)};
  const std::vector<std::size_t> ranks4{1, 2, 3, 3};
  const TwoWeightProblem high{MeasureSpace::with_weights(mu4), OrderedCore::from_ranks(ranks4),
                              {1, 2, 3, 4}, {1, 8, 1, Rational(1, 8)}, 3, 2};
  // v^{1-p'} with p' = 3/2 is v^{-1/2}.
  std::vector<double> sigma4;
  for (double v : {1.0, 8.0, 1.0, 0.125}) sigma4.push_back(std::pow(v, -0.5));
  CHECK(condition_q_lt_p(high, QLessThanPRegime::qAboveOne).value ==
        doctest::Approx(half_line_q_lt_p(mu4, ranks4, {1, 2, 3, 4}, sigma4, 3, 2, false)).epsilon(1e-12));
  CHECK_THROWS_AS(condition_q_lt_p(high, QLessThanPRegime::qBelowOne), std::invalid_argument);
}
