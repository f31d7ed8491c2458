#include <doctest.h>

#include "hardy/metric.hpp"

using namespace hardy;

namespace {
MetricSpace line(std::vector<long> coords, std::size_t anchor, std::vector<Rational> mu) {
  std::vector<std::vector<Rational>> d(coords.size(), std::vector<Rational>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = 0; j < coords.size(); ++j) d[i][j] = std::abs(coords[i] - coords[j]);
  }
  return MetricSpace(d, anchor, MeasureSpace::with_weights(std::move(mu)));
}
}  // namespace

TEST_CASE("ball core follows sorted anchor distances") {
  const OrderedCore c = ball_core(line({0, 1, 2}, 0, {1, 1, 1}));
  CHECK(c.size() == 3);
  CHECK(c.set(1) == PointSet{0});
  CHECK(c.set(2) == PointSet{0, 1});
  const OrderedCore tie = ball_core(line({0, -1, 1}, 0, {1, 1, 1}));
  CHECK(tie.size() == 2);
  CHECK(tie.layer(2) == PointSet{1, 2});
  CHECK(ball_core(line({0}, 0, {1})).size() == 1);
}

TEST_CASE("metric rejects non-metrics unless relaxed") {
  std::vector<std::vector<Rational>> d{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
  const auto space = MeasureSpace::with_weights({1, 1, 1});
  CHECK_THROWS_AS(MetricSpace(d, 0, space), std::invalid_argument);
  CHECK_NOTHROW(MetricSpace(d, 0, space, false));
  std::vector<std::vector<Rational>> asym{{0, 1}, {2, 0}};
  CHECK_THROWS_AS(MetricSpace(asym, 0, MeasureSpace::with_weights({1, 1}), false), std::invalid_argument);
}

TEST_CASE("metric minorant") {
  const MetricSpace m = line({0, 1, 2}, 0, {1, 1, 1});
  CHECK(metric_minorant(m, to_field({3, 1, 2})) == to_field({3, 1, 1}));
  CHECK(metric_minorant(m, to_field({2, 2, 2})) == to_field({2, 2, 2}));
  const MetricSpace nullFar = line({0, 1, 2}, 0, {1, 1, 0});
  CHECK(metric_minorant(nullFar, to_field({3, 2, 1})) == to_field({3, 2, 2}));
}

TEST_CASE("metric p = 1 constant") {
  const MetricSpace m = line({0, 1, 2}, 0, {1, 1, 1});
  CHECK(*metric_constant_p1(m, {1, 1, 1}, {1, 1, 1}, 1).exact == 3);
  CHECK(*metric_constant_p1(m, {5, 5, 5}, {1, 1, 1}, 1).exact == 15);
  CHECK(*metric_constant_p1(m, {1, 1, 1}, {3, 1, 2}, 1).exact == *metric_constant_p1(m, {1, 1, 1}, {3, 1, 1}, 1).exact);
}

TEST_CASE("metric_condition dispatch") {
  const MetricSpace m = line({0, 1, 2, 3}, 0, {1, 1, 1, 1});
  CHECK_THROWS_AS(metric_condition(m, {1, 1, 1, 1}, {1, 1, 1, 1}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(metric_condition(m, {1, 1, 1, 1}, {1, 1, 1, 1}, 2, 1), std::invalid_argument);
  CHECK(metric_condition(m, {0, 0, 0, 0}, {1, 1, 1, 1}, 2, 2).value == 0.0);
  CHECK(metric_condition(m, {0, 0, 0, 0}, {1, 1, 1, 1}, 3, 2).value == 0.0);
  // Swapping two equidistant points leaves the condition unchanged.
  const MetricSpace sym = line({0, -1, 1, 2}, 0, {1, 1, 1, 1});
  const double a = metric_condition(sym, {1, 2, 3, 4}, {1, 1, 1, 1}, 2, 2).value;
  const double b = metric_condition(sym, {1, 3, 2, 4}, {1, 1, 1, 1}, 2, 2).value;
  CHECK(a == doctest::Approx(b).epsilon(1e-15));
}
