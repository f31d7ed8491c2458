#include <doctest.h>

#include "hardy/core_spaces.hpp"

using namespace hardy;

TEST_CASE("rank_of returns the first chain member containing the point") {
  const OrderedCore prefix(3, {{0}, {0, 1}, {0, 1, 2}});
  CHECK(rank_of(prefix, 0) == 1);
  CHECK(rank_of(prefix, 2) == 3);
  const OrderedCore coarse(3, {{0, 1}, {0, 1, 2}});
  CHECK(rank_of(coarse, 1) == 1);
  CHECK_THROWS(rank_of(coarse, 3));
}

TEST_CASE("core order compares ranks") {
  const OrderedCore c(2, {{0}, {0, 1}});
  CHECK(core_order_leq(c, 0, 1));
  CHECK_FALSE(core_order_leq(c, 1, 0));
  const OrderedCore one(2, {{0, 1}});
  CHECK(core_order_leq(one, 0, 1));
  CHECK(core_order_leq(one, 1, 0));
}

TEST_CASE("core-decreasing fields are layer constants that do not increase") {
  const OrderedCore c(2, {{0}, {0, 1}});
  CHECK(is_core_decreasing(c, to_field({Rational(3), Rational(1)})));
  CHECK_FALSE(is_core_decreasing(c, to_field({Rational(1), Rational(3)})));
  const OrderedCore one(2, {{0, 1}});
  CHECK_FALSE(is_core_decreasing(one, to_field({Rational(2), Rational(1)})));
}

TEST_CASE("down-sets are unions of leading layers") {
  const OrderedCore c(2, {{0}, {0, 1}});
  CHECK(is_down_set(c, {0}));
  CHECK_FALSE(is_down_set(c, {1}));
  CHECK(is_down_set(c, {}));
  const OrderedCore one(2, {{0, 1}});
  CHECK_FALSE(is_down_set(one, {0}));
  const OrderedCore prefix = OrderedCore::prefixes(4);
  for (std::size_t i = 1; i <= prefix.size(); ++i) CHECK(is_down_set(prefix, prefix.set(i)));
}

TEST_CASE("ordered core rejects broken chains") {
  CHECK_THROWS_AS(OrderedCore(2, {{0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedCore(3, {{0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedCore(2, {{0}, {1}}), std::invalid_argument);
}

TEST_CASE("measure space validation") {
  CHECK_THROWS_AS(MeasureSpace({"a", "a"}, {Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(MeasureSpace({"a"}, {Rational(-1)}), std::invalid_argument);
  const MeasureSpace s = MeasureSpace::with_weights({Rational(1), Rational(1, 2)});
  CHECK(s.total() == Rational(3, 2));
}

TEST_CASE("induced core deduplicates balls and restricts to their union") {
  const auto space = MeasureSpace::with_weights({Rational(1), Rational(1), Rational(1)});
  const CoreMap cm(2, {"y1", "y2", "y3"}, {Rational(1), Rational(1), Rational(1)}, {{0}, {0}, {0, 1}});
  const auto twoPoint = MeasureSpace::with_weights({Rational(1), Rational(1)});
  const InducedCore dedup = induced_core(cm, twoPoint);
  CHECK(dedup.core.size() == 2);
  CHECK(dedup.core.set(1) == PointSet{0});
  CHECK(dedup.core.set(2) == PointSet{0, 1});
  CHECK_FALSE(dedup.restricted);

  const CoreMap partial(3, {"y1"}, {Rational(1)}, {{0, 1}});
  const InducedCore r = induced_core(partial, space);
  CHECK(r.restricted);
  CHECK(r.kept == std::vector<std::size_t>{0, 1});
  CHECK(r.space.size() == 2);
  CHECK(r.core.size() == 1);

  CHECK_THROWS_AS(CoreMap(2, {"y1", "y2"}, {Rational(1), Rational(1)}, {{0}, {1}}), std::invalid_argument);
}

TEST_CASE("core order is a total preorder on random chains") {
  const OrderedCore c = OrderedCore::from_ranks({2, 1, 3, 1, 2});
  for (std::size_t a = 0; a < 5; ++a) {
    CHECK(core_order_leq(c, a, a));
    for (std::size_t b = 0; b < 5; ++b) {
      CHECK((core_order_leq(c, a, b) || core_order_leq(c, b, a)));
      for (std::size_t d = 0; d < 5; ++d) {
        if (core_order_leq(c, a, b) && core_order_leq(c, b, d)) CHECK(core_order_leq(c, a, d));
      }
    }
  }
}
