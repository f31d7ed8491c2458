#include <doctest.h>

#include "hardy/minorant.hpp"
#include "hardy/oracle.hpp"

using namespace hardy;

namespace {
ScalarField field(std::initializer_list<long> values) {
  ScalarField out;
  for (long v : values) out.emplace_back(Rational(v));
  return out;
}
const MeasureSpace unit3 = MeasureSpace::with_weights({Rational(1), Rational(1), Rational(1)});
const OrderedCore prefix3 = OrderedCore::prefixes(3);
}  // namespace

TEST_CASE("greatest minorant is the running minimum") {
  const MinorantResult r = greatest_minorant(prefix3, unit3, field({5, 2, 3}));
  CHECK(r.minorant == field({5, 2, 2}));
  CHECK(brute_force_minorant(prefix3, unit3, field({5, 2, 3})) == r.minorant);
  CHECK(greatest_minorant(prefix3, unit3, field({4, 4, 4})).minorant == field({4, 4, 4}));
}

TEST_CASE("mu-null points adopt the value of positive-mass predecessors") {
  const auto space = MeasureSpace::with_weights({Rational(0), Rational(1), Rational(1)});
  const MinorantResult r = greatest_minorant(prefix3, space, field({1, 7, 9}));
  CHECK(r.perLayerValue[0].is_infinite());
  CHECK(r.perLayerValue[1] == Extended(7));
  CHECK(r.perLayerValue[2] == Extended(7));
  CHECK(r.minorant[1] == Extended(7));
  CHECK(r.minorant[2] == Extended(7));
}

TEST_CASE("variational value and LP agree on the worked example") {
  const ScalarField f = field({1, 1, 1});
  const ScalarField u = field({5, 2, 3});
  CHECK(variational_value(prefix3, unit3, f, u) == Extended(9));
  CHECK(lp_variational(prefix3, unit3, f, u) == 9);
  CHECK(variational_value(prefix3, unit3, field({0, 0, 0}), u).is_zero());
  CHECK(lp_variational(prefix3, unit3, f, field({0, 0, 0})) == 0);
  const ScalarField dec = field({6, 3, 1});
  CHECK(variational_value(prefix3, unit3, f, dec) == Extended(10));
}

TEST_CASE("push_mass_witness moves mass onto the cheapest earlier point") {
  const ScalarField f = field({1, 1, 1});
  CHECK(push_mass_witness(prefix3, unit3, f, field({5, 2, 3})) == field({1, 2, 0}));
  CHECK(push_mass_witness(prefix3, unit3, f, field({6, 3, 1})) == f);
  const ScalarField first = field({4, 0, 0});
  CHECK(push_mass_witness(prefix3, unit3, first, field({5, 2, 3})) == first);
}

TEST_CASE("minorant is monotone and homogeneous") {
  const OrderedCore core = OrderedCore::from_ranks({1, 2, 2, 3});
  const auto space = MeasureSpace::with_weights({Rational(1), Rational(2), Rational(0), Rational(1, 2)});
  const ScalarField g1 = field({4, 6, 1, 2});
  const ScalarField g2 = field({5, 6, 3, 2});
  const ScalarField m1 = greatest_minorant(core, space, g1).minorant;
  const ScalarField m2 = greatest_minorant(core, space, g2).minorant;
  for (std::size_t s = 0; s < 4; ++s) CHECK(m1[s] <= m2[s]);
  ScalarField scaled = g1;
  for (auto& x : scaled) x = x * Extended(Rational(3, 2));
  const ScalarField ms = greatest_minorant(core, space, scaled).minorant;
  for (std::size_t s = 0; s < 4; ++s) CHECK(ms[s] == m1[s] * Extended(Rational(3, 2)));
}
