#include "hardy/minorant.hpp"

#include <optional>
#include <stdexcept>

namespace hardy {

namespace {

Extended magnitude(const Extended& x) {
  if (x.is_infinite()) return x;
  return Extended(Rational(abs(x.value())));
}

void require_size(const ScalarField& field, std::size_t n, const char* what) {
  if (field.size() != n) {
    throw std::invalid_argument(std::string(what) + ": field length differs from point count");
  }
}

}  // namespace

MinorantResult greatest_minorant(const OrderedCore& core, const MeasureSpace& space,
                                 const ScalarField& g) {
  require_size(g, core.point_count(), "greatest_minorant");
  MinorantResult out;
  out.minorant.resize(core.point_count());
  out.perLayerValue.reserve(core.size());
  Extended running = Extended::infinity();
  for (std::size_t i = 1; i <= core.size(); ++i) {
    for (auto s : core.layer(i)) {
      if (space.has_mass(s)) running = std::min(running, magnitude(g[s]));
    }
    out.perLayerValue.push_back(running);
    for (auto s : core.layer(i)) out.minorant[s] = running;
  }
  return out;
}

Extended weighted_sum(const MeasureSpace& space, const ScalarField& a, const ScalarField& b) {
  Extended total(0);
  for (std::size_t s = 0; s < space.size(); ++s) {
    total += a.at(s) * b.at(s) * Extended(space.mu(s));
  }
  return total;
}

Extended variational_value(const OrderedCore& core, const MeasureSpace& space,
                           const ScalarField& f, const ScalarField& u) {
  require_size(f, core.point_count(), "variational_value");
  const auto lower = greatest_minorant(core, space, u);
  return weighted_sum(space, f, lower.minorant);
}

ScalarField push_mass_witness(const OrderedCore& core, const MeasureSpace& space,
                              const ScalarField& f, const ScalarField& u) {
  require_size(f, core.point_count(), "push_mass_witness");
  require_size(u, core.point_count(), "push_mass_witness");
  ScalarField g(core.point_count(), Extended(0));
  std::optional<std::size_t> best;  // positive-mass point of least u so far
  for (std::size_t i = 1; i <= core.size(); ++i) {
    Extended layerMass(0);
    for (auto s : core.layer(i)) {
      layerMass += f[s] * Extended(space.mu(s));
      if (space.has_mass(s) && (!best || u[s] < u[*best])) best = s;
    }
    if (layerMass.is_zero()) continue;
    if (!best) {
      throw std::logic_error("push_mass_witness: positive mass on a null prefix");
    }
    g[*best] += layerMass / space.mu(*best);
  }
  return g;
}

}  // namespace hardy
