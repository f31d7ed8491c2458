#include "hardy/transition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hardy {

LineMeasure::LineMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (sgn(atoms_[i].mass) <= 0) throw std::invalid_argument("line measure: non-positive mass");
    if (sgn(atoms_[i].position) < 0) throw std::invalid_argument("line measure: negative position");
    if (i > 0 && atoms_[i].position <= atoms_[i - 1].position) {
      throw std::invalid_argument("line measure: positions not strictly increasing");
    }
  }
}

Rational LineMeasure::mass_up_to(const Rational& x) const {
  Rational total = 0;
  for (const auto& atom : atoms_) {
    if (atom.position > x) break;
    total += atom.mass;
  }
  return total;
}

Rational LineMeasure::total() const {
  Rational total = 0;
  for (const auto& atom : atoms_) total += atom.mass;
  return total;
}

bool operator==(const LineMeasure& a, const LineMeasure& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].position != b[i].position || a[i].mass != b[i].mass) return false;
  }
  return true;
}

namespace {

Rational layer_mass(const OrderedCore& core, const MeasureSpace& space, std::size_t i) {
  return space.measure(core.layer(i));
}

}  // namespace

LineMeasure induced_line_measure(const OrderedCore& core, const MeasureSpace& space) {
  std::vector<Atom> atoms;
  Rational position = 0;
  for (std::size_t i = 1; i <= core.size(); ++i) {
    Rational mass = layer_mass(core, space, i);
    position += mass;
    if (sgn(mass) > 0) atoms.push_back({position, std::move(mass)});
  }
  return LineMeasure(std::move(atoms));
}

LineField R_map(const OrderedCore& core, const MeasureSpace& space, const ScalarField& f) {
  if (f.size() != core.point_count()) throw std::invalid_argument("R_map: field length mismatch");
  LineField out;
  for (std::size_t i = 1; i <= core.size(); ++i) {
    const Rational mass = layer_mass(core, space, i);
    if (sgn(mass) == 0) continue;
    Extended integral(0);
    for (auto s : core.layer(i)) integral += f[s] * Extended(space.mu(s));
    out.push_back(integral / mass);
  }
  return out;
}

ScalarField Q_map(const OrderedCore& core, const MeasureSpace& space, const LineField& phi) {
  ScalarField out(core.point_count(), Extended(0));
  if (phi.empty()) return out;
  std::vector<std::optional<std::size_t>> atomOfLayer(core.size());
  std::size_t next = 0;
  for (std::size_t i = 1; i <= core.size(); ++i) {
    if (sgn(layer_mass(core, space, i)) > 0) {
      atomOfLayer[i - 1] = next;
      ++next;
    } else if (next > 0) {
      atomOfLayer[i - 1] = next - 1;
    }
  }
  if (next != phi.size()) throw std::invalid_argument("Q_map: field does not match the atoms");
  for (std::size_t i = 1; i <= core.size(); ++i) {
    const std::size_t atom = atomOfLayer[i - 1].value_or(0);
    for (auto s : core.layer(i)) out[s] = phi[atom];
  }
  return out;
}

LineMeasure pushforward_measure(const CoreMap& cm, const MeasureSpace& space) {
  std::map<Rational, Rational> grouped;
  for (std::size_t y = 0; y < cm.size(); ++y) {
    if (sgn(cm.tau(y)) == 0) continue;
    grouped[space.measure(cm.ball(y))] += cm.tau(y);
  }
  std::vector<Atom> atoms;
  for (auto& [position, mass] : grouped) atoms.push_back({position, mass});
  return LineMeasure(std::move(atoms));
}

Rational distribution(const std::vector<Rational>& weights, const std::vector<Extended>& values,
                      const Rational& alpha) {
  if (weights.size() != values.size()) throw std::invalid_argument("distribution: size mismatch");
  const Extended threshold(alpha);
  Rational total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > threshold) total += weights[i];
  }
  return total;
}

Rational distribution(const MeasureSpace& space, const ScalarField& f, const Rational& alpha) {
  return distribution(space.mu(), f, alpha);
}

Rational distribution(const LineMeasure& measure, const LineField& field, const Rational& alpha) {
  std::vector<Rational> weights;
  for (const auto& atom : measure.atoms()) weights.push_back(atom.mass);
  return distribution(weights, field, alpha);
}

LineField hardy_on_line(const LineMeasure& lambda, const LineField& rf, const LineMeasure& at) {
  if (rf.size() != lambda.size()) throw std::invalid_argument("hardy_on_line: field mismatch");
  LineField out;
  out.reserve(at.size());
  Extended running(0);
  std::size_t next = 0;
  for (const auto& point : at.atoms()) {
    while (next < lambda.size() && lambda[next].position <= point.position) {
      running += rf[next] * Extended(lambda[next].mass);
      ++next;
    }
    out.push_back(running);
  }
  return out;
}

std::vector<Extended> abstract_hardy(const CoreMap& cm, const MeasureSpace& space,
                                     const ScalarField& f) {
  std::vector<Extended> out;
  out.reserve(cm.size());
  for (std::size_t y = 0; y < cm.size(); ++y) {
    Extended integral(0);
    for (auto s : cm.ball(y)) integral += f.at(s) * Extended(space.mu(s));
    out.push_back(integral);
  }
  return out;
}

bool check_equimeasurable(const CoreMap& cm, const MeasureSpace& space, const ScalarField& f) {
  const InducedCore induced = induced_core(cm, space);
  const ScalarField local = restrict_field(f, induced.kept);
  const LineMeasure lambda = induced_line_measure(induced.core, induced.space);
  const LineField rf = R_map(induced.core, induced.space, local);
  const LineMeasure nu = pushforward_measure(cm, space);
  const LineField hf = hardy_on_line(lambda, rf, nu);
  const std::vector<Extended> tf = abstract_hardy(cm, space, f);

  std::set<Rational> thresholds{Rational(0)};
  for (const auto& v : hf) {
    if (v.is_finite()) thresholds.insert(v.value());
  }
  for (const auto& v : tf) {
    if (v.is_finite()) thresholds.insert(v.value());
  }
  Rational tauTotal = 0;
  for (const auto& w : cm.tau()) tauTotal += w;
  if (nu.total() != tauTotal) return false;
  for (const auto& alpha : thresholds) {
    if (distribution(nu, hf, alpha) != distribution(cm.tau(), tf, alpha)) return false;
  }
  return true;
}

}  // namespace hardy
