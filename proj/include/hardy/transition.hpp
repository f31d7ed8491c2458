#pragma once

#include <vector>

#include "hardy/core_spaces.hpp"

namespace hardy {

struct Atom {
  Rational position;
  Rational mass;
};

/// Atomic measure on [0, inf): positions strictly increasing, masses > 0.
class LineMeasure {
 public:
  LineMeasure() = default;
  explicit LineMeasure(std::vector<Atom> atoms);

  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] bool empty() const { return atoms_.empty(); }
  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
  [[nodiscard]] const Atom& operator[](std::size_t i) const { return atoms_.at(i); }
  /// Measure of [0, x].
  [[nodiscard]] Rational mass_up_to(const Rational& x) const;
  [[nodiscard]] Rational total() const;

  friend bool operator==(const LineMeasure& a, const LineMeasure& b);

 private:
  std::vector<Atom> atoms_;
};

/// Values at the atoms of an associated LineMeasure.
using LineField = std::vector<Extended>;

/// lambda: an atom at mu(A_i) of mass mu(A_i) - mu(A_{i-1}) for every layer of
/// positive measure.
LineMeasure induced_line_measure(const OrderedCore& core, const MeasureSpace& space);

/// R f: the mu-average of f over each surviving layer.
LineField R_map(const OrderedCore& core, const MeasureSpace& space, const ScalarField& f);

/// Q phi: phi at the atom of the point's layer. Points of zero-mass layers
/// take the nearest surviving atom to the left, or the first atom if none.
ScalarField Q_map(const OrderedCore& core, const MeasureSpace& space, const LineField& phi);

/// nu = image of tau under y -> mu(B(y)); atoms of zero mass dropped.
LineMeasure pushforward_measure(const CoreMap& cm, const MeasureSpace& space);

/// Total weight where value > alpha.
Rational distribution(const std::vector<Rational>& weights, const std::vector<Extended>& values,
                      const Rational& alpha);
Rational distribution(const MeasureSpace& space, const ScalarField& f, const Rational& alpha);
Rational distribution(const LineMeasure& measure, const LineField& field, const Rational& alpha);

/// H f(x) = integral of R f over [0, x] against lambda, evaluated at the atoms
/// of `at`.
LineField hardy_on_line(const LineMeasure& lambda, const LineField& rf, const LineMeasure& at);

/// T f(y) = integral of f over B(y).
std::vector<Extended> abstract_hardy(const CoreMap& cm, const MeasureSpace& space,
                                     const ScalarField& f);

/// True iff H f (against nu) and T f (against tau) have the same distribution
/// function at every threshold drawn from either value set.
bool check_equimeasurable(const CoreMap& cm, const MeasureSpace& space, const ScalarField& f);

}  // namespace hardy
