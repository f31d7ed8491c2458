#pragma once

#include <vector>

#include "hardy/core_spaces.hpp"

namespace hardy {

struct MinorantResult {
  ScalarField minorant;
  /// One value per layer, 1-based layer i stored at index i-1.
  std::vector<Extended> perLayerValue;
};

/// Greatest core-decreasing minorant of |g|: the running minimum, in chain
/// order, of g over the positive-mass points of each layer. Layers with no
/// positive-mass point inherit the running value; before the first
/// positive-mass point the value is +inf (empty essential infimum).
MinorantResult greatest_minorant(const OrderedCore& core, const MeasureSpace& space,
                                 const ScalarField& g);

/// Sum over points of f * minorant(u) * mu, with 0 * inf = 0. Equals the
/// infimum of sum g u mu over all g dominating f in mass on every core set.
Extended variational_value(const OrderedCore& core, const MeasureSpace& space,
                           const ScalarField& f, const ScalarField& u);

/// Feasible g attaining variational_value exactly. Each layer's f-mass is
/// moved onto the positive-mass point of smallest u among ranks up to that
/// layer (ties: lowest rank, then lowest index).
ScalarField push_mass_witness(const OrderedCore& core, const MeasureSpace& space,
                              const ScalarField& f, const ScalarField& u);

/// Sum over points of a * b * mu.
Extended weighted_sum(const MeasureSpace& space, const ScalarField& a, const ScalarField& b);

}  // namespace hardy
