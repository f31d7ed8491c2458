#pragma once

#include <vector>

#include "hardy/rational.hpp"

namespace hardy {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational objective{0};
  std::vector<Rational> x;
};

/// minimize c.x subject to A x >= b, x >= 0, in exact arithmetic.
/// Dense two-phase tableau simplex with Bland's rule, meant for the small
/// systems the oracles produce.
LpResult minimize_exact(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                        const std::vector<Rational>& c);

}  // namespace hardy
