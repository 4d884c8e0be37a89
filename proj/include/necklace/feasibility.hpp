#pragma once

#include <optional>
#include <vector>

#include "necklace/rational.hpp"

namespace necklace {

enum class Relation { Equal, LessEq, GreaterEq };

/// One linear constraint  sum_i coefficients[i] * x_i  <relation>  constant.
/// Coefficients are indexed by variable id (dense; trailing zeros implied).
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational constant;
  Relation relation = Relation::LessEq;
};

/// A conjunction of linear equalities/inequalities over variables 0..n-1.
struct FeasibilitySystem {
  int variable_count = 0;
  std::vector<LinearConstraint> constraints;
};

struct FeasibilityResult {
  bool feasible = false;
  /// Present iff feasible; satisfies every constraint exactly.
  std::optional<std::vector<Rational>> witness;
};

/// Exact feasibility decision. Equalities are eliminated by substitution,
/// inequalities by Fourier-Motzkin elimination; a feasible system yields a
/// rational witness by back-substitution (midpoint of each variable's final
/// interval; one-sided or free intervals snap to the nearest integer in
/// range). The verdict carries no tolerance in either direction.
FeasibilityResult solve_feasibility(const FeasibilitySystem& system);

}  // namespace necklace
