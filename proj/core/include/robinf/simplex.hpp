#pragma once

#include <optional>

#include "robinf/matrix.hpp"

namespace robinf {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status;
  /// Optimal point; present iff status == Optimal.
  std::optional<RatVector> x;
  /// c^T x at the optimum; zero otherwise.
  Rational objective;
};

/// Exact two-phase primal simplex for
///
///     minimize c^T x  subject to  A x = b,  x >= 0.
///
/// Phase one minimizes the sum of artificial variables from the all-artificial
/// basis; artificials left basic at level zero are pivoted out, or their rows
/// dropped as redundant. Both phases use Bland's rule (least-index entering
/// column, least-index basic variable among tied leaving rows), so the method
/// terminates and its output is a deterministic function of the input.
LpSolution solve_lp(const RatMatrix& a, const RatVector& b, const RatVector& c);

/// Phase one only: some x >= 0 with A x = b, or nullopt.
std::optional<RatVector> find_feasible_point(const RatMatrix& a, const RatVector& b);

}  // namespace robinf
