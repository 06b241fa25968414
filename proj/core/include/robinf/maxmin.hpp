#pragma once

#include <cstddef>

#include "robinf/experiment.hpp"

namespace robinf {

struct MaxminOutcome {
  Rational value;
  std::size_t best_action_index = 0;
  Action best_action;
  /// Minimizer of the best action over the identified set.
  Prior worst_prior;
};

/// max over actions of min over {nu : E nu = E mu} of <a, nu>.
/// Ties between actions go to the earlier one; ties between minimizing
/// priors go to the earlier vertex. Throws DimensionError.
MaxminOutcome maxmin(const Experiment& e, const DecisionProblem& problem);

struct ProblemComparison {
  Rational first;
  Rational second;
};

/// Maxmin values of one decision problem under two experiments on the same
/// states.
ProblemComparison compare_on_problem(const Experiment& e, const Experiment& e_prime,
                                     const DecisionProblem& problem);

}  // namespace robinf
