#include "robinf/maxmin.hpp"

#include <optional>

#include "robinf/identified_set.hpp"

namespace robinf {

MaxminOutcome maxmin(const Experiment& e, const DecisionProblem& problem) {
  if (problem.states() != e.states()) {
    throw DimensionError("maxmin: experiment has " + std::to_string(e.states()) +
                         " states, decision problem has " + std::to_string(problem.states()));
  }
  const IdentifiedSet set = identified_set(e, problem.prior());
  const auto& actions = problem.actions();

  std::optional<MaxminOutcome> best;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    auto [value, argmin] = min_linear(set, actions[k]);
    if (!best || value > best->value) {
      best = MaxminOutcome{std::move(value), k, actions[k], std::move(argmin)};
    }
  }
  return *std::move(best);
}

ProblemComparison compare_on_problem(const Experiment& e, const Experiment& e_prime,
                                     const DecisionProblem& problem) {
  if (e.states() != e_prime.states()) {
    throw DimensionError("compare_on_problem: experiments have " + std::to_string(e.states()) +
                         " and " + std::to_string(e_prime.states()) + " states");
  }
  return {maxmin(e, problem).value, maxmin(e_prime, problem).value};
}

}  // namespace robinf
