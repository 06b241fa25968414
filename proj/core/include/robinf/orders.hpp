#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robinf/experiment.hpp"
#include "robinf/identified_set.hpp"

namespace robinf {

/// Falsifying data for "E is robustly more informative than E'".
///
/// p = mu + lambda * direction is plausible under E but not under E', and
/// `action` beats p by at least `margin` at every vertex of the E'-set, so
/// the singleton decision problem (mu, {action}) has a strictly lower maxmin
/// value under E than under E'.
struct RobustnessWitness {
  Prior mu;
  RatVector direction;
  Rational lambda;
  Prior p;
  Action action;
  Rational margin;
};

struct ComparisonVerdict {
  bool robustly_more_informative = false;
  /// E' = gamma * E; present iff the verdict is true.
  std::optional<RatMatrix> gamma;
  /// Present iff the verdict is false.
  std::optional<RobustnessWitness> witness;
};

struct GarblingResult {
  bool feasible = false;
  /// Nonnegative, stochastic under the requested convention, E' = gamma * E.
  std::optional<RatMatrix> gamma;
};

/// null(e) is contained in null(e_prime): every nullspace basis vector of e
/// is annihilated by e_prime. Works on raw matrices with equal column counts.
bool nullspace_included(const RatMatrix& e, const RatMatrix& e_prime);

/// Some gamma with e_prime = gamma * e, built row by row by expressing each
/// row of e_prime in the row space of e. nullopt when no such gamma exists.
std::optional<RatMatrix> linear_factor(const RatMatrix& e, const RatMatrix& e_prime);
std::optional<RatMatrix> linear_factor(const Experiment& e, const Experiment& e_prime);

/// Decides the robust order through nullspace inclusion and attaches either
/// the linear factor or a verified witness. Throws DimensionError when the
/// state counts differ and InvariantViolation if the certificates disagree.
ComparisonVerdict robustly_more_informative(const Experiment& e, const Experiment& e_prime);

/// Exact phase-one feasibility of {gamma >= 0, stochastic per convention,
/// e_prime = gamma * e}.
GarblingResult blackwell_garbling(const Experiment& e, const Experiment& e_prime,
                                  StochasticityConvention convention);

/// Constructs the witness for a failing pair: uniform mu, the first nullspace
/// basis vector d of e not annihilated by e_prime, half the maximal simplex
/// step along d, and a max-margin separating action in the box [-1, 1]^n.
/// Throws PreconditionViolated when e is in fact robustly more informative.
RobustnessWitness build_witness(const Experiment& e, const Experiment& e_prime);

/// The problem (mu, {a}) on which e falls strictly below e_prime.
DecisionProblem witness_decision_problem(const RobustnessWitness& w);

/// Human-readable list of witness invariants that fail; empty when valid.
std::vector<std::string> witness_violations(const Experiment& e, const Experiment& e_prime,
                                            const RobustnessWitness& w);

/// Forms gamma0 * e and reports whether e robustly dominates it. Under
/// ColumnStochastic the product is validated as an experiment; under
/// RowStochastic it generally is not column stochastic and the nullspace
/// criterion runs on the raw product. Throws PreconditionViolated if gamma0
/// is not a nonnegative stochastic matrix under `convention`.
bool blackwell_implies_robust_check(const Experiment& e, const RatMatrix& gamma0,
                                    StochasticityConvention convention);

enum class RobustRelation { FirstDominates, SecondDominates, Equivalent, Incomparable };

RobustRelation classify(bool first_over_second, bool second_over_first);
const char* to_string(RobustRelation relation);

}  // namespace robinf
