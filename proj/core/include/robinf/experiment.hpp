#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robinf/errors.hpp"
#include "robinf/matrix.hpp"

namespace robinf {

enum class ValidationErrorKind {
  EmptyMatrix,
  NegativeEntry,
  ColumnSumNotOne,
  NegativeWeight,
  WeightsDoNotSumToOne,
  EmptyActionSet,
};

/// Input rejected by one of the experiment-model validators. Carries the
/// offending row and/or column when there is one.
class ValidationError : public Error {
 public:
  ValidationError(ValidationErrorKind kind, std::string message,
                  std::optional<std::size_t> row = std::nullopt,
                  std::optional<std::size_t> column = std::nullopt)
      : Error(std::move(message)), kind_(kind), row_(row), column_(column) {}

  ValidationErrorKind kind() const { return kind_; }
  std::optional<std::size_t> row() const { return row_; }
  std::optional<std::size_t> column() const { return column_; }

 private:
  ValidationErrorKind kind_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> column_;
};

/// Column-stochastic m x n matrix: rows are signals, columns are states and
/// entry (t, j) is Prob(signal t | state j).
class Experiment {
 public:
  const RatMatrix& matrix() const { return matrix_; }
  std::size_t signals() const { return matrix_.rows(); }
  std::size_t states() const { return matrix_.cols(); }

  friend bool operator==(const Experiment&, const Experiment&) = default;

 private:
  explicit Experiment(RatMatrix matrix) : matrix_(std::move(matrix)) {}
  friend Experiment validate_experiment(const RatMatrix& m);

  RatMatrix matrix_;
};

/// Checks nonnegativity and exact unit column sums.
/// Throws ValidationError (NegativeEntry, ColumnSumNotOne).
Experiment validate_experiment(const RatMatrix& m);

/// Same, starting from a raw grid; an empty grid is EmptyMatrix.
Experiment validate_experiment(const std::vector<std::vector<Rational>>& grid);

/// A point of the probability simplex over n states.
class Prior {
 public:
  /// Throws ValidationError (NegativeWeight, WeightsDoNotSumToOne).
  explicit Prior(RatVector weights);

  static Prior uniform(std::size_t n);
  /// Unit mass on state i.
  static Prior degenerate(std::size_t n, std::size_t i);

  const RatVector& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  bool has_full_support() const;

  friend bool operator==(const Prior&, const Prior&) = default;

 private:
  RatVector weights_;
};

/// Payoff per state.
class Action {
 public:
  explicit Action(RatVector payoffs) : payoffs_(std::move(payoffs)) {}

  const RatVector& payoffs() const { return payoffs_; }
  std::size_t size() const { return payoffs_.size(); }
  const Rational& operator[](std::size_t i) const { return payoffs_[i]; }

  /// Expected payoff under p.
  Rational expected(const Prior& p) const { return dot(payoffs_, p.weights()); }

  friend bool operator==(const Action&, const Action&) = default;

 private:
  RatVector payoffs_;
};

/// A prior together with a finite, nonempty action list.
class DecisionProblem {
 public:
  /// Throws ValidationError(EmptyActionSet) or DimensionError.
  DecisionProblem(Prior prior, std::vector<Action> actions);

  const Prior& prior() const { return prior_; }
  const std::vector<Action>& actions() const { return actions_; }
  std::size_t states() const { return prior_.size(); }

 private:
  Prior prior_;
  std::vector<Action> actions_;
};

/// E mu. Lies in the simplex over signals.
RatVector signal_distribution(const Experiment& e, const Prior& mu);

enum class StochasticityConvention { RowStochastic, ColumnStochastic };

const char* to_string(StochasticityConvention convention);

// Seeded generators for property tests. All are pure functions of their
// arguments; the stream is std::mt19937_64, whose output is fixed by the
// standard, so results are reproducible across platforms.

/// Each column is a random composition of a denominator D in [1, bound]
/// divided by D, so every entry's denominator divides some D <= bound.
Experiment random_experiment(std::size_t m, std::size_t n, std::uint64_t seed,
                             std::uint64_t denominator_bound);

/// Nonnegative l x m matrix whose rows (RowStochastic) or columns
/// (ColumnStochastic) sum exactly to one.
RatMatrix random_garbling(std::size_t l, std::size_t m, std::uint64_t seed,
                          StochasticityConvention convention,
                          std::uint64_t denominator_bound = 12);

/// Prior with every weight strictly positive; denominator at most
/// max(bound, n).
Prior random_full_support_prior(std::size_t n, std::uint64_t seed, std::uint64_t denominator_bound);

/// Integer payoffs drawn uniformly from [-bound, bound].
Action random_action(std::size_t n, std::uint64_t seed, std::int64_t bound);

}  // namespace robinf
