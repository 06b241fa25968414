#include "robinf/orders.hpp"

#include <algorithm>

#include "robinf/linalg.hpp"
#include "robinf/simplex.hpp"

namespace robinf {
namespace {

void require_same_states(const RatMatrix& e, const RatMatrix& e_prime, const char* op) {
  if (e.cols() != e_prime.cols()) {
    throw DimensionError(std::string(op) + ": experiments have " + std::to_string(e.cols()) +
                         " and " + std::to_string(e_prime.cols()) + " states");
  }
}

bool is_stochastic(const RatMatrix& m, StochasticityConvention convention) {
  if (m.has_negative_entry()) return false;
  const RatVector sums =
      convention == StochasticityConvention::RowStochastic ? m.row_sums() : m.col_sums();
  return std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s == 1; });
}

// Maximize eps subject to <a, q_j - p> >= eps for every vertex q_j and
// -1 <= a_i <= 1. With a = u - 1 the variables are
//   u (n) | eps | t (one surplus per vertex) | s (n box slacks)
// and the problem is: minimize -eps subject to
//   sum_i u_i (q_ji - p_i) - eps - t_j = sum_i (q_ji - p_i)
//   u_i + s_i = 2.
std::pair<Action, Rational> max_margin_action(const VertexList& vertices, const Prior& p) {
  const std::size_t n = p.size();
  const std::size_t k = vertices.size();
  const std::size_t eps = n;
  const std::size_t vars = 2 * n + 1 + k;

  RatMatrix a(k + n, vars);
  RatVector b(k + n);
  for (std::size_t j = 0; j < k; ++j) {
    const RatVector gap = vertices[j].weights() - p.weights();
    for (std::size_t i = 0; i < n; ++i) a(j, i) = gap[i];
    a(j, eps) = -1;
    a(j, eps + 1 + j) = -1;
    b[j] = gap.sum();
  }
  for (std::size_t i = 0; i < n; ++i) {
    a(k + i, i) = 1;
    a(k + i, eps + 1 + k + i) = 1;
    b[k + i] = 2;
  }
  RatVector c(vars);
  c[eps] = -1;

  const LpSolution sol = solve_lp(a, b, c);
  if (sol.status != LpStatus::Optimal) {
    throw InvariantViolation("separating-action LP did not reach an optimum");
  }
  RatVector payoffs(n);
  for (std::size_t i = 0; i < n; ++i) payoffs[i] = (*sol.x)[i] - 1;
  return {Action(std::move(payoffs)), (*sol.x)[eps]};
}

}  // namespace

bool nullspace_included(const RatMatrix& e, const RatMatrix& e_prime) {
  require_same_states(e, e_prime, "nullspace_included");
  const auto basis = nullspace_basis(e);
  return std::all_of(basis.begin(), basis.end(),
                     [&e_prime](const RatVector& d) { return (e_prime * d).is_zero(); });
}

std::optional<RatMatrix> linear_factor(const RatMatrix& e, const RatMatrix& e_prime) {
  require_same_states(e, e_prime, "linear_factor");
  // Row i of e_prime as a combination of the rows of e: e^T gamma_i = e'_i.
  const RatMatrix et = e.transpose();
  RatMatrix gamma(e_prime.rows(), e.rows());
  for (std::size_t i = 0; i < e_prime.rows(); ++i) {
    const auto coeffs = solve(et, e_prime.row(i));
    if (!coeffs) return std::nullopt;
    for (std::size_t j = 0; j < e.rows(); ++j) gamma(i, j) = (*coeffs)[j];
  }
  return gamma;
}

std::optional<RatMatrix> linear_factor(const Experiment& e, const Experiment& e_prime) {
  return linear_factor(e.matrix(), e_prime.matrix());
}

ComparisonVerdict robustly_more_informative(const Experiment& e, const Experiment& e_prime) {
  require_same_states(e.matrix(), e_prime.matrix(), "robustly_more_informative");
  ComparisonVerdict verdict;
  verdict.robustly_more_informative = nullspace_included(e.matrix(), e_prime.matrix());
  if (verdict.robustly_more_informative) {
    verdict.gamma = linear_factor(e, e_prime);
    if (!verdict.gamma || *verdict.gamma * e.matrix() != e_prime.matrix()) {
      throw InvariantViolation("nullspace inclusion holds but no linear factor was found");
    }
  } else {
    verdict.witness = build_witness(e, e_prime);
    if (auto bad = witness_violations(e, e_prime, *verdict.witness); !bad.empty()) {
      throw InvariantViolation("witness failed verification: " + bad.front());
    }
  }
  return verdict;
}

GarblingResult blackwell_garbling(const Experiment& e, const Experiment& e_prime,
                                  StochasticityConvention convention) {
  require_same_states(e.matrix(), e_prime.matrix(), "blackwell_garbling");
  const std::size_t m = e.signals();
  const std::size_t l = e_prime.signals();
  const std::size_t n = e.states();
  const std::size_t stochastic_rows = convention == StochasticityConvention::RowStochastic ? l : m;

  // Unknowns gamma(i, j) at index i * m + j.
  RatMatrix a(l * n + stochastic_rows, l * m);
  RatVector b(l * n + stochastic_rows);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t row = i * n + k;
      for (std::size_t j = 0; j < m; ++j) a(row, i * m + j) = e.matrix()(j, k);
      b[row] = e_prime.matrix()(i, k);
    }
  }
  for (std::size_t s = 0; s < stochastic_rows; ++s) {
    const std::size_t row = l * n + s;
    if (convention == StochasticityConvention::RowStochastic) {
      for (std::size_t j = 0; j < m; ++j) a(row, s * m + j) = 1;
    } else {
      for (std::size_t i = 0; i < l; ++i) a(row, i * m + s) = 1;
    }
    b[row] = 1;
  }

  const auto x = find_feasible_point(a, b);
  if (!x) return {};
  RatMatrix gamma(l, m);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < m; ++j) gamma(i, j) = (*x)[i * m + j];
  if (!is_stochastic(gamma, convention) || gamma * e.matrix() != e_prime.matrix()) {
    throw InvariantViolation("garbling LP returned an invalid certificate");
  }
  return {true, std::move(gamma)};
}

RobustnessWitness build_witness(const Experiment& e, const Experiment& e_prime) {
  require_same_states(e.matrix(), e_prime.matrix(), "build_witness");
  const std::size_t n = e.states();

  std::optional<RatVector> direction;
  for (auto& d : nullspace_basis(e.matrix())) {
    if (!(e_prime.matrix() * d).is_zero()) {
      direction = std::move(d);
      break;
    }
  }
  if (!direction) {
    throw PreconditionViolated("build_witness: null(E) is contained in null(E'); no witness exists");
  }

  Prior mu = Prior::uniform(n);
  Rational lambda = max_feasible_step(mu, *direction) / 2;
  Prior p(mu.weights() + lambda * *direction);

  const IdentifiedSet coarse = identified_set(e_prime, mu);
  auto [action, margin] = max_margin_action(coarse.vertices(), p);

  return RobustnessWitness{std::move(mu), std::move(*direction), std::move(lambda),
                           std::move(p),  std::move(action),     std::move(margin)};
}

DecisionProblem witness_decision_problem(const RobustnessWitness& w) {
  return DecisionProblem(w.mu, {w.action});
}

std::vector<std::string> witness_violations(const Experiment& e, const Experiment& e_prime,
                                            const RobustnessWitness& w) {
  std::vector<std::string> bad;
  if (!(e.matrix() * w.direction).is_zero()) bad.emplace_back("E d != 0");
  if ((e_prime.matrix() * w.direction).is_zero()) bad.emplace_back("E' d == 0");
  if (!w.mu.has_full_support()) bad.emplace_back("mu lacks full support");
  if (!w.p.has_full_support()) bad.emplace_back("p is not strictly inside the simplex");
  if (w.p.weights() != w.mu.weights() + w.lambda * w.direction) bad.emplace_back("p != mu + lambda d");

  const IdentifiedSet fine = identified_set(e, w.mu);
  const IdentifiedSet coarse = identified_set(e_prime, w.mu);
  if (!fine.contains(w.p)) bad.emplace_back("p is not in the E-identified set");
  if (coarse.contains(w.p)) bad.emplace_back("p is in the E'-identified set");
  if (w.margin.sign() <= 0) bad.emplace_back("margin is not positive");

  const Rational at_p = w.action.expected(w.p);
  for (const auto& q : coarse.vertices()) {
    if (w.action.expected(q) < at_p + w.margin) {
      bad.emplace_back("vertex " + q.weights().str() + " is not separated by the margin");
    }
  }
  if (bad.empty() && !(min_linear(fine, w.action).value < min_linear(coarse, w.action).value)) {
    bad.emplace_back("worst case under E is not strictly below worst case under E'");
  }
  return bad;
}

bool blackwell_implies_robust_check(const Experiment& e, const RatMatrix& gamma0,
                                    StochasticityConvention convention) {
  if (gamma0.cols() != e.signals()) {
    throw DimensionError("blackwell_implies_robust_check: garbling has " +
                         std::to_string(gamma0.cols()) + " columns, experiment has " +
                         std::to_string(e.signals()) + " signals");
  }
  if (!is_stochastic(gamma0, convention)) {
    throw PreconditionViolated(std::string("garbling is not ") + to_string(convention) +
                               "-stochastic and nonnegative");
  }
  const RatMatrix product = gamma0 * e.matrix();
  if (convention == StochasticityConvention::ColumnStochastic) {
    return robustly_more_informative(e, validate_experiment(product)).robustly_more_informative;
  }
  const bool included = nullspace_included(e.matrix(), product);
  const auto factor = linear_factor(e.matrix(), product);
  if (included != factor.has_value()) {
    throw InvariantViolation("nullspace inclusion and linear factor disagree on raw product");
  }
  return included;
}

RobustRelation classify(bool first_over_second, bool second_over_first) {
  if (first_over_second && second_over_first) return RobustRelation::Equivalent;
  if (first_over_second) return RobustRelation::FirstDominates;
  if (second_over_first) return RobustRelation::SecondDominates;
  return RobustRelation::Incomparable;
}

const char* to_string(RobustRelation relation) {
  switch (relation) {
    case RobustRelation::FirstDominates: return "first-dominates";
    case RobustRelation::SecondDominates: return "second-dominates";
    case RobustRelation::Equivalent: return "equivalent";
    case RobustRelation::Incomparable: return "incomparable";
  }
  return "unknown";
}

}  // namespace robinf
