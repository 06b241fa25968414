#include "robinf/experiment.hpp"

#include <algorithm>
#include <random>

namespace robinf {
namespace {

class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi]. Modulo reduction keeps the mapping
  // implementation-independent; the bias is irrelevant at these ranges.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

// `total` split into `parts` nonnegative integers, each ordered cut equally
// likely.
std::vector<std::uint64_t> composition(SeededStream& rng, std::uint64_t total, std::size_t parts) {
  std::vector<std::uint64_t> cuts(parts - 1);
  for (auto& c : cuts) c = rng.between(0, total);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::uint64_t> out(parts);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i + 1 < parts; ++i) {
    out[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  out[parts - 1] = total - prev;
  return out;
}

RatVector random_simplex_point(SeededStream& rng, std::size_t size, std::uint64_t bound) {
  const std::uint64_t denominator = rng.between(1, std::max<std::uint64_t>(bound, 1));
  const auto parts = composition(rng, denominator, size);
  RatVector v(size);
  for (std::size_t i = 0; i < size; ++i) {
    v[i] = Rational(mpz_class(static_cast<unsigned long>(parts[i])),
                    mpz_class(static_cast<unsigned long>(denominator)));
  }
  return v;
}

}  // namespace

Experiment validate_experiment(const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).sign() < 0) {
        throw ValidationError(ValidationErrorKind::NegativeEntry,
                              "negative entry " + m(r, c).str() + " at row " + std::to_string(r) +
                                  ", column " + std::to_string(c),
                              r, c);
      }
    }
  }
  const RatVector sums = m.col_sums();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sums[c] != 1) {
      throw ValidationError(ValidationErrorKind::ColumnSumNotOne,
                            "column " + std::to_string(c) + " sums to " + sums[c].str() + ", not 1",
                            std::nullopt, c);
    }
  }
  return Experiment(m);
}

Experiment validate_experiment(const std::vector<std::vector<Rational>>& grid) {
  if (grid.empty() || grid.front().empty()) {
    throw ValidationError(ValidationErrorKind::EmptyMatrix, "experiment matrix is empty");
  }
  return validate_experiment(RatMatrix::from_rows(grid));
}

Prior::Prior(RatVector weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() < 0) {
      throw ValidationError(ValidationErrorKind::NegativeWeight,
                            "prior weight " + std::to_string(i) + " is negative (" +
                                weights_[i].str() + ")",
                            std::nullopt, i);
    }
  }
  if (weights_.sum() != 1) {
    throw ValidationError(ValidationErrorKind::WeightsDoNotSumToOne,
                          "prior weights sum to " + weights_.sum().str() + ", not 1");
  }
}

Prior Prior::uniform(std::size_t n) {
  RatVector w(n);
  const Rational share = Rational(1) / Rational(n);
  for (auto& x : w) x = share;
  return Prior(std::move(w));
}

Prior Prior::degenerate(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("degenerate prior index out of range");
  RatVector w(n);
  w[i] = 1;
  return Prior(std::move(w));
}

bool Prior::has_full_support() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& x) { return x.sign() > 0; });
}

DecisionProblem::DecisionProblem(Prior prior, std::vector<Action> actions)
    : prior_(std::move(prior)), actions_(std::move(actions)) {
  if (actions_.empty()) {
    throw ValidationError(ValidationErrorKind::EmptyActionSet, "decision problem has no actions");
  }
  for (std::size_t k = 0; k < actions_.size(); ++k) {
    if (actions_[k].size() != prior_.size()) {
      throw DimensionError("action " + std::to_string(k) + " has " +
                           std::to_string(actions_[k].size()) + " payoffs, prior has " +
                           std::to_string(prior_.size()) + " states");
    }
  }
}

RatVector signal_distribution(const Experiment& e, const Prior& mu) {
  if (mu.size() != e.states()) {
    throw DimensionError("signal_distribution: experiment has " + std::to_string(e.states()) +
                         " states, prior has " + std::to_string(mu.size()));
  }
  return e.matrix() * mu.weights();
}

const char* to_string(StochasticityConvention convention) {
  return convention == StochasticityConvention::RowStochastic ? "row" : "column";
}

Experiment random_experiment(std::size_t m, std::size_t n, std::uint64_t seed,
                             std::uint64_t denominator_bound) {
  if (m == 0 || n == 0) throw DimensionError("random_experiment needs m, n >= 1");
  SeededStream rng(seed);
  RatMatrix out(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    const RatVector column = random_simplex_point(rng, m, denominator_bound);
    for (std::size_t r = 0; r < m; ++r) out(r, c) = column[r];
  }
  return validate_experiment(out);
}

RatMatrix random_garbling(std::size_t l, std::size_t m, std::uint64_t seed,
                          StochasticityConvention convention, std::uint64_t denominator_bound) {
  if (l == 0 || m == 0) throw DimensionError("random_garbling needs l, m >= 1");
  SeededStream rng(seed);
  RatMatrix out(l, m);
  if (convention == StochasticityConvention::RowStochastic) {
    for (std::size_t r = 0; r < l; ++r) {
      const RatVector row = random_simplex_point(rng, m, denominator_bound);
      for (std::size_t c = 0; c < m; ++c) out(r, c) = row[c];
    }
  } else {
    for (std::size_t c = 0; c < m; ++c) {
      const RatVector column = random_simplex_point(rng, l, denominator_bound);
      for (std::size_t r = 0; r < l; ++r) out(r, c) = column[r];
    }
  }
  return out;
}

Prior random_full_support_prior(std::size_t n, std::uint64_t seed, std::uint64_t denominator_bound) {
  if (n == 0) throw DimensionError("random_full_support_prior needs n >= 1");
  SeededStream rng(seed);
  const std::uint64_t denominator = rng.between(n, std::max<std::uint64_t>(denominator_bound, n));
  // Composition of (D - n) shifted by one keeps every part >= 1.
  auto parts = composition(rng, denominator - n, n);
  RatVector w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = Rational(mpz_class(static_cast<unsigned long>(parts[i] + 1)),
                    mpz_class(static_cast<unsigned long>(denominator)));
  }
  return Prior(std::move(w));
}

Action random_action(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (n == 0) throw DimensionError("random_action needs n >= 1");
  SeededStream rng(seed);
  const auto width = static_cast<std::uint64_t>(2 * bound);
  RatVector payoffs(n);
  for (auto& x : payoffs) x = static_cast<std::int64_t>(rng.between(0, width)) - bound;
  return Action(std::move(payoffs));
}

}  // namespace robinf
