#include "robinf/identified_set.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "robinf/linalg.hpp"

namespace robinf {
namespace {

// Advances a strictly increasing index vector to the next k-subset of
// {0, ..., n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IdentifiedSet::IdentifiedSet(Experiment experiment, const Prior& mu)
    : experiment_(std::move(experiment)),
      observed_(signal_distribution(experiment_, mu)),
      cache_(std::make_shared<VertexCache>()) {}

IdentifiedSet identified_set(const Experiment& e, const Prior& mu) { return IdentifiedSet(e, mu); }

bool IdentifiedSet::contains(const Prior& nu) const {
  if (nu.size() != states()) {
    throw DimensionError("contains: set has " + std::to_string(states()) + " states, prior has " +
                         std::to_string(nu.size()));
  }
  return experiment_.matrix() * nu.weights() == observed_;
}

const VertexList& IdentifiedSet::vertices() const {
  std::call_once(cache_->once, [this] {
    cache_->vertices = simplex_slice_vertices(experiment_.matrix(), observed_);
  });
  return cache_->vertices;
}

bool IdentifiedSet::is_singleton() const { return rank(experiment_.matrix()) == states(); }

bool IdentifiedSet::is_full_simplex() const { return rank(experiment_.matrix()) == 1; }

VertexList simplex_slice_vertices(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionError("simplex_slice_vertices: rhs length mismatch");
  const std::size_t n = a.cols();

  RatMatrix ones(1, n);
  for (std::size_t c = 0; c < n; ++c) ones(0, c) = 1;
  RatMatrix rhs(a.rows() + 1, 1);
  for (std::size_t r = 0; r < a.rows(); ++r) rhs(r, 0) = b[r];
  rhs(a.rows(), 0) = 1;

  // Row-reduce [A; 1 | b; 1] so only independent equations remain.
  const auto [reduced, pivots] = rref(a.vconcat(ones).hconcat(rhs));
  const std::size_t r = std::count_if(pivots.begin(), pivots.end(),
                                      [n](std::size_t p) { return p < n; });
  if (r < pivots.size()) return {};  // pivot in the rhs column: inconsistent

  RatVector target(r);
  for (std::size_t i = 0; i < r; ++i) target[i] = reduced(i, n);

  VertexList out;
  std::vector<std::size_t> support(r);
  std::iota(support.begin(), support.end(), std::size_t{0});
  do {
    RatMatrix basis(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) basis(i, j) = reduced(i, support[j]);
    const auto inverse = invert(basis);
    if (!inverse) continue;
    const RatVector xb = *inverse * target;
    if (std::any_of(xb.begin(), xb.end(), [](const Rational& x) { return x.sign() < 0; })) continue;

    RatVector x(n);
    for (std::size_t j = 0; j < r; ++j) x[support[j]] = xb[j];
    Prior vertex(std::move(x));
    if (std::find(out.begin(), out.end(), vertex) == out.end()) out.push_back(std::move(vertex));
  } while (next_combination(support, n));
  return out;
}

LinearMinimum min_linear(const IdentifiedSet& s, const Action& a) {
  if (a.size() != s.states()) {
    throw DimensionError("min_linear: action has " + std::to_string(a.size()) +
                         " payoffs, set has " + std::to_string(s.states()) + " states");
  }
  const VertexList& vs = s.vertices();
  if (vs.empty()) throw InvariantViolation("identified set has no vertices");
  std::size_t best = 0;
  Rational best_value = a.expected(vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rational v = a.expected(vs[i]);
    if (v < best_value) {
      best_value = std::move(v);
      best = i;
    }
  }
  return {best_value, vs[best]};
}

bool subset_of(const IdentifiedSet& s, const IdentifiedSet& t) {
  if (s.states() != t.states()) {
    throw DimensionError("subset_of: state counts " + std::to_string(s.states()) + " and " +
                         std::to_string(t.states()));
  }
  const VertexList& vs = s.vertices();
  return std::all_of(vs.begin(), vs.end(), [&t](const Prior& v) { return t.contains(v); });
}

Rational max_feasible_step(const Prior& mu, const RatVector& direction) {
  if (direction.size() != mu.size()) throw DimensionError("max_feasible_step: length mismatch");
  std::optional<Rational> step;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (direction[i].sign() >= 0) continue;
    Rational ratio = mu[i] / -direction[i];
    if (!step || ratio < *step) step = std::move(ratio);
  }
  if (!step) throw PreconditionViolated("direction has no negative entry; step is unbounded");
  return *step;
}

}  // namespace robinf
