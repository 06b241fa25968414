#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "robinf/experiment.hpp"

namespace robinf {

/// Extreme points of a polytope, each listed once, in enumeration order.
using VertexList = std::vector<Prior>;

/// The plausible priors {nu in simplex : E nu = E mu}.
///
/// Immutable. The vertex list is computed on first use and shared between
/// copies; concurrent first calls are serialized by std::call_once.
class IdentifiedSet {
 public:
  /// Throws DimensionError when mu has the wrong length.
  IdentifiedSet(Experiment experiment, const Prior& mu);

  const Experiment& experiment() const { return experiment_; }
  /// The signal distribution E mu every member reproduces.
  const RatVector& observed() const { return observed_; }
  std::size_t states() const { return experiment_.states(); }

  /// E nu == observed exactly.
  bool contains(const Prior& nu) const;

  /// Every basic feasible solution of {E nu = observed, sum nu = 1, nu >= 0},
  /// found by trying each candidate support of size rank and solving exactly.
  const VertexList& vertices() const;

  /// rank(E) == n: the set is {mu}.
  bool is_singleton() const;
  /// rank(E) == 1: the set is the whole simplex.
  bool is_full_simplex() const;

 private:
  struct VertexCache {
    std::once_flag once;
    VertexList vertices;
  };

  Experiment experiment_;
  RatVector observed_;
  std::shared_ptr<VertexCache> cache_;
};

IdentifiedSet identified_set(const Experiment& e, const Prior& mu);

/// Vertices of {x : a x = b, sum x = 1, x >= 0}. The system must be
/// consistent over the simplex or the result is empty.
VertexList simplex_slice_vertices(const RatMatrix& a, const RatVector& b);

struct LinearMinimum {
  Rational value;
  Prior argmin;
};

/// min <a, nu> over the set, taken over the vertex list; the first
/// minimizing vertex wins ties.
LinearMinimum min_linear(const IdentifiedSet& s, const Action& a);

/// Whether every vertex of s satisfies t's equality constraints, which by
/// convexity is inclusion of s in t. Throws DimensionError on state-count
/// mismatch.
bool subset_of(const IdentifiedSet& s, const IdentifiedSet& t);

/// Largest lambda >= 0 with mu + lambda d still nonnegative, i.e. the ratio
/// test min over d_i < 0 of mu_i / -d_i. Throws PreconditionViolated when d
/// has no negative entry.
Rational max_feasible_step(const Prior& mu, const RatVector& direction);

}  // namespace robinf
