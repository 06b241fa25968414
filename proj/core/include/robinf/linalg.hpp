#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "robinf/matrix.hpp"

namespace robinf {

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // strictly increasing
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0} in free-variable form: one vector per non-pivot
/// column f of rref(m), with a 1 at f, zeros at the other free columns and
/// the negated reduced entries at the pivot columns. Ordered by f.
std::vector<RatVector> nullspace_basis(const RatMatrix& m);

/// One solution of a x = b (free variables set to zero), or nullopt when the
/// system is inconsistent. Throws DimensionError if b.size() != a.rows().
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Exact inverse, or nullopt when m is singular. Throws DimensionError for
/// non-square input.
std::optional<RatMatrix> invert(const RatMatrix& m);

}  // namespace robinf
