#include "robinf/linalg.hpp"

#include <string>
#include <utility>

#include "robinf/errors.hpp"

namespace robinf {
namespace {

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Gauss-Jordan over the first `limit` columns only; the remaining columns are
// carried along (augmented systems).
RrefResult reduce(RatMatrix m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < limit && pivot_row < m.rows(); ++c) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, c).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) swap_rows(m, found, pivot_row);

    const Rational inv = m(pivot_row, c).reciprocal();
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(pivot_row, k);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

RrefResult rref(const RatMatrix& m) { return reduce(m, m.cols()); }

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<RatVector> nullspace_basis(const RatMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) {
    throw DimensionError("solve: right-hand side has length " + std::to_string(b.size()) +
                         ", matrix has " + std::to_string(a.rows()) + " rows");
  }
  RatMatrix augmented(a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) augmented(r, 0) = b[r];
  const auto [reduced, pivots] = reduce(a.hconcat(augmented), a.cols());

  // A nonzero right-hand side on an all-zero row means 0 = c.
  for (std::size_t r = pivots.size(); r < reduced.rows(); ++r) {
    if (!reduced(r, a.cols()).is_zero()) return std::nullopt;
  }
  RatVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, a.cols());
  return x;
}

std::optional<RatMatrix> invert(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("invert: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  auto [reduced, pivots] = reduce(m.hconcat(RatMatrix::identity(n)), n);
  if (pivots.size() != n) return std::nullopt;
  return reduced.col_block(n, n);
}

}  // namespace robinf
