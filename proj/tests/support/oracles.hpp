#pragma once

// Test-only reference routines. None of these call into the library's
// elimination, enumeration or LP code; they exist to check it.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "robinf/experiment.hpp"
#include "robinf/matrix.hpp"

namespace robinf::testing {

/// Every point of the simplex over n states whose entries are multiples of
/// 1/denominator.
inline std::vector<RatVector> simplex_grid(std::size_t n, unsigned denominator) {
  std::vector<RatVector> out;
  std::vector<unsigned> counts(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      counts[i] = left;
      RatVector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = Rational(static_cast<long>(counts[k]), static_cast<long>(denominator));
      out.push_back(std::move(v));
      return;
    }
    for (unsigned c = 0; c <= left; ++c) {
      counts[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, denominator);
  return out;
}

/// Naive product, independent of operator*.
inline RatVector apply(const RatMatrix& m, const RatVector& v) {
  RatVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = acc + m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

/// Minimum of <a, nu> over grid points nu with E nu == observed; nullopt when
/// no grid point is feasible.
inline std::optional<Rational> grid_min(const RatMatrix& e, const RatVector& observed, const RatVector& a,
                                        unsigned denominator) {
  std::optional<Rational> best;
  for (const auto& nu : simplex_grid(e.cols(), denominator)) {
    if (apply(e, nu) != observed) continue;
    Rational v = dot(a, nu);
    if (!best || v < *best) best = v;
  }
  return best;
}

/// Random rows x cols matrix with entries p/q, |p| <= bound, 1 <= q <= bound;
/// roughly `zero_percent` of entries are forced to zero to provoke rank loss.
inline RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, long bound,
                               unsigned zero_percent = 30) {
  std::mt19937_64 rng(seed);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng() % 100 < zero_percent) continue;
      const long p = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
      const long q = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(bound));
      m(r, c) = Rational(p, q);
    }
  }
  return m;
}

/// Rank by brute force: the largest k such that some k x k minor has a
/// nonzero determinant (Laplace expansion). Only for tiny matrices.
inline Rational determinant(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const Rational term = a[0][c] * determinant(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline std::size_t brute_force_rank(const RatMatrix& m) {
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t best = 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    bool found = false;
    const std::size_t rows_mask_end = std::size_t{1} << m.rows();
    const std::size_t cols_mask_end = std::size_t{1} << m.cols();
    for (std::size_t rm = 0; rm < rows_mask_end && !found; ++rm) {
      if (static_cast<std::size_t>(__builtin_popcountll(rm)) != k) continue;
      for (std::size_t cm = 0; cm < cols_mask_end && !found; ++cm) {
        if (static_cast<std::size_t>(__builtin_popcountll(cm)) != k) continue;
        std::vector<std::vector<Rational>> sub;
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (!(rm >> r & 1)) continue;
          std::vector<Rational> row;
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (cm >> c & 1) row.push_back(m(r, c));
          sub.push_back(std::move(row));
        }
        found = !determinant(sub).is_zero();
      }
    }
    if (!found) break;
    best = k;
  }
  return best;
}

}  // namespace robinf::testing
