#include "robinf/simplex.hpp"

#include <vector>

#include "robinf/errors.hpp"

namespace robinf {
namespace {

// Dense tableau. Row `rows` holds reduced costs; the last column holds the
// right-hand side (negated objective value in the cost row).
class Tableau {
 public:
  Tableau(const RatMatrix& a, const RatVector& b)
      : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1), cells_(m_ + 1, std::vector<Rational>(width_)),
        basis_(m_), active_(m_, true) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j) cells_[i][j] = flip ? -a(i, j) : a(i, j);
      cells_[i][rhs()] = flip ? -b[i] : b[i];
      cells_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  // Phase one: minimize the sum of artificials, then evict them.
  bool phase_one() {
    auto& cost = cells_[m_];
    for (auto& x : cost) x = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost[j] -= cells_[i][j];
      cost[rhs()] -= cells_[i][rhs()];
    }
    iterate(n_ + m_);
    if (!cost[rhs()].is_zero()) return false;

    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      std::size_t j = 0;
      while (j < n_ && cells_[i][j].is_zero()) ++j;
      if (j == n_) {
        active_[i] = false;  // redundant equation
      } else {
        pivot(i, j);
      }
    }
    return true;
  }

  // Phase two on the original columns. Returns false when unbounded.
  bool phase_two(const RatVector& c) {
    auto& cost = cells_[m_];
    for (std::size_t j = 0; j < width_; ++j) cost[j] = j < n_ ? c[j] : Rational(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) cost[j] -= cb * cells_[i][j];
    }
    return iterate(n_);
  }

  RatVector point() const {
    RatVector x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = cells_[i][rhs()];
    }
    return x;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }

  // Bland's rule over columns [0, limit). Returns false on unboundedness.
  bool iterate(std::size_t limit) {
    for (;;) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cells_[m_][j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || cells_[i][entering].sign() <= 0) continue;
        Rational ratio = cells_[i][rhs()] / cells_[i][entering];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = cells_[row];
    const Rational inv = pr[col].reciprocal();
    for (auto& x : pr) x *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row || (i < m_ && !active_[i])) continue;
      auto& r = cells_[i];
      if (r[col].is_zero()) continue;
      const Rational factor = r[col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (!pr[j].is_zero()) r[j] -= factor * pr[j];
      }
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

void check_shapes(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) {
    throw DimensionError("LP: " + std::to_string(a.rows()) + " constraints but rhs length " +
                         std::to_string(b.size()));
  }
}

}  // namespace

LpSolution solve_lp(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  check_shapes(a, b);
  if (c.size() != a.cols()) {
    throw DimensionError("LP: " + std::to_string(a.cols()) + " variables but cost length " +
                         std::to_string(c.size()));
  }
  Tableau t(a, b);
  if (!t.phase_one()) return {LpStatus::Infeasible, std::nullopt, Rational(0)};
  if (!t.phase_two(c)) return {LpStatus::Unbounded, std::nullopt, Rational(0)};
  RatVector x = t.point();
  Rational objective = dot(c, x);
  return {LpStatus::Optimal, std::move(x), std::move(objective)};
}

std::optional<RatVector> find_feasible_point(const RatMatrix& a, const RatVector& b) {
  check_shapes(a, b);
  Tableau t(a, b);
  if (!t.phase_one()) return std::nullopt;
  return t.point();
}

}  // namespace robinf
