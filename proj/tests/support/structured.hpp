#pragma once

// Three-state instances whose identified sets are resolved by the 1/24 grid:
// the prior sits on the grid and every null direction of the experiment is
// a primitive integer vector d with sum |d_i| <= 6, so each vertex of the
// set lies within one grid step (along d) of a feasible grid point.

#include <array>
#include <cstdint>
#include <random>

#include "robinf/experiment.hpp"
#include "robinf/linalg.hpp"

namespace robinf::testing {

struct GridInstance {
  Experiment experiment;
  Prior prior;
  Action action;
};

inline Prior grid_prior(std::mt19937_64& rng) {
  // Composition of 24 into three positive parts.
  long a = 1 + static_cast<long>(rng() % 22);
  long b = 1 + static_cast<long>(rng() % 22);
  if (a > b) std::swap(a, b);
  if (a == b) b = a + 1;
  return Prior(RatVector{Rational(a, 24), Rational(b - a, 24), Rational(24 - b, 24)});
}

inline GridInstance grid_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 17);
  const Prior mu = grid_prior(rng);
  const Action action = random_action(3, seed + 5000, 5);

  switch (seed % 4) {
    case 0: {  // identical columns: the whole simplex
      const std::size_t m = 1 + seed % 3;
      const auto column = random_experiment(m, 1, seed, 12).matrix();
      return {validate_experiment(column.hconcat(column).hconcat(column)), mu, action};
    }
    case 1: {  // full rank: the singleton {mu}
      for (std::uint64_t k = 0;; ++k) {
        auto e = random_experiment(3, 3, seed * 101 + k, 12);
        if (rank(e.matrix()) == 3) return {std::move(e), mu, action};
      }
    }
    case 2: {  // rank two with a short null direction
      static constexpr std::array<std::array<long, 3>, 9> directions{{
          {1, -1, 0}, {0, 1, -1}, {1, 0, -1}, {1, 1, -2}, {1, -2, 1},
          {-2, 1, 1}, {2, -1, -1}, {1, -3, 2}, {3, -1, -2}}};
      const auto& d = directions[rng() % directions.size()];
      // w = d x (1,1,1) is orthogonal to d and to the all-ones row.
      const std::array<long, 3> w{d[1] - d[2], d[2] - d[0], d[0] - d[1]};
      long wmax = 0;
      for (long x : w) wmax = std::max(wmax, std::abs(x));
      const long k = 1 + static_cast<long>(rng() % 3);
      const Rational s = Rational(rng() % 2 ? 1 : -1, 2 * wmax * k);
      RatMatrix e(2, 3);
      for (std::size_t c = 0; c < 3; ++c) {
        e(0, c) = Rational(1, 2) + s * Rational(w[c]);
        e(1, c) = Rational(1) - e(0, c);
      }
      return {validate_experiment(e), mu, action};
    }
    default: {  // a two-block partition of the states, then garbled
      const std::size_t lone = rng() % 3;
      RatMatrix partition(2, 3);
      for (std::size_t c = 0; c < 3; ++c) partition(c == lone ? 0 : 1, c) = 1;
      const std::size_t m = 2 + seed % 2;
      for (std::uint64_t k = 0;; ++k) {
        const auto gamma = random_garbling(m, 2, seed * 13 + k, StochasticityConvention::ColumnStochastic);
        if (rank(gamma) == 2) return {validate_experiment(gamma * partition), mu, action};
      }
    }
  }
}

}  // namespace robinf::testing
