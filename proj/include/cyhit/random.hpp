// Seeded generators for random exact samples (sweeps and property tests).
#pragma once

#include "cyhit/rational.hpp"

#include <cstdint>
#include <random>

namespace cyhit {

using Rng = std::mt19937_64;

/// Uniform-ish rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
inline Rational random_rational(Rng& rng, long num_bound = 9, long den_bound = 5) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long num_bound = 9, long den_bound = 5) {
  Rational q = 0;
  while (q == 0) q = random_rational(rng, num_bound, den_bound);
  return q;
}

inline RatVector random_vector(Rng& rng, Eigen::Index n, long num_bound = 9, long den_bound = 5) {
  RatVector v(n);
  for (auto& x : v) x = random_rational(rng, num_bound, den_bound);
  return v;
}

inline RatMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long num_bound = 9,
                               long den_bound = 5) {
  RatMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_rational(rng, num_bound, den_bound);
  return m;
}

inline RatMatrix random_antisymmetric(Rng& rng, Eigen::Index n, long num_bound = 9, long den_bound = 5) {
  RatMatrix m = RatMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      m(i, j) = random_rational(rng, num_bound, den_bound);
      m(j, i) = -m(i, j);
    }
  return m;
}

/// Unit upper times unit lower triangular with random entries: always invertible.
inline RatMatrix random_invertible(Rng& rng, Eigen::Index n, long num_bound = 3, long den_bound = 2) {
  RatMatrix u = RatMatrix::Identity(n, n), l = RatMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      u(i, j) = random_rational(rng, num_bound, den_bound);
      l(j, i) = random_rational(rng, num_bound, den_bound);
    }
  return u * l;
}

}  // namespace cyhit
