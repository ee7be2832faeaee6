#pragma once

// Seeded generators shared by the property tests.

#include <random>

#include "normbasis/exact.hpp"

namespace testgen {

using namespace normbasis;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long span = 9, long max_den = 5) {
    return make_rational(Integer(integer(-span, span)), Integer(integer(1, max_den)));
  }
  RatMatrix rat_matrix(std::size_t r, std::size_t c, long span = 9, long max_den = 4) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(span, max_den);
    return m;
  }
  IntMatrix int_matrix(std::size_t r, std::size_t c, long span = 9) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(integer(-span, span));
    return m;
  }
  UniPoly poly(int max_deg, long span = 6) {
    RatVector c(static_cast<std::size_t>(integer(0, max_deg)) + 1);
    for (auto& x : c) x = rational(span, 3);
    return UniPoly(c);
  }
  /// Random unimodular matrix as a product of elementary row operations.
  IntMatrix unimodular(std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    for (int s = 0; s < steps; ++s) {
      const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      const long k = integer(-2, 2);
      for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
      if (integer(0, 3) == 0) u.swap_rows(i, j);
    }
    return u;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
