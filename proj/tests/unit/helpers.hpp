#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bridgeland/matrix.hpp"
#include "bridgeland/mukai.hpp"

namespace bridgeland::testing {

inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Integer integer(long lo, long hi) { return Integer(uniform(lo, hi)); }
  Rational rational(long num_bound, long den_max) {
    return ratio(Integer(uniform(-num_bound, num_bound)), Integer(uniform(1, den_max)));
  }
  IntegerVector integer_vector(std::size_t n, long bound) {
    IntegerVector v(n);
    for (Integer& x : v) x = integer(-bound, bound);
    return v;
  }
  RationalVector rational_vector(std::size_t n, long num_bound, long den_max) {
    RationalVector v(n);
    for (Rational& x : v) x = rational(num_bound, den_max);
    return v;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Random unimodular matrix as a product of elementary row operations.
inline IntegerMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntegerMatrix p = IntegerMatrix::identity(n);
  if (n < 2) return p;
  for (int k = 0; k < steps; ++k) {
    const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Integer c = rng.integer(-2, 2);
    for (std::size_t col = 0; col < n; ++col) p(i, col) += c * p(j, col);
  }
  return p;
}

// Even lattice P^T diag(2h, -2c_2, ..., -2c_rho) P with ample class P^{-1} e_1.
inline NSLattice random_ns_lattice(Rng& rng, std::size_t rho) {
  IntegerMatrix d(rho, rho);
  d(0, 0) = 2 * rng.integer(1, 4);
  for (std::size_t i = 1; i < rho; ++i) d(i, i) = -2 * rng.integer(1, 4);
  const IntegerMatrix p = random_unimodular(rng, rho, 3 * static_cast<int>(rho));
  const IntegerMatrix g = p.transpose() * d * p;
  RationalVector e1(rho, Rational(0));
  e1[0] = 1;
  const IntegerVector h = to_integer(inverse(to_rational(p)) * e1);
  return NSLattice(g, h);
}

inline NSLattice degree2_k3() { return NSLattice(IntegerMatrix{{2}}, IntegerVector{1}); }

}  // namespace bridgeland::testing
