#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "bridgeland/error.hpp"
#include "bridgeland/matrix.hpp"
#include "helpers.hpp"

namespace bridgeland {
namespace {

// Leibniz expansion.
Rational leibniz(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

RationalMatrix random_matrix(testing::Rng& rng, std::size_t r, std::size_t c, long bound) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.rational(bound, 3);
  }
  return m;
}

IntegerMatrix random_integer_matrix(testing::Rng& rng, std::size_t r, std::size_t c, long bound) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.integer(-bound, bound);
  }
  return m;
}

TEST(Determinant, MatchesLeibniz) {
  testing::Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const RationalMatrix m = random_matrix(rng, n, n, 4);
    EXPECT_EQ(determinant(m), leibniz(m));
    const IntegerMatrix z = random_integer_matrix(rng, n, n, 5);
    EXPECT_EQ(Rational(determinant(z)), leibniz(to_rational(z)));
  }
}

TEST(Inverse, TimesMatrixIsIdentity) {
  testing::Rng rng(2);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const RationalMatrix m = random_matrix(rng, n, n, 4);
    if (leibniz(m) == 0) {
      EXPECT_THROW(inverse(m), ComputationError);
      continue;
    }
    EXPECT_EQ(m * inverse(m), RationalMatrix::identity(n));
    const RationalVector b = random_matrix(rng, n, 1, 5).column(0);
    EXPECT_EQ(m * solve(m, b), b);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Nullspace, DimensionAndVanishing) {
  testing::Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 5));
    // Low-rank products make nontrivial kernels common.
    const std::size_t inner = static_cast<std::size_t>(rng.uniform(1, 3));
    const RationalMatrix m = random_matrix(rng, r, inner, 3) * random_matrix(rng, inner, c, 3);
    const std::vector<IntegerVector> ker = nullspace(m);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (const IntegerVector& v : ker) {
      EXPECT_TRUE(is_zero(m * to_rational(v)));
      EXPECT_EQ(content(v), 1);
    }
  }
}

TEST(Rref, PivotColumnsAreUnit) {
  const RationalMatrix m{{2, 4, 1}, {1, 2, 0}};
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(m, &pivots);
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r, (RationalMatrix{{1, 2, 0}, {0, 0, 1}}));
}

TEST(Signature, CongruenceInvariant) {
  testing::Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    RationalMatrix d(n, n);
    const int dim = static_cast<int>(n);
    int pos = 0;
    int neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d(i, i) = rng.integer(-3, 3);
      pos += d(i, i) > 0;
      neg += d(i, i) < 0;
    }
    const RationalMatrix p = to_rational(testing::random_unimodular(rng, n, 8));
    const RationalMatrix g = p.transpose() * d * p;
    const Signature s = signature(g);
    EXPECT_EQ(s.positive, pos);
    EXPECT_EQ(s.negative, neg);
    EXPECT_EQ(s.zero, dim - pos - neg);
    EXPECT_EQ(is_positive_definite(g), pos == dim);
    EXPECT_EQ(is_negative_definite(g), neg == dim);
    EXPECT_EQ(is_positive_semidefinite(g), neg == 0);
  }
}

TEST(Signature, ZeroPivot) {
  const Signature s = signature(RationalMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(s.positive, 1);
  EXPECT_EQ(s.negative, 1);
}

// Does the row lattice of `a` contain every row of `b`? Rows of `a` independent.
bool contains_rows(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (b.rows() == 0) return true;
  const RationalMatrix at = to_rational(a).transpose();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    // Solve at x = b_i on the pivot rows; the solution must be integral.
    RationalMatrix aug(at.rows(), at.cols() + 1);
    for (std::size_t r = 0; r < at.rows(); ++r) {
      for (std::size_t c = 0; c < at.cols(); ++c) aug(r, c) = at(r, c);
      aug(r, at.cols()) = b(i, r);
    }
    std::vector<std::size_t> pivots;
    const RationalMatrix red = rref(aug, &pivots);
    if (!pivots.empty() && pivots.back() == at.cols()) return false;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!is_integer(red(r, at.cols()))) return false;
    }
  }
  return true;
}

// gcd of the k x k minors, the product of the Smith invariants.
Integer determinantal_divisor(const IntegerMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<bool> rows(m.rows(), false);
  std::fill(rows.begin(), rows.begin() + static_cast<long>(k), true);
  do {
    std::vector<bool> cols(m.cols(), false);
    std::fill(cols.begin(), cols.begin() + static_cast<long>(k), true);
    do {
      RationalMatrix sub(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rows[i]) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (cols[j]) sub(a, b++) = m(i, j);
        }
        ++a;
      }
      g = gcd(g, to_integer(RationalVector{leibniz(sub)})[0]);
    } while (std::prev_permutation(cols.begin(), cols.end()));
  } while (std::prev_permutation(rows.begin(), rows.end()));
  return g;
}

TEST(Hermite, SameLatticeAndShape) {
  testing::Rng rng(5);
  for (int k = 0; k < 150; ++k) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 4));
    const IntegerMatrix m = random_integer_matrix(rng, r, c, 6);
    const IntegerMatrix h = hermite_rows(m);
    EXPECT_EQ(h.rows(), rank(to_rational(m)));
    EXPECT_TRUE(contains_rows(h, m));
    // h has independent rows, so containment plus equal covolume is equality.
    if (h.rows() > 0) EXPECT_EQ(determinantal_divisor(h, h.rows()), determinantal_divisor(m, h.rows()));
    std::size_t last = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (h(i, p) == 0) ++p;
      if (i > 0) EXPECT_GT(p, last);
      EXPECT_GT(h(i, p), 0);
      for (std::size_t above = 0; above < i; ++above) {
        EXPECT_GE(h(above, p), 0);
        EXPECT_LT(h(above, p), h(i, p));
      }
      last = p;
    }
  }
}

TEST(IntegerKernel, AgainstBoxEnumeration) {
  testing::Rng rng(6);
  for (int k = 0; k < 60; ++k) {
    const std::size_t c = static_cast<std::size_t>(rng.uniform(2, 3));
    const IntegerMatrix m = random_integer_matrix(rng, 1, c, 4);
    const std::vector<IntegerVector> basis = integer_kernel(m);
    IntegerMatrix bm(basis.size(), c);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_TRUE(is_zero(to_rational(m) * to_rational(basis[i])));
      for (std::size_t j = 0; j < c; ++j) bm(i, j) = basis[i][j];
    }
    // Every kernel vector in a box is an integral combination of the basis.
    IntegerVector x(c, Integer(-4));
    while (true) {
      if (is_zero(to_rational(m) * to_rational(x)) && !is_zero(x)) {
        IntegerMatrix one(1, c);
        for (std::size_t j = 0; j < c; ++j) one(0, j) = x[j];
        EXPECT_TRUE(contains_rows(bm, one));
      }
      std::size_t i = 0;
      while (i < c && x[i] == 4) x[i++] = -4;
      if (i == c) break;
      ++x[i];
    }
  }
}

TEST(RestrictForm, Entries) {
  const RationalMatrix g{{2, 1}, {1, -2}};
  const RationalMatrix r = restrict_form(g, {{1, 1}, {1, -1}});
  EXPECT_EQ(r, (RationalMatrix{{2, 4}, {4, -2}}));
}

}  // namespace
}  // namespace bridgeland
