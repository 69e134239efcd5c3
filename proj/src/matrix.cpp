#include "bridgeland/matrix.hpp"

#include <utility>

namespace bridgeland {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw ValidationError("matrix entry is not an integer");
      out(i, j) = m(i, j).get_num();
    }
  }
  return out;
}

Rational bilinear(const RationalMatrix& gram, const RationalVector& x, const RationalVector& y) {
  if (gram.rows() != x.size() || gram.cols() != y.size()) {
    throw ValidationError("bilinear form: dimension mismatch");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += gram(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

Integer bilinear(const IntegerMatrix& gram, const IntegerVector& x, const IntegerVector& y) {
  if (gram.rows() != x.size() || gram.cols() != y.size()) {
    throw ValidationError("bilinear form: dimension mismatch");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += gram(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
  if (x.size() != y.size()) throw ValidationError("dot product: dimension mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * y[i];
  return total;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational lead = a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= lead;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivots != nullptr) *pivots = std::move(pivot_cols);
  return a;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

Integer determinant(const IntegerMatrix& m) {
  const Rational det = determinant(to_rational(m));
  return det.get_num();
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix reduced = rref(augmented, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ComputationError("singular matrix");
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = reduced(i, n + j);
  }
  return out;
}

RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
  if (!a.is_square() || a.rows() != b.size()) throw ValidationError("solve: dimension mismatch");
  const std::size_t n = a.rows();
  RationalMatrix augmented(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n) = b[i];
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix reduced = rref(augmented, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ComputationError("singular linear system");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = reduced(i, n);
  return x;
}

std::vector<IntegerVector> nullspace(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix reduced = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<IntegerVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols(), Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -reduced(r, free);
    basis.push_back(primitive_part(x));
  }
  return basis;
}

Signature signature(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw ValidationError("signature of a non-symmetric matrix");
  RationalMatrix a = symmetric;
  const std::size_t n = a.rows();
  Signature sig;
  // Symmetric elimination; a zero pivot with a nonzero off-diagonal entry is
  // repaired by adding the partner row and column.
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, p));
      } else {
        std::size_t q = k + 1;
        while (q < n && a(k, q) == 0) ++q;
        if (q == n) {
          ++sig.zero;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) a(k, j) += a(q, j);
        for (std::size_t i = 0; i < n; ++i) a(i, k) += a(i, q);
      }
    }
    const Rational pivot = a(k, k);
    if (pivot > 0) ++sig.positive;
    else ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return sig;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (!m.is_square()) throw ValidationError("minors of a non-square matrix");
  std::vector<Rational> minors;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    }
    minors.push_back(determinant(sub));
  }
  return minors;
}

bool is_positive_definite(const RationalMatrix& symmetric) {
  for (const Rational& minor : leading_principal_minors(symmetric)) {
    if (minor <= 0) return false;
  }
  return true;
}

bool is_negative_definite(const RationalMatrix& symmetric) {
  const std::vector<Rational> minors = leading_principal_minors(symmetric);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sign(minors[k]) != expected) return false;
  }
  return true;
}

bool is_positive_semidefinite(const RationalMatrix& symmetric) {
  return signature(symmetric).negative == 0;
}

RationalMatrix restrict_form(const RationalMatrix& gram, const std::vector<RationalVector>& basis) {
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      out(i, j) = bilinear(gram, basis[i], basis[j]);
      out(j, i) = out(i, j);
    }
  }
  return out;
}

IntegerMatrix hermite_rows(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  auto combine = [&](std::size_t target, std::size_t other, const Integer& p, const Integer& q,
                     const Integer& s, const Integer& t) {
    // [target; other] <- [[p, q], [s, t]] [target; other]
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer x = a(target, j);
      const Integer y = a(other, j);
      a(target, j) = p * x + q * y;
      a(other, j) = s * x + t * y;
    }
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      const Integer x = a(r, c);
      const Integer y = a(i, c);
      Integer s;
      Integer t;
      const Integer g = extended_gcd(x, y, s, t);
      const Integer xg = x / g;
      const Integer yg = y / g;
      combine(r, i, s, t, Integer(-yg), xg);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  IntegerMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  }
  return out;
}

std::vector<IntegerVector> integer_kernel(const IntegerMatrix& m) {
  // Row-reduce [m^T | I]; rows whose left block vanishes span the kernel.
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  IntegerMatrix augmented(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) augmented(i, j) = m(j, i);
    augmented(i, k + i) = 1;
  }
  const IntegerMatrix reduced = hermite_rows(augmented);
  std::vector<IntegerVector> basis;
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < k && left_zero; ++j) left_zero = reduced(i, j) == 0;
    if (!left_zero) continue;
    IntegerVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = reduced(i, k + j);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace bridgeland
