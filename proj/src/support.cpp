#include "bridgeland/support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "bridgeland/error.hpp"

namespace bridgeland {

Rational evaluate(const QuadraticForm& q, const RationalVector& v) { return bilinear(q, v, v); }

Rational evaluate(const QuadraticForm& q, const IntegerVector& v) {
  return evaluate(q, to_rational(v));
}

RationalMatrix charge_matrix(const ChargeRow& z) {
  RationalMatrix r(2, z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    r(0, j) = z[j].re;
    r(1, j) = z[j].im;
  }
  return r;
}

namespace {

RationalMatrix columns(const std::vector<IntegerVector>& vs, std::size_t n) {
  RationalMatrix m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  }
  return m;
}

std::vector<IntegerVector> kernel_of(const ChargeRow& z) {
  const RationalMatrix r = charge_matrix(z);
  if (rank(r) < 2) throw ComputationError("real and imaginary parts of Z are dependent");
  return nullspace(r);
}

// Basis (as columns) of the form-orthogonal complement of span(k).
RationalMatrix orthogonal_complement(const std::vector<IntegerVector>& k, const QuadraticForm& form) {
  const std::size_t n = form.rows();
  if (k.empty()) return RationalMatrix::identity(n);
  const RationalMatrix kt_g = columns(k, n).transpose() * form;
  return columns(nullspace(kt_g), n);
}

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

ChargeKernel charge_kernel(const ChargeRow& z, const QuadraticForm& form) {
  if (form.rows() != z.size() || !form.is_symmetric()) {
    throw ValidationError("form and charge have different dimensions");
  }
  ChargeKernel out;
  out.basis = kernel_of(z);
  const std::size_t n = z.size();
  if (out.basis.empty()) {
    out.projector = RationalMatrix(n, n);
    return out;
  }
  const RationalMatrix k = columns(out.basis, n);
  const RationalMatrix restricted = k.transpose() * form * k;
  if (determinant(restricted) == 0) {
    throw ComputationError("form is degenerate on Ker Z: charge outside the good locus");
  }
  out.projector = k * inverse(restricted) * k.transpose() * form;
  return out;
}

bool is_negative_definite_on(const QuadraticForm& q, const std::vector<RationalVector>& basis) {
  if (basis.empty()) return true;
  RationalMatrix m(basis.size(), q.rows());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != q.rows()) throw ValidationError("basis vector has the wrong length");
    for (std::size_t j = 0; j < q.rows(); ++j) m(i, j) = basis[i][j];
  }
  if (rank(m) < basis.size()) throw ValidationError("subspace basis is linearly dependent");
  return is_negative_definite(restrict_form(q, basis));
}

bool is_negative_definite_on(const QuadraticForm& q, const std::vector<IntegerVector>& basis) {
  std::vector<RationalVector> rational;
  for (const IntegerVector& b : basis) rational.push_back(to_rational(b));
  return is_negative_definite_on(q, rational);
}

bool SupportReport::pass() const {
  return kernel_negative_definite &&
         std::all_of(classes.begin(), classes.end(), [](const ClassVerdict& c) { return c.pass; });
}

SupportReport support_check(const QuadraticForm& q, const ChargeRow& z,
                            const std::vector<IntegerVector>& classes) {
  SupportReport report;
  report.kernel_negative_definite = is_negative_definite_on(q, kernel_of(z));
  for (const IntegerVector& v : classes) {
    ClassVerdict verdict{v, evaluate(q, v), false};
    verdict.pass = verdict.value >= 0;
    report.classes.push_back(std::move(verdict));
  }
  return report;
}

RationalMatrix charge_norm_form(const ChargeRow& z, const ChargeKernel& kernel,
                                const QuadraticForm& form) {
  const RationalMatrix r = charge_matrix(z);
  const RationalMatrix c = orthogonal_complement(kernel.basis, form);
  if (c.cols() != 2) throw ComputationError("complement of Ker Z does not have rank 2");
  const RationalMatrix rc_inv = inverse(r * c);
  const RationalMatrix s = rc_inv.transpose() * (c.transpose() * form * c) * rc_inv;
  // The residual identity must hold on the whole lattice, not just on c.
  const RationalMatrix& p = kernel.projector;
  if (form - p.transpose() * form * p != r.transpose() * s * r) {
    throw ComputationError("charge norm residual does not vanish");
  }
  if (!is_positive_definite(s)) {
    throw ComputationError("charge norm form is not positive definite: Z is not in the positive component");
  }
  return s;
}

Rational charge_norm(const RationalMatrix& s, const GaussianRational& z) {
  return s(0, 0) * z.re * z.re + 2 * s(0, 1) * z.re * z.im + s(1, 1) * z.im * z.im;
}

QuadraticForm auxiliary_form(const ChargeRow& z, const ChargeKernel& kernel,
                             const RationalMatrix& s, const QuadraticForm& form) {
  const RationalMatrix r = charge_matrix(z);
  const RationalMatrix& p = kernel.projector;
  return r.transpose() * s * r - p.transpose() * form * p;
}

namespace {

struct Ellipsoid {
  std::size_t n;
  std::vector<Rational> d;               // diagonal
  std::vector<std::vector<Rational>> mu; // mu[i][j], j > i
  std::uint64_t budget;
  std::uint64_t visited = 0;
  const std::function<void(const IntegerVector&)>* visit;
  IntegerVector x;
  Rational bound;

  // Smallest and largest integers with (x - c)^2 <= r2, if any.
  static bool range(const Rational& c, const Rational& r2, Integer& lo, Integer& hi) {
    const double cd = c.get_d();
    const double rd = std::sqrt(std::max(0.0, r2.get_d()));
    Integer start(std::floor(cd - rd) - 2);
    Integer cfloor = floor(c);
    Integer cceil = ceil(c);
    auto inside = [&](const Integer& t) {
      const Rational diff = Rational(t) - c;
      return diff * diff <= r2;
    };
    if (!inside(cfloor) && !inside(cceil)) return false;
    lo = start;
    while (!inside(lo)) ++lo;
    hi = Integer(std::ceil(cd + rd) + 2);
    while (!inside(hi)) --hi;
    return true;
  }

  void recurse(std::size_t i, const Rational& remaining) {
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= mu[i][j] * x[j];
    Integer lo;
    Integer hi;
    if (!range(c, remaining / d[i], lo, hi)) return;
    for (Integer t = lo; t <= hi; ++t) {
      x[i] = t;
      const Rational diff = Rational(t) - c;
      const Rational rest = remaining - d[i] * diff * diff;
      if (i == 0) {
        if (++visited > budget) {
          throw BudgetExceeded("ellipsoid enumeration exceeded the budget of " +
                                   std::to_string(budget) + " points",
                               to_string(bound));
        }
        (*visit)(x);
      } else {
        recurse(i - 1, rest);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

std::uint64_t enumerate_ellipsoid(const QuadraticForm& q, const Rational& bound,
                                  std::uint64_t budget,
                                  const std::function<void(const IntegerVector&)>& visit) {
  if (!q.is_symmetric()) throw ValidationError("ellipsoid form must be symmetric");
  const std::size_t n = q.rows();
  Ellipsoid e{n, {}, {}, budget, 0, &visit, IntegerVector(n, Integer(0)), bound};
  if (bound < 0 || n == 0) return 0;
  // q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  RationalMatrix a = q;
  e.d.resize(n);
  e.mu.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) <= 0) throw ComputationError("ellipsoid form is not positive definite");
    e.d[i] = a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) e.mu[i][j] = a(i, j) / a(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= a(i, j) * a(i, k) / a(i, i);
    }
  }
  e.recurse(n - 1, bound);
  return e.visited;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BRIDGELAND_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::uint64_t{1} << 20;
}

RootNormResult min_root_norm(const ChargeRow& z, const ChargeKernel& kernel,
                             const RationalMatrix& s, const QuadraticForm& form,
                             const RootNormOptions& options) {
  const std::uint64_t budget = options.budget == 0 ? default_budget() : options.budget;
  const QuadraticForm aux = auxiliary_form(z, kernel, s, form);
  RootNormResult result;
  Rational b = 8;
  while (true) {
    if (options.max_bound && b > *options.max_bound) return result;
    result.bound_reached = b;
    const std::uint64_t remaining = budget - std::min(budget, result.points_visited);
    std::uint64_t visited = 0;
    try {
      visited = enumerate_ellipsoid(aux, 2 * b + 2, remaining, [&](const IntegerVector& x) {
        if (evaluate(form, x) != -2) return;
        const Rational value = charge_norm(s, evaluate(z, x));
        if (!result.found || value < result.c2 ||
            (value == result.c2 && lex_compare(x, result.witness) < 0)) {
          result.found = true;
          result.c2 = value;
          result.witness = x;
        }
      });
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded("root search exceeded the budget of " + std::to_string(budget) +
                               " lattice points at bound B = " + to_string(b),
                           to_string(b));
    }
    result.points_visited += visited;
    if (result.found) return result;
    b *= 2;
  }
}

QuadraticForm build_Q_Z(const ChargeRow& z, const RationalMatrix& s, const QuadraticForm& form,
                        const Rational& c2) {
  if (c2 <= 0) throw ComputationError("root norm constant must be positive");
  const RationalMatrix r = charge_matrix(z);
  return form + Rational(2 / c2) * (r.transpose() * s * r);
}

bool RoundtripReport::pass() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const RoundtripVerdict& c) { return c.skipped || c.pass; });
}

RoundtripReport equivalent_support_roundtrip(const QuadraticForm& q, const ChargeRow& z,
                                             const std::vector<IntegerVector>& classes) {
  const std::vector<IntegerVector> kernel = kernel_of(z);
  if (!is_negative_definite_on(q, kernel)) {
    throw ValidationError("Q is not negative definite on Ker Z");
  }
  const RationalMatrix r = charge_matrix(z);
  const RationalMatrix c = orthogonal_complement(kernel, q);
  if (c.cols() != 2) throw ComputationError("complement of Ker Z does not have rank 2");
  const RationalMatrix rc_inv = inverse(r * c);
  // Q(b) = z^T T z for b in the complement with Z(b) = z.
  const RationalMatrix t = rc_inv.transpose() * (c.transpose() * q * c) * rc_inv;

  RoundtripReport report;
  if (is_positive_semidefinite(Rational(-1) * t)) {
    report.k = 1;
  } else {
    Rational gershgorin = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      gershgorin = std::max(gershgorin, Rational(abs_value(t(i, 0)) + abs_value(t(i, 1))));
    }
    report.k = 1 / gershgorin;
  }
  if (!is_positive_semidefinite(RationalMatrix::identity(2) - report.k * t)) {
    throw ComputationError("norm constant K does not bound Q on the complement");
  }
  report.c2 = report.k / (1 + report.k);

  const RationalMatrix to_b = c * rc_inv;
  for (const IntegerVector& v : classes) {
    RoundtripVerdict verdict;
    verdict.v = v;
    const RationalVector vq = to_rational(v);
    if (evaluate(q, vq) < 0) {
      verdict.skipped = true;
      report.classes.push_back(std::move(verdict));
      continue;
    }
    const GaussianRational zv = evaluate(z, vq);
    const RationalVector b = to_b * RationalVector{zv.re, zv.im};
    RationalVector a(vq.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = vq[i] - b[i];
    verdict.charge_norm = zv.norm();
    verdict.norm = verdict.charge_norm - evaluate(q, a);
    verdict.pass = verdict.charge_norm >= report.c2 * verdict.norm;
    report.classes.push_back(std::move(verdict));
  }
  return report;
}

std::vector<IntegerVector> bounded_charge_classes(const ChargeRow& z, const ChargeKernel& kernel,
                                                  const RationalMatrix& s,
                                                  const QuadraticForm& form, const Rational& c2,
                                                  const Rational& radius, std::uint64_t budget) {
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  const QuadraticForm qz = build_Q_Z(z, s, form, c2);
  const QuadraticForm aux = auxiliary_form(z, kernel, s, form);
  // Q_Z >= 0 gives aux <= (2 + 2/C^2) ||Z||_S^2 <= (2 + 2/C^2) tr(S) |Z|^2.
  const Rational bound = (2 + 2 / c2) * (s(0, 0) + s(1, 1)) * radius * radius;
  std::vector<IntegerVector> out;
  enumerate_ellipsoid(aux, bound, budget == 0 ? default_budget() : budget,
                      [&](const IntegerVector& x) {
                        if (is_zero(x)) return;
                        if (evaluate(qz, x) < 0) return;
                        if (evaluate(z, x).norm() > radius * radius) return;
                        out.push_back(x);
                      });
  std::sort(out.begin(), out.end(),
            [](const IntegerVector& a, const IntegerVector& b) { return lex_compare(a, b) < 0; });
  return out;
}

}  // namespace bridgeland
