#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bridgeland/charge.hpp"
#include "bridgeland/matrix.hpp"

namespace bridgeland {

// Symmetric rational Gram matrix on flat lattice coordinates.
using QuadraticForm = RationalMatrix;

Rational evaluate(const QuadraticForm& q, const RationalVector& v);
Rational evaluate(const QuadraticForm& q, const IntegerVector& v);

// The 2 x n matrix [Re Z; Im Z].
RationalMatrix charge_matrix(const ChargeRow& z);

struct ChargeKernel {
  std::vector<IntegerVector> basis;  // primitive integer vectors spanning Ker Z
  RationalMatrix projector;          // form-orthogonal projection onto Ker Z
};

// Kernel of Z and the projection onto it orthogonal for `form`. Throws
// ComputationError when Re Z, Im Z are dependent or the form is degenerate on
// the kernel.
ChargeKernel charge_kernel(const ChargeRow& z, const QuadraticForm& form);

// Leading principal minors of the restriction alternate in sign. Throws
// ValidationError on a dependent basis.
bool is_negative_definite_on(const QuadraticForm& q, const std::vector<RationalVector>& basis);
bool is_negative_definite_on(const QuadraticForm& q, const std::vector<IntegerVector>& basis);

struct ClassVerdict {
  IntegerVector v;
  Rational value;  // Q(v)
  bool pass = false;
};

struct SupportReport {
  bool kernel_negative_definite = false;
  std::vector<ClassVerdict> classes;
  bool pass() const;
};

// (a) Q negative definite on Ker Z, (b) Q(v) >= 0 for each listed class.
SupportReport support_check(const QuadraticForm& q, const ChargeRow& z,
                            const std::vector<IntegerVector>& classes);

// The symmetric S with (v, v) = Z(v)^T S Z(v) + (p v, p v) for all v.
// Throws ComputationError when S is not positive definite.
RationalMatrix charge_norm_form(const ChargeRow& z, const ChargeKernel& kernel,
                                const QuadraticForm& form);

// Z(v)^T S Z(v).
Rational charge_norm(const RationalMatrix& s, const GaussianRational& z);

// Positive definite form ||Z(v)||_S^2 - (p v, p v).
QuadraticForm auxiliary_form(const ChargeRow& z, const ChargeKernel& kernel,
                             const RationalMatrix& s, const QuadraticForm& form);

// Visits every integer x with q(x) <= bound for a positive definite q.
// Returns the number of points visited; throws BudgetExceeded once more than
// `budget` points have been visited.
std::uint64_t enumerate_ellipsoid(const QuadraticForm& q, const Rational& bound,
                                  std::uint64_t budget,
                                  const std::function<void(const IntegerVector&)>& visit);

struct RootNormOptions {
  std::uint64_t budget = 0;            // 0: default_budget()
  std::optional<Rational> max_bound;   // give up with "none" past this bound
};

struct RootNormResult {
  bool found = false;
  Rational c2;                         // min ||Z(delta)||_S^2 over roots
  IntegerVector witness;               // lexicographically smallest minimizer
  Rational bound_reached;              // last B searched
  std::uint64_t points_visited = 0;
};

// 2^20, or BRIDGELAND_BUDGET when set.
std::uint64_t default_budget();

// Iterative deepening: B = 8, 16, ...; every root with ||Z||^2 <= B has
// auxiliary value <= 2B + 2, so the first B with a root certifies the minimum.
RootNormResult min_root_norm(const ChargeRow& z, const ChargeKernel& kernel,
                             const RationalMatrix& s, const QuadraticForm& form,
                             const RootNormOptions& options = {});

// form + (2 / C^2) ||Z||_S^2.
QuadraticForm build_Q_Z(const ChargeRow& z, const RationalMatrix& s, const QuadraticForm& form,
                        const Rational& c2);

struct RoundtripVerdict {
  IntegerVector v;
  bool skipped = false;  // Q(v) < 0
  Rational charge_norm;  // |Z(v)|^2
  Rational norm;         // -Q(a) + |Z(v)|^2
  bool pass = false;
};

struct RoundtripReport {
  Rational k;
  Rational c2;  // K / (1 + K)
  std::vector<RoundtripVerdict> classes;
  bool pass() const;
};

// Builds the norm ||a + b||^2 = -Q(a) + |Z(b)|^2 (a in Ker Z, b in its
// Q-orthogonal complement) with C^2 = K / (1 + K) and checks
// |Z(v)|^2 >= C^2 ||v||^2 for every class with Q(v) >= 0.
RoundtripReport equivalent_support_roundtrip(const QuadraticForm& q, const ChargeRow& z,
                                             const std::vector<IntegerVector>& classes);

// Classes with Q_Z(v) >= 0 and |Z(v)|^2 <= radius^2; always a finite list.
std::vector<IntegerVector> bounded_charge_classes(const ChargeRow& z, const ChargeKernel& kernel,
                                                  const RationalMatrix& s,
                                                  const QuadraticForm& form, const Rational& c2,
                                                  const Rational& radius,
                                                  std::uint64_t budget = 0);

}  // namespace bridgeland
