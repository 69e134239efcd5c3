#pragma once

#include <string>
#include <vector>

#include "bridgeland/matrix.hpp"
#include "bridgeland/mukai.hpp"
#include "bridgeland/numeric.hpp"

namespace bridgeland {

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational re_, Rational im_ = 0) : re(std::move(re_)), im(std::move(im_)) {}

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& k, const GaussianRational& a) {
    return {k * a.re, k * a.im};
  }
  // Throws ComputationError on division by zero.
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
};

std::string to_string(const GaussianRational& z);

// Linear map from flat Mukai coordinates to C, one value per basis vector.
using ChargeRow = std::vector<GaussianRational>;

GaussianRational evaluate(const ChargeRow& row, const IntegerVector& x);
GaussianRational evaluate(const ChargeRow& row, const RationalVector& x);

// Stability parameters (beta, omega) in NS coordinates.
class ChargeParams {
 public:
  ChargeParams(NSLattice lattice, RationalVector beta, RationalVector omega);

  const NSLattice& lattice() const { return lattice_; }
  const RationalVector& beta() const { return beta_; }
  const RationalVector& omega() const { return omega_; }
  Rational omega_square() const { return lattice_.square(omega_); }
  // On a K3 the tilted heart carries the charge only for omega^2 > 2.
  bool heart_backed() const { return !lattice_.k3() || omega_square() > 2; }

 private:
  NSLattice lattice_;
  RationalVector beta_;
  RationalVector omega_;
};

// -degree + i rank.
GaussianRational curve_charge(const Integer& degree, const Integer& rank);

// (ch0 omega^2 / 2 - ch2^beta) + i omega.ch1^beta. Non-K3 lattices only.
GaussianRational surface_charge(const ChernCharacter& ch, const ChargeParams& params);

// (e^{beta + i omega}, v) = (beta + i omega).c - s - r (beta + i omega)^2 / 2.
GaussianRational k3_charge(const MukaiVector& v, const ChargeParams& params);

// k3_charge or surface_charge according to the lattice flag.
GaussianRational central_charge(const MukaiVector& v, const ChargeParams& params);
GaussianRational central_charge(const RationalVector& flat, const ChargeParams& params);
ChargeRow charge_row(const ChargeParams& params);

// im > 0, or im = 0 and re < 0.
bool phase_valid(const GaussianRational& z);

enum class Comparison { LT, EQ, GT };
std::string to_string(Comparison c);
Comparison reverse(Comparison c);

// Exact comparison of phases in (0, 1]. Throws ValidationError on operands
// outside the upper half plane union the negative reals.
Comparison phase_compare(const GaussianRational& z1, const GaussianRational& z2);

// A rational or +infinity.
struct ExtendedRational {
  bool infinite = false;
  Rational value;

  static ExtendedRational infinity() { return {true, 0}; }
  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
};
std::string to_string(const ExtendedRational& x);
ExtendedRational parse_extended(std::string_view text);

// omega.(ch1 - ch0 beta) / ch0, +infinity for ch0 = 0. Throws on ch0 < 0.
ExtendedRational slope(const ChernCharacter& ch, const ChargeParams& params);

// Strictly decreasing slopes, +infinity only in front.
class SlopeProfile {
 public:
  explicit SlopeProfile(std::vector<ExtendedRational> slopes);
  const std::vector<ExtendedRational>& slopes() const { return slopes_; }
  const ExtendedRational& max() const { return slopes_.front(); }
  const ExtendedRational& min() const { return slopes_.back(); }

 private:
  std::vector<ExtendedRational> slopes_;
};

enum class HeartPosition { IN_T, IN_F, MIXED };
std::string to_string(HeartPosition p);

// IN_T when mu^- > 0, IN_F when mu^+ <= 0, MIXED otherwise.
HeartPosition heart_position(const SlopeProfile& profile);

// Element (a, m) of the universal cover of GL2+(R).
//
// The lift a is determined by a(0), which lies in (winding - 1/2,
// winding + 1/2] and is congruent mod 2 to arg(m (1, 0)) / pi. Hence the
// winding is even exactly when m (1, 0) lies in the open right half plane
// or on the positive imaginary axis.
struct LiftedGL2 {
  RationalMatrix m;
  Integer winding;

  static LiftedGL2 identity();
  // (-I)^k with a(phi) = phi + k.
  static LiftedGL2 shift(long k);
  // Throws ValidationError when det(m) <= 0 or the winding parity does not
  // match the matrix.
  static LiftedGL2 make(RationalMatrix m, Integer winding);

  // Numerical value of a(phi).
  long double angle(long double phi) const;

  friend bool operator==(const LiftedGL2& a, const LiftedGL2& b) {
    return a.m == b.m && a.winding == b.winding;
  }
};

// (a1 o a2, m1 m2).
LiftedGL2 gl2_compose(const LiftedGL2& g1, const LiftedGL2& g2);

// g^{-1} z, with C identified with R^2.
GaussianRational gl2_act_on_charge(const LiftedGL2& g, const GaussianRational& z);

// Polynomial with rational coefficients, constant term first.
using Polynomial = RationalVector;

// Compares the monic multiples of pA and pB eventually (n large). Throws
// ValidationError on the zero polynomial or a nonpositive leading coefficient.
Comparison gieseker_compare(const Polynomial& pa, const Polynomial& pb);

// P(X) = integral of e^{X omega} ch td.
Polynomial hilbert_polynomial(const ChernCharacter& ch, const ChargeParams& params);

// -i P(i n) for the Hilbert polynomial P of ch with respect to omega.
GaussianRational large_volume_phase(const ChernCharacter& ch, const ChargeParams& params,
                                    const Rational& n);
// -i P(i n) for a given quadratic-or-lower polynomial.
GaussianRational large_volume_phase(const Polynomial& p, const Rational& n);

// Smallest N >= 1 such that for every n >= N both large-volume values lie in
// the open upper half plane and their phase order is the reverse of
// gieseker_compare. Needs degree 2 with positive quadratic and linear terms.
Integer large_volume_threshold(const Polynomial& pa, const Polynomial& pb);

}  // namespace bridgeland
