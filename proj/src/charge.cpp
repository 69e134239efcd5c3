#include "bridgeland/charge.hpp"

#include <algorithm>
#include <cmath>

#include "bridgeland/error.hpp"

namespace bridgeland {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  const Rational n = b.norm();
  if (n == 0) throw ComputationError("division by a zero charge");
  const GaussianRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

std::string to_string(const GaussianRational& z) {
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + to_string(Rational(abs(z.im))) + "i";
}

GaussianRational evaluate(const ChargeRow& row, const IntegerVector& x) {
  return evaluate(row, to_rational(x));
}

GaussianRational evaluate(const ChargeRow& row, const RationalVector& x) {
  if (row.size() != x.size()) throw ValidationError("charge evaluation: dimension mismatch");
  GaussianRational z;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    z.re += x[i] * row[i].re;
    z.im += x[i] * row[i].im;
  }
  return z;
}

ChargeParams::ChargeParams(NSLattice lattice, RationalVector beta, RationalVector omega)
    : lattice_(std::move(lattice)), beta_(std::move(beta)), omega_(std::move(omega)) {
  if (beta_.size() != lattice_.rank() || omega_.size() != lattice_.rank()) {
    throw ValidationError("beta and omega must have length " + std::to_string(lattice_.rank()));
  }
  if (lattice_.square(omega_) <= 0) throw ValidationError("omega must satisfy omega^2 > 0");
}

GaussianRational curve_charge(const Integer& degree, const Integer& rank) {
  return {Rational(-degree), Rational(rank)};
}

GaussianRational surface_charge(const ChernCharacter& ch, const ChargeParams& params) {
  if (params.lattice().k3()) throw ValidationError("surface_charge needs a non-K3 lattice");
  const ChernCharacter t = twist_chern(ch, params.beta(), params.lattice());
  return {ch.ch0 * params.omega_square() / 2 - t.ch2, params.lattice().dot(params.omega(), t.ch1)};
}

GaussianRational k3_charge(const MukaiVector& v, const ChargeParams& params) {
  if (!params.lattice().k3()) throw ValidationError("k3_charge needs a K3 lattice");
  check_dimension(v, params.lattice());
  return central_charge(to_rational(v.coords()), params);
}

GaussianRational central_charge(const RationalVector& flat, const ChargeParams& params) {
  const NSLattice& lat = params.lattice();
  const std::size_t rho = lat.rank();
  if (flat.size() != rho + 2) throw ValidationError("charge: dimension mismatch");
  const Rational& r = flat.front();
  const RationalVector c(flat.begin() + 1, flat.end() - 1);
  const Rational& s = flat.back();
  if (lat.k3()) {
    const Rational b2 = lat.square(params.beta());
    const Rational w2 = params.omega_square();
    const Rational bw = lat.dot(params.beta(), params.omega());
    return {lat.dot(params.beta(), c) - s - r * (b2 - w2) / 2, lat.dot(params.omega(), c) - r * bw};
  }
  return surface_charge(ChernCharacter{r, c, s}, params);
}

GaussianRational central_charge(const MukaiVector& v, const ChargeParams& params) {
  check_dimension(v, params.lattice());
  return central_charge(to_rational(v.coords()), params);
}

ChargeRow charge_row(const ChargeParams& params) {
  const std::size_t n = params.lattice().rank() + 2;
  ChargeRow row;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    row.push_back(central_charge(e, params));
  }
  return row;
}

bool phase_valid(const GaussianRational& z) { return z.im > 0 || (z.im == 0 && z.re < 0); }

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::LT: return "LT";
    case Comparison::EQ: return "EQ";
    case Comparison::GT: return "GT";
  }
  return "?";
}

Comparison reverse(Comparison c) {
  if (c == Comparison::LT) return Comparison::GT;
  if (c == Comparison::GT) return Comparison::LT;
  return Comparison::EQ;
}

Comparison phase_compare(const GaussianRational& z1, const GaussianRational& z2) {
  if (!phase_valid(z1) || !phase_valid(z2)) {
    throw ValidationError("phase comparison outside the upper half plane and negative reals");
  }
  const bool neg1 = z1.im == 0;
  const bool neg2 = z2.im == 0;
  if (neg1 && neg2) return Comparison::EQ;
  if (neg1) return Comparison::GT;
  if (neg2) return Comparison::LT;
  const Rational cross = z1.re * z2.im - z1.im * z2.re;
  if (cross > 0) return Comparison::LT;
  if (cross < 0) return Comparison::GT;
  return Comparison::EQ;
}

std::string to_string(const ExtendedRational& x) { return x.infinite ? "+inf" : to_string(x.value); }

ExtendedRational parse_extended(std::string_view text) {
  if (text == "+inf" || text == "inf" || text == "+infinity" || text == "infinity") {
    return ExtendedRational::infinity();
  }
  return {false, parse_rational(text)};
}

ExtendedRational slope(const ChernCharacter& ch, const ChargeParams& params) {
  if (ch.ch0 < 0) throw ValidationError("slope of a class with negative rank");
  if (ch.ch0 == 0) return ExtendedRational::infinity();
  const ChernCharacter t = twist_chern(ch, params.beta(), params.lattice());
  return {false, params.lattice().dot(params.omega(), t.ch1) / ch.ch0};
}

SlopeProfile::SlopeProfile(std::vector<ExtendedRational> slopes) : slopes_(std::move(slopes)) {
  if (slopes_.empty()) throw ValidationError("slope profile is empty");
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i].infinite) throw ValidationError("+inf allowed only as the first slope");
    if (!slopes_[i - 1].infinite && slopes_[i - 1].value <= slopes_[i].value) {
      throw ValidationError("slopes must be strictly decreasing");
    }
  }
}

std::string to_string(HeartPosition p) {
  switch (p) {
    case HeartPosition::IN_T: return "IN_T";
    case HeartPosition::IN_F: return "IN_F";
    case HeartPosition::MIXED: return "MIXED";
  }
  return "?";
}

HeartPosition heart_position(const SlopeProfile& profile) {
  const ExtendedRational& lo = profile.min();
  const ExtendedRational& hi = profile.max();
  if (lo.infinite || lo.value > 0) return HeartPosition::IN_T;
  if (!hi.infinite && hi.value <= 0) return HeartPosition::IN_F;
  return HeartPosition::MIXED;
}

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

bool even_winding(const RationalMatrix& m) {
  const Rational& x = m(0, 0);
  const Rational& y = m(1, 0);
  return x > 0 || (x == 0 && y > 0);
}

// arg(m (cos pi phi, sin pi phi)) / pi in (-1, 1].
long double principal_angle(const RationalMatrix& m, long double phi) {
  const long double c = std::cos(kPi * phi);
  const long double s = std::sin(kPi * phi);
  const long double x = m(0, 0).get_d() * c + m(0, 1).get_d() * s;
  const long double y = m(1, 0).get_d() * c + m(1, 1).get_d() * s;
  return std::atan2(y, x) / kPi;
}

}  // namespace

LiftedGL2 LiftedGL2::identity() { return LiftedGL2{RationalMatrix::identity(2), 0}; }

LiftedGL2 LiftedGL2::shift(long k) {
  RationalMatrix m = RationalMatrix::identity(2);
  if (k % 2 != 0) m = Rational(-1) * m;
  return LiftedGL2{m, Integer(k)};
}

LiftedGL2 LiftedGL2::make(RationalMatrix m, Integer winding) {
  if (m.rows() != 2 || m.cols() != 2) throw ValidationError("GL2 element must be 2x2");
  if (determinant(m) <= 0) throw ValidationError("GL2 element must have positive determinant");
  const bool even = mpz_even_p(winding.get_mpz_t()) != 0;
  if (even != even_winding(m)) {
    throw ValidationError("winding parity does not match the direction of m(1,0)");
  }
  return LiftedGL2{std::move(m), std::move(winding)};
}

long double LiftedGL2::angle(long double phi) const {
  const long double theta0 = principal_angle(m, 0);
  const long double w = winding.get_d();
  const long double a0 = theta0 + 2 * std::round((w - theta0) / 2);
  const long double base = a0 + std::floor(phi);
  const long double theta = principal_angle(m, phi);
  // The representative of theta mod 2 inside [base, base + 1].
  return theta + 2 * std::round((base + 0.5L - theta) / 2);
}

LiftedGL2 gl2_compose(const LiftedGL2& g1, const LiftedGL2& g2) {
  RationalMatrix m = g1.m * g2.m;
  const long double a0 = g1.angle(g2.angle(0));
  const bool even = even_winding(m);
  long double n = std::round(a0);
  const bool n_even = std::fmod(std::fabs(n), 2.0L) == 0;
  if (n_even != even) n += (a0 >= n) ? 1 : -1;
  return LiftedGL2{std::move(m), Integer(static_cast<long>(n))};
}

GaussianRational gl2_act_on_charge(const LiftedGL2& g, const GaussianRational& z) {
  const RationalMatrix inv = inverse(g.m);
  const RationalVector out = inv * RationalVector{z.re, z.im};
  return {out[0], out[1]};
}

namespace {

std::size_t degree_of(const Polynomial& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  if (d == 0) throw ValidationError("zero polynomial");
  return d - 1;
}

}  // namespace

Comparison gieseker_compare(const Polynomial& pa, const Polynomial& pb) {
  const std::size_t da = degree_of(pa);
  const std::size_t db = degree_of(pb);
  if (pa[da] <= 0 || pb[db] <= 0) throw ValidationError("leading coefficient must be positive");
  if (da != db) return da > db ? Comparison::GT : Comparison::LT;
  for (std::size_t k = da + 1; k-- > 0;) {
    const Rational a = pa[k] / pa[da];
    const Rational b = pb[k] / pb[db];
    if (a > b) return Comparison::GT;
    if (a < b) return Comparison::LT;
  }
  return Comparison::EQ;
}

Polynomial hilbert_polynomial(const ChernCharacter& ch, const ChargeParams& params) {
  const NSLattice& lat = params.lattice();
  const ChernCharacter& td = lat.todd();
  if (ch.ch1.size() != lat.rank()) throw ValidationError("ch1 has the wrong length");
  // ch td
  const Rational a0 = ch.ch0;
  RationalVector a1 = ch.ch1;
  for (std::size_t i = 0; i < a1.size(); ++i) a1[i] += ch.ch0 * td.ch1[i];
  const Rational a2 = ch.ch2 + lat.dot(ch.ch1, td.ch1) + ch.ch0 * td.ch2;
  return Polynomial{a2, lat.dot(params.omega(), a1), params.omega_square() * a0 / 2};
}

GaussianRational large_volume_phase(const Polynomial& p, const Rational& n) {
  // P(i n) summed term by term; (i n)^k cycles through 1, i, -1, -i.
  GaussianRational value;
  Rational power = 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational term = p[k] * power;
    switch (k % 4) {
      case 0: value.re += term; break;
      case 1: value.im += term; break;
      case 2: value.re -= term; break;
      case 3: value.im -= term; break;
    }
    power *= n;
  }
  // -i (x + i y) = y - i x
  return {value.im, -value.re};
}

GaussianRational large_volume_phase(const ChernCharacter& ch, const ChargeParams& params,
                                    const Rational& n) {
  if (ch.ch0 <= 0) throw ValidationError("large volume limit needs positive rank");
  if (n <= 0) throw ValidationError("n must be positive");
  return large_volume_phase(hilbert_polynomial(ch, params), n);
}

namespace {

// Smallest N >= 1 with N^2 > x.
Integer isqrt_above(const Rational& x) {
  if (x < 1) return 1;
  Integer n = floor(x);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  while (Rational(root * root) <= x) ++root;
  return root;
}

}  // namespace

Integer large_volume_threshold(const Polynomial& pa, const Polynomial& pb) {
  for (const Polynomial* p : {&pa, &pb}) {
    if (p->size() != 3 || (*p)[2] <= 0 || (*p)[1] <= 0) {
      throw ValidationError("threshold needs positive quadratic and linear coefficients");
    }
  }
  // Monic forms n^2 + b n + c; the sign of the phase difference is that of
  // (b' - b) n^2 - (b' c - b c').
  const Rational b1 = pa[1] / pa[2];
  const Rational c1 = pa[0] / pa[2];
  const Rational b2 = pb[1] / pb[2];
  const Rational c2 = pb[0] / pb[2];
  Rational need = std::max({c1, c2, Rational(0)});
  if (b1 != b2) {
    const Rational cross = abs(b2 * c1 - b1 * c2) / abs(b1 - b2);
    need = std::max(need, cross);
  }
  return isqrt_above(need);
}

}  // namespace bridgeland
