#include "bridgeland/mukai.hpp"

#include <algorithm>
#include <optional>

#include "bridgeland/error.hpp"

namespace bridgeland {

NSLattice::NSLattice(IntegerMatrix gram, IntegerVector ample, bool k3)
    : gram_(std::move(gram)), ample_(std::move(ample)), k3_(k3) {
  const std::size_t rho = gram_.rows();
  if (rho == 0) throw ValidationError("lattice rank must be positive");
  if (!gram_.is_square()) throw ValidationError("gram matrix must be square");
  if (!gram_.is_symmetric()) throw ValidationError("gram matrix must be symmetric");
  if (ample_.size() != rho) throw ValidationError("ample class has the wrong length");
  gram_q_ = to_rational(gram_);
  const Signature sig = signature(gram_q_);
  if (sig.positive != 1 || sig.negative != static_cast<int>(rho) - 1) {
    throw ValidationError("gram matrix must have signature (1, " + std::to_string(rho - 1) + ")");
  }
  if (bilinear(gram_, ample_, ample_) <= 0) throw ValidationError("ample class must have H^2 > 0");
  if (k3_) {
    for (std::size_t i = 0; i < rho; ++i) {
      if (gram_(i, i) % 2 != 0) throw ValidationError("K3 Neron-Severi lattice must be even");
    }
  }
  todd_ = ChernCharacter{1, RationalVector(rho, Rational(0)), k3_ ? 2 : 1};
}

void NSLattice::set_todd(ChernCharacter todd) {
  if (todd.ch0 != 1 || todd.ch1.size() != rank()) throw ValidationError("malformed Todd class");
  todd_ = std::move(todd);
}

Rational NSLattice::dot(const RationalVector& a, const RationalVector& b) const {
  return bilinear(gram_q_, a, b);
}

Integer NSLattice::dot(const IntegerVector& a, const IntegerVector& b) const {
  return bilinear(gram_, a, b);
}

IntegerVector MukaiVector::coords() const {
  IntegerVector flat;
  flat.reserve(c.size() + 2);
  flat.push_back(r);
  flat.insert(flat.end(), c.begin(), c.end());
  flat.push_back(s);
  return flat;
}

MukaiVector MukaiVector::from_coords(const IntegerVector& flat) {
  if (flat.size() < 3) throw ValidationError("Mukai vector needs at least 3 coordinates");
  return MukaiVector{flat.front(), IntegerVector(flat.begin() + 1, flat.end() - 1), flat.back()};
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  if (a.c.size() != b.c.size()) throw ValidationError("Mukai vectors of different length");
  MukaiVector out = a;
  out.r += b.r;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  out.s += b.s;
  return out;
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
  return a + Integer(-1) * b;
}

MukaiVector operator*(const Integer& k, const MukaiVector& a) {
  MukaiVector out = a;
  out.r *= k;
  for (Integer& x : out.c) x *= k;
  out.s *= k;
  return out;
}

MukaiVector parse_mukai(std::string_view text, const NSLattice& lattice) {
  const IntegerVector flat = parse_integer_list(text);
  if (flat.size() != lattice.rank() + 2) {
    throw ValidationError("Mukai vector '" + std::string(text) + "' needs " +
                          std::to_string(lattice.rank() + 2) + " coordinates");
  }
  return MukaiVector::from_coords(flat);
}

std::string format_mukai(const MukaiVector& v) {
  std::string out;
  for (const Integer& x : v.coords()) {
    if (!out.empty()) out += ",";
    out += to_string(x);
  }
  return out;
}

void check_dimension(const MukaiVector& v, const NSLattice& lattice) {
  if (v.c.size() != lattice.rank()) {
    throw ValidationError("Mukai vector has NS part of length " + std::to_string(v.c.size()) +
                          ", lattice rank is " + std::to_string(lattice.rank()));
  }
}

IntegerMatrix mukai_gram(const NSLattice& lattice) {
  const std::size_t rho = lattice.rank();
  IntegerMatrix g(rho + 2, rho + 2);
  g(0, rho + 1) = -1;
  g(rho + 1, 0) = -1;
  for (std::size_t i = 0; i < rho; ++i) {
    for (std::size_t j = 0; j < rho; ++j) g(i + 1, j + 1) = lattice.gram()(i, j);
  }
  return g;
}

Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice) {
  check_dimension(v, lattice);
  check_dimension(w, lattice);
  Integer out = lattice.dot(v.c, w.c);
  out -= v.r * w.s + w.r * v.s;
  return out;
}

Rational mukai_pairing(const RationalVector& v, const RationalVector& w, const NSLattice& lattice) {
  const std::size_t n = lattice.rank() + 2;
  if (v.size() != n || w.size() != n) throw ValidationError("Mukai coordinates: dimension mismatch");
  const RationalVector cv(v.begin() + 1, v.end() - 1);
  const RationalVector cw(w.begin() + 1, w.end() - 1);
  Rational out = lattice.dot(cv, cw);
  out -= v.front() * w.back() + w.front() * v.back();
  return out;
}

Integer mukai_square(const MukaiVector& v, const NSLattice& lattice) {
  return mukai_pairing(v, v, lattice);
}

Integer euler_pairing(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice) {
  return -mukai_pairing(v, w, lattice);
}

MukaiVector mukai_vector_of(const ChernCharacter& ch, const NSLattice& lattice) {
  if (ch.ch1.size() != lattice.rank()) throw ValidationError("ch1 has the wrong length");
  Rational s = lattice.k3() ? Rational(ch.ch0 + ch.ch2) : ch.ch2;
  RationalVector flat;
  flat.push_back(ch.ch0);
  flat.insert(flat.end(), ch.ch1.begin(), ch.ch1.end());
  flat.push_back(s);
  for (const Rational& x : flat) {
    if (!is_integer(x)) throw ValidationError("class is not an integral Mukai vector");
  }
  return MukaiVector::from_coords(to_integer(flat));
}

ChernCharacter chern_of(const MukaiVector& v, const NSLattice& lattice) {
  check_dimension(v, lattice);
  ChernCharacter ch{Rational(v.r), to_rational(v.c), Rational(v.s)};
  if (lattice.k3()) ch.ch2 -= ch.ch0;
  return ch;
}

ChernCharacter twist_chern(const ChernCharacter& ch, const RationalVector& beta,
                           const NSLattice& lattice) {
  if (ch.ch1.size() != lattice.rank() || beta.size() != lattice.rank()) {
    throw ValidationError("twist: dimension mismatch");
  }
  ChernCharacter out = ch;
  for (std::size_t i = 0; i < beta.size(); ++i) out.ch1[i] -= ch.ch0 * beta[i];
  out.ch2 = ch.ch2 - lattice.dot(beta, ch.ch1) + lattice.square(beta) * ch.ch0 / 2;
  return out;
}

Rational bogomolov_discriminant(const ChernCharacter& ch, const RationalVector& beta,
                                const NSLattice& lattice) {
  const ChernCharacter t = twist_chern(ch, beta, lattice);
  return lattice.square(t.ch1) - 2 * t.ch0 * t.ch2;
}

namespace {

// Solves a x + c y = u over the rationals for columns a, c; nullopt if u is
// outside their span.
std::optional<std::array<Rational, 2>> solve_in_span(const IntegerVector& a, const IntegerVector& c,
                                                     const IntegerVector& u) {
  RationalMatrix m(a.size(), 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(i, 0) = a[i];
    m(i, 1) = c[i];
    m(i, 2) = u[i];
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(m, &pivots);
  if (pivots.size() != 2 || pivots[0] != 0 || pivots[1] != 1) {
    if (!pivots.empty() && pivots.back() == 2) return std::nullopt;
    throw ComputationError("rank-2 basis is degenerate");
  }
  return std::array<Rational, 2>{r(0, 2), r(1, 2)};
}

IntegerVector combine(const Integer& x, const IntegerVector& a, const Integer& y,
                      const IntegerVector& b) {
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = x * a[i] + y * b[i];
  return out;
}

Coords2 integral_coords(const IntegerVector& a, const IntegerVector& b, const IntegerVector& u) {
  const auto q = solve_in_span(a, b, u);
  if (!q || !is_integer((*q)[0]) || !is_integer((*q)[1])) {
    throw ValidationError("vector does not lie in the rank-2 lattice");
  }
  return Coords2{(*q)[0].get_num(), (*q)[1].get_num()};
}

}  // namespace

Rank2Lattice Rank2Lattice::abstract(const IntegerMatrix& gram2) {
  if (gram2.rows() != 2 || gram2.cols() != 2 || !gram2.is_symmetric()) {
    throw ValidationError("rank-2 gram must be a symmetric 2x2 matrix");
  }
  return Rank2Lattice{{}, gram2};
}

Integer Rank2Lattice::form(const Coords2& x, const Coords2& y) const {
  return gram2(0, 0) * x[0] * y[0] + gram2(0, 1) * (x[0] * y[1] + x[1] * y[0]) +
         gram2(1, 1) * x[1] * y[1];
}

Integer Rank2Lattice::det() const { return gram2(0, 0) * gram2(1, 1) - gram2(0, 1) * gram2(1, 0); }

Rank2Lattice saturate_rank2(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice) {
  check_dimension(v, lattice);
  check_dimension(w, lattice);
  const IntegerVector fv = v.coords();
  const IntegerVector fw = w.coords();
  IntegerMatrix m(2, fv.size());
  for (std::size_t j = 0; j < fv.size(); ++j) {
    m(0, j) = fv[j];
    m(1, j) = fw[j];
  }
  if (rank(to_rational(m)) < 2) throw ValidationError("v and w are proportional");

  // The saturation is the integral kernel of the integral kernel.
  const std::vector<IntegerVector> perp = integer_kernel(m);
  std::vector<IntegerVector> sat;
  if (perp.empty()) {
    for (std::size_t i = 0; i < fv.size(); ++i) {
      IntegerVector e(fv.size(), Integer(0));
      e[i] = 1;
      sat.push_back(e);
    }
  } else {
    IntegerMatrix k(perp.size(), fv.size());
    for (std::size_t i = 0; i < perp.size(); ++i) {
      for (std::size_t j = 0; j < fv.size(); ++j) k(i, j) = perp[i][j];
    }
    sat = integer_kernel(k);
  }
  if (sat.size() != 2) throw ComputationError("saturation does not have rank 2");

  // Adapt the basis to v.
  const Coords2 vc = integral_coords(sat[0], sat[1], fv);
  const Integer g = gcd(vc[0], vc[1]);
  const Integer a = vc[0] / g;
  const Integer c = vc[1] / g;
  Integer s;
  Integer t;
  extended_gcd(a, c, s, t);
  const IntegerVector f1 = combine(a, sat[0], c, sat[1]);
  IntegerVector f2 = combine(Integer(-t), sat[0], s, sat[1]);
  Coords2 wc = integral_coords(f1, f2, fw);
  if (wc[1] < 0) {
    for (Integer& x : f2) x = -x;
    wc[1] = -wc[1];
  }
  Integer shift;
  mpz_fdiv_q(shift.get_mpz_t(), wc[0].get_mpz_t(), wc[1].get_mpz_t());
  f2 = combine(Integer(1), f2, shift, f1);

  Rank2Lattice h;
  h.basis = {MukaiVector::from_coords(f1), MukaiVector::from_coords(f2)};
  h.gram2 = IntegerMatrix(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) h.gram2(i, j) = mukai_pairing(h.basis[i], h.basis[j], lattice);
  }
  return h;
}

Coords2 coordinates_in(const Rank2Lattice& h, const MukaiVector& u) {
  if (h.basis.size() != 2) throw ValidationError("rank-2 lattice has no ambient basis");
  return integral_coords(h.basis[0].coords(), h.basis[1].coords(), u.coords());
}

MukaiVector from_coordinates(const Rank2Lattice& h, const Coords2& x) {
  if (h.basis.size() != 2) throw ValidationError("rank-2 lattice has no ambient basis");
  return MukaiVector::from_coords(combine(x[0], h.basis[0].coords(), x[1], h.basis[1].coords()));
}

bool is_hyperbolic(const Rank2Lattice& h) { return h.det() < 0; }

namespace {

bool coords_less(const Coords2& a, const Coords2& b) {
  return cmp(a[0], b[0]) < 0 || (a[0] == b[0] && cmp(a[1], b[1]) < 0);
}

void sort_unique(std::vector<Coords2>& xs) {
  std::sort(xs.begin(), xs.end(), coords_less);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Integer k with q k^2 + 2 b k + c = 0.
std::vector<Integer> integer_roots(const Integer& q, const Integer& b, const Integer& c) {
  std::vector<Integer> out;
  if (q == 0) {
    if (b == 0) {
      if (c == 0) throw ComputationError("root equation has infinitely many solutions");
      return out;
    }
    const Integer num = -c;
    const Integer den = 2 * b;
    if (num % den == 0) out.push_back(num / den);
    return out;
  }
  const Integer disc = b * b - q * c;
  Integer root;
  if (!is_perfect_square(disc, &root)) return out;
  for (const Integer& num : {Integer(-b + root), Integer(-b - root)}) {
    if (num % q == 0) out.push_back(num / q);
  }
  return out;
}

}  // namespace

std::vector<Coords2> rank2_roots(const Rank2Lattice& h, const Coords2& v,
                                 const Integer& pairing_bound) {
  if (pairing_bound < 0) throw ValidationError("pairing bound must be nonnegative");
  const Integer alpha = h.gram2(0, 0) * v[0] + h.gram2(0, 1) * v[1];
  const Integer beta = h.gram2(1, 0) * v[0] + h.gram2(1, 1) * v[1];
  std::vector<Coords2> out;

  if (alpha == 0 && beta == 0) {
    // No pairing constraint: finite only for definite forms.
    const RationalMatrix g = to_rational(h.gram2);
    if (is_positive_definite(g)) return out;
    if (!is_negative_definite(g)) {
      throw ComputationError("pairing with v is identically zero on an indefinite lattice");
    }
    // With a = -g00, c = -g11: a (-Q) = (a x - g01 y)^2 + det y^2, so
    // -Q = 2 forces y^2 <= 2a/det and symmetrically x^2 <= 2c/det.
    const Integer a = -h.gram2(0, 0);
    const Integer c = -h.gram2(1, 1);
    const Integer det = h.det();
    Integer ymax;
    Integer xmax;
    mpz_sqrt(ymax.get_mpz_t(), Integer(2 * a / det + 1).get_mpz_t());
    mpz_sqrt(xmax.get_mpz_t(), Integer(2 * c / det + 1).get_mpz_t());
    for (Integer x = -xmax; x <= xmax; ++x) {
      for (Integer y = -ymax; y <= ymax; ++y) {
        const Coords2 d{x, y};
        if (h.square(d) == -2) out.push_back(d);
      }
    }
    sort_unique(out);
    return out;
  }

  // Points on alpha x + beta y = m form p + k d.
  Integer s;
  Integer t;
  const Integer g = extended_gcd(alpha, beta, s, t);
  const Coords2 d{beta / g, Integer(-alpha / g)};
  const Integer qd = h.square(d);
  for (Integer m = -pairing_bound; m <= pairing_bound; ++m) {
    if (m % g != 0) continue;
    const Integer scale = m / g;
    const Coords2 p{scale * s, scale * t};
    const Integer bpd = h.form(p, d);
    const Integer qp = h.square(p);
    for (const Integer& k : integer_roots(qd, bpd, Integer(qp + 2))) {
      out.push_back(Coords2{p[0] + k * d[0], p[1] + k * d[1]});
    }
  }
  sort_unique(out);
  return out;
}

std::vector<MukaiVector> rank2_roots(const Rank2Lattice& h, const MukaiVector& v,
                                     const Integer& pairing_bound) {
  std::vector<MukaiVector> out;
  for (const Coords2& x : rank2_roots(h, coordinates_in(h, v), pairing_bound)) {
    out.push_back(from_coordinates(h, x));
  }
  return out;
}

std::vector<Coords2> rank2_isotropic(const Rank2Lattice& h) {
  const Integer a = h.gram2(0, 0);
  const Integer b = h.gram2(0, 1);
  const Integer c = h.gram2(1, 1);
  if (a == 0 && b == 0 && c == 0) throw ComputationError("zero form: every vector is isotropic");
  std::vector<Coords2> rays;
  auto add = [&](const Integer& x, const Integer& y) {
    if (x == 0 && y == 0) return;
    const IntegerVector p = primitive_part(IntegerVector{x, y});
    rays.push_back(Coords2{p[0], p[1]});
  };
  const Integer disc = b * b - a * c;
  Integer root;
  if (!is_perfect_square(disc, &root)) return rays;
  if (a == 0) {
    // Q = y (2 b x + c y).
    add(1, 0);
    add(c, Integer(-2 * b));
  } else {
    // a Q = (a x + (b - root) y)(a x + (b + root) y).
    add(Integer(root - b), a);
    add(Integer(-root - b), a);
  }
  sort_unique(rays);
  return rays;
}

Integer default_root_bound(const Integer& v_square) { return v_square > 2 ? v_square : Integer(2); }

}  // namespace bridgeland
