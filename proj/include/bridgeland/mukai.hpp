#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bridgeland/matrix.hpp"
#include "bridgeland/numeric.hpp"

namespace bridgeland {

// Rational Chern character (ch0, ch1, ch2); ch1 in NS coordinates.
struct ChernCharacter {
  Rational ch0;
  RationalVector ch1;
  Rational ch2;

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

// Neron-Severi lattice with a designated ample class.
//
// Construction validates symmetry, signature (1, rank-1) and H^2 > 0. The
// `k3` flag selects v = ch * sqrt(td) = (ch0, ch1, ch0 + ch2); otherwise
// Mukai vectors are plain Chern characters.
class NSLattice {
 public:
  NSLattice(IntegerMatrix gram, IntegerVector ample, bool k3 = true);

  std::size_t rank() const { return gram_.rows(); }
  const IntegerMatrix& gram() const { return gram_; }
  const RationalMatrix& gram_q() const { return gram_q_; }
  const IntegerVector& ample() const { return ample_; }
  bool k3() const { return k3_; }

  // Todd class (1, td1, td2). K3 default (1, 0, 2); other surfaces carry
  // (1, -K/2, chi(O)) and need it only for Hilbert polynomials.
  const ChernCharacter& todd() const { return todd_; }
  void set_todd(ChernCharacter todd);

  Rational dot(const RationalVector& a, const RationalVector& b) const;
  Integer dot(const IntegerVector& a, const IntegerVector& b) const;
  Rational square(const RationalVector& a) const { return dot(a, a); }

  friend bool operator==(const NSLattice& a, const NSLattice& b) {
    return a.gram_ == b.gram_ && a.ample_ == b.ample_ && a.k3_ == b.k3_ && a.todd_ == b.todd_;
  }

 private:
  IntegerMatrix gram_;
  RationalMatrix gram_q_;
  IntegerVector ample_;
  bool k3_;
  ChernCharacter todd_;
};

// Integral Mukai vector (r, c, s).
struct MukaiVector {
  Integer r;
  IntegerVector c;
  Integer s;

  // Flat coordinates (r, c_1, ..., c_rho, s).
  IntegerVector coords() const;
  static MukaiVector from_coords(const IntegerVector& flat);

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator*(const Integer& k, const MukaiVector& a);

// Parses "r,c1,...,crho,s".
MukaiVector parse_mukai(std::string_view text, const NSLattice& lattice);
std::string format_mukai(const MukaiVector& v);

void check_dimension(const MukaiVector& v, const NSLattice& lattice);

// Gram matrix of the Mukai pairing in flat coordinates:
// [[0, 0, -1], [0, G, 0], [-1, 0, 0]].
IntegerMatrix mukai_gram(const NSLattice& lattice);

// c.G.c' - r s' - r' s.
Integer mukai_pairing(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice);
Rational mukai_pairing(const RationalVector& v, const RationalVector& w, const NSLattice& lattice);
Integer mukai_square(const MukaiVector& v, const NSLattice& lattice);

// chi(v, w) = -(v, w).
Integer euler_pairing(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice);

// K3: (ch0, ch1, ch0 + ch2); otherwise ch itself. Throws ValidationError
// when the result is not integral.
MukaiVector mukai_vector_of(const ChernCharacter& ch, const NSLattice& lattice);
// Inverse of mukai_vector_of, exact.
ChernCharacter chern_of(const MukaiVector& v, const NSLattice& lattice);

// e^{-beta} ch.
ChernCharacter twist_chern(const ChernCharacter& ch, const RationalVector& beta,
                           const NSLattice& lattice);

// (ch1^beta)^2 - 2 ch0 ch2^beta.
Rational bogomolov_discriminant(const ChernCharacter& ch, const RationalVector& beta,
                                const NSLattice& lattice);

using Coords2 = std::array<Integer, 2>;

// Saturated rank-2 sublattice of the Mukai lattice.
//
// `basis` may be empty for a lattice given only by its Gram matrix.
struct Rank2Lattice {
  std::vector<MukaiVector> basis;
  IntegerMatrix gram2;

  static Rank2Lattice abstract(const IntegerMatrix& gram2);

  Integer form(const Coords2& x, const Coords2& y) const;
  Integer square(const Coords2& x) const { return form(x, x); }
  Integer det() const;
};

// Saturation of span(v, w) with the basis
//   f1 = v / content(v in the saturation),
//   f2 the unique completion with w = x f1 + y f2, y > 0 and 0 <= x < y.
// Throws ValidationError when v and w are proportional.
Rank2Lattice saturate_rank2(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice);

// Coordinates of u in h's basis; throws ValidationError when u is not in h.
Coords2 coordinates_in(const Rank2Lattice& h, const MukaiVector& u);
MukaiVector from_coordinates(const Rank2Lattice& h, const Coords2& x);

// det(gram2) < 0.
bool is_hyperbolic(const Rank2Lattice& h);

// All delta with (delta, delta) = -2 and |(delta, v)| <= pairing_bound,
// sorted lexicographically. Throws ComputationError when the constraints do
// not cut out a finite set.
std::vector<Coords2> rank2_roots(const Rank2Lattice& h, const Coords2& v,
                                 const Integer& pairing_bound);
std::vector<MukaiVector> rank2_roots(const Rank2Lattice& h, const MukaiVector& v,
                                     const Integer& pairing_bound);

// Primitive isotropic rays (first nonzero coordinate positive), sorted; empty
// when -det(gram2) is not a perfect square. Throws ComputationError on the
// zero form.
std::vector<Coords2> rank2_isotropic(const Rank2Lattice& h);

// max((v, v), 2).
Integer default_root_bound(const Integer& v_square);

}  // namespace bridgeland
