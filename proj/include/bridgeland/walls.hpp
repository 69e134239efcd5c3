#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bridgeland/charge.hpp"
#include "bridgeland/mukai.hpp"

namespace bridgeland {

// Two-parameter family beta = beta0 + b H, omega = t H.
class SliceParams {
 public:
  // direction defaults to the ample class; any other direction is rejected.
  SliceParams(NSLattice lattice, RationalVector beta0,
              std::optional<RationalVector> direction = std::nullopt);

  const NSLattice& lattice() const { return lattice_; }
  const RationalVector& beta0() const { return beta0_; }
  const RationalVector& direction() const { return direction_; }
  const RationalVector& t_axis() const { return t_axis_; }

  // Throws ValidationError for t <= 0.
  ChargeParams at(const Rational& b, const Rational& t) const;

 private:
  NSLattice lattice_;
  RationalVector beta0_;
  RationalVector direction_;
  RationalVector t_axis_;
};

struct Region {
  Rational b_min;
  Rational b_max;
  Rational t_min;
  Rational t_max;
};

// Throws ValidationError unless b_min <= b_max and 0 < t_min <= t_max.
void check_region(const Region& region);

enum class WallKind { SEMICIRCLE, VERTICAL_LINE, EMPTY, DEGENERATE };
std::string to_string(WallKind kind);

// Im(Z(w) conj Z(v)) = t (A (b^2 + t^2) + B b + C t + D), with C = 0.
struct WallLocus {
  MukaiVector v;
  MukaiVector w;
  Rational a;
  Rational b;
  Rational c;
  Rational d;
  WallKind kind = WallKind::EMPTY;
  Rational center;   // b0 for SEMICIRCLE and VERTICAL_LINE
  Rational radius2;  // SEMICIRCLE only

  // (A, B, C, D) scaled to a primitive integer vector with positive leading
  // entry; equal keys mean equal point sets.
  IntegerVector conic_key() const;
  // A (b^2 + t^2) + B b + D.
  Rational conic_at(const Rational& b, const Rational& t) const;
};

WallLocus wall_locus(const MukaiVector& v, const MukaiVector& w, const SliceParams& slice);

// Closed-region intersection test for t > 0.
bool meets_region(const WallLocus& wall, const Region& region);

// Potential walls for v meeting the region: w runs over |coordinates| <= bound
// with (w, w) >= -2, (v - w, v - w) >= -2, span(v, w) hyperbolic and w not
// proportional to v. Candidates with the same conic are merged; the
// representative minimizes (max |coordinate|, lexicographic order). Sorted:
// vertical lines first, then by center and radius.
std::vector<WallLocus> enumerate_walls(const MukaiVector& v, const SliceParams& slice,
                                       const Region& region, const Integer& search_bound);

// Representatives of enumerate_walls.
std::vector<MukaiVector> candidate_classes(const MukaiVector& v, const SliceParams& slice,
                                           const Region& region, const Integer& search_bound);

// The numerical filters of enumerate_walls, without the region test.
bool admissible_partner(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice);

struct Crossing {
  Rational t2;                // exact t^2
  std::string t_exact;        // rational, or sqrt(q)
  std::string t_decimal;      // 30 significant digits
  std::vector<std::size_t> walls;  // indices into the input list
};

struct ChamberPath {
  Rational b;
  Rational t0;
  Rational t1;
  std::vector<Crossing> crossings;          // increasing t
  std::vector<std::size_t> on_walls;        // vertical walls containing the path
  bool top_is_large_volume = false;         // no listed wall meets b = b*, t > t1
};

// Exact crossings of the vertical segment b = b*, t in (t0, t1) with the walls.
ChamberPath chambers_along_path(const Rational& b_star, const Rational& t0, const Rational& t1,
                                const std::vector<WallLocus>& walls);

// sqrt(q) to `digits` significant digits.
std::string sqrt_decimal(const Rational& q, int digits);

struct OracleWall {
  std::uint64_t signature = 0;  // hash of the flagged grid edges
  std::size_t edges = 0;
  MukaiVector representative;
};

// Footprint of one candidate on a (grid + 1)^2 node lattice over the region:
// the edges whose endpoint signs of Im(Z(w) conj Z(v)) have product <= 0.
struct OracleGrid {
  OracleGrid(const MukaiVector& v, const SliceParams& slice, const Region& region,
             std::size_t grid);
  // Signature of w; edges == 0 means no sign change in the region.
  OracleWall footprint(const MukaiVector& w) const;

 private:
  std::size_t grid_;
  std::size_t dim_;
  std::vector<__int128> values_;  // per node, per basis vector, scaled integers
};

// Walls found by sampling alone: every admissible w in the box, clustered by
// footprint. Sorted by signature.
std::vector<OracleWall> sampling_oracle(const MukaiVector& v, const SliceParams& slice,
                                        const Region& region, std::size_t grid,
                                        const Integer& search_bound);

enum class WallRelation { NESTED, DISJOINT, TOUCHING, CROSSING };
std::string to_string(WallRelation r);

struct NestingFinding {
  std::size_t first;
  std::size_t second;
  WallRelation relation;
};

struct NestingReport {
  std::vector<NestingFinding> findings;  // TOUCHING and CROSSING pairs
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;            // CROSSING pairs
};

// Pairwise relation of semicircles and vertical lines, exact.
WallRelation wall_relation(const WallLocus& a, const WallLocus& b);
NestingReport nesting_check(const std::vector<WallLocus>& walls);

}  // namespace bridgeland
