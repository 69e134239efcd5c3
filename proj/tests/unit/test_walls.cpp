#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "bridgeland/error.hpp"
#include "bridgeland/walls.hpp"
#include "helpers.hpp"

namespace bridgeland {
namespace {

using G = GaussianRational;

MukaiVector mv(long r, long c, long s) { return MukaiVector{r, {c}, s}; }

Rational im_product(const MukaiVector& v, const MukaiVector& w, const SliceParams& slice,
                    const Rational& b, const Rational& t) {
  const ChargeParams p = slice.at(b, t);
  return (k3_charge(w, p) * k3_charge(v, p).conj()).im;
}

TEST(WallLocus, MatchesChargeProduct) {
  testing::Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const NSLattice lat = testing::random_ns_lattice(rng, static_cast<std::size_t>(rng.uniform(1, 2)));
    const SliceParams slice(lat, rng.rational_vector(lat.rank(), 3, 2));
    const MukaiVector v = MukaiVector::from_coords(rng.integer_vector(lat.rank() + 2, 4));
    const MukaiVector w = MukaiVector::from_coords(rng.integer_vector(lat.rank() + 2, 4));
    const WallLocus wall = wall_locus(v, w, slice);
    EXPECT_EQ(wall.c, 0);
    for (int i = 0; i < 5; ++i) {
      const Rational b = rng.rational(10, 4);
      Rational t = rng.rational(10, 4);
      t = (t < 0 ? Rational(-t) : t) + Rational(1, 7);
      EXPECT_EQ(im_product(v, w, slice, b, t), t * wall.conic_at(b, t));
    }
    // Adding multiples of v does not move the wall.
    MukaiVector w2 = w;
    w2.r += 3 * v.r;
    for (std::size_t i = 0; i < lat.rank(); ++i) w2.c[i] += 3 * v.c[i];
    w2.s += 3 * v.s;
    const WallLocus wall2 = wall_locus(v, w2, slice);
    if (wall.kind != WallKind::DEGENERATE) EXPECT_EQ(wall.conic_key(), wall2.conic_key());
  }
}

TEST(WallLocus, HandDerivedVerticalLine) {
  const SliceParams slice(testing::degree2_k3(), {0});
  const WallLocus wall = wall_locus(mv(1, 0, -1), mv(0, 0, 1), slice);
  EXPECT_EQ(wall.kind, WallKind::VERTICAL_LINE);
  EXPECT_EQ(wall.center, 0);
}

TEST(WallLocus, CoaxalFamily) {
  // Walls of (1,0,-1) are centered at c with radius^2 = c^2 - 1.
  const SliceParams slice(testing::degree2_k3(), {0});
  const Region region{-10, 0, Rational(1, 100), 10};
  for (const WallLocus& wall : enumerate_walls(mv(1, 0, -1), slice, region, Integer(6))) {
    if (wall.kind == WallKind::VERTICAL_LINE) continue;
    ASSERT_EQ(wall.kind, WallKind::SEMICIRCLE);
    EXPECT_EQ(wall.radius2, wall.center * wall.center - 1);
  }
}

// Region meeting for a conic, through the range of t^2 along [b_min, b_max].
bool brute_meets(const Rational& a, const Rational& bb, const Rational& d, const Region& region) {
  if (a == 0) {
    if (bb == 0) return false;
    const Rational x = -d / bb;
    return region.b_min <= x && x <= region.b_max;
  }
  // t^2 = g(b) = -(b^2 + (B/A) b + D/A), concave.
  auto g = [&](const Rational& b) { return Rational(-(b * b + bb / a * b + d / a)); };
  const Rational c = -bb / (2 * a);
  const Rational peak_b = std::clamp(c, region.b_min, region.b_max);
  const Rational hi = g(peak_b);
  const Rational lo = std::min(g(region.b_min), g(region.b_max));
  const Rational t0 = region.t_min * region.t_min;
  const Rational t1 = region.t_max * region.t_max;
  return hi >= t0 && lo <= t1 && hi > 0;
}

struct Conic {
  Rational a, b, d;
};

// Interpolates A (b^2 + t^2) + B b + D from three charge evaluations.
Conic interpolate(const MukaiVector& v, const MukaiVector& w, const SliceParams& slice) {
  const Rational f0 = im_product(v, w, slice, 0, 1);   // A + D
  const Rational f1 = im_product(v, w, slice, 1, 1);   // 2A + B + D
  const Rational f2 = im_product(v, w, slice, 0, 2) / 2;  // 4A + D
  const Rational a = (f2 - f0) / 3;
  const Rational d = f0 - a;
  return {a, f1 - 2 * a - d, d};
}

IntegerVector key_of(const Conic& c) {
  IntegerVector k = primitive_part(RationalVector{c.a, c.b, Rational(0), c.d});
  const auto lead = std::find_if(k.begin(), k.end(), [](const Integer& x) { return x != 0; });
  if (lead != k.end() && *lead < 0) {
    for (Integer& x : k) x = -x;
  }
  return k;
}

std::set<IntegerVector> brute_walls(const MukaiVector& v, const SliceParams& slice,
                                    const Region& region, long bound) {
  const NSLattice& lat = slice.lattice();
  const Integer v2 = mukai_square(v, lat);
  std::set<IntegerVector> keys;
  const std::size_t n = lat.rank() + 2;
  IntegerVector x(n, Integer(-bound));
  while (true) {
    const MukaiVector w = MukaiVector::from_coords(x);
    MukaiVector u = v;
    u.r -= w.r;
    for (std::size_t i = 0; i < lat.rank(); ++i) u.c[i] -= w.c[i];
    u.s -= w.s;
    const Integer w2 = mukai_square(w, lat);
    const Integer vw = mukai_pairing(v, w, lat);
    bool ok = w2 >= -2 && mukai_square(u, lat) >= -2 && v2 * w2 - vw * vw < 0;
    if (ok) {
      const Conic c = interpolate(v, w, slice);
      const bool degenerate = c.a == 0 && c.b == 0;
      bool real = !degenerate;
      if (real && c.a != 0) {
        const Rational center = -c.b / (2 * c.a);
        real = center * center - c.d / c.a > 0;
      }
      if (real && brute_meets(c.a, c.b, c.d, region)) keys.insert(key_of(c));
    }
    std::size_t i = 0;
    while (i < n && x[i] == bound) x[i++] = -bound;
    if (i == n) break;
    ++x[i];
  }
  return keys;
}

std::set<IntegerVector> engine_keys(const std::vector<WallLocus>& walls) {
  std::set<IntegerVector> keys;
  for (const WallLocus& w : walls) keys.insert(w.conic_key());
  return keys;
}

TEST(EnumerateWalls, AgainstBruteForce) {
  testing::Rng rng(62);
  const SliceParams slice(testing::degree2_k3(), {0});
  for (int k = 0; k < 12; ++k) {
    MukaiVector v = mv(rng.uniform(1, 3), rng.uniform(-2, 2), rng.uniform(-3, 1));
    if (mukai_square(v, slice.lattice()) < -2) continue;
    const Rational b0 = rng.rational(4, 2);
    const Region region{b0 - 2, b0 + rng.integer(0, 3), Rational(1, 10), Rational(rng.integer(1, 4))};
    const std::vector<WallLocus> walls = enumerate_walls(v, slice, region, Integer(5));
    EXPECT_EQ(engine_keys(walls), brute_walls(v, slice, region, 5)) << format_mukai(v);
    EXPECT_EQ(walls.size(), engine_keys(walls).size());
    for (const WallLocus& w : walls) {
      EXPECT_TRUE(meets_region(w, region));
      EXPECT_TRUE(admissible_partner(v, w.w, slice.lattice()));
    }
  }
}

TEST(EnumerateWalls, WorkedExample) {
  const SliceParams slice(testing::degree2_k3(), {0});
  const Region region{-3, 0, Rational(1, 10), 4};
  const std::vector<WallLocus> walls = enumerate_walls(mv(1, 0, -1), slice, region, Integer(8));
  EXPECT_EQ(walls.size(), 13u);
  EXPECT_EQ(engine_keys(walls), brute_walls(mv(1, 0, -1), slice, region, 8));
  EXPECT_EQ(walls.front().kind, WallKind::VERTICAL_LINE);
  EXPECT_EQ(walls.front().conic_key(), wall_locus(mv(1, 0, -1), mv(0, 0, 1), slice).conic_key());
  EXPECT_EQ(nesting_check(walls).violations, 0u);
}

TEST(EnumerateWalls, RejectsBadRegion) {
  const SliceParams slice(testing::degree2_k3(), {0});
  EXPECT_THROW(enumerate_walls(mv(1, 0, -1), slice, Region{0, -1, 1, 2}, Integer(3)),
               ValidationError);
  EXPECT_THROW(enumerate_walls(mv(1, 0, -1), slice, Region{-1, 0, 0, 2}, Integer(3)),
               ValidationError);
}

TEST(Nesting, WallsOfOneClassAreNested) {
  testing::Rng rng(63);
  for (long h = 1; h <= 2; ++h) {
    const SliceParams slice(NSLattice(IntegerMatrix{{2 * h}}, IntegerVector{1}), {0});
    for (int k = 0; k < 6; ++k) {
      const MukaiVector v = mv(rng.uniform(1, 3), rng.uniform(-2, 2), rng.uniform(-3, 1));
      const Region region{-4, 4, Rational(1, 20), 5};
      const std::vector<WallLocus> walls = enumerate_walls(v, slice, region, Integer(5));
      EXPECT_EQ(nesting_check(walls).violations, 0u) << format_mukai(v);
    }
  }
}

WallLocus circle(const Rational& c, const Rational& r2) {
  WallLocus w;
  w.kind = WallKind::SEMICIRCLE;
  w.center = c;
  w.radius2 = r2;
  return w;
}

WallLocus line(const Rational& x) {
  WallLocus w;
  w.kind = WallKind::VERTICAL_LINE;
  w.center = x;
  return w;
}

// Through the radical axis of the two circles.
WallRelation brute_relation(const WallLocus& x, const WallLocus& y) {
  if (x.center == y.center) return x.radius2 == y.radius2 ? WallRelation::CROSSING : WallRelation::NESTED;
  const Rational bs = (x.radius2 - y.radius2 + y.center * y.center - x.center * x.center) /
                      (2 * (y.center - x.center));
  const Rational t2 = x.radius2 - (bs - x.center) * (bs - x.center);
  if (t2 > 0) return WallRelation::CROSSING;
  if (t2 == 0) return WallRelation::TOUCHING;
  const Rational d = x.center - y.center;
  const bool inside = d * d < x.radius2 || d * d < y.radius2;
  return inside ? WallRelation::NESTED : WallRelation::DISJOINT;
}

TEST(Relation, AgainstRadicalAxis) {
  testing::Rng rng(64);
  int touching = 0;
  for (int k = 0; k < 3000; ++k) {
    const WallLocus x = circle(rng.integer(-6, 6), rng.integer(1, 16));
    const WallLocus y = circle(rng.integer(-6, 6), rng.integer(1, 16));
    if (x.center == y.center && x.radius2 == y.radius2) continue;
    const WallRelation r = brute_relation(x, y);
    touching += r == WallRelation::TOUCHING;
    EXPECT_EQ(wall_relation(x, y), r);
    EXPECT_EQ(wall_relation(y, x), r);
  }
  EXPECT_GT(touching, 10);
  EXPECT_EQ(wall_relation(line(0), circle(2, 4)), WallRelation::TOUCHING);
  EXPECT_EQ(wall_relation(line(0), circle(1, 4)), WallRelation::CROSSING);
  EXPECT_EQ(wall_relation(circle(5, 4), line(0)), WallRelation::DISJOINT);
  EXPECT_EQ(wall_relation(line(1), line(2)), WallRelation::DISJOINT);
}

TEST(MeetsRegion, AgainstRangeOfT) {
  testing::Rng rng(65);
  for (int k = 0; k < 2000; ++k) {
    const Rational b0 = rng.rational(6, 2);
    const Region region{b0, b0 + rng.rational(6, 2) + 6, testing::ratio(rng.integer(1, 4), 4),
                        Rational(rng.integer(2, 8))};
    const Rational c = rng.rational(10, 2);
    const Rational r2 = testing::ratio(rng.integer(1, 40), 3);
    WallLocus w = circle(c, r2);
    w.a = 1;
    w.b = -2 * c;
    w.d = c * c - r2;
    EXPECT_EQ(meets_region(w, region), brute_meets(w.a, w.b, w.d, region));
  }
}

TEST(Chambers, CrossingsAreExact) {
  const SliceParams slice(testing::degree2_k3(), {0});
  const Region region{-3, 0, Rational(1, 10), 4};
  const std::vector<WallLocus> walls = enumerate_walls(mv(1, 0, -1), slice, region, Integer(8));
  const ChamberPath path = chambers_along_path(-1, Rational(1, 10), 4, walls);
  EXPECT_EQ(path.crossings.size(), 12u);
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < path.crossings.size(); ++i) {
    const Crossing& c = path.crossings[i];
    if (i > 0) EXPECT_GT(c.t2, path.crossings[i - 1].t2);
    for (std::size_t idx : c.walls) {
      seen.insert(idx);
      EXPECT_EQ(walls[idx].conic_at(-1, 0) + walls[idx].a * c.t2, 0);
    }
  }
  // Every semicircle over b = -1 is crossed; the vertical line is not.
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const WallLocus& w = walls[i];
    const bool over = w.kind == WallKind::SEMICIRCLE && (w.center + 1) * (w.center + 1) < w.radius2;
    EXPECT_EQ(seen.count(i) == 1, over) << i;
  }
  EXPECT_TRUE(path.on_walls.empty());
  EXPECT_THROW(chambers_along_path(0, 1, 1, walls), ValidationError);
  const ChamberPath on_line = chambers_along_path(0, Rational(1, 10), 4, walls);
  EXPECT_EQ(on_line.on_walls.size(), 1u);
}

TEST(SqrtDecimal, BracketsTheRoot) {
  testing::Rng rng(66);
  for (int k = 0; k < 300; ++k) {
    Rational q = rng.rational(1000, 50);
    if (q <= 0) q = -q + Rational(1, 3);
    const std::string s = sqrt_decimal(q, 30);
    const Rational d = parse_rational(s);
    EXPECT_NEAR(d.get_d(), std::sqrt(q.get_d()), 1e-12 * std::sqrt(q.get_d()) + 1e-300);
    // One unit in the 30th significant digit.
    const long e = static_cast<long>(std::floor(std::log10(d.get_d())));
    Rational ulp = 1;
    for (long i = 0; i < 29 - e; ++i) ulp /= 10;
    for (long i = 0; i < e - 29; ++i) ulp *= 10;
    EXPECT_LE((d - ulp) * (d - ulp), q) << s;
    EXPECT_GE((d + ulp) * (d + ulp), q) << s;
  }
  EXPECT_EQ(sqrt_decimal(Rational(4), 5).substr(0, 1), "2");
}

TEST(Oracle, SilentOffTheWall) {
  const SliceParams slice(testing::degree2_k3(), {0});
  const Region region{-3, 0, Rational(1, 10), 4};
  const MukaiVector v = mv(1, 0, -1);
  const OracleGrid grid(v, slice, region, 40);
  testing::Rng rng(67);
  for (int k = 0; k < 200; ++k) {
    const MukaiVector w = mv(rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6));
    const WallLocus wall = wall_locus(v, w, slice);
    if (wall.kind == WallKind::DEGENERATE) continue;
    if (!meets_region(wall, region)) EXPECT_EQ(grid.footprint(w).edges, 0u) << format_mukai(w);
    if (wall.kind == WallKind::VERTICAL_LINE && wall.center > -3 && wall.center < 0) {
      EXPECT_GT(grid.footprint(w).edges, 0u);
    }
  }
}

}  // namespace
}  // namespace bridgeland
