#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bridgeland/charge.hpp"
#include "bridgeland/mukai.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland {

// Omega in the rational Mukai lattice with (Omega, w) = Im(Z(w) / Z(v)).
struct OmegaClass {
  RationalVector coords;
  MukaiVector v;
  ChargeRow charge;
};

// Solves (Omega, e_i) = Im(Z(e_i) / Z(v)) and re-verifies it on every basis
// vector and on v. Throws ComputationError when Z(v) = 0.
OmegaClass omega_class(const MukaiVector& v, const ChargeRow& z, const NSLattice& lattice);

// (Omega, Omega).
Rational bb_square(const OmegaClass& omega, const NSLattice& lattice);

struct ModuliDimension {
  Integer dimension;  // v^2 + 2
  bool rigid = false;      // v^2 = -2
  bool isotropic = false;  // v^2 = 0
};

// Throws ValidationError for non-primitive v or v^2 < -2 (empty moduli).
ModuliDimension moduli_dimension(const MukaiVector& v, const NSLattice& lattice);

struct Decomposition {
  std::vector<Coords2> parts;  // nondecreasing lexicographic order
  Integer slack;               // v^2 - 2(m - 1) - sum a_i^2
};

// The part a must satisfy ray(a) when a filter is given.
using PartFilter = std::function<bool(const Coords2&)>;

// Multisets {a_1..a_m} of nonzero classes in h with m <= max_m, sum v,
// a_i^2 >= -2 and nonnegative slack; every coordinate of every part lies in
// [-box, box].
std::vector<Decomposition> decomposition_scan(const Coords2& v, const Rank2Lattice& h, int max_m,
                                              const Integer& box,
                                              const PartFilter& filter = nullptr);

// A point of the slice plane; t may be irrational, only t^2 is stored.
struct SlicePoint {
  Rational b;
  Rational t2;
};

// Parses "b,t" with t rational or "sqrt(q)".
SlicePoint parse_slice_point(std::string_view text);

struct WallReportOptions {
  std::optional<Integer> root_bound;  // default max(v^2, 2)
  int max_m = 3;
  Integer box = 10;
};

struct WallReport {
  WallLocus wall;
  Rank2Lattice hw;
  Coords2 v_coords;
  Coords2 w_coords;
  Integer root_bound;
  std::vector<Coords2> roots;
  std::vector<Coords2> isotropic;
  std::vector<Decomposition> decompositions;
  bool ray_filter = false;
  bool has_root = false;
  bool has_isotropic = false;
  bool admits_totally_semistable_candidate = false;
};

// Real ratio Z(a) / Z(v) at a point of the wall of (v, w).
Rational ratio_on_wall(const MukaiVector& a, const MukaiVector& v, const SliceParams& slice,
                       const SlicePoint& point);

// H_W analysis of the wall of (v, w). With a point on the wall, decomposition
// parts are restricted to 0 < Z(a)/Z(v) < 1 there. Throws ValidationError on
// a degenerate wall, a point off the wall or a non-hyperbolic H_W.
WallReport wall_report(const MukaiVector& v, const MukaiVector& w, const SliceParams& slice,
                       const std::optional<SlicePoint>& point,
                       const WallReportOptions& options = {});

// Primitive u in v^perp with (u, u) = 0. For v^2 > 0, u runs over ambient
// coordinates in [-bound, bound]; for v^2 = 0 over classes of v^perp / <v>,
// with coordinates in [-bound, bound] in a basis of v^perp starting with v.
// Sign-normalized (first nonzero coordinate positive) and sorted.
std::vector<MukaiVector> lagrangian_candidates(const MukaiVector& v, const NSLattice& lattice,
                                               const Integer& bound);

}  // namespace bridgeland
