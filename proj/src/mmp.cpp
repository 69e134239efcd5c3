#include "bridgeland/mmp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bridgeland/error.hpp"

namespace bridgeland {

OmegaClass omega_class(const MukaiVector& v, const ChargeRow& z, const NSLattice& lattice) {
  check_dimension(v, lattice);
  const std::size_t n = lattice.rank() + 2;
  if (z.size() != n) throw ValidationError("charge row has the wrong length");
  const GaussianRational zv = evaluate(z, v.coords());
  if (zv.is_zero()) throw ComputationError("Z(v) = 0");
  const Rational norm = zv.norm();
  RationalVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GaussianRational q = z[i] * zv.conj();
    y[i] = q.im / norm;
  }
  const RationalMatrix g = to_rational(mukai_gram(lattice));
  OmegaClass out;
  out.coords = solve(g, y);
  out.v = v;
  out.charge = z;

  const RationalVector gw = g * out.coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (gw[i] != y[i]) throw ComputationError("omega class fails on a basis vector");
  }
  if (mukai_pairing(out.coords, to_rational(v.coords()), lattice) != 0) {
    throw ComputationError("omega class is not orthogonal to v");
  }
  return out;
}

Rational bb_square(const OmegaClass& omega, const NSLattice& lattice) {
  return mukai_pairing(omega.coords, omega.coords, lattice);
}

ModuliDimension moduli_dimension(const MukaiVector& v, const NSLattice& lattice) {
  check_dimension(v, lattice);
  if (content(v.coords()) != 1) throw ValidationError("v is not primitive");
  const Integer sq = mukai_square(v, lattice);
  if (sq < -2) throw ValidationError("empty: v^2 = " + to_string(sq) + " < -2");
  ModuliDimension out;
  out.dimension = sq + 2;
  out.rigid = sq == -2;
  out.isotropic = sq == 0;
  return out;
}

namespace {

bool coords_less(const Coords2& a, const Coords2& b) {
  if (a[0] != b[0]) return a[0] < b[0];
  return a[1] < b[1];
}

bool in_box(const Coords2& a, const Integer& box) {
  return abs(a[0]) <= box && abs(a[1]) <= box;
}

struct Scanner {
  const Rank2Lattice& h;
  const Coords2& v;
  Integer v2;
  int max_m;
  Integer box;
  std::vector<Coords2> parts;  // admissible single parts, sorted
  std::vector<Decomposition> out;

  void run() {
    std::vector<Coords2> chosen;
    for (int m = 1; m <= max_m; ++m) extend(chosen, 0, m, Coords2{0, 0}, Integer(0));
  }

  // chosen holds the first parts; the last part is v minus their sum.
  void extend(std::vector<Coords2>& chosen, std::size_t from, int m, const Coords2& sum,
              const Integer& squares) {
    if (static_cast<int>(chosen.size()) == m - 1) {
      const Coords2 last{v[0] - sum[0], v[1] - sum[1]};
      if (!in_box(last, box)) return;
      if (!chosen.empty() && coords_less(last, chosen.back())) return;
      if (!std::binary_search(parts.begin(), parts.end(), last, coords_less)) return;
      const Integer total = squares + h.square(last);
      const Integer slack = v2 - 2 * (m - 1) - total;
      if (slack < 0) return;
      Decomposition d;
      d.parts = chosen;
      d.parts.push_back(last);
      d.slack = slack;
      out.push_back(std::move(d));
      return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
      const Coords2& a = parts[i];
      chosen.push_back(a);
      const Coords2 next{sum[0] + a[0], sum[1] + a[1]};
      const Integer sq = squares + h.square(a);
      extend(chosen, i, m, next, sq);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<Decomposition> decomposition_scan(const Coords2& v, const Rank2Lattice& h, int max_m,
                                              const Integer& box, const PartFilter& filter) {
  if (max_m < 1) throw ValidationError("max_m must be at least 1");
  if (box < 0) throw ValidationError("box must be nonnegative");
  Scanner scan{h, v, h.square(v), max_m, box, {}, {}};
  for (Integer x = -box; x <= box; ++x) {
    for (Integer y = -box; y <= box; ++y) {
      const Coords2 a{x, y};
      if (x == 0 && y == 0) continue;
      const Integer sq = h.square(a);
      if (sq < -2 || sq > scan.v2) continue;
      if (filter && !filter(a)) continue;
      scan.parts.push_back(a);
    }
  }
  std::sort(scan.parts.begin(), scan.parts.end(), coords_less);
  scan.run();
  return scan.out;
}

SlicePoint parse_slice_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ValidationError("point must be \"b,t\"");
  SlicePoint p;
  p.b = parse_rational(text.substr(0, comma));
  std::string_view t = text.substr(comma + 1);
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  if (t.starts_with("sqrt(") && t.ends_with(")")) {
    p.t2 = parse_rational(t.substr(5, t.size() - 6));
  } else {
    const Rational tv = parse_rational(t);
    if (tv <= 0) throw ValidationError("t must be positive");
    p.t2 = tv * tv;
  }
  if (p.t2 <= 0) throw ValidationError("t must be positive");
  return p;
}

namespace {

// Re Z(x) and Im Z(x) / t at (b, t).
struct SplitCharge {
  Rational re;
  Rational im_over_t;
};

SplitCharge split_charge(const MukaiVector& x, const SliceParams& slice, const SlicePoint& p) {
  const NSLattice& lat = slice.lattice();
  RationalVector beta = slice.beta0();
  for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += p.b * slice.direction()[i];
  const RationalVector& h = slice.t_axis();
  const RationalVector c = to_rational(x.c);
  const Rational r(x.r);
  const Rational h2 = lat.square(h);
  SplitCharge out;
  out.re = lat.dot(beta, c) - Rational(x.s) - r * (lat.square(beta) - p.t2 * h2) / 2;
  out.im_over_t = lat.dot(h, c) - r * lat.dot(beta, h);
  return out;
}

}  // namespace

Rational ratio_on_wall(const MukaiVector& a, const MukaiVector& v, const SliceParams& slice,
                       const SlicePoint& point) {
  const SplitCharge za = split_charge(a, slice, point);
  const SplitCharge zv = split_charge(v, slice, point);
  const Rational norm = zv.re * zv.re + point.t2 * zv.im_over_t * zv.im_over_t;
  if (norm == 0) throw ComputationError("Z(v) = 0 at the point");
  const Rational cross = za.im_over_t * zv.re - za.re * zv.im_over_t;
  if (cross != 0) throw ValidationError("Z(a) / Z(v) is not real at the point");
  return (za.re * zv.re + point.t2 * za.im_over_t * zv.im_over_t) / norm;
}

WallReport wall_report(const MukaiVector& v, const MukaiVector& w, const SliceParams& slice,
                       const std::optional<SlicePoint>& point, const WallReportOptions& options) {
  const NSLattice& lat = slice.lattice();
  WallReport rep;
  rep.wall = wall_locus(v, w, slice);
  if (rep.wall.kind == WallKind::DEGENERATE) throw ValidationError("degenerate wall");
  rep.hw = saturate_rank2(v, w, lat);
  if (!is_hyperbolic(rep.hw)) throw ValidationError("H_W is not hyperbolic");
  rep.v_coords = coordinates_in(rep.hw, v);
  rep.w_coords = coordinates_in(rep.hw, w);
  const Integer v2 = mukai_square(v, lat);
  rep.root_bound = options.root_bound ? *options.root_bound : default_root_bound(v2);
  rep.roots = rank2_roots(rep.hw, rep.v_coords, rep.root_bound);
  rep.isotropic = rank2_isotropic(rep.hw);

  PartFilter filter;
  if (point) {
    const WallLocus& wl = rep.wall;
    const Rational at = wl.a * (point->b * point->b + point->t2) + wl.b * point->b + wl.d;
    if (at != 0) throw ValidationError("point is not on the wall");
    rep.ray_filter = true;
    filter = [&](const Coords2& a) {
      const Rational q = ratio_on_wall(from_coordinates(rep.hw, a), v, slice, *point);
      return q > 0 && q < 1;
    };
  }
  rep.decompositions = decomposition_scan(rep.v_coords, rep.hw, options.max_m, options.box, filter);
  rep.has_root = !rep.roots.empty();
  rep.has_isotropic = !rep.isotropic.empty();
  const bool multi = std::any_of(rep.decompositions.begin(), rep.decompositions.end(),
                                 [](const Decomposition& d) { return d.parts.size() >= 2; });
  rep.admits_totally_semistable_candidate = multi && (rep.has_root || rep.has_isotropic);
  return rep;
}

namespace {

IntegerVector sign_normalized(IntegerVector u) {
  for (const Integer& x : u) {
    if (x == 0) continue;
    if (x < 0) {
      for (Integer& y : u) y = -y;
    }
    break;
  }
  return u;
}

template <class F>
void odometer(std::size_t n, const Integer& bound, F&& f) {
  IntegerVector x(n, Integer(-bound));
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound) {
      x[i] = -bound;
      ++i;
    }
    if (i == n) return;
    ++x[i];
  }
}

// Basis of v^perp whose first vector is v (v primitive and isotropic).
std::vector<IntegerVector> perp_basis_through(const IntegerVector& v,
                                             const std::vector<IntegerVector>& kernel) {
  const std::size_t p = kernel.size();
  const std::size_t n = v.size();
  RationalMatrix kt(n, p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i < n; ++i) kt(i, j) = kernel[j][i];
  }
  std::vector<std::size_t> pivots;
  rref(kt.transpose(), &pivots);
  RationalMatrix sub(p, p);
  RationalVector rhs(p);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t j = 0; j < p; ++j) sub(a, j) = kt(pivots[a], j);
    rhs[a] = v[pivots[a]];
  }
  const IntegerVector c = to_integer(solve(sub, rhs));

  IntegerMatrix aug(p, p + 1);
  for (std::size_t i = 0; i < p; ++i) {
    aug(i, 0) = c[i];
    aug(i, i + 1) = 1;
  }
  const IntegerMatrix hnf = hermite_rows(aug);
  IntegerMatrix u(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) u(i, j) = hnf(i, j + 1);
  }
  const IntegerMatrix w = to_integer(inverse(to_rational(u))).transpose();
  std::vector<IntegerVector> basis;
  for (std::size_t i = 0; i < p; ++i) {
    IntegerVector row(n, Integer(0));
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < n; ++k) row[k] += w(i, j) * kernel[j][k];
    }
    basis.push_back(std::move(row));
  }
  if (basis.front() != v) throw ComputationError("basis completion failed");
  return basis;
}

}  // namespace

std::vector<MukaiVector> lagrangian_candidates(const MukaiVector& v, const NSLattice& lattice,
                                               const Integer& bound) {
  check_dimension(v, lattice);
  if (bound < 0) throw ValidationError("bound must be nonnegative");
  const IntegerVector vc = v.coords();
  if (content(vc) != 1) throw ValidationError("v is not primitive");
  const Integer v2 = mukai_square(v, lattice);
  if (v2 < 0) throw ValidationError("v^2 must be nonnegative");
  const IntegerMatrix g = mukai_gram(lattice);
  const std::size_t n = vc.size();

  std::set<IntegerVector, bool (*)(const IntegerVector&, const IntegerVector&)> found(
      [](const IntegerVector& a, const IntegerVector& b) { return lex_compare(a, b) < 0; });
  if (v2 > 0) {
    const IntegerVector gv = g * vc;
    odometer(n, bound, [&](const IntegerVector& u) {
      if (is_zero(u) || content(u) != 1) return;
      if (dot(to_rational(gv), to_rational(u)) != 0) return;
      if (bilinear(g, u, u) != 0) return;
      found.insert(sign_normalized(u));
    });
  } else {
    IntegerMatrix row(1, n);
    const IntegerVector gv = g * vc;
    for (std::size_t i = 0; i < n; ++i) row(0, i) = gv[i];
    const std::vector<IntegerVector> basis = perp_basis_through(vc, integer_kernel(row));
    const std::size_t q = basis.size() - 1;
    if (q == 0) return {};
    odometer(q, bound, [&](const IntegerVector& y) {
      if (is_zero(y) || content(y) != 1) return;
      const IntegerVector ys = sign_normalized(y);
      IntegerVector u(n, Integer(0));
      for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t k = 0; k < n; ++k) u[k] += ys[j] * basis[j + 1][k];
      }
      if (bilinear(g, u, u) != 0) return;
      found.insert(u);
    });
  }
  std::vector<MukaiVector> out;
  for (const IntegerVector& u : found) out.push_back(MukaiVector::from_coords(u));
  return out;
}

}  // namespace bridgeland
