#include "bridgeland/walls.hpp"

#include <mpfr.h>

#include <algorithm>
#include <limits>
#include <map>

#include "bridgeland/error.hpp"

namespace bridgeland {

SliceParams::SliceParams(NSLattice lattice, RationalVector beta0,
                         std::optional<RationalVector> direction)
    : lattice_(std::move(lattice)), beta0_(std::move(beta0)) {
  if (beta0_.size() != lattice_.rank()) throw ValidationError("beta0 has the wrong length");
  t_axis_ = to_rational(lattice_.ample());
  direction_ = direction.value_or(t_axis_);
  if (direction_ != t_axis_) {
    throw ValidationError("slice direction must be the ample class H");
  }
}

ChargeParams SliceParams::at(const Rational& b, const Rational& t) const {
  if (t <= 0) throw ValidationError("slice parameter t must be positive");
  RationalVector beta = beta0_;
  RationalVector omega = t_axis_;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    beta[i] += b * direction_[i];
    omega[i] *= t;
  }
  return ChargeParams(lattice_, beta, omega);
}

void check_region(const Region& region) {
  if (region.b_min > region.b_max) throw ValidationError("empty b range");
  if (region.t_min <= 0) {
    throw ValidationError("t_min must be positive: walls accumulate at t = 0");
  }
  if (region.t_min > region.t_max) throw ValidationError("empty t range");
}

std::string to_string(WallKind kind) {
  switch (kind) {
    case WallKind::SEMICIRCLE: return "SEMICIRCLE";
    case WallKind::VERTICAL_LINE: return "VERTICAL_LINE";
    case WallKind::EMPTY: return "EMPTY";
    case WallKind::DEGENERATE: return "DEGENERATE";
  }
  return "?";
}

IntegerVector WallLocus::conic_key() const {
  const RationalVector coeffs{a, b, c, d};
  if (is_zero(coeffs)) return IntegerVector(4, Integer(0));
  return primitive_part(coeffs);
}

Rational WallLocus::conic_at(const Rational& bb, const Rational& t) const {
  return a * (bb * bb + t * t) + b * bb + c * t + d;
}

WallLocus wall_locus(const MukaiVector& v, const MukaiVector& w, const SliceParams& slice) {
  const NSLattice& lat = slice.lattice();
  check_dimension(v, lat);
  check_dimension(w, lat);
  const RationalVector& h_axis = slice.t_axis();
  const RationalVector& beta0 = slice.beta0();
  const Rational h = lat.square(h_axis);
  const Rational beta_h = lat.dot(beta0, h_axis);
  const Rational beta2 = lat.square(beta0);
  // Z(x) at (b, t) = e_x + b m_x - r_x h (b^2 - t^2) / 2 + i t (m_x - r_x h b)
  auto m_of = [&](const MukaiVector& x) {
    return Rational(lat.dot(h_axis, to_rational(x.c)) - x.r * beta_h);
  };
  auto e_of = [&](const MukaiVector& x) {
    return Rational(lat.dot(beta0, to_rational(x.c)) - x.s - x.r * beta2 / 2);
  };
  const Rational mv = m_of(v);
  const Rational mw = m_of(w);
  const Rational ev = e_of(v);
  const Rational ew = e_of(w);

  WallLocus out;
  out.v = v;
  out.w = w;
  out.a = h * (v.r * mw - w.r * mv) / 2;
  out.b = h * (v.r * ew - w.r * ev);
  out.c = 0;
  out.d = mw * ev - mv * ew;

  if (out.a == 0) {
    if (out.b == 0) {
      out.kind = out.d == 0 ? WallKind::DEGENERATE : WallKind::EMPTY;
    } else {
      out.kind = WallKind::VERTICAL_LINE;
      out.center = -out.d / out.b;
    }
    return out;
  }
  out.center = -out.b / (2 * out.a);
  const Rational r2 = out.center * out.center - out.d / out.a;
  if (r2 > 0) {
    out.kind = WallKind::SEMICIRCLE;
    out.radius2 = r2;
  } else {
    out.kind = WallKind::EMPTY;
  }
  return out;
}

bool meets_region(const WallLocus& wall, const Region& region) {
  check_region(region);
  switch (wall.kind) {
    case WallKind::VERTICAL_LINE:
      return wall.center >= region.b_min && wall.center <= region.b_max;
    case WallKind::SEMICIRCLE: {
      // g(b) = rho^2 - (b - b0)^2 is concave; its range over [b_min, b_max]
      // is [min at the endpoints, value at the clamped center].
      auto g = [&](const Rational& bb) {
        const Rational diff = bb - wall.center;
        return Rational(wall.radius2 - diff * diff);
      };
      const Rational lo = std::min(g(region.b_min), g(region.b_max));
      const Rational peak = g(std::clamp(wall.center, region.b_min, region.b_max));
      return peak >= region.t_min * region.t_min && lo <= region.t_max * region.t_max;
    }
    default:
      return false;
  }
}

bool admissible_partner(const MukaiVector& v, const MukaiVector& w, const NSLattice& lattice) {
  if (w.r == 0 && is_zero(w.c) && w.s == 0) return false;
  // Proportional to v?
  const IntegerVector fv = v.coords();
  const IntegerVector fw = w.coords();
  bool proportional = true;
  for (std::size_t i = 0; i < fv.size() && proportional; ++i) {
    for (std::size_t j = i + 1; j < fv.size() && proportional; ++j) {
      if (fv[i] * fw[j] != fv[j] * fw[i]) proportional = false;
    }
  }
  if (proportional) return false;
  const Integer w2 = mukai_square(w, lattice);
  if (w2 < -2) return false;
  if (mukai_square(v - w, lattice) < -2) return false;
  const Integer vw = mukai_pairing(v, w, lattice);
  return vw * vw > mukai_square(v, lattice) * w2;
}

namespace {

Integer max_abs(const MukaiVector& x) {
  Integer m = 0;
  for (const Integer& c : x.coords()) m = std::max(m, Integer(abs(c)));
  return m;
}

bool representative_less(const MukaiVector& a, const MukaiVector& b) {
  const int c = cmp(max_abs(a), max_abs(b));
  if (c != 0) return c < 0;
  return lex_compare(a.coords(), b.coords()) < 0;
}

bool wall_order(const WallLocus& x, const WallLocus& y) {
  if (x.kind != y.kind) return x.kind == WallKind::VERTICAL_LINE;
  if (x.center != y.center) return x.center < y.center;
  return x.radius2 < y.radius2;
}

// Calls f on every Mukai vector with coordinates in [-bound, bound].
template <class F>
void for_each_in_box(std::size_t n, const Integer& bound, F&& f) {
  IntegerVector x(n, Integer(-bound));
  while (true) {
    f(MukaiVector::from_coords(x));
    std::size_t i = 0;
    while (i < n && x[i] == bound) {
      x[i] = -bound;
      ++i;
    }
    if (i == n) return;
    ++x[i];
  }
}

}  // namespace

std::vector<WallLocus> enumerate_walls(const MukaiVector& v, const SliceParams& slice,
                                       const Region& region, const Integer& search_bound) {
  check_region(region);
  if (search_bound <= 0) throw ValidationError("search bound must be positive");
  const NSLattice& lat = slice.lattice();
  check_dimension(v, lat);
  std::map<IntegerVector, WallLocus> by_conic;
  for_each_in_box(lat.rank() + 2, search_bound, [&](const MukaiVector& w) {
    if (!admissible_partner(v, w, lat)) return;
    WallLocus locus = wall_locus(v, w, slice);
    if (!meets_region(locus, region)) return;
    const IntegerVector key = locus.conic_key();
    const auto it = by_conic.find(key);
    if (it == by_conic.end()) {
      by_conic.emplace(key, std::move(locus));
    } else if (representative_less(w, it->second.w)) {
      it->second = std::move(locus);
    }
  });
  std::vector<WallLocus> out;
  for (auto& [key, locus] : by_conic) out.push_back(std::move(locus));
  std::sort(out.begin(), out.end(), wall_order);
  return out;
}

std::vector<MukaiVector> candidate_classes(const MukaiVector& v, const SliceParams& slice,
                                           const Region& region, const Integer& search_bound) {
  std::vector<MukaiVector> out;
  for (const WallLocus& wall : enumerate_walls(v, slice, region, search_bound)) out.push_back(wall.w);
  return out;
}

std::string sqrt_decimal(const Rational& q, int digits) {
  if (q < 0) throw ValidationError("square root of a negative number");
  if (q == 0) return "0";
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), x, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  mpfr_clear(x);
  std::string out;
  const long point = static_cast<long>(exponent);
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mantissa;
  } else if (point >= static_cast<long>(mantissa.size())) {
    out = mantissa + std::string(static_cast<std::size_t>(point) - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(point)) + "." +
          mantissa.substr(static_cast<std::size_t>(point));
  }
  return out;
}

ChamberPath chambers_along_path(const Rational& b_star, const Rational& t0, const Rational& t1,
                                const std::vector<WallLocus>& walls) {
  if (t0 <= 0 || t0 >= t1) throw ValidationError("path needs 0 < t0 < t1");
  ChamberPath path{b_star, t0, t1, {}, {}, true};
  std::map<Rational, std::vector<std::size_t>> hits;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const WallLocus& wall = walls[i];
    if (wall.kind == WallKind::VERTICAL_LINE) {
      if (wall.center == b_star) path.on_walls.push_back(i);
      continue;
    }
    if (wall.kind != WallKind::SEMICIRCLE) continue;
    const Rational t2 = -(wall.a * b_star * b_star + wall.b * b_star + wall.d) / wall.a;
    if (t2 <= 0) continue;
    if (t2 > t1 * t1) path.top_is_large_volume = false;
    if (t2 <= t0 * t0 || t2 >= t1 * t1) continue;
    hits[t2].push_back(i);
  }
  if (!path.on_walls.empty()) path.top_is_large_volume = false;
  for (auto& [t2, indices] : hits) {
    Crossing c;
    c.t2 = t2;
    Rational root;
    c.t_exact = is_rational_square(t2, &root) ? to_string(root) : "sqrt(" + to_string(t2) + ")";
    c.t_decimal = sqrt_decimal(t2, 30);
    c.walls = indices;
    path.crossings.push_back(std::move(c));
  }
  return path;
}

OracleGrid::OracleGrid(const MukaiVector& v, const SliceParams& slice, const Region& region,
                       std::size_t grid)
    : grid_(grid), dim_(slice.lattice().rank() + 2) {
  check_region(region);
  if (grid == 0) throw ValidationError("grid resolution must be positive");
  check_dimension(v, slice.lattice());
  const std::size_t nodes = (grid + 1) * (grid + 1);
  values_.resize(nodes * dim_);
  const RationalVector fv = to_rational(v.coords());
  const Rational db = (region.b_max - region.b_min) / Integer(static_cast<unsigned long>(grid));
  const Rational dt = (region.t_max - region.t_min) / Integer(static_cast<unsigned long>(grid));
  for (std::size_t i = 0; i <= grid; ++i) {
    const Rational b = region.b_min + db * Integer(static_cast<unsigned long>(i));
    for (std::size_t j = 0; j <= grid; ++j) {
      const Rational t = region.t_min + dt * Integer(static_cast<unsigned long>(j));
      const ChargeRow row = charge_row(slice.at(b, t));
      const GaussianRational zv = evaluate(row, fv);
      // Im(Z(e_k) conj Z(v)), cleared of denominators.
      RationalVector g(dim_);
      Integer den = 1;
      for (std::size_t k = 0; k < dim_; ++k) {
        g[k] = row[k].im * zv.re - row[k].re * zv.im;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g[k].get_den_mpz_t());
      }
      const std::size_t node = i * (grid + 1) + j;
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational scaled = g[k] * Rational(den);
        const Integer& num = scaled.get_num();
        if (!mpz_fits_slong_p(num.get_mpz_t())) {
          throw ComputationError("oracle node value exceeds 64 bits");
        }
        values_[node * dim_ + k] = static_cast<__int128>(num.get_si());
      }
    }
  }
}

OracleWall OracleGrid::footprint(const MukaiVector& w) const {
  const IntegerVector fw = w.coords();
  if (fw.size() != dim_) throw ValidationError("oracle footprint: dimension mismatch");
  std::vector<long> coeff(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (!mpz_fits_slong_p(fw[k].get_mpz_t())) throw ComputationError("oracle coordinate too large");
    coeff[k] = fw[k].get_si();
  }
  const std::size_t side = grid_ + 1;
  std::vector<signed char> signs(side * side);
  for (std::size_t node = 0; node < signs.size(); ++node) {
    __int128 total = 0;
    for (std::size_t k = 0; k < dim_; ++k) total += values_[node * dim_ + k] * coeff[k];
    signs[node] = total > 0 ? 1 : (total < 0 ? -1 : 0);
  }
  OracleWall out;
  out.representative = w;
  std::uint64_t hash = 1469598103934665603ull;
  auto flag = [&](std::uint64_t id) {
    ++out.edges;
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (id >> (8 * byte)) & 0xffu;
      hash *= 1099511628211ull;
    }
  };
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const std::size_t p = i * side + j;
      if (i + 1 < side && signs[p] * signs[p + side] <= 0) flag(2 * p);
      if (j + 1 < side && signs[p] * signs[p + 1] <= 0) flag(2 * p + 1);
    }
  }
  out.signature = out.edges == 0 ? 0 : hash;
  return out;
}

std::vector<OracleWall> sampling_oracle(const MukaiVector& v, const SliceParams& slice,
                                        const Region& region, std::size_t grid,
                                        const Integer& search_bound) {
  if (search_bound <= 0) throw ValidationError("search bound must be positive");
  const OracleGrid oracle(v, slice, region, grid);
  const NSLattice& lat = slice.lattice();
  std::map<std::uint64_t, OracleWall> walls;
  for_each_in_box(lat.rank() + 2, search_bound, [&](const MukaiVector& w) {
    if (!admissible_partner(v, w, lat)) return;
    OracleWall f = oracle.footprint(w);
    if (f.edges == 0) return;
    const auto it = walls.find(f.signature);
    if (it == walls.end()) {
      walls.emplace(f.signature, std::move(f));
    } else if (representative_less(w, it->second.representative)) {
      it->second.representative = w;
    }
  });
  std::vector<OracleWall> out;
  for (auto& [sig, wall] : walls) out.push_back(std::move(wall));
  return out;
}

std::string to_string(WallRelation r) {
  switch (r) {
    case WallRelation::NESTED: return "NESTED";
    case WallRelation::DISJOINT: return "DISJOINT";
    case WallRelation::TOUCHING: return "TOUCHING";
    case WallRelation::CROSSING: return "CROSSING";
  }
  return "?";
}

WallRelation wall_relation(const WallLocus& x, const WallLocus& y) {
  const bool xs = x.kind == WallKind::SEMICIRCLE;
  const bool ys = y.kind == WallKind::SEMICIRCLE;
  const bool xv = x.kind == WallKind::VERTICAL_LINE;
  const bool yv = y.kind == WallKind::VERTICAL_LINE;
  if (!(xs || xv) || !(ys || yv)) return WallRelation::DISJOINT;
  if (xv && yv) return x.center == y.center ? WallRelation::CROSSING : WallRelation::DISJOINT;
  if (xv || yv) {
    const WallLocus& line = xv ? x : y;
    const WallLocus& circle = xv ? y : x;
    const Rational diff = line.center - circle.center;
    const int c = cmp(Rational(diff * diff), circle.radius2);
    if (c > 0) return WallRelation::DISJOINT;
    if (c == 0) return WallRelation::TOUCHING;
    return WallRelation::CROSSING;
  }
  // Two circles with radii R1, R2 and center distance d; r1, r2 are the
  // squared radii.
  const Rational diff = x.center - y.center;
  const Rational d2 = diff * diff;
  const Rational& r1 = x.radius2;
  const Rational& r2 = y.radius2;
  const Rational four = 4 * r1 * r2;
  // nested: d <= |R1 - R2|  <=>  2 R1 R2 <= r1 + r2 - d^2
  const Rational inner = r1 + r2 - d2;
  if (inner >= 0) {
    const int c = cmp(Rational(inner * inner), four);
    if (c > 0) return WallRelation::NESTED;
    if (c == 0) return WallRelation::TOUCHING;
  }
  // disjoint: d >= R1 + R2  <=>  d^2 - r1 - r2 >= 2 R1 R2
  const Rational outer = d2 - r1 - r2;
  if (outer >= 0) {
    const int c = cmp(Rational(outer * outer), four);
    if (c > 0) return WallRelation::DISJOINT;
    if (c == 0) return WallRelation::TOUCHING;
  }
  return WallRelation::CROSSING;
}

NestingReport nesting_check(const std::vector<WallLocus>& walls) {
  NestingReport report;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      const WallRelation r = wall_relation(walls[i], walls[j]);
      ++report.pairs_checked;
      if (r == WallRelation::TOUCHING || r == WallRelation::CROSSING) {
        report.findings.push_back({i, j, r});
      }
      if (r == WallRelation::CROSSING) ++report.violations;
    }
  }
  return report;
}

}  // namespace bridgeland
