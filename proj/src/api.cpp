#include "bridgeland/api.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "bridgeland/charge.hpp"
#include "bridgeland/error.hpp"
#include "bridgeland/hn.hpp"
#include "bridgeland/mmp.hpp"
#include "bridgeland/mukai.hpp"
#include "bridgeland/support.hpp"
#include "bridgeland/svg.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland {

namespace {

using Handler = Response (*)(const Request&);

const std::string* find_option(const Request& req, const std::string& name) {
  const auto it = req.options.find(name);
  return it == req.options.end() ? nullptr : &it->second;
}

const std::string& option(const Request& req, const std::string& name) {
  const std::string* value = find_option(req, name);
  if (value == nullptr) throw ValidationError("missing --" + name);
  return *value;
}

std::string option_or(const Request& req, const std::string& name, const std::string& fallback) {
  const std::string* value = find_option(req, name);
  return value == nullptr ? fallback : *value;
}

const Json& document(const Request& req, const std::string& name) {
  const auto it = req.documents.find(name);
  if (it == req.documents.end()) throw ValidationError("missing --" + name);
  return it->second;
}

NSLattice lattice_of(const Request& req) { return lattice_from_json(document(req, "lattice")); }

RationalVector zeros(std::size_t n) { return RationalVector(n, Rational(0)); }

ChargeParams params_of(const Request& req, const NSLattice& lattice) {
  const std::string* beta = find_option(req, "beta");
  return ChargeParams(lattice, beta ? parse_rational_list(*beta) : zeros(lattice.rank()),
                      parse_rational_list(option(req, "omega")));
}

std::pair<Rational, Rational> parse_range(const std::string& text, const std::string& name) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ValidationError("--" + name + " must be lo:hi");
  const Rational lo = parse_rational(text.substr(0, colon));
  const Rational hi = parse_rational(text.substr(colon + 1));
  if (lo > hi) throw ValidationError("--" + name + " range is empty");
  return {lo, hi};
}

Integer integer_option(const Request& req, const std::string& name, long fallback) {
  const std::string* value = find_option(req, name);
  return value == nullptr ? Integer(fallback) : parse_integer(*value);
}

long small_option(const Request& req, const std::string& name, long fallback, long lo, long hi) {
  const Integer value = integer_option(req, name, fallback);
  if (value < lo || value > hi) {
    throw ValidationError("--" + name + " must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
  return value.get_si();
}

std::uint64_t budget_of(const Request& req) {
  const std::string* value = find_option(req, "budget");
  if (value == nullptr) return default_budget();
  const Integer b = parse_integer(*value);
  if (b <= 0 || !mpz_fits_ulong_p(b.get_mpz_t())) throw ValidationError("--budget out of range");
  return b.get_ui();
}

Json coords_json(const Coords2& x) { return Json::array({to_string(x[0]), to_string(x[1])}); }

Json matrix_json(const IntegerMatrix& m) { return to_json(to_rational(m)); }

// ---------------------------------------------------------------- commands

Response cmd_pairing(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const MukaiVector v = parse_mukai(option(req, "v"), lat);
  const MukaiVector w = parse_mukai(option(req, "w"), lat);
  const Integer value = mukai_pairing(v, w, lat);
  Response r;
  r.json = {{"value", to_string(value)}, {"euler", to_string(euler_pairing(v, w, lat))}};
  r.summary = "(v, w) = " + to_string(value);
  return r;
}

Response cmd_charge(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const ChargeParams params = params_of(req, lat);
  const MukaiVector v = parse_mukai(option(req, "v"), lat);
  const GaussianRational z = central_charge(v, params);
  const ChernCharacter ch = chern_of(v, lat);
  Response r;
  r.json = {{"z", to_json(z)},
            {"phase_valid", phase_valid(z)},
            {"heart_backed", params.heart_backed()},
            {"bogomolov_discriminant", to_string(bogomolov_discriminant(ch, params.beta(), lat))}};
  if (ch.ch0 >= 0) r.json["slope"] = to_string(slope(ch, params));
  r.summary = "Z(v) = " + to_string(z);
  return r;
}

GaussianRational gaussian_option(const Request& req, const std::string& name) {
  return gaussian_from_json(Json(option(req, name)));
}

Response cmd_phase_compare(const Request& req) {
  GaussianRational z1;
  GaussianRational z2;
  if (find_option(req, "z1") != nullptr || find_option(req, "z2") != nullptr) {
    z1 = gaussian_option(req, "z1");
    z2 = gaussian_option(req, "z2");
  } else {
    const NSLattice lat = lattice_of(req);
    const ChargeParams params = params_of(req, lat);
    z1 = central_charge(parse_mukai(option(req, "v"), lat), params);
    z2 = central_charge(parse_mukai(option(req, "w"), lat), params);
  }
  const Comparison c = phase_compare(z1, z2);
  Response r;
  r.json = {{"z1", to_json(z1)}, {"z2", to_json(z2)}, {"result", to_string(c)}};
  r.summary = "phase(z1) " + to_string(c) + " phase(z2)";
  return r;
}

Response cmd_heart(const Request& req) {
  std::vector<ExtendedRational> slopes;
  if (const std::string* text = find_option(req, "slopes")) {
    std::stringstream ss(*text);
    std::string item;
    while (std::getline(ss, item, ',')) slopes.push_back(parse_extended(item));
  } else {
    const NSLattice lat = lattice_of(req);
    const ChargeParams params = params_of(req, lat);
    slopes.push_back(slope(chern_of(parse_mukai(option(req, "v"), lat), lat), params));
  }
  const SlopeProfile profile(slopes);
  const HeartPosition p = heart_position(profile);
  Json js = Json::array();
  for (const ExtendedRational& s : profile.slopes()) js.push_back(to_string(s));
  Response r;
  r.json = {{"slopes", js}, {"position", to_string(p)}};
  r.summary = to_string(p);
  return r;
}

Json filtration_json(const Filtration& f, const ChargeRow& z) {
  Json factors = Json::array();
  for (std::size_t i = 0; i < f.factor_ids.size(); ++i) {
    factors.push_back({{"id", f.factor_ids[i]},
                       {"class", to_json(f.factor_classes[i])},
                       {"charge", to_json(evaluate(z, f.factor_classes[i]))}});
  }
  return {{"steps", f.steps}, {"factors", factors}, {"diagnostics", f.diagnostics}};
}

Response cmd_hn(const Request& req) {
  const CategoryPresentation cat = category_from_json(document(req, "category"));
  const ChargeRow z = charge_row_from_json(document(req, "charge"));
  const std::string& object = option(req, "object");
  const Filtration f = hn_filtration(cat, z, object);
  const bool semistable = f.factor_ids.size() == 1;
  Response r;
  r.json = {{"object", object},
            {"filtration", filtration_json(f, z)},
            {"semistable", semistable},
            {"seesaw_violations", seesaw_check(cat, z)}};
  if (semistable) {
    Json jh = Json::array();
    for (const IntegerVector& c : jh_factors(cat, z, object)) jh.push_back(to_json(c));
    r.json["jh_factors"] = jh;
  }
  r.summary = object + ": " + std::to_string(f.factor_ids.size()) + " HN factor(s)";
  return r;
}

std::vector<IntegerVector> support_classes(const Request& req, std::size_t n) {
  std::vector<IntegerVector> out;
  if (const std::string* text = find_option(req, "classes")) {
    std::stringstream ss(*text);
    std::string item;
    while (std::getline(ss, item, ';')) {
      IntegerVector c = parse_integer_list(item);
      if (c.size() != n) throw ValidationError("class " + item + " has the wrong length");
      out.push_back(std::move(c));
    }
    return out;
  }
  const long count = small_option(req, "count", 200, 0, 100000);
  const long box = small_option(req, "box", 5, 1, 1000000);
  std::mt19937_64 rng(parse_integer(option_or(req, "seed", "0")).get_ui());
  const unsigned long width = static_cast<unsigned long>(2 * box + 1);
  while (static_cast<long>(out.size()) < count) {
    IntegerVector c(n);
    for (Integer& x : c) x = static_cast<long>(rng() % width) - box;
    if (!is_zero(c)) out.push_back(std::move(c));
  }
  return out;
}

Response cmd_support(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const ChargeParams params = params_of(req, lat);
  const ChargeRow z = charge_row(params);
  const QuadraticForm form = to_rational(mukai_gram(lat));
  const ChargeKernel kernel = charge_kernel(z, form);
  const RationalMatrix s = charge_norm_form(z, kernel, form);

  Json basis = Json::array();
  std::vector<RationalVector> kb;
  for (const IntegerVector& k : kernel.basis) {
    basis.push_back(to_json(k));
    kb.push_back(to_rational(k));
  }
  Response r;
  r.json["kernel"] = {{"basis", basis}, {"gram", to_json(restrict_form(form, kb))}};
  r.json["S"] = to_json(s);

  RootNormOptions opts;
  opts.budget = budget_of(req);
  const RootNormResult root = min_root_norm(z, kernel, s, form, opts);
  Json jr = {{"found", root.found},
             {"bound_reached", to_string(root.bound_reached)},
             {"points_visited", root.points_visited}};
  if (root.found) {
    jr["c2"] = to_string(root.c2);
    jr["witness"] = to_json(root.witness);
  }
  r.json["min_root_norm"] = jr;
  if (!root.found) {
    r.summary = "no root found within the budget";
    return r;
  }

  const QuadraticForm qz = build_Q_Z(z, s, form, root.c2);
  r.json["Q_Z"] = to_json(qz);
  r.json["Q_Z_negative_definite_on_kernel"] = is_negative_definite_on(qz, kernel.basis);
  const std::vector<IntegerVector> classes = support_classes(req, lat.rank() + 2);
  const RoundtripReport rt = equivalent_support_roundtrip(qz, z, classes);
  std::size_t skipped = 0;
  Json failures = Json::array();
  for (const RoundtripVerdict& v : rt.classes) {
    if (v.skipped) ++skipped;
    else if (!v.pass) failures.push_back(to_json(v.v));
  }
  r.json["roundtrip"] = {{"K", to_string(rt.k)},
                         {"C2", to_string(rt.c2)},
                         {"classes", rt.classes.size()},
                         {"skipped", skipped},
                         {"failures", failures},
                         {"pass", rt.pass()}};
  r.summary = "C^2 = " + to_string(root.c2) + ", roundtrip " + (rt.pass() ? "passes" : "fails");
  return r;
}

Region region_of(const Request& req) {
  const auto [b0, b1] = parse_range(option(req, "b"), "b");
  const auto [t0, t1] = parse_range(option(req, "t"), "t");
  Region region{b0, b1, t0, t1};
  check_region(region);
  return region;
}

Json region_json(const Region& r) {
  return {{"b", {to_string(r.b_min), to_string(r.b_max)}}, {"t", {to_string(r.t_min), to_string(r.t_max)}}};
}

SliceParams slice_of(const Request& req, const NSLattice& lat) {
  const std::string* beta0 = find_option(req, "beta0");
  return SliceParams(lat, beta0 ? parse_rational_list(*beta0) : zeros(lat.rank()));
}

Response cmd_walls(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const SliceParams slice = slice_of(req, lat);
  const MukaiVector v = parse_mukai(option(req, "v"), lat);
  const Region region = region_of(req);
  const Integer bound = integer_option(req, "bound", 8);
  const std::vector<WallLocus> walls = enumerate_walls(v, slice, region, bound);

  Json jw = Json::array();
  for (std::size_t i = 0; i < walls.size(); ++i) {
    Json w = to_json(walls[i]);
    w["id"] = i;
    w["status"] = "potential";
    jw.push_back(w);
  }
  const NestingReport nest = nesting_check(walls);
  Json findings = Json::array();
  for (const NestingFinding& f : nest.findings) {
    findings.push_back({{"first", f.first}, {"second", f.second}, {"relation", to_string(f.relation)}});
  }
  Response r;
  r.json = {{"lattice", to_json(lat)},
            {"v", to_json(v)},
            {"beta0", to_json(slice.beta0())},
            {"region", region_json(region)},
            {"search_bound", to_string(bound)},
            {"walls", jw},
            {"nesting",
             {{"pairs_checked", nest.pairs_checked},
              {"violations", nest.violations},
              {"findings", findings}}}};

  if (find_option(req, "grid") != nullptr) {
    const long grid = small_option(req, "grid", 400, 1, 4000);
    const std::vector<OracleWall> oracle =
        sampling_oracle(v, slice, region, static_cast<std::size_t>(grid), bound);
    const OracleGrid g(v, slice, region, static_cast<std::size_t>(grid));
    std::set<std::uint64_t> enumerated;
    std::size_t invisible = 0;
    for (const WallLocus& w : walls) {
      const OracleWall f = g.footprint(w.w);
      if (f.edges == 0) ++invisible;
      else enumerated.insert(f.signature);
    }
    std::set<std::uint64_t> sampled;
    for (const OracleWall& o : oracle) sampled.insert(o.signature);
    r.json["oracle"] = {{"grid", grid},
                        {"oracle_walls", oracle.size()},
                        {"enumerated_walls", walls.size()},
                        {"below_grid_resolution", invisible},
                        {"agree", sampled == enumerated && invisible == 0 &&
                                      enumerated.size() == walls.size()}};
  }
  r.summary = std::to_string(walls.size()) + " potential wall(s), " +
              std::to_string(nest.violations) + " nesting violation(s)";
  return r;
}

std::vector<WallLocus> walls_of(const Json& doc) {
  const NSLattice lat = lattice_from_json(doc.at("lattice"));
  std::vector<WallLocus> out;
  for (const Json& w : doc.at("walls")) out.push_back(wall_from_json(w, lat));
  return out;
}

const Json& walls_document(const Request& req) {
  const Json& doc = document(req, "walls");
  if (!doc.is_object() || !doc.contains("walls") || !doc.contains("lattice")) {
    throw ValidationError("--walls must be the output of the walls command");
  }
  return doc;
}

Response cmd_chambers(const Request& req) {
  const Json& doc = walls_document(req);
  const std::vector<WallLocus> walls = walls_of(doc);
  const Rational b = parse_rational(option(req, "b"));
  const auto [t0, t1] = parse_range(option(req, "t"), "t");
  const ChamberPath path = chambers_along_path(b, t0, t1, walls);

  Json crossings = Json::array();
  Json chambers = Json::array();
  std::string lower = to_string(t0);
  for (const Crossing& c : path.crossings) {
    crossings.push_back({{"t2", to_string(c.t2)},
                         {"t", c.t_exact},
                         {"t_decimal", c.t_decimal},
                         {"walls", c.walls}});
    chambers.push_back({lower, c.t_exact});
    lower = c.t_exact;
  }
  chambers.push_back({lower, to_string(t1)});
  Response r;
  r.json = {{"b", to_string(b)},
            {"t", {to_string(t0), to_string(t1)}},
            {"crossings", crossings},
            {"chambers", chambers},
            {"on_walls", path.on_walls},
            {"top_is_large_volume", path.top_is_large_volume}};
  r.summary = std::to_string(path.crossings.size()) + " crossing(s), " +
              std::to_string(chambers.size()) + " chamber(s)";
  return r;
}

Response cmd_plot(const Request& req) {
  const Json& doc = walls_document(req);
  const std::vector<WallLocus> walls = walls_of(doc);
  Region view;
  if (find_option(req, "b") != nullptr || find_option(req, "t") != nullptr) {
    view = region_of(req);
  } else {
    const Json& reg = doc.at("region");
    view = {rational_from_json(reg.at("b")[0]), rational_from_json(reg.at("b")[1]),
            rational_from_json(reg.at("t")[0]), rational_from_json(reg.at("t")[1])};
  }
  PlotOptions opts;
  opts.comment = "walls for v = " + doc.at("v").get<std::string>();
  Response r;
  r.text = plot_walls(walls, view, opts);
  r.json = {{"walls", walls.size()}};
  r.summary = "plotted " + std::to_string(walls.size()) + " wall(s)";
  return r;
}

Response cmd_nef(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const ChargeParams params = params_of(req, lat);
  const MukaiVector v = parse_mukai(option(req, "v"), lat);
  const ModuliDimension dim = moduli_dimension(v, lat);
  const OmegaClass omega = omega_class(v, charge_row(params), lat);
  const Rational q = bb_square(omega, lat);
  Response r;
  r.json = {{"v", to_json(v)},
            {"omega_class", to_json(omega.coords)},
            {"bb_square", to_string(q)},
            {"omega_zero", is_zero(omega.coords)},
            {"heart_backed", params.heart_backed()},
            {"moduli_dimension",
             {{"dimension", to_string(dim.dimension)},
              {"rigid", dim.rigid},
              {"isotropic", dim.isotropic}}}};
  r.summary = "q(Omega) = " + to_string(q) + ", dim = " + to_string(dim.dimension);
  return r;
}

Response cmd_classify_wall(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const SliceParams slice = slice_of(req, lat);
  const MukaiVector v = parse_mukai(option(req, "v"), lat);
  const MukaiVector w = parse_mukai(option(req, "w"), lat);
  std::optional<SlicePoint> point;
  if (const std::string* p = find_option(req, "point")) point = parse_slice_point(*p);
  WallReportOptions opts;
  if (find_option(req, "bound") != nullptr) opts.root_bound = integer_option(req, "bound", 0);
  opts.max_m = static_cast<int>(small_option(req, "max-m", 3, 1, 8));
  opts.box = integer_option(req, "box", 10);
  const WallReport rep = wall_report(v, w, slice, point, opts);

  Json basis = Json::array();
  for (const MukaiVector& b : rep.hw.basis) basis.push_back(to_json(b));
  Json roots = Json::array();
  for (const Coords2& x : rep.roots) {
    roots.push_back({{"coords", coords_json(x)}, {"class", to_json(from_coordinates(rep.hw, x))}});
  }
  Json iso = Json::array();
  for (const Coords2& x : rep.isotropic) {
    iso.push_back({{"coords", coords_json(x)}, {"class", to_json(from_coordinates(rep.hw, x))}});
  }
  Json decs = Json::array();
  for (const Decomposition& d : rep.decompositions) {
    Json parts = Json::array();
    for (const Coords2& a : d.parts) parts.push_back(coords_json(a));
    decs.push_back({{"parts", parts}, {"m", d.parts.size()}, {"slack", to_string(d.slack)}});
  }
  Response r;
  r.json = {{"wall", to_json(rep.wall)},
            {"hw", {{"basis", basis}, {"gram", matrix_json(rep.hw.gram2)}}},
            {"v_coords", coords_json(rep.v_coords)},
            {"w_coords", coords_json(rep.w_coords)},
            {"root_bound", to_string(rep.root_bound)},
            {"roots", roots},
            {"isotropic", iso},
            {"decompositions", decs},
            {"decomposition_box", to_string(opts.box)},
            {"ray_filter", rep.ray_filter},
            {"classification_hints",
             {{"has_root", rep.has_root},
              {"has_isotropic", rep.has_isotropic},
              {"admits_totally_semistable_candidate", rep.admits_totally_semistable_candidate},
              {"advisory", true}}}};
  r.summary = std::to_string(rep.roots.size()) + " root(s), " +
              std::to_string(rep.isotropic.size()) + " isotropic ray(s), " +
              std::to_string(rep.decompositions.size()) + " decomposition(s)";
  return r;
}

Response cmd_lagrangian(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const MukaiVector v = parse_mukai(option(req, "v"), lat);
  const Integer bound = integer_option(req, "bound", 3);
  const std::vector<MukaiVector> found = lagrangian_candidates(v, lat, bound);
  Json list = Json::array();
  for (const MukaiVector& u : found) list.push_back(to_json(u));
  Response r;
  r.json = {{"v", to_json(v)},
            {"v_square", to_string(mukai_square(v, lat))},
            {"bound", to_string(bound)},
            {"candidates", list}};
  r.summary = std::to_string(found.size()) + " candidate(s)";
  return r;
}

Json polynomial_json(const Polynomial& p) { return to_json(static_cast<const RationalVector&>(p)); }

Response cmd_gieseker(const Request& req) {
  const NSLattice lat = lattice_of(req);
  const ChargeParams params = params_of(req, lat);
  const ChernCharacter cv = chern_of(parse_mukai(option(req, "v"), lat), lat);
  const ChernCharacter cw = chern_of(parse_mukai(option(req, "w"), lat), lat);
  const Polynomial pv = hilbert_polynomial(cv, params);
  const Polynomial pw = hilbert_polynomial(cw, params);
  const Comparison g = gieseker_compare(pv, pw);
  Response r;
  r.json = {{"hilbert_v", polynomial_json(pv)},
            {"hilbert_w", polynomial_json(pw)},
            {"gieseker", to_string(g)}};
  if (pv.size() == 3 && pw.size() == 3 && pv[2] > 0 && pw[2] > 0 && pv[1] > 0 && pw[1] > 0) {
    const Integer n = large_volume_threshold(pv, pw);
    const Comparison lv =
        phase_compare(large_volume_phase(pv, Rational(n)), large_volume_phase(pw, Rational(n)));
    r.json["threshold"] = to_string(n);
    r.json["large_volume"] = to_string(lv);
  }
  r.summary = "Gieseker: " + to_string(g);
  return r;
}

struct CommandInfo {
  Handler handler;
  std::vector<std::string> options;
};

const std::map<std::string, CommandInfo>& registry() {
  static const std::map<std::string, CommandInfo> table = {
      {"pairing", {cmd_pairing, {"lattice", "v", "w"}}},
      {"charge", {cmd_charge, {"lattice", "v", "beta", "omega"}}},
      {"phase-compare", {cmd_phase_compare, {"z1", "z2", "lattice", "v", "w", "beta", "omega"}}},
      {"heart", {cmd_heart, {"slopes", "lattice", "v", "beta", "omega"}}},
      {"hn", {cmd_hn, {"category", "charge", "object"}}},
      {"support",
       {cmd_support, {"lattice", "beta", "omega", "budget", "classes", "count", "box", "seed"}}},
      {"walls", {cmd_walls, {"lattice", "v", "beta0", "b", "t", "bound", "grid"}}},
      {"chambers", {cmd_chambers, {"walls", "b", "t"}}},
      {"plot", {cmd_plot, {"walls", "b", "t"}}},
      {"nef", {cmd_nef, {"lattice", "v", "beta", "omega"}}},
      {"classify-wall",
       {cmd_classify_wall, {"lattice", "v", "w", "beta0", "point", "bound", "max-m", "box"}}},
      {"lagrangian", {cmd_lagrangian, {"lattice", "v", "bound"}}},
      {"gieseker", {cmd_gieseker, {"lattice", "v", "w", "beta", "omega"}}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, info] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& command_options(const std::string& command) {
  const auto it = registry().find(command);
  if (it == registry().end()) throw ValidationError("unknown command " + command);
  return it->second.options;
}

bool is_document_option(const std::string& option) {
  return option == "lattice" || option == "category" || option == "charge" || option == "walls";
}

Response run_command(const std::string& command, const Request& request) {
  const auto it = registry().find(command);
  if (it == registry().end()) throw ValidationError("unknown command " + command);
  for (const auto& [name, value] : request.options) {
    const auto& allowed = it->second.options;
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      throw ValidationError(command + " does not take --" + name);
    }
  }
  return it->second.handler(request);
}

}  // namespace bridgeland
