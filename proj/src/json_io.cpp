#include "bridgeland/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bridgeland/error.hpp"

namespace bridgeland {

Json to_json(const Integer& x) { return to_string(x); }
Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const IntegerVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const GaussianRational& z) { return {{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const MukaiVector& v) { return format_mukai(v); }

Json to_json(const NSLattice& lattice) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) gram.push_back(to_json(lattice.gram().row(i)));
  Json out = {{"gram", gram}, {"ample", to_json(lattice.ample())}, {"k3", lattice.k3()}};
  const ChernCharacter& td = lattice.todd();
  out["todd"] = {{"ch0", to_json(td.ch0)}, {"ch1", to_json(td.ch1)}, {"ch2", to_json(td.ch2)}};
  return out;
}

Json to_json(const WallLocus& wall) {
  Json out = {
      {"v", to_json(wall.v)},
      {"w", to_json(wall.w)},
      {"kind", to_string(wall.kind)},
      {"coefficients", {to_json(wall.a), to_json(wall.b), to_json(wall.c), to_json(wall.d)}},
  };
  if (wall.kind == WallKind::SEMICIRCLE || wall.kind == WallKind::VERTICAL_LINE) {
    out["center"] = to_json(wall.center);
  }
  if (wall.kind == WallKind::SEMICIRCLE) {
    out["radius2"] = to_json(wall.radius2);
    out["radius_decimal"] = sqrt_decimal(wall.radius2, 30);
  }
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ValidationError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("expected a rational string, got " + j.dump());
}

IntegerVector integer_vector_from_json(const Json& j) {
  if (j.is_string()) return parse_integer_list(j.get<std::string>());
  if (!j.is_array()) throw ValidationError("expected an integer list, got " + j.dump());
  IntegerVector out;
  for (const Json& x : j) out.push_back(integer_from_json(x));
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (j.is_string()) return parse_rational_list(j.get<std::string>());
  if (!j.is_array()) throw ValidationError("expected a rational list, got " + j.dump());
  RationalVector out;
  for (const Json& x : j) out.push_back(rational_from_json(x));
  return out;
}

IntegerMatrix integer_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("expected a nonempty matrix");
  std::vector<IntegerVector> rows;
  for (const Json& row : j) rows.push_back(integer_vector_from_json(row));
  for (const IntegerVector& row : rows) {
    if (row.size() != rows.front().size()) throw ValidationError("ragged matrix");
  }
  return IntegerMatrix::from_rows(rows);
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object()) return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  if (j.is_string()) {
    const RationalVector parts = parse_rational_list(j.get<std::string>());
    if (parts.size() == 2) return {parts[0], parts[1]};
  }
  throw ValidationError("expected a complex number \"re,im\", got " + j.dump());
}

NSLattice lattice_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("lattice must be a JSON object");
  try {
    const bool k3 = j.value("k3", true);
    NSLattice lattice(integer_matrix_from_json(j.at("gram")), integer_vector_from_json(j.at("ample")),
                      k3);
    if (j.contains("todd")) {
      const Json& td = j.at("todd");
      lattice.set_todd({rational_from_json(td.at("ch0")), rational_vector_from_json(td.at("ch1")),
                        rational_from_json(td.at("ch2"))});
    }
    return lattice;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("lattice: ") + e.what());
  }
}

MukaiVector mukai_from_json(const Json& j, const NSLattice& lattice) {
  if (j.is_string()) return parse_mukai(j.get<std::string>(), lattice);
  MukaiVector v = MukaiVector::from_coords(integer_vector_from_json(j));
  check_dimension(v, lattice);
  return v;
}

CategoryPresentation category_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("category must be a JSON object");
  try {
    CategoryPresentation cat;
    cat.zero = j.at("zero").get<std::string>();
    for (const Json& o : j.at("objects")) {
      cat.objects.push_back({o.at("id").get<std::string>(), integer_vector_from_json(o.at("class"))});
    }
    if (j.contains("edges")) {
      for (const Json& e : j.at("edges")) {
        cat.edges.push_back({e.at("sub").get<std::string>(), e.at("ambient").get<std::string>(),
                             e.at("quotient").get<std::string>()});
      }
    }
    return cat;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("category: ") + e.what());
  }
}

ChargeRow charge_row_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("charge must be a JSON object");
  try {
    if (j.contains("row")) {
      ChargeRow row;
      for (const Json& z : j.at("row")) row.push_back(gaussian_from_json(z));
      return row;
    }
    const NSLattice lattice = lattice_from_json(j.at("lattice"));
    return charge_row(ChargeParams(lattice, rational_vector_from_json(j.at("beta")),
                                   rational_vector_from_json(j.at("omega"))));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("charge: ") + e.what());
  }
}

WallLocus wall_from_json(const Json& j, const NSLattice& lattice) {
  try {
    WallLocus wall;
    wall.v = mukai_from_json(j.at("v"), lattice);
    wall.w = mukai_from_json(j.at("w"), lattice);
    const Json& k = j.at("coefficients");
    if (!k.is_array() || k.size() != 4) throw ValidationError("wall needs four coefficients");
    wall.a = rational_from_json(k[0]);
    wall.b = rational_from_json(k[1]);
    wall.c = rational_from_json(k[2]);
    wall.d = rational_from_json(k[3]);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "SEMICIRCLE") {
      wall.kind = WallKind::SEMICIRCLE;
      wall.center = rational_from_json(j.at("center"));
      wall.radius2 = rational_from_json(j.at("radius2"));
    } else if (kind == "VERTICAL_LINE") {
      wall.kind = WallKind::VERTICAL_LINE;
      wall.center = rational_from_json(j.at("center"));
    } else if (kind == "EMPTY") {
      wall.kind = WallKind::EMPTY;
    } else if (kind == "DEGENERATE") {
      wall.kind = WallKind::DEGENERATE;
    } else {
      throw ValidationError("unknown wall kind " + kind);
    }
    return wall;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("wall: ") + e.what());
  }
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace bridgeland
