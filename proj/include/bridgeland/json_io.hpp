#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bridgeland/charge.hpp"
#include "bridgeland/hn.hpp"
#include "bridgeland/mukai.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland {

using Json = nlohmann::json;

// Rationals are always strings; integers in input may also be JSON numbers.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntegerVector& v);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const GaussianRational& z);
Json to_json(const MukaiVector& v);
Json to_json(const NSLattice& lattice);
Json to_json(const WallLocus& wall);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntegerVector integer_vector_from_json(const Json& j);
RationalVector rational_vector_from_json(const Json& j);
IntegerMatrix integer_matrix_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);

// {"gram": [[...]], "ample": [...], "k3": true, "todd": {"ch0", "ch1", "ch2"}}.
NSLattice lattice_from_json(const Json& j);

// Mukai vectors as "r,c...,s" strings or coordinate arrays.
MukaiVector mukai_from_json(const Json& j, const NSLattice& lattice);

// {"objects": [{"id", "class"}], "edges": [{"sub", "ambient", "quotient"}], "zero"}.
CategoryPresentation category_from_json(const Json& j);

// {"row": [{"re", "im"} or ["re", "im"], ...]}, or {"lattice", "beta", "omega"}.
ChargeRow charge_row_from_json(const Json& j);

// Inverse of to_json(WallLocus); the lattice is needed to read v and w.
WallLocus wall_from_json(const Json& j, const NSLattice& lattice);

// Parses a file; ValidationError with the path on failure.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& what);

}  // namespace bridgeland
