#pragma once

#include <string>
#include <vector>

#include "bridgeland/charge.hpp"
#include "bridgeland/numeric.hpp"

namespace bridgeland {

struct CategoryObject {
  std::string id;
  IntegerVector cls;
};

// sub is a subobject of ambient with cokernel quotient.
struct SubobjectEdge {
  std::string sub;
  std::string ambient;
  std::string quotient;
};

// Finite abelian category given by its objects and subobject lattices. The
// edges 0 < X (quotient X) and X < X (quotient 0) are implicit.
struct CategoryPresentation {
  std::vector<CategoryObject> objects;
  std::vector<SubobjectEdge> edges;
  std::string zero;
};

struct Filtration {
  std::vector<std::string> steps;            // 0 = A_0 < A_1 < ... < A_n = A
  std::vector<std::string> factor_ids;       // quotient objects A_{i+1}/A_i
  std::vector<IntegerVector> factor_classes;
  std::vector<std::string> diagnostics;      // tie-breaks that fired
};

// Empty iff the presentation is consistent and every nonzero object has a
// charge in the upper half plane union the negative reals.
std::vector<std::string> validate(const CategoryPresentation& cat, const ChargeRow& charge);

// No strict nonzero subobject of larger phase. Throws ValidationError on an
// unknown or zero id.
bool is_semistable(const CategoryPresentation& cat, const ChargeRow& charge, const std::string& a);

// Greedy maximal destabilizing chain: maximal phase of C/A_i, then maximal
// under inclusion, then smallest id (reported). Throws ValidationError on an
// invalid presentation and ComputationError when the result is not an HN
// filtration.
Filtration hn_filtration(const CategoryPresentation& cat, const ChargeRow& charge,
                         const std::string& a);

// Factor classes of a maximal chain of subobjects on the ray of Z(a), in
// chain order. Every maximal chain is enumerated; ComputationError when two
// chains give different multisets. ValidationError when a is not semistable.
std::vector<IntegerVector> jh_factors(const CategoryPresentation& cat, const ChargeRow& charge,
                                      const std::string& a);

// Violations of phi(B) <= phi(A) <=> phi(C) >= phi(A) and its mirror, over
// all edges with nonzero terms.
std::vector<std::string> seesaw_check(const CategoryPresentation& cat, const ChargeRow& charge);

}  // namespace bridgeland
