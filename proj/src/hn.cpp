#include "bridgeland/hn.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bridgeland/error.hpp"

namespace bridgeland {

namespace {

constexpr int kNone = -1;

struct Index {
  std::vector<std::string> ids;
  std::map<std::string, int> position;
  std::vector<IntegerVector> cls;
  std::vector<GaussianRational> z;
  // quotient[a][b]: the quotient of b < a, or kNone.
  std::vector<std::vector<int>> quotient;
  int zero = kNone;
  std::vector<std::string> problems;

  int lookup(const std::string& id) const {
    const auto it = position.find(id);
    if (it == position.end()) throw ValidationError("unknown object id '" + id + "'");
    return it->second;
  }
  bool contains(int ambient, int sub) const { return quotient[ambient][sub] != kNone; }
  bool is_zero_object(int x) const { return x == zero; }
};

std::string class_string(const IntegerVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

Index build_index(const CategoryPresentation& cat, const ChargeRow& charge) {
  Index idx;
  const std::size_t n = cat.objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    const CategoryObject& obj = cat.objects[i];
    if (!idx.position.emplace(obj.id, static_cast<int>(i)).second) {
      idx.problems.push_back("duplicate object id '" + obj.id + "'");
    }
    idx.ids.push_back(obj.id);
    idx.cls.push_back(obj.cls);
    if (obj.cls.size() != charge.size()) {
      idx.problems.push_back("object '" + obj.id + "' has a class of length " +
                             std::to_string(obj.cls.size()) + ", charge expects " +
                             std::to_string(charge.size()));
      idx.z.emplace_back();
    } else {
      idx.z.push_back(evaluate(charge, obj.cls));
    }
  }
  const auto zero_it = idx.position.find(cat.zero);
  if (zero_it == idx.position.end()) {
    idx.problems.push_back("zero object '" + cat.zero + "' is not listed");
    return idx;
  }
  idx.zero = zero_it->second;
  if (!is_zero(idx.cls[static_cast<std::size_t>(idx.zero)])) {
    idx.problems.push_back("zero object '" + cat.zero + "' has a nonzero class");
  }

  idx.quotient.assign(n, std::vector<int>(n, kNone));
  for (std::size_t x = 0; x < n; ++x) {
    idx.quotient[x][x] = idx.zero;
    idx.quotient[x][static_cast<std::size_t>(idx.zero)] = static_cast<int>(x);
  }
  for (const SubobjectEdge& e : cat.edges) {
    const auto s = idx.position.find(e.sub);
    const auto a = idx.position.find(e.ambient);
    const auto q = idx.position.find(e.quotient);
    if (s == idx.position.end() || a == idx.position.end() || q == idx.position.end()) {
      idx.problems.push_back("edge " + e.sub + " < " + e.ambient + " / " + e.quotient +
                             " references an unknown id");
      continue;
    }
    int& slot = idx.quotient[static_cast<std::size_t>(a->second)][static_cast<std::size_t>(s->second)];
    const bool implicit = s->second == a->second || s->second == idx.zero;
    if (slot != kNone && slot != q->second) {
      idx.problems.push_back(implicit ? "edge " + e.sub + " < " + e.ambient + " has quotient '" +
                                            e.quotient + "', expected '" + idx.ids[static_cast<std::size_t>(slot)] + "'"
                                      : "two edges " + e.sub + " < " + e.ambient +
                                            " with different quotients");
      continue;
    }
    slot = q->second;
  }
  return idx;
}

std::vector<std::string> check_index(const Index& idx) {
  std::vector<std::string> out = idx.problems;
  if (idx.zero == kNone) return out;
  const std::size_t n = idx.ids.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int q = idx.quotient[a][b];
      if (q == kNone) continue;
      const std::string edge = idx.ids[b] + " < " + idx.ids[a];
      const IntegerVector& ca = idx.cls[a];
      const IntegerVector& cb = idx.cls[b];
      const IntegerVector& cq = idx.cls[static_cast<std::size_t>(q)];
      if (ca.size() == cb.size() && ca.size() == cq.size()) {
        for (std::size_t k = 0; k < ca.size(); ++k) {
          if (ca[k] != cb[k] + cq[k]) {
            out.push_back("additivity fails on " + edge + ": class " + class_string(ca) +
                          " != " + class_string(cb) + " + " + class_string(cq));
            break;
          }
        }
      }
      if (a != b && idx.quotient[b][a] != kNone) {
        if (a < b) out.push_back("antisymmetry fails: " + idx.ids[a] + " and " + idx.ids[b] +
                                 " are subobjects of each other");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (idx.quotient[b][c] != kNone && idx.quotient[a][c] == kNone) {
          out.push_back("transitivity fails: " + idx.ids[c] + " < " + idx.ids[b] + " < " +
                        idx.ids[a] + " but no edge " + idx.ids[c] + " < " + idx.ids[a]);
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (static_cast<int>(x) == idx.zero) continue;
    if (!phase_valid(idx.z[x])) {
      out.push_back("object '" + idx.ids[x] + "' has charge " + to_string(idx.z[x]) +
                    " outside the upper half plane union the negative reals");
    }
  }
  return out;
}

Index checked_index(const CategoryPresentation& cat, const ChargeRow& charge) {
  Index idx = build_index(cat, charge);
  const std::vector<std::string> problems = check_index(idx);
  if (!problems.empty()) throw ValidationError("invalid presentation: " + problems.front());
  return idx;
}

int nonzero_lookup(const Index& idx, const std::string& id) {
  const int x = idx.lookup(id);
  if (x == idx.zero) throw ValidationError("object '" + id + "' is zero");
  return x;
}

bool semistable_at(const Index& idx, int a) {
  const std::size_t n = idx.ids.size();
  for (std::size_t b = 0; b < n; ++b) {
    const int bi = static_cast<int>(b);
    if (bi == a || bi == idx.zero || !idx.contains(a, bi)) continue;
    if (phase_compare(idx.z[b], idx.z[static_cast<std::size_t>(a)]) == Comparison::GT) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> validate(const CategoryPresentation& cat, const ChargeRow& charge) {
  return check_index(build_index(cat, charge));
}

bool is_semistable(const CategoryPresentation& cat, const ChargeRow& charge, const std::string& a) {
  const Index idx = checked_index(cat, charge);
  return semistable_at(idx, nonzero_lookup(idx, a));
}

Filtration hn_filtration(const CategoryPresentation& cat, const ChargeRow& charge,
                         const std::string& a_id) {
  const Index idx = checked_index(cat, charge);
  const int a = nonzero_lookup(idx, a_id);
  const std::size_t n = idx.ids.size();

  Filtration f;
  f.steps.push_back(idx.ids[static_cast<std::size_t>(idx.zero)]);
  int current = idx.zero;
  while (current != a) {
    // Candidates current < C <= A.
    std::vector<int> best;
    GaussianRational best_z;
    for (std::size_t c = 0; c < n; ++c) {
      const int ci = static_cast<int>(c);
      if (ci == current || !idx.contains(a, ci) || !idx.contains(ci, current)) continue;
      const GaussianRational zc = idx.z[c] - idx.z[static_cast<std::size_t>(current)];
      if (best.empty()) {
        best = {ci};
        best_z = zc;
        continue;
      }
      const Comparison cmp_phase = phase_compare(zc, best_z);
      if (cmp_phase == Comparison::GT) {
        best = {ci};
        best_z = zc;
      } else if (cmp_phase == Comparison::EQ) {
        best.push_back(ci);
      }
    }
    if (best.empty()) throw ComputationError("no subobject extends the filtration");
    std::vector<int> maximal;
    for (int c : best) {
      const bool dominated = std::any_of(best.begin(), best.end(), [&](int d) {
        return d != c && idx.contains(d, c);
      });
      if (!dominated) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end(), [&](int x, int y) {
      return idx.ids[static_cast<std::size_t>(x)] < idx.ids[static_cast<std::size_t>(y)];
    });
    if (maximal.size() > 1) {
      std::string names;
      for (int c : maximal) names += (names.empty() ? "" : ", ") + idx.ids[static_cast<std::size_t>(c)];
      f.diagnostics.push_back("several maximal destabilizers {" + names + "} above '" +
                              idx.ids[static_cast<std::size_t>(current)] + "'; chose '" +
                              idx.ids[static_cast<std::size_t>(maximal.front())] + "'");
    }
    const int next = maximal.front();
    const int q = idx.quotient[static_cast<std::size_t>(next)][static_cast<std::size_t>(current)];
    f.steps.push_back(idx.ids[static_cast<std::size_t>(next)]);
    f.factor_ids.push_back(idx.ids[static_cast<std::size_t>(q)]);
    f.factor_classes.push_back(idx.cls[static_cast<std::size_t>(q)]);
    current = next;
  }

  for (std::size_t i = 0; i < f.factor_ids.size(); ++i) {
    const int q = idx.lookup(f.factor_ids[i]);
    if (!semistable_at(idx, q)) {
      throw ComputationError("HN factor '" + f.factor_ids[i] + "' is not semistable");
    }
    if (i > 0) {
      const int p = idx.lookup(f.factor_ids[i - 1]);
      if (phase_compare(idx.z[static_cast<std::size_t>(p)], idx.z[static_cast<std::size_t>(q)]) !=
          Comparison::GT) {
        throw ComputationError("HN factor phases do not strictly decrease at step " +
                               std::to_string(i + 1));
      }
    }
  }
  return f;
}

std::vector<IntegerVector> jh_factors(const CategoryPresentation& cat, const ChargeRow& charge,
                                      const std::string& a_id) {
  const Index idx = checked_index(cat, charge);
  const int a = nonzero_lookup(idx, a_id);
  if (!semistable_at(idx, a)) throw ValidationError("object '" + a_id + "' is not semistable");
  const std::size_t n = idx.ids.size();
  const GaussianRational za = idx.z[static_cast<std::size_t>(a)];

  std::vector<int> ray;  // nonzero subobjects of A on the ray of Z(A)
  for (std::size_t c = 0; c < n; ++c) {
    const int ci = static_cast<int>(c);
    if (ci == idx.zero || !idx.contains(a, ci)) continue;
    if (phase_compare(idx.z[c], za) == Comparison::EQ) ray.push_back(ci);
  }
  std::sort(ray.begin(), ray.end(), [&](int x, int y) {
    return idx.ids[static_cast<std::size_t>(x)] < idx.ids[static_cast<std::size_t>(y)];
  });
  auto strictly_between = [&](int lo, int hi) {
    for (int m : ray) {
      if (m != lo && m != hi && idx.contains(hi, m) && idx.contains(m, lo)) return true;
    }
    return false;
  };

  std::vector<std::vector<IntegerVector>> chains;
  std::vector<IntegerVector> path;
  // Depth-first search over covering relations.
  auto dfs = [&](auto&& self, int current) -> void {
    if (current == a) {
      chains.push_back(path);
      return;
    }
    for (int next : ray) {
      if (next == current || !idx.contains(next, current) || strictly_between(current, next)) continue;
      const int q = idx.quotient[static_cast<std::size_t>(next)][static_cast<std::size_t>(current)];
      path.push_back(idx.cls[static_cast<std::size_t>(q)]);
      self(self, next);
      path.pop_back();
    }
  };
  dfs(dfs, idx.zero);
  if (chains.empty()) throw ComputationError("no maximal chain reaches '" + a_id + "'");

  auto sorted = [](std::vector<IntegerVector> xs) {
    std::sort(xs.begin(), xs.end(),
              [](const IntegerVector& x, const IntegerVector& y) { return lex_compare(x, y) < 0; });
    return xs;
  };
  const std::vector<IntegerVector> reference = sorted(chains.front());
  for (const auto& chain : chains) {
    if (sorted(chain) != reference) {
      throw ComputationError("Jordan-Holder factors of '" + a_id +
                             "' depend on the chain: inconsistent presentation");
    }
  }
  return chains.front();
}

std::vector<std::string> seesaw_check(const CategoryPresentation& cat, const ChargeRow& charge) {
  const Index idx = checked_index(cat, charge);
  const std::size_t n = idx.ids.size();
  std::vector<std::string> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int q = idx.quotient[a][b];
      if (q == kNone) continue;
      if (static_cast<int>(a) == idx.zero || static_cast<int>(b) == idx.zero || q == idx.zero) continue;
      const GaussianRational& za = idx.z[a];
      const Comparison bc = phase_compare(idx.z[b], za);
      const Comparison cc = phase_compare(idx.z[static_cast<std::size_t>(q)], za);
      const bool first = (bc != Comparison::GT) == (cc != Comparison::LT);
      const bool second = (bc != Comparison::LT) == (cc != Comparison::GT);
      if (!first || !second) {
        out.push_back("see-saw fails on " + idx.ids[b] + " < " + idx.ids[a] + " / " +
                      idx.ids[static_cast<std::size_t>(q)]);
      }
    }
  }
  return out;
}

}  // namespace bridgeland
