#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bridgeland/hn.hpp"
#include "helpers.hpp"

namespace bridgeland::testing {

using G = GaussianRational;

inline std::string interval(long i, long j) { return "M" + std::to_string(i) + std::to_string(j); }

inline IntegerVector unit(std::size_t k, std::size_t i) {
  IntegerVector v(k, Integer(0));
  v[i] = 1;
  return v;
}

inline IntegerVector add(const IntegerVector& a, const IntegerVector& b) {
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Uniserial module with composition factors S_0, ..., S_{n-1} from the top
// of the chain, optionally plus a simple S outside it. Classes live in Z^k
// with k = n (+1).
inline CategoryPresentation uniserial(long n, bool with_simple) {
  const std::size_t k = static_cast<std::size_t>(n) + (with_simple ? 1 : 0);
  CategoryPresentation cat;
  cat.zero = "0";
  cat.objects.push_back({"0", IntegerVector(k, Integer(0))});
  std::map<std::string, IntegerVector> cls;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j <= n; ++j) {
      IntegerVector c(k, Integer(0));
      for (long t = i; t < j; ++t) c[static_cast<std::size_t>(t)] = 1;
      cls[interval(i, j)] = c;
      cat.objects.push_back({interval(i, j), c});
    }
  }
  for (long i = 0; i < n; ++i) {
    for (long m = i + 1; m < n; ++m) {
      for (long j = m + 1; j <= n; ++j) cat.edges.push_back({interval(i, m), interval(i, j), interval(m, j)});
    }
  }
  if (!with_simple) return cat;
  const IntegerVector s = unit(k, k - 1);
  cat.objects.push_back({"S", s});
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j <= n; ++j) {
      const std::string sum = interval(i, j) + "+S";
      cat.objects.push_back({sum, add(cls[interval(i, j)], s)});
      cat.edges.push_back({"S", sum, interval(i, j)});
      cat.edges.push_back({interval(i, j), sum, "S"});
      for (long m = i + 1; m < j; ++m) {
        cat.edges.push_back({interval(i, m), sum, interval(m, j) + "+S"});
        cat.edges.push_back({interval(i, m) + "+S", sum, interval(m, j)});
      }
    }
  }
  return cat;
}

inline CategoryPresentation semisimple_pair() {
  CategoryPresentation cat;
  cat.zero = "0";
  cat.objects = {{"0", {0, 0}}, {"S", {1, 0}}, {"T", {0, 1}}, {"S+T", {1, 1}}};
  cat.edges = {{"S", "S+T", "T"}, {"T", "S+T", "S"}};
  return cat;
}

inline ChargeRow random_row(Rng& rng, std::size_t k) {
  ChargeRow row;
  while (row.size() < k) {
    const G z(rng.rational(6, 1), Rational(rng.integer(0, 6)));
    if (phase_valid(z)) row.push_back(z);
  }
  return row;
}

// Independent reference: all chains of subobjects with semistable factors of
// strictly decreasing phase.
class BruteHN {
 public:
  BruteHN(const CategoryPresentation& cat, const ChargeRow& row) : cat_(cat), row_(row) {
    for (const CategoryObject& o : cat.objects) cls_[o.id] = o.cls;
    for (const SubobjectEdge& e : cat.edges) quotient_[{e.sub, e.ambient}] = e.quotient;
  }

  G z(const std::string& id) const { return evaluate(row_, cls_.at(id)); }

  // Quotient of ambient by sub, empty when sub is not a subobject.
  std::string quotient(const std::string& sub, const std::string& ambient) const {
    if (sub == cat_.zero) return ambient;
    if (sub == ambient) return cat_.zero;
    auto it = quotient_.find({sub, ambient});
    return it == quotient_.end() ? "" : it->second;
  }

  bool semistable(const std::string& a) const {
    for (const CategoryObject& o : cat_.objects) {
      if (o.id == a || o.id == cat_.zero || quotient(o.id, a).empty()) continue;
      if (phase_compare(z(o.id), z(a)) == Comparison::GT) return false;
    }
    return true;
  }

  std::vector<std::vector<std::string>> chains(const std::string& a) const {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> chain{cat_.zero};
    std::function<void()> extend = [&] {
      const std::string last = chain.back();
      if (last == a) {
        out.push_back(chain);
        return;
      }
      for (const CategoryObject& o : cat_.objects) {
        if (o.id == last || o.id == cat_.zero) continue;
        if (quotient(o.id, a).empty() && o.id != a) continue;
        const std::string f = quotient(last, o.id);
        if (f.empty() || !semistable(f)) continue;
        if (chain.size() >= 2) {
          const std::string prev = quotient(chain[chain.size() - 2], last);
          if (phase_compare(z(prev), z(f)) != Comparison::GT) continue;
        }
        chain.push_back(o.id);
        extend();
        chain.pop_back();
      }
    };
    extend();
    return out;
  }

 private:
  const CategoryPresentation& cat_;
  const ChargeRow& row_;
  std::map<std::string, IntegerVector> cls_;
  std::map<std::pair<std::string, std::string>, std::string> quotient_;
};

}  // namespace bridgeland::testing
