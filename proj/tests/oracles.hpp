#pragma once

// Test-only reference implementations, deliberately independent of the
// library's simplex and covector search.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hypertile/lattice.hpp"

namespace oracle {

using hypertile::Integer;
using hypertile::IntVector;
using hypertile::Rational;
using hypertile::RatVector;

struct Row {
  IntVector coef;
  bool strict = false;
  friend bool operator<(const Row& a, const Row& b) {
    return a.strict != b.strict ? a.strict < b.strict : a.coef < b.coef;
  }
};

inline IntVector normalized(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Fourier-Motzkin feasibility for homogeneous systems:
/// strict rows a.x > 0, weak rows a.x >= 0, equality rows a.x = 0.
/// Equalities are first eliminated by exact substitution.
inline bool fm_feasible(std::size_t dim, std::vector<IntVector> strict, std::vector<IntVector> weak,
                        std::vector<IntVector> equalities) {
  std::vector<Row> rows;
  for (auto& r : strict) rows.push_back({r, true});
  for (auto& r : weak) rows.push_back({r, false});
  std::vector<bool> alive(dim, true);

  // Substitute equalities: pick a pivot variable, scale and eliminate.
  while (!equalities.empty()) {
    IntVector eq = equalities.back();
    equalities.pop_back();
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (eq[j] != 0) {
        piv = j;
        break;
      }
    if (piv == dim) continue;
    auto eliminate = [&](IntVector& r) {
      if (r[piv] == 0) return;
      // r' = |eq[piv]| r - sign(eq[piv]) r[piv] eq agrees with r on the hyperplane.
      const Integer c = eq[piv], d = r[piv];
      for (std::size_t j = 0; j < dim; ++j) r[j] = c * r[j] - d * eq[j];
      if (c < 0)
        for (auto& x : r) x = -x;
      r = normalized(r);
    };
    for (auto& r : rows) eliminate(r.coef);
    for (auto& e : equalities) eliminate(e);
    alive[piv] = false;
  }

  std::set<Row> current(rows.begin(), rows.end());
  for (std::size_t j = 0; j < dim; ++j) {
    if (!alive[j]) continue;
    std::vector<Row> pos, neg;
    std::set<Row> next;
    for (const auto& r : current) {
      if (r.coef[j] > 0)
        pos.push_back(r);
      else if (r.coef[j] < 0)
        neg.push_back(r);
      else
        next.insert(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        IntVector c(dim);
        for (std::size_t k = 0; k < dim; ++k) c[k] = -n.coef[j] * p.coef[k] + p.coef[j] * n.coef[k];
        next.insert({normalized(c), p.strict || n.strict});
      }
    current = std::move(next);
    for (const auto& r : current)
      if (r.strict && std::all_of(r.coef.begin(), r.coef.end(), [](const Integer& x) { return x == 0; }))
        return false;
  }
  for (const auto& r : current)
    if (r.strict) return false;
  return true;
}

/// Brute-force covectors: every sign pattern in {-,0,+}^E checked by FM.
/// Signs are encoded as -1, 0, 1.
inline std::set<std::vector<int>> brute_covectors(const std::vector<IntVector>& vectors, std::size_t dim) {
  std::set<std::vector<int>> out;
  const std::size_t n = vectors.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> s(n);
    std::size_t c = code;
    std::vector<IntVector> strict, eq;
    for (std::size_t e = 0; e < n; ++e) {
      s[e] = static_cast<int>(c % 3) - 1;
      c /= 3;
      IntVector row = vectors[e];
      if (s[e] == 0) {
        eq.push_back(row);
      } else {
        if (s[e] < 0)
          for (auto& x : row) x = -x;
        strict.push_back(row);
      }
    }
    if (fm_feasible(dim, strict, {}, eq)) out.insert(s);
  }
  return out;
}

/// Number of faces of the affine arrangement {x : a_e.x + r_e = 0}, via
/// brute-force sign patterns of the homogenized system (x, s) with s > 0.
inline std::size_t affine_face_count(const std::vector<IntVector>& vectors, const IntVector& lift,
                                     std::size_t dim) {
  std::vector<IntVector> lifted;
  for (std::size_t e = 0; e < vectors.size(); ++e) {
    IntVector v = vectors[e];
    v.push_back(lift[e]);
    lifted.push_back(v);
  }
  const std::size_t n = lifted.size();
  std::size_t total = 1, count = 0;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  IntVector s_pos(dim + 1, Integer(0));
  s_pos[dim] = 1;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<IntVector> strict{s_pos}, eq;
    for (std::size_t e = 0; e < n; ++e) {
      int s = static_cast<int>(c % 3) - 1;
      c /= 3;
      IntVector row = lifted[e];
      if (s == 0) {
        eq.push_back(row);
      } else {
        if (s < 0)
          for (auto& x : row) x = -x;
        strict.push_back(row);
      }
    }
    if (fm_feasible(dim + 1, strict, {}, eq)) ++count;
  }
  return count;
}

}  // namespace oracle
