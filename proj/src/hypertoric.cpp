#include "hypertile/hypertoric.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "detail.hpp"

namespace hypertile {

std::string to_string(WeightProfile w) {
  switch (w) {
    case WeightProfile::mixed: return "mixed";
    case WeightProfile::nonnegative: return "nonnegative";
    default: return "positive";
  }
}

namespace {

// target in cone(gens); relative interior when `strict`.
bool cone_contains(const std::vector<IntVector>& gens, const IntVector& target, bool strict) {
  const std::size_t n = gens.size();
  const std::size_t d = target.size();
  LinearSystem sys;
  sys.dim = n + 1;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector row(n + 1);
    for (std::size_t k = 0; k < n; ++k) row[k] = gens[k][i];
    row[n] = -target[i];
    sys.equalities.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < n; ++k) {
    IntVector row = zero_vector(n + 1);
    row[k] = 1;
    (strict ? sys.strict : sys.weak).push_back(std::move(row));
  }
  IntVector tau = zero_vector(n + 1);
  tau[n] = 1;
  sys.strict.push_back(std::move(tau));
  return feasible_strict(sys).has_value();
}

IntVector minus(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

std::vector<IntVector> extremal_generators(const std::vector<IntVector>& gens) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (k != i) others.push_back(gens[k]);
    if (!cone_contains(others, gens[i], false)) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

WeightProfile weight_profile(const Zonotope& z) {
  const PointSet verts = vertices(z);
  const bool full = z.dimension() == z.config.rank;
  bool nonnegative = true, positive = full;
  for (const auto& eta : verts) {
    std::vector<IntVector> tangent;
    for (const auto& v : verts)
      if (v != eta) tangent.push_back(minus(v, eta));
    const IntVector target = negate(eta);
    if (!cone_contains(tangent, target, false)) {
      nonnegative = false;
      positive = false;
      break;
    }
    if (positive && !cone_contains(tangent, target, true)) positive = false;
  }
  if (positive) return WeightProfile::positive;
  return nonnegative ? WeightProfile::nonnegative : WeightProfile::mixed;
}

HypertoricCheck is_hypertoric(const Tiling& t) {
  HypertoricCheck out;
  if (!validate_config(t.base.config).spanning) out.reasons.push_back("configuration does not span");
  const auto w = weight_profile(t.base);
  if (w != WeightProfile::positive) out.reasons.push_back("0 is not interior to the base (weights " + to_string(w) + ")");
  out.ok = out.reasons.empty();
  return out;
}

CoreReport extended_core(const Tiling& t) {
  CoreReport out;
  const auto info = describe(t);
  const bool full = t.base.dimension() == t.base.config.rank;
  for (std::size_t i = 0; i < info.size(); ++i) {
    CoreComponent c;
    c.tile = i;
    c.sign = t.tiles[i];
    c.dimension = info[i].dimension;
    c.local_fan = local_fan(t, i);
    c.is_proper = c.local_fan.complete;
    c.in_core = full && relint_contains_point(t.base, detail::centroid(info[i].vertices));
    if (c.dimension == 0) {
      c.gm_weight = info[i].vertices.front();
      out.components.push_back(i);
    }
    out.core_nonempty = out.core_nonempty || c.in_core;
    out.strata.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < info.size(); ++i)
    for (std::size_t j = 0; j < info.size(); ++j)
      if (i != j && info[i].vertices.size() < info[j].vertices.size() &&
          std::includes(info[j].vertices.begin(), info[j].vertices.end(), info[i].vertices.begin(),
                        info[i].vertices.end()))
        out.closure_order.emplace_back(i, j);
  return out;
}

std::set<PointSet> reconstruct_tiles(const CoreReport& report) {
  struct VertexData {
    std::vector<std::vector<IntVector>> rays;  // extremal rays per cone
  };
  std::map<Point, VertexData> at;
  for (auto i : report.components) {
    const auto& c = report.strata[i];
    VertexData d;
    for (const auto& cone : c.local_fan.fan.cones) d.rays.push_back(extremal_generators(cone.generators));
    at.emplace(*c.gm_weight, std::move(d));
  }
  // First tiling vertex hit from `from` along `ray`.
  auto step = [&](const Point& from, const IntVector& ray) {
    std::optional<Integer> best;
    Point hit;
    for (const auto& [p, data] : at) {
      const IntVector diff = minus(p, from);
      if (is_zero(diff)) continue;
      // diff = k * ray with k > 0?
      Integer k = 0;
      bool ok = true;
      for (std::size_t i = 0; i < diff.size() && ok; ++i) {
        if (ray[i] == 0) {
          ok = diff[i] == 0;
        } else if (k == 0) {
          if (diff[i] % ray[i] != 0) ok = false;
          k = diff[i] / ray[i];
          if (k <= 0) ok = false;
        } else {
          ok = diff[i] == k * ray[i];
        }
      }
      if (ok && (!best || k < *best)) {
        best = k;
        hit = p;
      }
    }
    if (!best) throw InputError("local fans are inconsistent with the vertex set");
    return hit;
  };

  std::set<PointSet> tiles;
  for (const auto& [eta, data] : at) {
    for (const auto& rays : data.rays) {
      // q = centroid of eta and its edge neighbours lies in the relative
      // interior of the tile; walk the tile's 1-skeleton from there.
      PointSet start{eta};
      for (const auto& r : rays) start.push_back(step(eta, r));
      RatVector q = detail::centroid(start);
      Integer den = 1;
      for (const auto& x : q) den = lcm(den, x.get_den());
      std::set<Point> seen{eta};
      std::deque<Point> todo{eta};
      while (!todo.empty()) {
        const Point v = todo.front();
        todo.pop_front();
        IntVector target(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) target[i] = Rational((q[i] - v[i]) * den).get_num();
        const std::vector<IntVector>* chosen = nullptr;
        for (const auto& cand : at.at(v).rays)
          if (cand.empty() ? is_zero(target) : cone_contains(cand, target, true)) {
            chosen = &cand;
            break;
          }
        if (!chosen) throw InputError("no local cone contains the interior direction");
        for (const auto& r : *chosen) {
          Point n = step(v, r);
          if (seen.insert(n).second) todo.push_back(n);
        }
      }
      tiles.insert(PointSet(seen.begin(), seen.end()));
    }
  }
  return tiles;
}

ClassGroups class_groups(const Tiling& t) {
  if (!validate_config(t.base.config).spanning) throw InputError("class_groups needs a spanning configuration");
  ClassGroups out;
  const auto lat = tiling_lattices(t);
  out.cl_t_rank = t.base.config.size();
  out.ker_forget = perp_lattice(lat.lambda);
  for (const auto& d : smith_invariant_factors(IntMatrix::from_rows(out.ker_forget.basis(), out.cl_t_rank)))
    if (d > 1) out.cl_torsion.push_back(d);
  out.cl_free_rank = out.cl_t_rank - out.ker_forget.rank();
  out.pic_t = lat.p_t;
  return out;
}

std::string to_string(DivisorKind k) {
  switch (k) {
    case DivisorKind::not_cartier: return "not_cartier";
    case DivisorKind::trivial: return "trivial";
    case DivisorKind::ample: return "ample";
    case DivisorKind::nef: return "nef";
    default: return "none_of_these";
  }
}

DivisorKind classify_divisor(const Tiling& t, const IntVector& r) {
  if (!validate_config(t.base.config).spanning) throw InputError("classify_divisor needs a spanning configuration");
  if (r.size() != t.base.config.size())
    throw InputError("divisor has length " + std::to_string(r.size()) + ", expected " +
                     std::to_string(t.base.config.size()));
  const auto lat = tiling_lattices(t);
  if (!lat.p_t.contains(r)) return DivisorKind::not_cartier;
  if (perp_lattice(lat.lambda).contains(r)) return DivisorKind::trivial;
  switch (convexity(t, r)) {
    case Convexity::strictly_convex: return DivisorKind::ample;
    case Convexity::convex: return DivisorKind::nef;
    default: return DivisorKind::none_of_these;
  }
}

namespace {

Cone lawrence_cone(const LawrenceData& d, const SignVector& v) {
  std::set<IntVector> gens;
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (v[e] != Sign::Plus && !is_zero(d.rho_plus[e])) gens.insert(primitive(negate(d.rho_plus[e])));
    if (v[e] != Sign::Minus && !is_zero(d.rho_minus[e])) gens.insert(primitive(negate(d.rho_minus[e])));
  }
  return {{gens.begin(), gens.end()}, SubLattice(d.rank)};
}

}  // namespace

LawrenceData lawrence_fan(const Tiling& t) {
  const std::size_t n = t.base.config.size();
  const SubLattice lambda = relation_lattice(t.base.config);
  std::vector<IntVector> anti;
  for (const auto& l : lambda.basis()) {
    IntVector v(2 * n);
    for (std::size_t e = 0; e < n; ++e) {
      v[e] = l[e];
      v[n + e] = -l[e];
    }
    anti.push_back(std::move(v));
  }
  LawrenceData d;
  d.quotient = perp_lattice(hermite_basis(anti, 2 * n)).basis();
  d.rank = d.quotient.size();
  for (std::size_t e = 0; e < n; ++e) {
    IntVector plus(d.rank), minus_(d.rank);
    for (std::size_t k = 0; k < d.rank; ++k) {
      plus[k] = d.quotient[k][e];
      minus_[k] = d.quotient[k][n + e];
    }
    d.rho_plus.push_back(std::move(plus));
    d.rho_minus.push_back(std::move(minus_));
  }
  d.base_cone = lawrence_cone(d, t.base.sign);
  d.extremal_rays = extremal_generators(d.base_cone.generators);
  d.fan.ambient_dim = d.rank;
  for (const auto& v : t.tiles) d.fan.cones.push_back(lawrence_cone(d, v));

  const std::set<IntVector> base_gens(d.base_cone.generators.begin(), d.base_cone.generators.end());
  const std::set<IntVector> extremal(d.extremal_rays.begin(), d.extremal_rays.end());
  d.refines_base = true;
  d.rays_extremal = true;
  for (const auto& c : d.fan.cones) {
    for (const auto& g : c.generators)
      if (!base_gens.count(g)) d.refines_base = false;
    for (const auto& r : extremal_generators(c.generators))
      if (!extremal.count(r)) d.rays_extremal = false;
  }
  return d;
}

bool lawrence_support_extends(const Tiling& t, const LawrenceData& data, const IntVector& r_plus,
                              const IntVector& r_minus) {
  const std::size_t n = t.base.config.size();
  if (r_plus.size() != n || r_minus.size() != n) throw InputError("r+ and r- must have one entry per vector");
  for (const auto& v : t.tiles) {
    std::vector<IntVector> rows;
    RatVector rhs;
    for (std::size_t e = 0; e < n; ++e) {
      if (v[e] != Sign::Plus) {
        rows.push_back(data.rho_plus[e]);
        rhs.emplace_back(r_plus[e]);
      }
      if (v[e] != Sign::Minus) {
        rows.push_back(data.rho_minus[e]);
        rhs.emplace_back(r_minus[e]);
      }
    }
    if (!solve_linear(rows, rhs, data.rank)) return false;
  }
  return true;
}

GeometryFlags geometry_flags(const Tiling& t) {
  GeometryFlags f;
  f.smooth = true;
  f.qfactorial_terminal_sufficient = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto kind = classify_block(t.tile(i));
    if (kind != BlockKind::cube) f.smooth = false;
    if (kind == BlockKind::general) f.qfactorial_terminal_sufficient = false;
  }
  f.projective_over_affinization = regularity(t).has_value();
  return f;
}

namespace {

bool conformal_leq(const IntVector& g, const IntVector& s) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (sgn(g[i]) != sgn(s[i]) || abs(g[i]) > abs(s[i])) return false;
  }
  return true;
}

// Completion procedure: closes a symmetric lattice generating set under
// conformal reduction of pairwise sums.  The result contains the Graver basis.
std::vector<IntVector> graver_completion(const std::vector<IntVector>& basis) {
  std::vector<IntVector> g;
  for (const auto& b : basis) {
    g.push_back(b);
    g.push_back(negate(b));
  }
  auto reduce = [&](IntVector s) {
    bool progress = true;
    while (progress && !is_zero(s)) {
      progress = false;
      for (const auto& h : g)
        if (conformal_leq(h, s)) {
          for (std::size_t i = 0; i < s.size(); ++i) s[i] -= h[i];
          progress = true;
          break;
        }
    }
    return s;
  };
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    IntVector s(g[i].size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = g[i][k] + g[j][k];
    if (conformal_leq(g[i], s) || conformal_leq(g[j], s)) continue;  // reduces to zero
    IntVector r = reduce(std::move(s));
    if (is_zero(r)) continue;
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  return g;
}

Integer spread(const IntVector& x, std::size_t n) {
  Integer s = 0;
  for (std::size_t e = 0; e < n; ++e) s += abs(x[e] - x[n + e]);
  return s;
}

}  // namespace

InvariantRing invariant_ring_data(const VectorConfig& config, const SignVector& u) {
  config.check();
  if (!validate_config(config).primitive) throw InputError("invariant_ring_data needs a primitive configuration");
  if (config.size() > 8) throw ScaleError("invariant_ring_data supports at most 8 vectors");
  if (u.size() != config.size()) throw InputError("sign vector length differs from the configuration");
  const std::size_t n = config.size();
  const SubLattice lambda = relation_lattice(config);
  const SubLattice lambda_perp = perp_lattice(lambda);

  // Exponent lattice {(p, q) : q - p in Lambda-perp}.
  std::vector<IntVector> basis;
  for (std::size_t e = 0; e < n; ++e) {
    IntVector v = zero_vector(2 * n);
    v[e] = 1;
    v[n + e] = 1;
    basis.push_back(std::move(v));
  }
  for (const auto& m : lambda_perp.basis()) {
    IntVector v = zero_vector(2 * n);
    for (std::size_t e = 0; e < n; ++e) v[n + e] = m[e];
    basis.push_back(std::move(v));
  }
  std::vector<std::size_t> constrained;
  for (std::size_t e = 0; e < n; ++e)
    if (u[e] != Sign::Plus) constrained.push_back(e);
  for (std::size_t e = 0; e < n; ++e)
    if (u[e] != Sign::Minus) constrained.push_back(n + e);
  const std::size_t k = constrained.size();

  // Rows (pi(b), b): echelon rows pivoting in the first block lift the
  // projection, the others span the units.
  std::vector<IntVector> joint;
  for (const auto& b : basis) {
    IntVector v;
    for (auto c : constrained) v.push_back(b[c]);
    v.insert(v.end(), b.begin(), b.end());
    joint.push_back(std::move(v));
  }
  const SubLattice joint_lattice = hermite_basis(joint, k + 2 * n);
  std::vector<IntVector> lift_rows, unit_gens, projected;
  for (const auto& r : joint_lattice.basis()) {
    const bool in_block = std::any_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k),
                                      [](const Integer& x) { return x != 0; });
    IntVector tail(r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
    if (in_block) {
      lift_rows.push_back(r);
      projected.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      unit_gens.push_back(std::move(tail));
    }
  }
  InvariantRing out;
  out.units = hermite_basis(unit_gens, 2 * n);

  auto lift = [&](const IntVector& y) {
    IntVector residual = y;
    IntVector x = zero_vector(2 * n);
    for (const auto& r : lift_rows) {
      std::size_t pivot = 0;
      while (r[pivot] == 0) ++pivot;
      const Integer c = residual[pivot] / r[pivot];
      for (std::size_t i = 0; i < k; ++i) residual[i] -= c * r[i];
      for (std::size_t i = 0; i < 2 * n; ++i) x[i] += c * r[k + i];
    }
    // Prefer the representative with the smallest total |p_e - q_e|.
    bool improved = true;
    while (improved) {
      improved = false;
      for (const auto& g : out.units.basis())
        for (int s : {1, -1}) {
          IntVector cand = x;
          for (std::size_t i = 0; i < 2 * n; ++i) cand[i] += s * g[i];
          if (spread(cand, n) < spread(x, n)) {
            x = std::move(cand);
            improved = true;
          }
        }
    }
    return x;
  };

  std::vector<IntVector> hilbert;
  if (k > 0) {
    for (const auto& g : graver_completion(hermite_basis(projected, k).basis())) {
      if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x < 0; }) || is_zero(g)) continue;
      hilbert.push_back(g);
    }
    std::sort(hilbert.begin(), hilbert.end());
    hilbert.erase(std::unique(hilbert.begin(), hilbert.end()), hilbert.end());
    std::vector<IntVector> minimal;
    for (const auto& h : hilbert) {
      bool reducible = false;
      for (const auto& o : hilbert)
        if (o != h && conformal_leq(o, h)) reducible = true;
      if (!reducible) minimal.push_back(h);
    }
    hilbert = std::move(minimal);
  }

  for (const auto& y : hilbert) {
    const IntVector x = lift(y);
    MonomialGen g;
    g.p.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    g.q.assign(x.begin() + static_cast<std::ptrdiff_t>(n), x.end());
    RatVector diff(n);
    for (std::size_t e = 0; e < n; ++e) diff[e] = g.q[e] - g.p[e];
    g.t_weight = *solve_linear(config.vectors, diff, config.rank);
    g.gm_weight = 0;
    for (std::size_t e = 0; e < n; ++e) g.gm_weight += g.p[e] + g.q[e];
    out.generators.push_back(std::move(g));
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const MonomialGen& a, const MonomialGen& b) {
    if (a.gm_weight != b.gm_weight) return a.gm_weight < b.gm_weight;
    if (a.p != b.p) return a.p > b.p;
    return a.q > b.q;
  });
  out.moment_relations = lambda.basis();
  return out;
}

}  // namespace hypertile
