#include "hypertile/support.hpp"

#include <algorithm>

namespace hypertile {

SubLattice relation_lattice(const VectorConfig& config) {
  config.check();
  IntMatrix m(config.rank, config.size());
  for (std::size_t e = 0; e < config.size(); ++e)
    for (std::size_t i = 0; i < config.rank; ++i) m(i, e) = config.vectors[e][i];
  return kernel_lattice(m);
}

namespace {

// Lambda intersected with the coordinates in `free`, embedded in Z^E.
std::vector<IntVector> restricted_relations(const VectorConfig& config, const std::vector<std::size_t>& free) {
  IntMatrix m(config.rank, free.size());
  for (std::size_t k = 0; k < free.size(); ++k)
    for (std::size_t i = 0; i < config.rank; ++i) m(i, k) = config.vectors[free[k]][i];
  std::vector<IntVector> out;
  const SubLattice kernel = kernel_lattice(m);
  for (const auto& v : kernel.basis()) {
    IntVector full = zero_vector(config.size());
    for (std::size_t k = 0; k < free.size(); ++k) full[free[k]] = v[k];
    out.push_back(std::move(full));
  }
  return out;
}

void require_in_pt(const TilingLattices& l, const IntVector& r) {
  if (r.size() != l.p_t.ambient_dim())
    throw InputError("r has length " + std::to_string(r.size()) + ", expected " +
                     std::to_string(l.p_t.ambient_dim()));
  if (!l.p_t.contains(r)) throw InputError("r = " + to_string(r) + " is not in P_T");
}

}  // namespace

TilingLattices tiling_lattices(const Tiling& t) {
  TilingLattices out;
  out.lambda = relation_lattice(t.base.config);
  std::vector<IntVector> gens;
  for (auto i : maximal_tiles(t))
    for (auto& v : restricted_relations(t.base.config, t.tiles[i].zero_set())) gens.push_back(std::move(v));
  out.lambda_t = hermite_basis(gens, t.base.config.size());
  out.p_t = perp_lattice(out.lambda_t);
  return out;
}

Rational eval_support(const Tiling& t, const IntVector& r, const RatVector& point) {
  require_in_pt(tiling_lattices(t), r);
  for (auto i : maximal_tiles(t)) {
    auto decomposition = decompose(t.tile(i), point);
    if (!decomposition) continue;
    Rational value = 0;
    for (std::size_t e = 0; e < r.size(); ++e) value += r[e] * (*decomposition)[e];
    return value;
  }
  throw InputError("point lies outside the base zonotope");
}

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::nonconvex: return "nonconvex";
    case Convexity::convex: return "convex";
    default: return "strictly_convex";
  }
}

std::vector<AdjacentPair> adjacent_pairs(const Tiling& t) {
  const auto info = describe(t);
  const auto maximal = maximal_tiles(t);
  const long wall = static_cast<long>(t.base.dimension()) - 1;
  std::vector<AdjacentPair> out;
  for (std::size_t x = 0; x < maximal.size(); ++x)
    for (std::size_t y = x + 1; y < maximal.size(); ++y) {
      const auto& F = info[maximal[x]];
      const auto& G = info[maximal[y]];
      PointSet common;
      std::set_intersection(F.vertices.begin(), F.vertices.end(), G.vertices.begin(), G.vertices.end(),
                            std::back_inserter(common));
      if (common.empty() || affine_dimension(common) != wall) continue;
      AdjacentPair p;
      p.tile = maximal[x];
      p.other = maximal[y];
      for (const auto& v : F.vertices)
        if (!std::binary_search(G.vertices.begin(), G.vertices.end(), v)) {
          p.vertex = v;
          break;
        }
      p.t = *decompose(F.zonotope, to_rational(p.vertex));
      // t' with the support of the other tile fixed; any solution will do.
      const auto free = G.zonotope.free_indices();
      const Point c = G.zonotope.center();
      std::vector<IntVector> rows(t.base.config.rank, IntVector(free.size()));
      RatVector rhs(t.base.config.rank);
      for (std::size_t i = 0; i < t.base.config.rank; ++i) {
        for (std::size_t k = 0; k < free.size(); ++k) rows[i][k] = G.zonotope.config.vectors[free[k]][i];
        rhs[i] = p.vertex[i] - c[i];
      }
      auto local = solve_linear(rows, rhs, free.size());
      p.t_other.assign(t.base.config.size(), Rational(0));
      for (std::size_t e = 0; e < t.base.config.size(); ++e) p.t_other[e] = to_int(G.zonotope.sign[e]);
      for (std::size_t k = 0; k < free.size(); ++k) p.t_other[free[k]] = (*local)[k];
      out.push_back(std::move(p));
    }
  return out;
}

Convexity convexity(const Tiling& t, const IntVector& r) {
  require_in_pt(tiling_lattices(t), r);
  bool strict = true;
  for (const auto& p : adjacent_pairs(t)) {
    Rational jump = 0;
    for (std::size_t e = 0; e < r.size(); ++e) jump += r[e] * (p.t_other[e] - p.t[e]);
    if (jump < 0) return Convexity::nonconvex;
    if (jump == 0) strict = false;
  }
  return strict ? Convexity::strictly_convex : Convexity::convex;
}

LinearSystem regularity_system(const Tiling& t) {
  LinearSystem sys;
  sys.dim = t.base.config.size();
  sys.equalities = tiling_lattices(t).lambda_t.basis();
  for (const auto& p : adjacent_pairs(t)) {
    RatVector diff(sys.dim);
    for (std::size_t e = 0; e < sys.dim; ++e) diff[e] = p.t_other[e] - p.t[e];
    // Clearing denominators by a positive factor keeps the inequality.
    Integer l = 1;
    for (const auto& x : diff) l = lcm(l, x.get_den());
    IntVector row(sys.dim);
    for (std::size_t e = 0; e < sys.dim; ++e) row[e] = Rational(diff[e] * l).get_num();
    sys.strict.push_back(std::move(row));
  }
  return sys;
}

std::optional<IntVector> regularity(const Tiling& t) {
  auto w = feasible_strict(regularity_system(t));
  if (!w) return std::nullopt;
  return integer_scaling(*w);
}

}  // namespace hypertile
