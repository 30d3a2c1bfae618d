#include "hypertile/tiling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "detail.hpp"

namespace hypertile {

namespace detail {

std::vector<FaceData> face_data(const Zonotope& z) {
  std::vector<FaceData> out;
  for (auto& f : faces_of(z)) {
    FaceData d;
    d.vertices = vertices(f);
    d.dimension = static_cast<std::size_t>(affine_dimension(d.vertices));
    d.sign = f.sign;
    out.push_back(std::move(d));
  }
  return out;
}

IntVector exposing_functional(const Zonotope& z, const SignVector& face_sign) {
  LinearSystem sys;
  sys.dim = z.config.rank;
  for (auto e : z.free_indices()) {
    IntVector a = z.config.vectors[e];
    switch (face_sign[e]) {
      case Sign::Zero: sys.equalities.push_back(a); break;
      case Sign::Minus:
        for (auto& x : a) x = -x;
        [[fallthrough]];
      case Sign::Plus: sys.strict.push_back(a); break;
    }
  }
  auto m = feasible_strict(sys);
  if (!m) throw InputError("sign vector " + face_sign.str() + " does not describe a face");
  return integer_scaling(*m);
}

RatVector centroid(const PointSet& points) {
  RatVector c(points.front().size(), Rational(0));
  for (const auto& p : points)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& x : c) x /= static_cast<long>(points.size());
  return c;
}

namespace {

// Is there a point of a cap b where m.x < h?  Variables [t_a, t_b, tau].
bool meets_below(const Zonotope& a, const Zonotope& b, const IntVector& m, const Integer& h) {
  const auto fa = a.free_vectors(), fb = b.free_vectors();
  const std::size_t na = fa.size(), nb = fb.size(), tau = na + nb;
  const Point ca = a.center(), cb = b.center();
  LinearSystem sys;
  sys.dim = na + nb + 1;
  for (std::size_t i = 0; i < a.config.rank; ++i) {
    IntVector row = zero_vector(sys.dim);
    for (std::size_t e = 0; e < na; ++e) row[e] = fa[e][i];
    for (std::size_t f = 0; f < nb; ++f) row[na + f] = -fb[f][i];
    row[tau] = ca[i] - cb[i];
    sys.equalities.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < na + nb; ++k) {
    IntVector up = zero_vector(sys.dim), down = zero_vector(sys.dim);
    up[tau] = 1;
    up[k] = -1;
    down[tau] = 1;
    down[k] = 1;
    sys.weak.push_back(std::move(up));
    sys.weak.push_back(std::move(down));
  }
  IntVector below = zero_vector(sys.dim);
  for (std::size_t e = 0; e < na; ++e) below[e] = -dot(m, fa[e]);
  below[tau] = h - dot(m, ca);
  sys.strict.push_back(std::move(below));
  IntVector positive = zero_vector(sys.dim);
  positive[tau] = 1;
  sys.strict.push_back(std::move(positive));
  return feasible_strict(sys).has_value();
}

}  // namespace

PairStatus check_pair(const Zonotope& a, const std::vector<FaceData>& faces_a, const Zonotope& b,
                      const std::vector<FaceData>& faces_b, bool full_dimensional) {
  if (full_dimensional && relints_overlap(a, b)) return PairStatus::overlap;
  std::map<PointSet, const SignVector*> in_b;
  for (const auto& f : faces_b) in_b.emplace(f.vertices, &f.sign);
  const FaceData* largest = nullptr;
  for (const auto& f : faces_a) {
    auto it = in_b.find(f.vertices);
    if (it == in_b.end()) continue;
    if (*it->second != f.sign) return PairStatus::labels;
    if (!largest || f.vertices.size() > largest->vertices.size()) largest = &f;
  }
  if (!largest) return intersects(a, b) ? PairStatus::intersection : PairStatus::ok;
  for (const auto& f : faces_a)
    if (in_b.count(f.vertices) &&
        !std::includes(largest->vertices.begin(), largest->vertices.end(), f.vertices.begin(), f.vertices.end()))
      return PairStatus::intersection;
  const IntVector m = exposing_functional(a, largest->sign);
  const Integer h = dot(m, largest->vertices.front());
  return meets_below(a, b, m, h) ? PairStatus::intersection : PairStatus::ok;
}

}  // namespace detail

using detail::FaceData;

Tiling::Tiling(Zonotope b, std::vector<SignVector> t) : base(std::move(b)), tiles(std::move(t)) {
  for (const auto& s : tiles)
    if (s.size() != base.config.size())
      throw InputError("tile " + s.str() + " does not have length " + std::to_string(base.config.size()));
  std::sort(tiles.begin(), tiles.end());
  tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
}

Zonotope Tiling::tile(std::size_t i) const { return Zonotope(base.config, tiles.at(i), base.translation); }

std::size_t Tiling::index_of(const SignVector& s) const {
  auto it = std::lower_bound(tiles.begin(), tiles.end(), s);
  if (it == tiles.end() || *it != s) throw InputError("tile " + s.str() + " is not in the tiling");
  return static_cast<std::size_t>(it - tiles.begin());
}

std::vector<TileInfo> describe(const Tiling& t) {
  std::vector<TileInfo> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    TileInfo info{t.tile(i), {}, 0};
    info.vertices = vertices(info.zonotope);
    info.dimension = static_cast<std::size_t>(affine_dimension(info.vertices));
    out.push_back(std::move(info));
  }
  return out;
}

std::vector<std::size_t> maximal_tiles(const Tiling& t) {
  const std::size_t d = t.base.dimension();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.tile(i).dimension() == d) out.push_back(i);
  return out;
}

PointSet tiling_vertices(const Tiling& t) {
  std::set<Point> all;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (auto& p : vertices(t.tile(i))) all.insert(p);
  return {all.begin(), all.end()};
}

Tiling close_under_faces(const Tiling& t) {
  std::map<PointSet, SignVector> by_vertices;
  for (std::size_t i = 0; i < t.size(); ++i) by_vertices.emplace(vertices(t.tile(i)), t.tiles[i]);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (auto& f : faces_of(t.tile(i))) by_vertices.emplace(vertices(f), f.sign);
  std::vector<SignVector> tiles;
  for (auto& [v, s] : by_vertices) tiles.push_back(s);
  return Tiling(t.base, std::move(tiles));
}

namespace {

std::set<PointSet> polytopes(const Tiling& t) {
  std::set<PointSet> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.insert(vertices(t.tile(i)));
  return out;
}

}  // namespace

bool same_tiling(const Tiling& a, const Tiling& b) {
  return same_polytope(a.base, b.base) && polytopes(a) == polytopes(b);
}

std::vector<Violation> validate_tiling(const Tiling& t) {
  std::vector<Violation> out;
  const auto info = describe(t);
  const std::size_t d = t.base.dimension();
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < info.size(); ++i)
    if (info[i].dimension == d) maximal.push_back(i);

  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t.base.sign.conforms_to(t.tiles[i]))
      out.push_back({"outside", {i}, "tile " + t.tiles[i].str() + " is not contained in the base zonotope"});
  if (!out.empty()) return out;

  std::map<PointSet, std::size_t> by_vertices;
  for (std::size_t i = 0; i < info.size(); ++i) {
    auto [it, fresh] = by_vertices.emplace(info[i].vertices, i);
    if (!fresh)
      out.push_back({"labels", {it->second, i},
                     "tiles " + t.tiles[it->second].str() + " and " + t.tiles[i].str() + " are the same polytope"});
  }

  Integer total = 0;
  for (auto i : maximal) total += volume(info[i].zonotope);
  const Integer expected = volume(t.base);
  if (total != expected)
    out.push_back({"volume", maximal,
                   "maximal tiles have total volume " + total.get_str() + ", base has " + expected.get_str()});

  std::vector<std::vector<FaceData>> faces(info.size());
  for (std::size_t i = 0; i < info.size(); ++i) faces[i] = detail::face_data(info[i].zonotope);

  for (std::size_t i = 0; i < info.size(); ++i)
    for (const auto& f : faces[i]) {
      auto it = by_vertices.find(f.vertices);
      if (it == by_vertices.end()) {
        out.push_back({"face_closure", {i}, "face " + f.sign.str() + " of tile " + t.tiles[i].str() + " is missing"});
      } else if (t.tiles[it->second] != f.sign) {
        out.push_back({"labels", {i, it->second},
                       "face of " + t.tiles[i].str() + " is labelled " + t.tiles[it->second].str() + " instead of " +
                           f.sign.str()});
      }
    }

  for (std::size_t i = 0; i < info.size(); ++i) {
    if (info[i].dimension == d) continue;
    bool found = false;
    for (auto m : maximal) {
      for (const auto& f : faces[m])
        if (f.vertices == info[i].vertices) found = true;
      if (found) break;
    }
    if (!found) out.push_back({"not_a_face", {i}, "tile " + t.tiles[i].str() + " is not a face of a maximal tile"});
  }

  for (std::size_t x = 0; x < maximal.size(); ++x)
    for (std::size_t y = x + 1; y < maximal.size(); ++y) {
      const auto i = maximal[x], j = maximal[y];
      switch (detail::check_pair(info[i].zonotope, faces[i], info[j].zonotope, faces[j], true)) {
        case detail::PairStatus::ok: break;
        case detail::PairStatus::overlap:
          out.push_back({"overlap", {i, j}, "tiles " + t.tiles[i].str() + " and " + t.tiles[j].str() + " overlap"});
          break;
        case detail::PairStatus::intersection:
          out.push_back({"intersection", {i, j},
                         "tiles " + t.tiles[i].str() + " and " + t.tiles[j].str() +
                             " do not meet in a common face"});
          break;
        case detail::PairStatus::labels:
          out.push_back({"labels", {i, j},
                         "tiles " + t.tiles[i].str() + " and " + t.tiles[j].str() + " label a common face differently"});
          break;
      }
    }
  return out;
}

LiftResult tiling_from_lift(const VectorConfig& config, const IntVector& r) {
  if (r.size() != config.size())
    throw InputError("lift has length " + std::to_string(r.size()) + ", expected " + std::to_string(config.size()));
  if (!validate_config(config).spanning) throw InputError("tiling_from_lift needs a spanning configuration");
  const std::size_t d = config.rank;
  std::vector<IntVector> lifted;
  for (std::size_t e = 0; e < config.size(); ++e) {
    IntVector v = config.vectors[e];
    v.push_back(r[e]);
    lifted.push_back(std::move(v));
  }
  IntVector infinity = zero_vector(d + 1);
  infinity[d] = 1;
  lifted.push_back(infinity);
  std::vector<unsigned> mask(config.size(), 7u);
  mask.push_back(4u);

  std::vector<SignVector> tiles;
  for (const auto& c : covectors_restricted(lifted, d + 1, mask)) {
    std::vector<Sign> s(c.entries().begin(), c.entries().end() - 1);
    tiles.emplace_back(std::move(s));
  }
  LiftResult out{Tiling(Zonotope::full(config), std::move(tiles)), {}};
  for (const auto& s : out.tiling.tiles) {
    if (!s.zero_set().empty()) continue;
    Integer value = 0;
    for (std::size_t e = 0; e < s.size(); ++e) value += to_int(s[e]) * r[e];
    out.psi.emplace_back(Zonotope(config, s).center(), value);
  }
  std::sort(out.psi.begin(), out.psi.end());
  return out;
}

namespace {

struct Candidate {
  SignVector sign;
  Zonotope zonotope;
  PointSet vertices;
  std::vector<FaceData> faces;
  std::vector<std::size_t> facets;  // indices into faces
  Integer volume;
};

class TilingSearch {
 public:
  explicit TilingSearch(const VectorConfig& config) : config_(config), base_(Zonotope::full(config)) {
    dim_ = base_.dimension();
    target_volume_ = volume(base_);
    const std::size_t n = config.size();
    std::vector<Sign> s(n, Sign::Minus);
    std::set<PointSet> seen_signs;
    // Every sign vector whose zonotope is full-dimensional is a candidate.
    std::function<void(std::size_t)> build = [&](std::size_t e) {
      if (e == n) {
        Zonotope z(config, SignVector(s));
        if (z.dimension() != dim_) return;
        Candidate c{z.sign, z, vertices(z), detail::face_data(z), {}, volume(z)};
        for (std::size_t i = 0; i < c.faces.size(); ++i)
          if (c.faces[i].dimension + 1 == dim_) c.facets.push_back(i);
        candidates_.push_back(std::move(c));
        return;
      }
      for (Sign x : {Sign::Minus, Sign::Zero, Sign::Plus}) {
        s[e] = x;
        build(e + 1);
      }
    };
    build(0);
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      for (auto f : candidates_[i].facets) by_facet_[candidates_[i].faces[f].vertices].push_back(i);
  }

  std::vector<Tiling> run() {
    std::vector<std::size_t> seeds = seed_candidates();
    for (auto c : seeds) {
      placed_ = {c};
      counts_.clear();
      add_facets(c, +1);
      search();
    }
    std::vector<Tiling> out;
    for (auto& [key, tiling] : found_) out.push_back(std::move(tiling));
    return out;
  }

 private:
  std::vector<std::size_t> seed_candidates() {
    Rational delta(1, 1000);
    while (true) {
      RatVector p(config_.rank);
      Rational power = delta;
      for (auto& x : p) {
        x = power;
        power *= delta;
      }
      std::vector<std::size_t> inside;
      bool generic = true;
      for (std::size_t i = 0; i < candidates_.size() && generic; ++i) {
        if (!contains_point(candidates_[i].zonotope, p)) continue;
        if (!relint_contains_point(candidates_[i].zonotope, p))
          generic = false;
        else
          inside.push_back(i);
      }
      if (generic) return inside;
      delta /= 7;
    }
  }

  bool boundary(const PointSet& facet) {
    auto it = boundary_cache_.find(facet);
    if (it != boundary_cache_.end()) return it->second;
    const bool b = !relint_contains_point(base_, detail::centroid(facet));
    boundary_cache_.emplace(facet, b);
    return b;
  }

  void add_facets(std::size_t c, int delta) {
    for (auto f : candidates_[c].facets) {
      const auto& key = candidates_[c].faces[f].vertices;
      if (boundary(key)) continue;
      counts_[key] += delta;
      if (counts_[key] == 0) counts_.erase(key);
    }
  }

  bool compatible(std::size_t i, std::size_t j) {
    const auto key = std::minmax(i, j);
    auto it = compat_.find(key);
    if (it != compat_.end()) return it->second;
    const auto& a = candidates_[i];
    const auto& b = candidates_[j];
    const bool ok = detail::check_pair(a.zonotope, a.faces, b.zonotope, b.faces, true) == detail::PairStatus::ok;
    compat_.emplace(key, ok);
    return ok;
  }

  void search() {
    const PointSet* open = nullptr;
    for (const auto& [key, count] : counts_)
      if (count == 1) {
        open = &key;
        break;
      }
    if (!open) {
      record();
      return;
    }
    const PointSet facet = *open;
    for (auto c : by_facet_[facet]) {
      if (std::find(placed_.begin(), placed_.end(), c) != placed_.end()) continue;
      bool ok = true;
      for (auto p : placed_)
        if (!compatible(p, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      placed_.push_back(c);
      add_facets(c, +1);
      search();
      add_facets(c, -1);
      placed_.pop_back();
    }
  }

  void record() {
    Integer total = 0;
    for (auto c : placed_) total += candidates_[c].volume;
    if (total != target_volume_) return;
    std::vector<SignVector> tiles;
    std::set<PointSet> key;
    for (auto c : placed_) {
      tiles.push_back(candidates_[c].sign);
      key.insert(candidates_[c].vertices);
    }
    if (found_.count(key)) return;
    found_.emplace(key, close_under_faces(Tiling(base_, std::move(tiles))));
  }

  VectorConfig config_;
  Zonotope base_;
  std::size_t dim_ = 0;
  Integer target_volume_;
  std::vector<Candidate> candidates_;
  std::map<PointSet, std::vector<std::size_t>> by_facet_;
  std::map<PointSet, bool> boundary_cache_;
  std::map<std::pair<std::size_t, std::size_t>, bool> compat_;
  std::vector<std::size_t> placed_;
  std::map<PointSet, int> counts_;
  std::map<std::set<PointSet>, Tiling> found_;
};

}  // namespace

std::vector<Tiling> enumerate_tilings(const VectorConfig& config) {
  config.check();
  if (config.rank > 3 || config.size() > 6)
    throw ScaleError("enumerate_tilings supports rank <= 3 and at most 6 vectors (got rank " +
                     std::to_string(config.rank) + ", " + std::to_string(config.size()) + " vectors)");
  if (!validate_config(config).spanning) throw InputError("enumerate_tilings needs a spanning configuration");
  return TilingSearch(config).run();
}

LocalFan local_fan(const Tiling& t, std::size_t f) {
  if (f >= t.size()) throw InputError("tile index out of range");
  const auto info = describe(t);
  const auto& F = info[f];
  const Point c = F.zonotope.center();
  std::vector<IntVector> span;
  for (const auto& p : F.vertices) {
    IntVector v(p.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i] - c[i];
    span.push_back(std::move(v));
  }
  const SubLattice lineality = saturation(hermite_basis(span, t.base.config.rank)).lattice;

  LocalFan out;
  out.fan.ambient_dim = t.base.config.rank;
  const std::size_t ambient = t.base.config.rank;
  std::vector<std::size_t> top, walls;
  for (std::size_t i = 0; i < info.size(); ++i) {
    if (!std::includes(info[i].vertices.begin(), info[i].vertices.end(), F.vertices.begin(), F.vertices.end()))
      continue;
    std::set<IntVector> gens;
    for (const auto& p : info[i].vertices) {
      IntVector v(p.size());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = p[k] - c[k];
      if (!lineality.contains(v)) gens.insert(primitive(v));
    }
    out.fan.cones.push_back({{gens.begin(), gens.end()}, lineality});
    out.source_tiles.push_back(i);
    if (info[i].dimension == ambient) top.push_back(i);
    if (info[i].dimension + 1 == ambient) walls.push_back(i);
  }
  // Complete iff the fan is pure and every wall borders exactly two chambers.
  bool complete = !top.empty();
  for (auto w : walls) {
    std::size_t incident = 0;
    for (auto m : top)
      if (std::includes(info[m].vertices.begin(), info[m].vertices.end(), info[w].vertices.begin(),
                        info[w].vertices.end()))
        ++incident;
    if (incident != 2) complete = false;
  }
  out.complete = complete;
  return out;
}

bool is_refinement(const Tiling& finer, const Tiling& coarser) {
  if (!same_polytope(finer.base, coarser.base)) throw InputError("tilings have different base zonotopes");
  const auto fine = describe(finer);
  const auto coarse = describe(coarser);
  for (const auto& f : fine) {
    bool inside = false;
    for (const auto& g : coarse) {
      if (g.dimension < f.dimension) continue;
      inside = std::all_of(f.vertices.begin(), f.vertices.end(),
                           [&](const Point& p) { return contains_point(g.zonotope, to_rational(p)); });
      if (inside) break;
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace hypertile
