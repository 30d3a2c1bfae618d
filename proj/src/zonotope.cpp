#include "hypertile/zonotope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hypertile {

Sign sign_of(const Integer& x) { return x > 0 ? Sign::Plus : (x < 0 ? Sign::Minus : Sign::Zero); }
Sign sign_of(const Rational& x) { return x > 0 ? Sign::Plus : (x < 0 ? Sign::Minus : Sign::Zero); }

char to_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    default: return '0';
  }
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<Sign> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': out.push_back(Sign::Plus); break;
      case '-': out.push_back(Sign::Minus); break;
      case '0': out.push_back(Sign::Zero); break;
      default: throw InputError("sign vector may only contain '+', '-', '0': \"" + std::string(text) + "\"");
    }
  }
  return SignVector(std::move(out));
}

std::string SignVector::str() const {
  std::string s;
  for (Sign x : entries_) s.push_back(to_char(x));
  return s;
}

bool SignVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Sign s) { return s == Sign::Zero; });
}

SignVector SignVector::negated() const {
  SignVector out(*this);
  for (auto& s : out.entries_) s = static_cast<Sign>(-to_int(s));
  return out;
}

std::vector<std::size_t> SignVector::zero_set() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] == Sign::Zero) out.push_back(i);
  return out;
}

bool SignVector::conforms_to(const SignVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] != Sign::Zero && entries_[i] != other.entries_[i]) return false;
  return true;
}

void VectorConfig::check() const {
  for (const auto& v : vectors)
    if (v.size() != rank) throw InputError("vector " + to_string(v) + " does not have length " + std::to_string(rank));
}

ConfigFlags validate_config(const VectorConfig& config) {
  config.check();
  ConfigFlags flags;
  flags.primitive = std::all_of(config.vectors.begin(), config.vectors.end(), [](const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
  });
  flags.spanning = rational_rank(config.vectors, config.rank) == config.rank;
  return flags;
}

Zonotope::Zonotope(VectorConfig c, SignVector s, IntVector t)
    : config(std::move(c)), sign(std::move(s)), translation(std::move(t)) {
  config.check();
  if (sign.size() != config.size())
    throw InputError("sign vector " + sign.str() + " does not have length " + std::to_string(config.size()));
  if (!translation.empty() && translation.size() != config.rank)
    throw InputError("translation " + to_string(translation) + " does not have length " +
                     std::to_string(config.rank));
}

Zonotope Zonotope::full(const VectorConfig& c) { return Zonotope(c, SignVector(c.size())); }

Point Zonotope::center() const {
  Point c = translation.empty() ? zero_vector(config.rank) : translation;
  for (std::size_t e = 0; e < config.size(); ++e) {
    if (sign[e] == Sign::Zero) continue;
    const int s = to_int(sign[e]);
    for (std::size_t i = 0; i < config.rank; ++i) c[i] += s * config.vectors[e][i];
  }
  return c;
}

std::vector<std::size_t> Zonotope::free_indices() const { return sign.zero_set(); }

std::vector<IntVector> Zonotope::free_vectors() const {
  std::vector<IntVector> out;
  for (auto e : free_indices()) out.push_back(config.vectors[e]);
  return out;
}

std::size_t Zonotope::dimension() const { return rational_rank(free_vectors(), config.rank); }

LinearSystem covector_system(const VectorConfig& config, const SignVector& sign) {
  config.check();
  if (sign.size() != config.size()) throw InputError("covector_system: sign vector length mismatch");
  LinearSystem sys;
  sys.dim = config.rank;
  for (std::size_t e = 0; e < config.size(); ++e) {
    const auto& a = config.vectors[e];
    switch (sign[e]) {
      case Sign::Plus: sys.strict.push_back(a); break;
      case Sign::Minus: {
        IntVector n(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) n[i] = -a[i];
        sys.strict.push_back(std::move(n));
        break;
      }
      case Sign::Zero: sys.equalities.push_back(a); break;
    }
  }
  return sys;
}

std::optional<RatVector> covector_witness(const VectorConfig& config, const SignVector& sign) {
  return feasible_strict(covector_system(config, sign));
}

bool is_covector(const VectorConfig& config, const SignVector& sign) {
  return covector_witness(config, sign).has_value();
}

CovectorSet covectors_restricted(const std::vector<IntVector>& vectors, std::size_t dim,
                                 const std::vector<unsigned>& allowed) {
  if (allowed.size() != vectors.size()) throw InputError("covectors_restricted: mask length mismatch");
  for (const auto& v : vectors)
    if (v.size() != dim) throw InputError("covectors_restricted: vector length mismatch");
  const std::size_t n = vectors.size();
  CovectorSet out;
  LinearSystem sys;
  sys.dim = dim;
  std::vector<Sign> partial(n, Sign::Zero);

  // Depth-first over E; only feasible prefixes are extended.  The parent's
  // witness certifies the child that copies its sign without another LP.
  std::function<void(std::size_t, const RatVector&)> extend = [&](std::size_t e, const RatVector& witness) {
    if (e == n) {
      out.emplace_back(partial);
      return;
    }
    const auto& a = vectors[e];
    const Sign free_sign = sign_of(dot(a, witness));
    for (Sign s : {Sign::Minus, Sign::Zero, Sign::Plus}) {
      const unsigned bit = s == Sign::Minus ? 1u : (s == Sign::Zero ? 2u : 4u);
      if (!(allowed[e] & bit)) continue;
      if (s == Sign::Zero) {
        sys.equalities.push_back(a);
      } else {
        IntVector row = a;
        if (s == Sign::Minus)
          for (auto& x : row) x = -x;
        sys.strict.push_back(std::move(row));
      }
      std::optional<RatVector> w;
      if (s == free_sign)
        w = witness;
      else
        w = feasible_strict(sys);
      if (w) {
        partial[e] = s;
        extend(e + 1, *w);
      }
      if (s == Sign::Zero)
        sys.equalities.pop_back();
      else
        sys.strict.pop_back();
    }
    partial[e] = Sign::Zero;
  };
  extend(0, RatVector(dim, Rational(0)));
  std::sort(out.begin(), out.end());
  return out;
}

CovectorSet covectors(const VectorConfig& config) {
  config.check();
  return covectors_restricted(config.vectors, config.rank, std::vector<unsigned>(config.size(), 7u));
}

namespace {

std::vector<unsigned> tope_mask(const std::vector<IntVector>& vectors) {
  std::vector<unsigned> mask;
  for (const auto& v : vectors) mask.push_back(is_zero(v) ? 2u : 5u);
  return mask;
}

// Compose a covector of the free restriction back into a full sign vector.
SignVector compose(const SignVector& base, const std::vector<std::size_t>& free, const SignVector& local) {
  SignVector out = base;
  for (std::size_t i = 0; i < free.size(); ++i) out[free[i]] = local[i];
  return out;
}

Integer determinant(std::vector<IntVector> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::vector<Zonotope> faces_of(const Zonotope& z) {
  const auto free = z.free_indices();
  const auto fv = z.free_vectors();
  std::vector<Zonotope> out;
  std::set<PointSet> seen;
  for (const auto& local : covectors_restricted(fv, z.config.rank, std::vector<unsigned>(fv.size(), 7u))) {
    Zonotope f(z.config, compose(z.sign, free, local), z.translation);
    if (seen.insert(vertices(f)).second) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Zonotope> faces(const Zonotope& z) {
  if (!z.sign.is_zero() && !is_covector(z.config, z.sign))
    throw InputError("sign vector " + z.sign.str() + " is not a covector of the configuration");
  return faces_of(z);
}

PointSet vertices(const Zonotope& z) {
  const auto fv = z.free_vectors();
  const Point c = z.center();
  PointSet out;
  for (const auto& tope : covectors_restricted(fv, z.config.rank, tope_mask(fv))) {
    Point p = c;
    for (std::size_t i = 0; i < fv.size(); ++i) {
      const int s = to_int(tope[i]);
      if (s == 0) continue;
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += s * fv[i][k];
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer volume(const Zonotope& z) {
  const auto fv = z.free_vectors();
  const SubLattice span = saturation(hermite_basis(fv, z.config.rank)).lattice;
  const std::size_t k = span.rank();
  std::vector<IntVector> coords;
  for (const auto& v : fv) {
    if (is_zero(v)) continue;
    auto c = lattice_coordinates(span, v);
    IntVector ic;
    for (const auto& x : *c) ic.push_back(x.get_num());
    coords.push_back(std::move(ic));
  }
  Integer total = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == k) {
      std::vector<IntVector> m;
      for (auto i : pick) m.push_back(coords[i]);
      total += abs(determinant(std::move(m)));
      return;
    }
    for (std::size_t i = start; i < coords.size(); ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  Integer scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(k);
  return scale * total;
}

VerticesAndVolume vertices_and_volume(const Zonotope& z) { return {vertices(z), volume(z)}; }

bool same_polytope(const Zonotope& a, const Zonotope& b) { return vertices(a) == vertices(b); }

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::cube: return "cube";
    case BlockKind::parallelotope: return "parallelotope";
    default: return "general";
  }
}

BlockKind classify_block(const Zonotope& z) {
  // Expand a_e = g * p into g copies of the primitive p so the answer only
  // depends on the polytope.
  std::vector<IntVector> expanded;
  for (const auto& v : z.free_vectors()) {
    if (is_zero(v)) continue;
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    const IntVector p = primitive(v);
    for (Integer i = 0; i < g; ++i) expanded.push_back(p);
  }
  const SubLattice span = hermite_basis(expanded, z.config.rank);
  if (span.rank() != expanded.size()) return BlockKind::general;
  return saturation(span).index == 1 ? BlockKind::cube : BlockKind::parallelotope;
}

namespace {

struct ScaledPoint {
  IntVector numerators;
  Integer denominator;
};

ScaledPoint scale_point(const RatVector& p) {
  Integer l = 1;
  for (const auto& x : p) l = lcm(l, x.get_den());
  ScaledPoint out{IntVector(p.size()), l};
  for (std::size_t i = 0; i < p.size(); ++i) out.numerators[i] = Rational(p[i] * l).get_num();
  return out;
}

// Rows for |t_e| <= tau (or < tau), variables laid out as [t..., tau].
void add_box(LinearSystem& sys, std::size_t offset, std::size_t count, std::size_t tau, bool strict) {
  for (std::size_t i = 0; i < count; ++i) {
    IntVector up = zero_vector(sys.dim), down = zero_vector(sys.dim);
    up[tau] = 1;
    up[offset + i] = -1;
    down[tau] = 1;
    down[offset + i] = 1;
    auto& dst = strict ? sys.strict : sys.weak;
    dst.push_back(std::move(up));
    dst.push_back(std::move(down));
  }
}

std::optional<RatVector> point_system(const Zonotope& z, const RatVector& point, bool strict) {
  if (point.size() != z.config.rank) throw InputError("point has the wrong dimension");
  const auto fv = z.free_vectors();
  const std::size_t n = fv.size();
  const ScaledPoint sp = scale_point(point);
  const Point c = z.center();
  LinearSystem sys;
  sys.dim = n + 1;
  for (std::size_t i = 0; i < z.config.rank; ++i) {
    IntVector row = zero_vector(n + 1);
    for (std::size_t e = 0; e < n; ++e) row[e] = sp.denominator * fv[e][i];
    row[n] = -(sp.numerators[i] - sp.denominator * c[i]);
    sys.equalities.push_back(std::move(row));
  }
  add_box(sys, 0, n, n, strict);
  IntVector tau = zero_vector(n + 1);
  tau[n] = 1;
  sys.strict.push_back(std::move(tau));
  auto w = feasible_strict(sys);
  if (!w) return std::nullopt;
  RatVector t(n);
  for (std::size_t e = 0; e < n; ++e) t[e] = (*w)[e] / (*w)[n];
  return t;
}

std::optional<RatVector> pair_system(const Zonotope& a, const Zonotope& b, bool strict) {
  if (a.config.rank != b.config.rank) throw InputError("zonotopes live in different lattices");
  const auto fa = a.free_vectors();
  const auto fb = b.free_vectors();
  const std::size_t na = fa.size(), nb = fb.size();
  const Point ca = a.center(), cb = b.center();
  LinearSystem sys;
  sys.dim = na + nb + 1;
  const std::size_t tau = na + nb;
  for (std::size_t i = 0; i < a.config.rank; ++i) {
    IntVector row = zero_vector(sys.dim);
    for (std::size_t e = 0; e < na; ++e) row[e] = fa[e][i];
    for (std::size_t f = 0; f < nb; ++f) row[na + f] = -fb[f][i];
    row[tau] = ca[i] - cb[i];
    sys.equalities.push_back(std::move(row));
  }
  add_box(sys, 0, na, tau, strict);
  add_box(sys, na, nb, tau, strict);
  IntVector t = zero_vector(sys.dim);
  t[tau] = 1;
  sys.strict.push_back(std::move(t));
  return feasible_strict(sys);
}

}  // namespace

bool contains_point(const Zonotope& z, const RatVector& point) { return point_system(z, point, false).has_value(); }

bool relint_contains_point(const Zonotope& z, const RatVector& point) {
  return point_system(z, point, true).has_value();
}

bool intersects(const Zonotope& a, const Zonotope& b) { return pair_system(a, b, false).has_value(); }

bool relints_overlap(const Zonotope& a, const Zonotope& b) { return pair_system(a, b, true).has_value(); }

std::optional<RatVector> decompose(const Zonotope& z, const RatVector& point) {
  auto local = point_system(z, point, false);
  if (!local) return std::nullopt;
  RatVector t(z.config.size());
  const auto free = z.free_indices();
  for (std::size_t e = 0; e < z.config.size(); ++e) t[e] = to_int(z.sign[e]);
  for (std::size_t i = 0; i < free.size(); ++i) t[free[i]] = (*local)[i];
  return t;
}

long affine_dimension(const PointSet& points) {
  if (points.empty()) return -1;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<long>(rational_rank(diffs, points[0].size()));
}

}  // namespace hypertile
