#include "hypertile/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hypertile {

using nlohmann::json;

namespace {

Integer read_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw InputError(where + ": \"" + s + "\" is not an integer");
    return out;
  }
  throw InputError(where + ": expected an integer");
}

IntVector read_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json write_integer(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json write_vector(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(write_integer(x));
  return out;
}

void check_signs(const std::string& s, std::size_t n, const std::string& where) {
  if (s.size() != n) throw InputError(where + ": \"" + s + "\" does not have length " + std::to_string(n));
  SignVector::parse(s);
}

}  // namespace

ProblemDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("document must be a JSON object");
  static const std::set<std::string> known{"rank", "vectors", "sign", "lift", "tiles", "translation", "tile_vertices"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw InputError("unknown field \"" + key + "\"");
  if (!j.contains("rank") || !j.contains("vectors")) throw InputError("fields \"rank\" and \"vectors\" are required");

  ProblemDocument doc;
  const Integer rank = read_integer(j["rank"], "rank");
  if (rank < 0 || !rank.fits_uint_p()) throw InputError("rank must be a non-negative integer");
  doc.rank = rank.get_ui();
  if (!j["vectors"].is_array()) throw InputError("vectors: expected an array");
  for (std::size_t i = 0; i < j["vectors"].size(); ++i) {
    const std::string where = "vectors[" + std::to_string(i) + "]";
    doc.vectors.push_back(read_vector(j["vectors"][i], where));
    if (doc.vectors.back().size() != doc.rank)
      throw InputError(where + " does not have length " + std::to_string(doc.rank));
  }
  const std::size_t n = doc.vectors.size();
  if (j.contains("sign")) {
    if (!j["sign"].is_string()) throw InputError("sign: expected a string");
    doc.sign = j["sign"].get<std::string>();
    check_signs(*doc.sign, n, "sign");
  }
  if (j.contains("lift")) {
    doc.lift = read_vector(j["lift"], "lift");
    if (doc.lift->size() != n) throw InputError("lift does not have length " + std::to_string(n));
  }
  if (j.contains("tiles")) {
    if (!j["tiles"].is_array()) throw InputError("tiles: expected an array");
    doc.tiles.emplace();
    for (std::size_t i = 0; i < j["tiles"].size(); ++i) {
      const std::string where = "tiles[" + std::to_string(i) + "]";
      if (!j["tiles"][i].is_string()) throw InputError(where + ": expected a string");
      doc.tiles->push_back(j["tiles"][i].get<std::string>());
      check_signs(doc.tiles->back(), n, where);
    }
  }
  if (j.contains("translation")) {
    doc.translation = read_vector(j["translation"], "translation");
    if (doc.translation->size() != doc.rank)
      throw InputError("translation does not have length " + std::to_string(doc.rank));
  }
  if (j.contains("tile_vertices")) {
    if (!j["tile_vertices"].is_array()) throw InputError("tile_vertices: expected an array");
    doc.tile_vertices.emplace();
    for (std::size_t i = 0; i < j["tile_vertices"].size(); ++i) {
      const std::string where = "tile_vertices[" + std::to_string(i) + "]";
      const json& poly = j["tile_vertices"][i];
      if (!poly.is_array() || poly.empty()) throw InputError(where + ": expected a non-empty array of points");
      PointSet pts;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        pts.push_back(read_vector(poly[k], where + "[" + std::to_string(k) + "]"));
        if (pts.back().size() != doc.rank) throw InputError(where + ": point of wrong length");
      }
      doc.tile_vertices->push_back(std::move(pts));
    }
  }
  return doc;
}

ProblemDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_document(os.str());
}

std::string serialize_document(const ProblemDocument& doc) {
  json j;
  j["rank"] = doc.rank;
  j["vectors"] = json::array();
  for (const auto& v : doc.vectors) j["vectors"].push_back(write_vector(v));
  if (doc.sign) j["sign"] = *doc.sign;
  if (doc.lift) j["lift"] = write_vector(*doc.lift);
  if (doc.tiles) j["tiles"] = *doc.tiles;
  if (doc.translation) j["translation"] = write_vector(*doc.translation);
  if (doc.tile_vertices) {
    j["tile_vertices"] = json::array();
    for (const auto& poly : *doc.tile_vertices) {
      json pts = json::array();
      for (const auto& p : poly) pts.push_back(write_vector(p));
      j["tile_vertices"].push_back(std::move(pts));
    }
  }
  return j.dump(2) + "\n";
}

VectorConfig ProblemDocument::config() const { return {rank, vectors}; }

Zonotope ProblemDocument::base() const {
  return Zonotope(config(), sign ? SignVector::parse(*sign) : SignVector(vectors.size()),
                  translation.value_or(IntVector{}));
}

SignVector match_tile(const Zonotope& base, PointSet vertices_in) {
  const auto& c = base.config;
  std::sort(vertices_in.begin(), vertices_in.end());
  vertices_in.erase(std::unique(vertices_in.begin(), vertices_in.end()), vertices_in.end());
  for (const auto& p : vertices_in)
    if (p.size() != c.rank) throw InputError("tile vertex " + to_string(p) + " has the wrong length");
  // A zonotope's center is its vertex centroid; search sign vectors v with
  // translation + sum v_e a_e equal to it, pruned by coordinate bounds.
  const std::size_t n = c.size(), d = c.rank;
  std::vector<Rational> target(d, 0);
  for (const auto& p : vertices_in)
    for (std::size_t i = 0; i < d; ++i) target[i] += p[i];
  for (std::size_t i = 0; i < d; ++i) {
    target[i] /= static_cast<long>(vertices_in.size());
    if (!base.translation.empty()) target[i] -= base.translation[i];
  }
  // slack[e][i]: sum of |a_f[i]| over f >= e
  std::vector<IntVector> slack(n + 1, zero_vector(d));
  for (std::size_t e = n; e-- > 0;)
    for (std::size_t i = 0; i < d; ++i) slack[e][i] = slack[e + 1][i] + abs(c.vectors[e][i]);
  SignVector v(n);
  IntVector sum = zero_vector(d);
  std::vector<SignVector> found;
  std::function<void(std::size_t)> dfs = [&](std::size_t e) {
    if (found.size() > 1) return;
    for (std::size_t i = 0; i < d; ++i)
      if (abs(target[i] - sum[i]) > slack[e][i]) return;
    if (e == n) {
      const Zonotope z(c, v, base.translation);
      if (vertices(z) == vertices_in) found.push_back(v);
      return;
    }
    for (Sign s : {Sign::Minus, Sign::Zero, Sign::Plus}) {
      if (base.sign[e] != Sign::Zero && s != base.sign[e]) continue;
      v[e] = s;
      for (std::size_t i = 0; i < d; ++i) sum[i] += to_int(s) * c.vectors[e][i];
      dfs(e + 1);
      for (std::size_t i = 0; i < d; ++i) sum[i] -= to_int(s) * c.vectors[e][i];
    }
    v[e] = Sign::Zero;
  };
  dfs(0);
  std::string pts;
  for (const auto& p : vertices_in) pts += (pts.empty() ? "" : " ") + to_string(p);
  if (found.empty()) throw InputError("no tile of the base has vertices " + pts);
  if (found.size() > 1)
    throw InputError("tile with vertices " + pts + " matches both " + found[0].str() + " and " + found[1].str() +
                     "; give it as a sign string");
  return found[0];
}

Tiling ProblemDocument::tiling() const {
  const Zonotope z = base();
  if (tiles || tile_vertices) {
    std::vector<SignVector> parsed;
    if (tiles)
      for (const auto& s : *tiles) parsed.push_back(SignVector::parse(s));
    if (tile_vertices)
      for (const auto& poly : *tile_vertices) {
        parsed.push_back(match_tile(z, poly));
        if (Zonotope(z.config, parsed.back(), z.translation).dimension() != z.dimension())
          throw InputError("tile_vertices lists maximal tiles only; " + parsed.back().str() + " is lower dimensional");
      }
    return close_under_faces(Tiling(z, parsed));
  }
  if (lift) {
    if (!z.sign.is_zero()) throw InputError("a lift tiles Z(a); the sign must be all zeros");
    return Tiling(z, tiling_from_lift(config(), *lift).tiling.tiles);
  }
  return close_under_faces(Tiling(z, {z.sign}));
}

ProblemDocument document_from_tiling(const Tiling& t) {
  ProblemDocument doc;
  doc.rank = t.base.config.rank;
  doc.vectors = t.base.config.vectors;
  if (!t.base.sign.is_zero()) doc.sign = t.base.sign.str();
  if (!t.base.translation.empty() && !is_zero(t.base.translation)) doc.translation = t.base.translation;
  doc.tiles.emplace();
  for (auto i : maximal_tiles(t)) doc.tiles->push_back(t.tiles[i].str());
  return doc;
}

namespace {

// Counter-clockwise order around the vertex centroid (exact).
PointSet polygon_order(PointSet pts) {
  const std::size_t n = pts.size();
  IntVector sum = zero_vector(2);
  for (const auto& p : pts) {
    sum[0] += p[0];
    sum[1] += p[1];
  }
  auto rel = [&](const Point& p) { return IntVector{p[0] * Integer(n) - sum[0], p[1] * Integer(n) - sum[1]}; };
  auto upper = [](const IntVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const IntVector u = rel(a), v = rel(b);
    if (upper(u) != upper(v)) return upper(u);
    const Integer cross = u[0] * v[1] - u[1] * v[0];
    if (cross != 0) return cross > 0;
    return a < b;
  });
  return pts;
}

}  // namespace

std::string render_svg(const Tiling& t) {
  if (t.base.config.rank != 2) throw InputError("render-svg supports rank 2 only, got rank " + std::to_string(t.base.config.rank));
  constexpr long unit = 40, margin = 20;
  const auto info = describe(t);
  const PointSet verts = tiling_vertices(t);
  Integer minx = verts.front()[0], maxx = minx, miny = verts.front()[1], maxy = miny;
  for (const auto& v : verts) {
    minx = std::min(minx, v[0]);
    maxx = std::max(maxx, v[0]);
    miny = std::min(miny, v[1]);
    maxy = std::max(maxy, v[1]);
  }
  auto px = [&](const Point& p) {
    const Integer x = (p[0] - minx) * unit + margin;
    const Integer y = (maxy - p[1]) * unit + margin;
    return x.get_str() + "," + y.get_str();
  };
  const Integer width = (maxx - minx) * unit + 2 * margin;
  const Integer height = (maxy - miny) * unit + 2 * margin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<g fill=\"#e8eef7\" stroke=\"#1f3a5f\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
  for (auto i : maximal_tiles(t)) {
    os << "<polygon data-sign=\"" << t.tiles[i].str() << "\" points=\"";
    const PointSet ordered = polygon_order(info[i].vertices);
    for (std::size_t k = 0; k < ordered.size(); ++k) os << (k ? " " : "") << px(ordered[k]);
    os << "\"/>\n";
  }
  os << "</g>\n<g stroke=\"none\">\n";
  for (const auto& v : verts) {
    const bool interior = relint_contains_point(t.base, to_rational(v));
    const std::string xy = px(v);
    const auto comma = xy.find(',');
    os << "<circle class=\"" << (interior ? "interior" : "boundary") << "\" cx=\"" << xy.substr(0, comma)
       << "\" cy=\"" << xy.substr(comma + 1) << "\" r=\"" << (interior ? 5 : 3) << "\" fill=\""
       << (interior ? "#c0392b" : "#1f3a5f") << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace hypertile
