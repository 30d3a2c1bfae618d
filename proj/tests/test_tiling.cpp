#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hypertile/tiling.hpp"
#include "oracles.hpp"

using namespace hypertile;
using th::iv;
using th::ivs;

namespace {

std::size_t tile_at(const Tiling& t, const PointSet& v) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (vertices(t.tile(i)) == v) return i;
  FAIL("no such tile");
  return 0;
}

std::set<PointSet> maximal_polytopes(const Tiling& t) {
  std::set<PointSet> out;
  for (auto i : maximal_tiles(t)) out.insert(vertices(t.tile(i)));
  return out;
}

}  // namespace

TEST_CASE("fixture tilings validate") {
  CHECK(validate_tiling(fx::trivial(fx::hexagon())).empty());
  CHECK(validate_tiling(fx::hexagon_left()).empty());
  CHECK(validate_tiling(fx::hexagon_right()).empty());
  CHECK(validate_tiling(fx::tpl()).empty());
  CHECK(validate_tiling(fx::irregular_box()).empty());
  CHECK(fx::hexagon_left().size() == 3 + 9 + 7);
  CHECK(maximal_tiles(fx::irregular_box()).size() == 27);
}

TEST_CASE("overlapping rhombi with a gap are rejected") {
  auto t = fx::from_strings(Zonotope::full(fx::hexagon()), {"00-", "0-0"});
  auto v = validate_tiling(t);
  std::set<std::string> kinds;
  for (auto& x : v) kinds.insert(x.kind);
  CHECK(kinds.count("volume"));
  CHECK(kinds.count("overlap"));
}

TEST_CASE("missing faces and foreign tiles are reported") {
  Tiling t(Zonotope::full(fx::hexagon()), {SignVector::parse("00-"), SignVector::parse("0+0"), SignVector::parse("+00")});
  auto v = validate_tiling(t);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == "face_closure");
  Tiling sub(Zonotope(fx::hexagon(), SignVector::parse("00+")), {SignVector::parse("0--")});
  auto w = validate_tiling(sub);
  REQUIRE(w.size() == 1);
  CHECK(w.front().kind == "outside");
}

TEST_CASE("mixed labels of parallel vectors are rejected") {
  auto t = fx::from_strings(Zonotope::full({1, ivs({{1}, {1}})}), {"+0", "-0"});
  auto v = validate_tiling(t);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == "labels");
}

TEST_CASE("tiling_from_lift on the hexagon") {
  auto res = tiling_from_lift(fx::hexagon(), iv({1, 0, 0}));
  CHECK(validate_tiling(res.tiling).empty());
  CHECK(same_tiling(res.tiling, fx::hexagon_left()));
  auto m = maximal_tiles(res.tiling);
  std::set<std::string> signs;
  for (auto i : m) signs.insert(res.tiling.tiles[i].str());
  CHECK(signs == std::set<std::string>{"00-", "0+0", "+00"});
  CHECK(Zonotope(fx::hexagon(), SignVector::parse("00-")).center() == iv({-1, -1}));
  CHECK(res.psi.size() == 7);
}

TEST_CASE("zero lift gives the trivial tiling") {
  CHECK(same_tiling(tiling_from_lift(fx::hexagon(), iv({0, 0, 0})).tiling, fx::trivial(fx::hexagon())));
  CHECK_THROWS_AS(tiling_from_lift({2, ivs({{1, 0}, {-1, 0}})}, iv({0, 0})), InputError);
  CHECK_THROWS_AS(tiling_from_lift(fx::hexagon(), iv({0, 0})), InputError);
}

TEST_CASE("chain lift gives unit tiles") {
  for (int r = 1; r <= 5; ++r) {
    auto t = fx::chain(r);
    std::set<PointSet> expected;
    for (int i = 0; i < r; ++i) expected.insert({iv({-r + 2 * i}), iv({-r + 2 * i + 2})});
    CHECK(maximal_polytopes(t) == expected);
  }
}

TEST_CASE("enumerate_tilings census") {
  auto hex = enumerate_tilings(fx::hexagon());
  CHECK(hex.size() == 3);
  for (const auto& t : hex) CHECK(validate_tiling(t).empty());
  CHECK(enumerate_tilings({2, ivs({{1, 1}, {1, -1}})}).size() == 1);
  auto interval = enumerate_tilings({1, ivs({{1}, {1}})});
  CHECK(interval.size() == 2);
  std::set<std::set<PointSet>> got;
  for (const auto& t : interval) got.insert(maximal_polytopes(t));
  CHECK(got == std::set<std::set<PointSet>>{{{iv({-2}), iv({2})}}, {{iv({-2}), iv({0})}, {iv({0}), iv({2})}}});
  CHECK_THROWS_AS(enumerate_tilings({4, ivs({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})}), ScaleError);
  CHECK_THROWS_AS(enumerate_tilings({1, ivs({{1}, {1}, {1}, {1}, {1}, {1}, {1}})}), ScaleError);
}

TEST_CASE("small enumeration counts") {
  // [-3,3] split at any subset of {-1, 1}
  CHECK(enumerate_tilings({1, ivs({{1}, {1}, {1}})}).size() == 4);
  // octagon: 8 rhombic tilings, 4 x 2 hexagon-plus-three-rhombi tilings, trivial
  CHECK(enumerate_tilings({2, ivs({{1, 0}, {0, 1}, {1, 1}, {1, -1}})}).size() == 17);
}

TEST_CASE("local fans") {
  auto chain = fx::chain(2);
  auto zero = tile_at(chain, {iv({0})});
  auto lf = local_fan(chain, zero);
  CHECK(lf.complete);
  std::set<IntVector> rays;
  for (const auto& c : lf.fan.cones)
    for (const auto& g : c.generators) rays.insert(g);
  CHECK(rays == std::set<IntVector>{iv({1}), iv({-1})});

  auto triv = fx::trivial(fx::hexagon());
  auto corner = local_fan(triv, triv.index_of(SignVector::parse("+++")));
  CHECK_FALSE(corner.complete);
  CHECK(corner.fan.cones.size() == 4);

  auto whole = local_fan(triv, triv.index_of(SignVector::parse("000")));
  CHECK(whole.complete);
  REQUIRE(whole.fan.cones.size() == 1);
  CHECK(whole.fan.cones[0].lineality == SubLattice::full(2));

  auto left = fx::hexagon_left();
  auto centre = local_fan(left, tile_at(left, {iv({0, 0})}));
  CHECK(centre.complete);
  CHECK(centre.fan.cones.size() == 7);
  CHECK_THROWS_AS(local_fan(left, 1000), InputError);
}

TEST_CASE("refinement") {
  auto triv = fx::trivial({1, ivs({{1}, {1}})});
  auto split = fx::from_strings(Zonotope::full({1, ivs({{1}, {1}})}), {"+0", "0-"});
  CHECK(is_refinement(split, triv));
  CHECK_FALSE(is_refinement(triv, split));
  CHECK(is_refinement(fx::hexagon_left(), fx::trivial(fx::hexagon())));
  CHECK_FALSE(is_refinement(fx::hexagon_left(), fx::hexagon_right()));
  CHECK_THROWS_AS(is_refinement(fx::hexagon_left(), triv), InputError);
}

TEST_CASE("translation keeps tilings valid") {
  auto t = fx::hexagon_left();
  Tiling moved(Zonotope(t.base.config, t.base.sign, iv({3, -5})), t.tiles);
  CHECK(validate_tiling(moved).empty());
  CHECK(maximal_tiles(moved) == maximal_tiles(t));
  CHECK(local_fan(moved, 0).complete == local_fan(t, 0).complete);
}

TEST_CASE("random lifts: validity, face count, enumeration containment") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-3, 3);
  const std::vector<VectorConfig> configs = {
      fx::hexagon(), {1, ivs({{1}, {1}, {1}})}, {2, ivs({{1, 0}, {0, 1}, {1, 1}, {1, -1}})}, fx::tpl_config()};
  std::vector<std::vector<Tiling>> all;
  for (const auto& c : configs) all.push_back(enumerate_tilings(c));
  for (int trial = 0; trial < 40; ++trial) {
    const auto& c = configs[trial % configs.size()];
    IntVector r;
    for (std::size_t e = 0; e < c.size(); ++e) r.emplace_back(d(rng));
    auto res = tiling_from_lift(c, r);
    CHECK(validate_tiling(res.tiling).empty());
    CHECK(res.tiling.size() == oracle::affine_face_count(c.vectors, r, c.rank));
    const auto& family = all[trial % configs.size()];
    CHECK(std::any_of(family.begin(), family.end(), [&](const Tiling& t) { return same_tiling(t, res.tiling); }));
  }
}
