#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hypertile/support.hpp"
#include "oracles.hpp"

using namespace hypertile;
using th::iv;
using th::ivs;
using th::rv;

TEST_CASE("lattices of the trivial hexagon tiling") {
  auto l = tiling_lattices(fx::trivial(fx::hexagon()));
  CHECK(l.lambda == hermite_basis(ivs({{1, 1, -1}}), 3));
  CHECK(l.lambda_t == l.lambda);
  CHECK(l.p_t == hermite_basis(ivs({{1, 0, 1}, {0, 1, 1}}), 3));
}

TEST_CASE("lattices of cubical tilings") {
  auto l = tiling_lattices(fx::hexagon_left());
  CHECK(l.lambda_t.is_zero());
  CHECK(l.p_t == SubLattice::full(3));
  auto k = tiling_lattices(fx::tpl());
  CHECK(k.lambda == hermite_basis(ivs({{1, 1}}), 2));
  CHECK(k.lambda_t.is_zero());
  CHECK(k.p_t == SubLattice::full(2));
  CHECK(tiling_lattices(fx::irregular_box()).lambda_t.is_zero());
}

TEST_CASE("eval_support examples") {
  CHECK(eval_support(fx::trivial(fx::hexagon()), iv({1, 0, 1}), rv({2, 2})) == 2);
  for (int r1 = -3; r1 <= 3; ++r1)
    for (int r2 = -3; r2 <= 3; ++r2) CHECK(eval_support(fx::tpl(), iv({r1, r2}), rv({0})) == r1 + r2);
  CHECK(eval_support(fx::hexagon_left(), iv({0, 0, 0}), rv({1, 1})) == 0);
  CHECK_THROWS_AS(eval_support(fx::trivial(fx::hexagon()), iv({1, 0, 0}), rv({0, 0})), InputError);
  CHECK_THROWS_AS(eval_support(fx::hexagon_left(), iv({1, 0, 0}), rv({3, 0})), InputError);
}

TEST_CASE("convexity on the T*P1 tiling") {
  CHECK(convexity(fx::tpl(), iv({1, 1})) == Convexity::strictly_convex);
  CHECK(convexity(fx::tpl(), iv({1, -1})) == Convexity::convex);
  CHECK(convexity(fx::tpl(), iv({-1, -1})) == Convexity::nonconvex);
  CHECK(convexity(fx::hexagon_left(), iv({1, 0, 0})) == Convexity::strictly_convex);
  CHECK(convexity(fx::hexagon_left(), iv({0, 0, 0})) == Convexity::convex);
  CHECK_THROWS_AS(convexity(fx::trivial(fx::hexagon()), iv({1, 0, 0})), InputError);
  CHECK(to_string(Convexity::nonconvex) == "nonconvex");
}

TEST_CASE("regularity") {
  auto w = regularity(fx::hexagon_left());
  REQUIRE(w.has_value());
  CHECK(convexity(fx::hexagon_left(), *w) == Convexity::strictly_convex);
  CHECK(same_tiling(tiling_from_lift(fx::hexagon(), *w).tiling, fx::hexagon_left()));
  auto z = regularity(fx::trivial(fx::hexagon()));
  REQUIRE(z.has_value());
  CHECK(is_zero(*z));
  CHECK_FALSE(regularity(fx::irregular_box()).has_value());
}

TEST_CASE("the irregular fixture's strict system is infeasible for Fourier-Motzkin too") {
  auto sys = regularity_system(fx::irregular_box());
  CHECK(sys.strict.size() == 45);
  CHECK_FALSE(feasible_strict(sys).has_value());
  CHECK_FALSE(oracle::fm_feasible(sys.dim, sys.strict, sys.weak, sys.equalities));
  auto ok = regularity_system(fx::hexagon_left());
  CHECK(oracle::fm_feasible(ok.dim, ok.strict, ok.weak, ok.equalities));
}

namespace {

std::vector<VectorConfig> sample_configs() {
  return {fx::hexagon(), {1, ivs({{1}, {1}, {1}})}, {2, ivs({{1, 0}, {0, 1}, {1, 1}, {1, -1}})},
          fx::tpl_config(), {2, ivs({{1, 0}, {0, 1}, {1, 2}, {2, 1}})}};
}

IntVector random_lift(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntVector r;
  for (std::size_t e = 0; e < n; ++e) r.emplace_back(d(rng));
  return r;
}

// A random element of P_T as an integer combination of its basis.
IntVector random_in(std::mt19937& rng, const SubLattice& l) {
  std::uniform_int_distribution<int> d(-2, 2);
  IntVector r = zero_vector(l.ambient_dim());
  for (const auto& b : l.basis()) {
    const int c = d(rng);
    for (std::size_t e = 0; e < r.size(); ++e) r[e] += c * b[e];
  }
  return r;
}

}  // namespace

TEST_CASE("lift round trip through regularity") {
  std::mt19937 rng(31337);
  const auto configs = sample_configs();
  for (int trial = 0; trial < 100; ++trial) {
    const auto& c = configs[trial % configs.size()];
    auto t = tiling_from_lift(c, random_lift(rng, c.size())).tiling;
    auto w = regularity(t);
    REQUIRE(w.has_value());
    CHECK(convexity(t, *w) == Convexity::strictly_convex);
    CHECK(same_tiling(tiling_from_lift(c, *w).tiling, t));
  }
}

TEST_CASE("psi of a lift is a strictly convex support function") {
  std::mt19937 rng(4);
  const auto configs = sample_configs();
  for (int trial = 0; trial < 30; ++trial) {
    const auto& c = configs[trial % configs.size()];
    auto r = random_lift(rng, c.size());
    auto res = tiling_from_lift(c, r);
    CHECK(convexity(res.tiling, r) == Convexity::strictly_convex);
    for (const auto& [p, value] : res.psi) CHECK(eval_support(res.tiling, r, to_rational(p)) == value);
  }
}

TEST_CASE("support function properties on fixtures") {
  std::mt19937 rng(8);
  std::vector<Tiling> tilings = {fx::trivial(fx::hexagon()), fx::hexagon_left(), fx::hexagon_right(), fx::tpl(),
                                 fx::chain(3), fx::irregular_box()};
  for (const auto& c : sample_configs())
    for (int k = 0; k < 2; ++k) tilings.push_back(tiling_from_lift(c, random_lift(rng, c.size())).tiling);
  for (const auto& t : tilings) {
    const auto lat = tiling_lattices(t);
    const auto lambda_perp = perp_lattice(lat.lambda);
    const auto verts = tiling_vertices(t);
    const auto boundary = vertices(t.base);
    for (int s = 0; s < 4; ++s) {
      const IntVector r = random_in(rng, lat.p_t);
      const IntVector r2 = random_in(rng, lat.p_t);
      IntVector sum(r.size());
      for (std::size_t e = 0; e < r.size(); ++e) sum[e] = r[e] + r2[e];
      std::vector<Rational> phi;
      for (const auto& p : verts) {
        const auto x = to_rational(p);
        const Rational a = eval_support(t, r, x);
        CHECK(eval_support(t, sum, x) == a + eval_support(t, r2, x));
        phi.push_back(a);
      }
      // boundary antisymmetry at the vertices of the base
      for (const auto& p : boundary) {
        RatVector x = to_rational(p), y = x;
        for (auto& v : y) v = -v;
        const Point c = t.base.center();
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += 2 * c[i];
        if (t.base.sign.is_zero()) CHECK(eval_support(t, r, y) == -eval_support(t, r, x));
      }
      const auto conv = convexity(t, r);
      // linear exactly when r is in the perpendicular of Lambda
      bool linear = true;
      for (const auto& p : adjacent_pairs(t)) {
        Rational jump = 0;
        for (std::size_t e = 0; e < r.size(); ++e) jump += r[e] * (p.t_other[e] - p.t[e]);
        if (jump != 0) linear = false;
      }
      CHECK(linear == lambda_perp.contains(r));
      // upper-envelope convention: convex support functions lie above chords
      if (conv != Convexity::nonconvex) {
        for (std::size_t i = 0; i < verts.size(); ++i)
          for (std::size_t j = i + 1; j < verts.size(); ++j) {
            RatVector mid(verts[i].size());
            for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = Rational(verts[i][k] + verts[j][k]) / 2;
            CHECK(eval_support(t, r, mid) * 2 >= phi[i] + phi[j]);
          }
      }
    }
  }
}
