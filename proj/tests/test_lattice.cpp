#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hypertile/lattice.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace hypertile;
using th::iv;
using th::ivs;

TEST_CASE("hermite basis of a diagonal lattice is unchanged") {
  auto L = hermite_basis(ivs({{2, 0}, {0, 3}}), 2);
  CHECK(L.basis() == ivs({{2, 0}, {0, 3}}));
}

TEST_CASE("hermite basis is generation invariant") {
  auto a = hermite_basis(ivs({{1, 1}, {1, -1}, {2, 0}}), 2);
  auto b = hermite_basis(ivs({{1, 1}, {1, -1}}), 2);
  CHECK(a == b);
  CHECK(a.rank() == 2);
  CHECK(saturation(a).index == 2);
}

TEST_CASE("empty generating set gives the zero lattice") {
  auto L = hermite_basis({}, 3);
  CHECK(L.is_zero());
  CHECK(L.ambient_dim() == 3);
}

TEST_CASE("hermite basis rejects mixed dimensions") {
  CHECK_THROWS_AS(hermite_basis(ivs({{1, 2}, {1, 2, 3}}), 2), InputError);
}

TEST_CASE("kernel lattice examples") {
  CHECK(kernel_lattice(IntMatrix::from_rows(ivs({{1, -1}}), 2)) == hermite_basis(ivs({{1, 1}}), 2));
  CHECK(kernel_lattice(IntMatrix::from_rows(ivs({{1, 0, 1}, {0, 1, 1}}), 3)) ==
        hermite_basis(ivs({{1, 1, -1}}), 3));
  CHECK(kernel_lattice(IntMatrix::from_rows(ivs({{1, 0}, {0, 1}}), 2)).is_zero());
}

TEST_CASE("perp lattice examples") {
  CHECK(perp_lattice(hermite_basis(ivs({{1, 1}}), 2)) == hermite_basis(ivs({{1, -1}}), 2));
  CHECK(perp_lattice(SubLattice(3)) == SubLattice::full(3));
  CHECK(perp_lattice(hermite_basis(ivs({{1, 1, -1}}), 3)) == hermite_basis(ivs({{1, 0, 1}, {0, 1, 1}}), 3));
}

TEST_CASE("saturation examples") {
  auto s = saturation(hermite_basis(ivs({{2, 0}}), 2));
  CHECK(s.lattice == hermite_basis(ivs({{1, 0}}), 2));
  CHECK(s.index == 2);
  auto f = saturation(SubLattice::full(2));
  CHECK(f.lattice == SubLattice::full(2));
  CHECK(f.index == 1);
}

TEST_CASE("smith invariant factors") {
  auto d = smith_invariant_factors(IntMatrix::from_rows(ivs({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), 3));
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
}

TEST_CASE("lattice coordinates detect membership") {
  auto L = hermite_basis(ivs({{1, 1}, {1, -1}}), 2);
  CHECK(L.contains(iv({2, 0})));
  CHECK_FALSE(L.contains(iv({1, 0})));
  auto c = lattice_coordinates(hermite_basis(ivs({{1, 1, 0}}), 3), iv({1, 0, 0}));
  CHECK_FALSE(c.has_value());
}

TEST_CASE("feasible_strict small systems") {
  LinearSystem a{1, ivs({{1}, {-1}}), {}, {}};
  CHECK_FALSE(feasible_strict(a).has_value());
  LinearSystem b{2, ivs({{1, 1}, {1, -1}}), {}, {}};
  auto w = feasible_strict(b);
  REQUIRE(w.has_value());
  CHECK(satisfies(b, *w));
  LinearSystem c{3, {}, {}, {}};
  CHECK(feasible_strict(c).has_value());
  LinearSystem bad{2, ivs({{1}}), {}, {}};
  CHECK_THROWS_AS(feasible_strict(bad), InputError);
}

TEST_CASE("solve_linear") {
  auto x = solve_linear(ivs({{1, 1}, {1, -1}}), th::rv({2, 0}), 2);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_linear(ivs({{1, 1}, {2, 2}}), th::rv({1, 3}), 2).has_value());
}

namespace {

IntVector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("hermite form is canonical under unimodular recombination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t k = 1 + trial % n;
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n, -4, 4));
    auto L = hermite_basis(gens, n);
    std::vector<IntVector> mixed = L.basis();
    std::uniform_int_distribution<int> c(-3, 3);
    for (int step = 0; step < 6 && mixed.size() > 1; ++step) {
      std::size_t i = rng() % mixed.size(), j = rng() % mixed.size();
      if (i == j) continue;
      const int f = c(rng);
      for (std::size_t t = 0; t < n; ++t) mixed[i][t] += f * mixed[j][t];
    }
    mixed.push_back(zero_vector(n));
    CHECK(hermite_basis(mixed, n) == L);
    CHECK(hermite_basis(L.basis(), n) == L);
  }
}

TEST_CASE("perp is antitone and perp perp is saturation") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t k = trial % (n + 1);
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n, -5, 5));
    auto L = hermite_basis(gens, n);
    CHECK(perp_lattice(perp_lattice(L)) == saturation(L).lattice);
    gens.push_back(random_vector(rng, n, -5, 5));
    auto bigger = hermite_basis(gens, n);
    CHECK(perp_lattice(L).contains(perp_lattice(bigger)));
  }
}

TEST_CASE("feasible_strict agrees with Fourier-Motzkin") {
  std::mt19937 rng(7);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    LinearSystem sys;
    sys.dim = dim;
    const std::size_t rows = 1 + rng() % 8;
    for (std::size_t i = 0; i < rows; ++i) {
      auto r = random_vector(rng, dim, -3, 3);
      switch (rng() % 4) {
        case 0: sys.weak.push_back(r); break;
        case 1: sys.equalities.push_back(r); break;
        default: sys.strict.push_back(r); break;
      }
    }
    auto w = feasible_strict(sys);
    const bool expect = oracle::fm_feasible(dim, sys.strict, sys.weak, sys.equalities);
    CHECK(w.has_value() == expect);
    if (w) {
      CHECK(satisfies(sys, *w));
      ++feasible;
    }
  }
  CHECK(feasible > 30);
  CHECK(feasible < 270);
}
