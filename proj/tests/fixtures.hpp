#pragma once

// Shared tilings used by the unit tests and the acceptance runner.

#include <string>
#include <utility>
#include <vector>

#include "hypertile/tiling.hpp"
#include "test_helpers.hpp"

namespace fx {

using namespace hypertile;

inline VectorConfig hexagon() { return {2, th::ivs({{1, 0}, {0, 1}, {1, 1}})}; }

inline Tiling from_strings(const Zonotope& base, const std::vector<std::string>& signs) {
  std::vector<SignVector> tiles;
  for (const auto& s : signs) tiles.push_back(SignVector::parse(s));
  return close_under_faces(Tiling(base, tiles));
}

inline Tiling trivial(const VectorConfig& c) { return close_under_faces(Tiling(Zonotope::full(c), {SignVector(c.size())})); }

// Three cubes around the central vertex; the lift r = (1,0,0) induces it.
inline Tiling hexagon_left() { return from_strings(Zonotope::full(hexagon()), {"00-", "0+0", "+00"}); }
inline Tiling hexagon_right() { return from_strings(Zonotope::full(hexagon()), {"00+", "0-0", "-00"}); }

// {[-2,0],[0,2]} tiling [-2,2] = Z((1,-1)).
inline VectorConfig tpl_config() { return {1, th::ivs({{1}, {-1}})}; }
inline Tiling tpl() { return from_strings(Zonotope::full(tpl_config()), {"0+", "+0"}); }

// r unit-length-2 intervals tiling [-r, r].
inline VectorConfig chain_config(int r) {
  VectorConfig c{1, {}};
  for (int i = 0; i < r; ++i) c.vectors.push_back(th::iv({1}));
  return c;
}
inline IntVector chain_lift(int r) {
  IntVector v;
  for (int i = 0; i < r; ++i) v.emplace_back(i);
  return v;
}
inline Tiling chain(int r) { return tiling_from_lift(chain_config(r), chain_lift(r)).tiling; }

// Hexagon with each edge direction repeated n times.
inline VectorConfig box_config(int n) {
  VectorConfig c{2, {}};
  for (int i = 0; i < n; ++i) c.vectors.push_back(th::iv({1, 0}));
  for (int i = 0; i < n; ++i) c.vectors.push_back(th::iv({0, 1}));
  for (int i = 0; i < n; ++i) c.vectors.push_back(th::iv({1, 1}));
  return c;
}

// Lozenge tiling of the n x n x n hexagon given by a plane partition
// (height[i][j] <= n, weakly decreasing along rows and columns).
inline Tiling plane_partition_tiling(int n, const std::vector<std::vector<int>>& height) {
  auto cmp = [](int a, int b) { return a < b ? '-' : (a > b ? '+' : '0'); };
  auto sigma = [&](int i, int j, int k) { return k < height[i][j] ? '-' : '+'; };
  auto flip = [](char c) { return c == '+' ? '-' : '+'; };
  std::vector<std::string> tiles;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::string xy(3 * n, '?'), xz(3 * n, '?'), yz(3 * n, '?');
      for (int t = 0; t < n; ++t) {
        // x_p with y_q free
        xy[t] = cmp(t, p);
        xy[n + t] = cmp(t, q);
        xy[2 * n + t] = flip(sigma(p, q, t));
        // x_p with z_q free
        xz[t] = cmp(t, p);
        xz[2 * n + t] = cmp(q, t);
        xz[n + t] = sigma(p, t, q);
        // y_p with z_q free
        yz[n + t] = cmp(t, p);
        yz[2 * n + t] = cmp(q, t);
        yz[t] = sigma(t, p, q);
      }
      tiles.push_back(xy);
      tiles.push_back(xz);
      tiles.push_back(yz);
    }
  return from_strings(Zonotope::full(box_config(n)), tiles);
}

inline VectorConfig irregular_box_config() { return box_config(3); }

// An irregular lozenge tiling of the 3 x 3 x 3 hexagon.
inline Tiling irregular_box() { return plane_partition_tiling(3, {{3, 2, 2}, {3, 1, 0}, {1, 1, 0}}); }

// Every named fixture tiling.
inline std::vector<std::pair<std::string, Tiling>> all() {
  std::vector<std::pair<std::string, Tiling>> out{
      {"hexagon trivial", trivial(hexagon())},
      {"hexagon left", hexagon_left()},
      {"hexagon right", hexagon_right()},
      {"tpl", tpl()},
      {"irregular_box", irregular_box()},
  };
  for (int r = 2; r <= 6; ++r) out.emplace_back("chain " + std::to_string(r), chain(r));
  return out;
}

}  // namespace fx
