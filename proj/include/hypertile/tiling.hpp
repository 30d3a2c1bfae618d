#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hypertile/zonotope.hpp"

namespace hypertile {

/// A tiling of `base` stored in sign-vector form: tile i is
/// Z(base.config, tiles[i]) + base.translation.  Sign vectors are full
/// length and agree with base.sign wherever base.sign is nonzero.
struct Tiling {
  Zonotope base;
  std::vector<SignVector> tiles;  // sorted, unique

  Tiling() = default;
  Tiling(Zonotope base, std::vector<SignVector> tiles);

  Zonotope tile(std::size_t i) const;
  std::size_t size() const { return tiles.size(); }
  /// Index of the tile with the given sign vector; throws InputError.
  std::size_t index_of(const SignVector& s) const;
};

/// Geometric data for every tile, computed once.
struct TileInfo {
  Zonotope zonotope;
  PointSet vertices;
  std::size_t dimension = 0;
};

std::vector<TileInfo> describe(const Tiling& t);
/// Tiles whose dimension equals dim(base).
std::vector<std::size_t> maximal_tiles(const Tiling& t);
/// Union of the tile vertex sets.
PointSet tiling_vertices(const Tiling& t);

/// Adds all faces of all tiles; faces that coincide as polytopes with an
/// existing tile are not added twice.
Tiling close_under_faces(const Tiling& t);

/// Equality as sets of polytopes.
bool same_tiling(const Tiling& a, const Tiling& b);

struct Violation {
  std::string kind;  // volume | overlap | outside | face_closure | not_a_face | intersection | labels
  std::vector<std::size_t> tiles;
  std::string message;
};

/// Empty result means the tile set is a tiling of its base.
std::vector<Violation> validate_tiling(const Tiling& t);

struct LiftResult {
  Tiling tiling;
  /// psi(a, r) at every tiling vertex, sorted by point.
  std::vector<std::pair<Point, Integer>> psi;
};

/// Regular tiling of Z(a) induced by the lift r (upper faces of the lifted
/// zonotope).  Throws InputError unless the configuration spans.
LiftResult tiling_from_lift(const VectorConfig& config, const IntVector& r);

/// All tilings of Z(a).  Throws ScaleError beyond rank 3 or 6 vectors.
std::vector<Tiling> enumerate_tilings(const VectorConfig& config);

struct Cone {
  std::vector<IntVector> generators;  // primitive, sorted, unique
  SubLattice lineality;
  friend bool operator==(const Cone&, const Cone&) = default;
};

struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<Cone> cones;
};

struct LocalFan {
  Fan fan;
  bool complete = false;
  /// cones[i] comes from the tile with this index.
  std::vector<std::size_t> source_tiles;
};

/// Cones R>=0(F' - F) over tiles F' containing tile `f`.
LocalFan local_fan(const Tiling& t, std::size_t f);

/// True iff every tile of `finer` lies in some tile of `coarser`.
/// Throws InputError when the bases differ.
bool is_refinement(const Tiling& finer, const Tiling& coarser);

}  // namespace hypertile
