#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypertile/tiling.hpp"

namespace hypertile {

struct TilingLattices {
  SubLattice lambda;    // relations among the a_e
  SubLattice lambda_t;  // sum of the relation lattices of the tiles
  SubLattice p_t;       // perpendicular of lambda_t
};

TilingLattices tiling_lattices(const Tiling& t);

/// Relation lattice of a configuration: kernel of Z^E -> N.
SubLattice relation_lattice(const VectorConfig& config);

/// phi(a, r) at a rational point of the base.  Throws InputError when r is
/// not in P_T or the point lies outside the base.
Rational eval_support(const Tiling& t, const IntVector& r, const RatVector& point);

enum class Convexity { nonconvex, convex, strictly_convex };
std::string to_string(Convexity c);

/// A pair of maximal tiles meeting in a codimension-one face, with the
/// decompositions used by the convexity test.
struct AdjacentPair {
  std::size_t tile = 0;
  std::size_t other = 0;
  Point vertex;       // lex-least vertex of `tile` outside `other`
  RatVector t;        // decomposition of `vertex` in `tile` (integral)
  RatVector t_other;  // a decomposition in the affine span of `other`
};

std::vector<AdjacentPair> adjacent_pairs(const Tiling& t);

Convexity convexity(const Tiling& t, const IntVector& r);

/// Equalities r . lambda = 0 for a basis of lambda_t plus one strict row
/// r . (t' - t) > 0 per adjacent pair.
LinearSystem regularity_system(const Tiling& t);

/// Primitive integral lift certifying regularity, or nullopt.
std::optional<IntVector> regularity(const Tiling& t);

}  // namespace hypertile
