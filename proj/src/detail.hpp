#pragma once

// Internal helpers shared by the tiling, support and hypertoric sources.

#include <cstddef>
#include <optional>
#include <vector>

#include "hypertile/tiling.hpp"

namespace hypertile::detail {

struct FaceData {
  PointSet vertices;
  SignVector sign;
  std::size_t dimension = 0;
};

std::vector<FaceData> face_data(const Zonotope& z);

/// Integer m with max_{x in z} m.x attained exactly on the face with the
/// given full sign vector.
IntVector exposing_functional(const Zonotope& z, const SignVector& face_sign);

enum class PairStatus { ok, overlap, intersection, labels };

/// Checks that two tiles meet in a common face (or not at all) with
/// consistent sign labels.  `faces_a`/`faces_b` come from face_data.
PairStatus check_pair(const Zonotope& a, const std::vector<FaceData>& faces_a, const Zonotope& b,
                      const std::vector<FaceData>& faces_b, bool full_dimensional);

RatVector centroid(const PointSet& points);

}  // namespace hypertile::detail
