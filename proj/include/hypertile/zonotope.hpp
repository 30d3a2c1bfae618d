#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypertile/lattice.hpp"

namespace hypertile {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

Sign sign_of(const Integer& x);
Sign sign_of(const Rational& x);
inline int to_int(Sign s) { return static_cast<int>(s); }
char to_char(Sign s);

/// Element of {+,-,0}^E.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t n) : entries_(n, Sign::Zero) {}
  explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {}

  /// Parses a string over "+-0"; throws InputError otherwise.
  static SignVector parse(std::string_view text);
  std::string str() const;

  std::size_t size() const { return entries_.size(); }
  Sign operator[](std::size_t i) const { return entries_[i]; }
  Sign& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Sign>& entries() const { return entries_; }

  bool is_zero() const;
  SignVector negated() const;
  /// Indices where the entry is 0 (the set E_u).
  std::vector<std::size_t> zero_set() const;
  /// True when `*this` is obtained from `other` by zeroing entries.
  bool conforms_to(const SignVector& other) const;

  friend auto operator<=>(const SignVector&, const SignVector&) = default;
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<Sign> entries_;
};

/// Ordered configuration a_e in N = Z^rank.
struct VectorConfig {
  std::size_t rank = 0;
  std::vector<IntVector> vectors;

  std::size_t size() const { return vectors.size(); }
  /// Throws InputError when a vector has the wrong length.
  void check() const;
  friend bool operator==(const VectorConfig&, const VectorConfig&) = default;
};

struct ConfigFlags {
  bool primitive = false;
  bool spanning = false;
};

ConfigFlags validate_config(const VectorConfig& config);

using Point = IntVector;
using PointSet = std::vector<Point>;  // sorted, duplicate free

/// Z(a, u) + translation.  Two zonotopes describe the same polytope iff
/// their vertex sets agree; see same_polytope().
struct Zonotope {
  VectorConfig config;
  SignVector sign;
  IntVector translation;  // empty means 0

  Zonotope() = default;
  Zonotope(VectorConfig c, SignVector s, IntVector t = {});
  static Zonotope full(const VectorConfig& c);

  Point center() const;
  /// E_u, the indices that still contribute a segment.
  std::vector<std::size_t> free_indices() const;
  std::vector<IntVector> free_vectors() const;
  std::size_t dimension() const;
};

/// Covectors of a configuration; sorted, closed under negation, contains 0.
using CovectorSet = std::vector<SignVector>;

/// Homogeneous system in m in Q^rank whose solutions realize `sign`.
LinearSystem covector_system(const VectorConfig& config, const SignVector& sign);
std::optional<RatVector> covector_witness(const VectorConfig& config, const SignVector& sign);
bool is_covector(const VectorConfig& config, const SignVector& sign);

/// All covectors.  Exponential in |E|; intended for |E| <= 12.
CovectorSet covectors(const VectorConfig& config);

/// Covectors of `vectors` whose entries are restricted to `allowed[e]`
/// (bitmask: 1 = '-', 2 = '0', 4 = '+').  Topes use mask 5 everywhere.
CovectorSet covectors_restricted(const std::vector<IntVector>& vectors, std::size_t dim,
                                 const std::vector<unsigned>& allowed);

/// Faces of Z(a, u).  Throws InputError unless u is 0 or a covector of a.
std::vector<Zonotope> faces(const Zonotope& z);
/// Faces without the covector precondition (faces of tiles).
std::vector<Zonotope> faces_of(const Zonotope& z);

struct VerticesAndVolume {
  PointSet vertices;
  Integer volume;
};

/// Volume is normalized to the lattice N cap span(Z), so a segment's
/// volume is its integer length.
VerticesAndVolume vertices_and_volume(const Zonotope& z);
PointSet vertices(const Zonotope& z);
Integer volume(const Zonotope& z);
bool same_polytope(const Zonotope& a, const Zonotope& b);

enum class BlockKind { cube, parallelotope, general };
std::string to_string(BlockKind kind);
BlockKind classify_block(const Zonotope& z);

// Exact point/zonotope predicates (rational LP feasibility).
bool contains_point(const Zonotope& z, const RatVector& point);
bool relint_contains_point(const Zonotope& z, const RatVector& point);
bool intersects(const Zonotope& a, const Zonotope& b);
/// Relative interiors meet; for full-dimensional tiles this is interior overlap.
bool relints_overlap(const Zonotope& a, const Zonotope& b);
/// Some t in Q^E with t_e = u_e on the support, t_e in [-1,1] on E_u and
/// sum t_e a_e + translation = point.
std::optional<RatVector> decompose(const Zonotope& z, const RatVector& point);
/// Affine rank of a point set (-1 for the empty set).
long affine_dimension(const PointSet& points);

}  // namespace hypertile
