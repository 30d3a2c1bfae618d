#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypertile {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised for malformed input: dimension mismatches, invalid sign vectors,
/// points outside a zonotope and similar contract violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a desk-scale guard (|E|, rank) is exceeded.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IntVector zero_vector(std::size_t n);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
bool is_zero(const IntVector& v);
/// Divides by the gcd of the entries; zero stays zero.
IntVector primitive(const IntVector& v);
/// Clears denominators and divides by the gcd.
IntVector integer_scaling(const RatVector& v);
RatVector to_rational(const IntVector& v);
std::string to_string(const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  IntVector row(std::size_t i) const;
  IntMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Integral sublattice of Z^n stored by its row-style Hermite normal form:
/// basis vectors are the nonzero rows of an echelon matrix with positive
/// pivots, and every entry above a pivot lies in [0, pivot).  Equal
/// lattices therefore compare equal.
class SubLattice {
 public:
  SubLattice() = default;
  explicit SubLattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const IntVector& v) const;
  bool contains(const SubLattice& other) const;

  static SubLattice full(std::size_t n);

  friend bool operator==(const SubLattice&, const SubLattice&) = default;

 private:
  friend SubLattice hermite_basis(const std::vector<IntVector>&, std::size_t);
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> basis_;
};

/// Canonical basis of the Z-span of `vectors`.  `ambient_dim` is only
/// consulted when `vectors` is empty.
SubLattice hermite_basis(const std::vector<IntVector>& vectors, std::size_t ambient_dim);

/// {x in Z^cols : M x = 0}.
SubLattice kernel_lattice(const IntMatrix& m);

/// {r in Z^n : r . l = 0 for every l in L}.
SubLattice perp_lattice(const SubLattice& lattice);

struct Saturation {
  SubLattice lattice;
  Integer index;
};

/// (span_Q(L) cap Z^n, [L_sat : L]).
Saturation saturation(const SubLattice& lattice);

/// Rank over Q of a family of integer vectors.
std::size_t rational_rank(const std::vector<IntVector>& vectors, std::size_t ambient_dim);

/// Nonzero invariant factors d_1 | d_2 | ... of the matrix.
std::vector<Integer> smith_invariant_factors(const IntMatrix& m);

/// Coordinates of `v` in the given lattice basis, if v lies in its
/// rational span.  Integral iff v is in the lattice.
std::optional<RatVector> lattice_coordinates(const SubLattice& lattice, const IntVector& v);

/// Homogeneous system: strict rows a.x > 0, weak rows a.x >= 0,
/// equality rows a.x = 0, all of length `dim`.
struct LinearSystem {
  std::size_t dim = 0;
  std::vector<IntVector> strict;
  std::vector<IntVector> weak;
  std::vector<IntVector> equalities;

  void validate() const;
};

/// Rational witness for the system, or nullopt when none exists.  Strict
/// rows are homogenized to a.x >= 1 and the result comes from an exact
/// phase-one simplex.
std::optional<RatVector> feasible_strict(const LinearSystem& system);

/// Exact re-substitution check used on every returned witness.
bool satisfies(const LinearSystem& system, const RatVector& x);

/// Some rational solution of A x = b (rows of A given), if any.
std::optional<RatVector> solve_linear(const std::vector<IntVector>& rows, const RatVector& rhs,
                                      std::size_t dim);

}  // namespace hypertile
