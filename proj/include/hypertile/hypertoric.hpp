#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypertile/support.hpp"
#include "hypertile/tiling.hpp"

namespace hypertile {

// ---------------------------------------------------------------------------
// Weights and the hypertoric hypotheses

enum class WeightProfile { mixed, nonnegative, positive };
std::string to_string(WeightProfile w);

/// positive iff 0 is interior to Z, nonnegative iff 0 lies in Z.  Decided
/// vertex by vertex: 0 must lie in eta + (tangent cone of Z at eta).
WeightProfile weight_profile(const Zonotope& z);

struct HypertoricCheck {
  bool ok = false;
  std::vector<std::string> reasons;  // failed hypotheses, empty when ok
};

HypertoricCheck is_hypertoric(const Tiling& t);

// ---------------------------------------------------------------------------
// Extended core

struct CoreComponent {
  std::size_t tile = 0;  // index into the tiling
  SignVector sign;
  std::size_t dimension = 0;
  LocalFan local_fan;
  bool is_proper = false;
  bool in_core = false;             // tile meets the interior of the base
  std::optional<Point> gm_weight;   // the vertex itself for 0-dimensional tiles
};

struct CoreReport {
  std::vector<CoreComponent> strata;  // one per tile, in tiling order
  std::vector<std::size_t> components;  // strata of vertices
  /// (i, j): tile i is a proper face of tile j, so stratum j lies in stratum i.
  std::vector<std::pair<std::size_t, std::size_t>> closure_order;
  bool core_nonempty = false;
};

CoreReport extended_core(const Tiling& t);

/// Tiles (as vertex sets) recovered from the vertex components alone: their
/// G_m-weights and local fans.
std::set<PointSet> reconstruct_tiles(const CoreReport& report);

// ---------------------------------------------------------------------------
// Class groups and divisors

struct ClassGroups {
  std::size_t cl_t_rank = 0;    // Cl_T = Z^E, basis [D_e^+]
  SubLattice ker_forget;        // Lambda-perp
  std::vector<Integer> cl_torsion;  // invariant factors > 1 of Z^E / Lambda-perp
  std::size_t cl_free_rank = 0;
  SubLattice pic_t;             // P_T
};

ClassGroups class_groups(const Tiling& t);

enum class DivisorKind { not_cartier, trivial, ample, nef, none_of_these };
std::string to_string(DivisorKind k);

DivisorKind classify_divisor(const Tiling& t, const IntVector& r);

// ---------------------------------------------------------------------------
// Lawrence fan

struct LawrenceData {
  std::size_t rank = 0;  // 2|E| - rank(Lambda)
  /// Rows of the quotient map Z^E + Z^E -> Z^rank (a basis of the
  /// perpendicular of the antidiagonal Lambda).
  std::vector<IntVector> quotient;
  std::vector<IntVector> rho_plus, rho_minus;
  Cone base_cone;                  // sigma(a, u)
  Fan fan;                         // one cone per tile, tiling order
  std::vector<IntVector> extremal_rays;  // of sigma(a, u)
  bool rays_extremal = false;      // every fan ray is an extremal ray of sigma(a, u)
  bool refines_base = false;       // every fan cone lies in sigma(a, u)
};

LawrenceData lawrence_fan(const Tiling& t);

/// Attempts to glue the linear functions rho_e^eps -> r^eps on every cone of
/// the Lawrence fan (solved over Q).  True iff every cone admits one.
bool lawrence_support_extends(const Tiling& t, const LawrenceData& data, const IntVector& r_plus,
                              const IntVector& r_minus);

// ---------------------------------------------------------------------------
// Geometry flags

struct GeometryFlags {
  bool smooth = false;
  bool qfactorial_terminal_sufficient = false;
  bool projective_over_affinization = false;
};

GeometryFlags geometry_flags(const Tiling& t);

// ---------------------------------------------------------------------------
// Invariant ring

struct MonomialGen {
  IntVector p;  // exponents of z
  IntVector q;  // exponents of w
  RatVector t_weight;  // m with m(a_e) = q_e - p_e
  Integer gm_weight;   // sum of p and q
};

struct InvariantRing {
  SubLattice units;  // exponent pairs (p, q) in Z^{2E} of invertible monomials
  std::vector<MonomialGen> generators;
  /// lambda in Lambda gives the relation sum_e lambda_e z_e w_e = 0.
  std::vector<IntVector> moment_relations;
};

/// Requires a primitive configuration with at most 8 vectors.
InvariantRing invariant_ring_data(const VectorConfig& config, const SignVector& u);

}  // namespace hypertile
