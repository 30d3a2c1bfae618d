#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypertile/tiling.hpp"

namespace hypertile {

/// Wire format shared by the CLI and the fixtures.  Integers may be JSON
/// numbers or decimal strings (for values beyond 64 bits).
struct ProblemDocument {
  std::size_t rank = 0;
  std::vector<IntVector> vectors;
  std::optional<std::string> sign;
  std::optional<IntVector> lift;
  std::optional<std::vector<std::string>> tiles;
  std::optional<IntVector> translation;
  /// Maximal tiles given as vertex lists; matched to sign vectors on input.
  std::optional<std::vector<PointSet>> tile_vertices;

  friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;

  VectorConfig config() const;
  /// Z(a, sign) + translation; sign defaults to all zeros.
  Zonotope base() const;
  /// The listed tiles closed under faces; else the lift's tiling; else the
  /// trivial tiling of the base.
  Tiling tiling() const;
};

/// Sign vector of the tile of `base` with exactly these vertices (any
/// order).  Throws InputError when no tile matches or when several do
/// (parallel vectors make labels ambiguous).
SignVector match_tile(const Zonotope& base, PointSet vertices);

/// Throws InputError on malformed JSON or inconsistent lengths.
ProblemDocument parse_document(const std::string& text);
ProblemDocument read_document(const std::string& path);
/// Two-space indented JSON with sorted keys and a trailing newline.
std::string serialize_document(const ProblemDocument& doc);

/// Document describing a tiling: the base plus its maximal tiles.
ProblemDocument document_from_tiling(const Tiling& t);

/// SVG 1.1 drawing of a tiling of a rank-2 zonotope: 40 px per lattice
/// unit, y axis pointing up, one polygon per maximal tile and one circle
/// per tiling vertex (class "interior" or "boundary").  Throws InputError
/// for other ranks.
std::string render_svg(const Tiling& t);

}  // namespace hypertile
