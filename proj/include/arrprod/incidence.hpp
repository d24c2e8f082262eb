#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrprod/geometry.hpp"

namespace arrprod {

/// Ordered list of pairwise distinct projective lines with unique labels.
class ProjArrangement {
 public:
  explicit ProjArrangement(std::vector<ProjLine> lines);

  std::size_t size() const { return lines_.size(); }
  const ProjLine& operator[](std::size_t i) const { return lines_[i]; }
  const std::vector<ProjLine>& lines() const { return lines_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

 private:
  std::vector<ProjLine> lines_;
};

/// Ordered list of pairwise distinct affine lines.
class AffArrangement {
 public:
  explicit AffArrangement(std::vector<AffLine> lines);

  std::size_t size() const { return lines_.size(); }
  const AffLine& operator[](std::size_t i) const { return lines_[i]; }
  const std::vector<AffLine>& lines() const { return lines_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

 private:
  std::vector<AffLine> lines_;
};

struct PointRecord {
  ProjPoint point;
  std::vector<std::size_t> incident;  // sorted line indices, size >= 2

  std::size_t multiplicity() const { return incident.size(); }
};

/// Every intersection point of an arrangement together with the lines through
/// it. Points are sorted lexicographically by canonical coordinates, and a
/// point's position in `points` is its id throughout the library.
struct IncidenceData {
  ProjArrangement arrangement;
  std::vector<PointRecord> points;

  std::size_t line_count() const { return arrangement.size(); }
  /// Ids of points on line `line` with multiplicity >= min_mult, in id order.
  std::vector<std::size_t> points_on_line(std::size_t line, std::size_t min_mult = 2) const;
  bool shares_point(std::size_t point_id, std::size_t line) const;
};

IncidenceData build_incidence(const ProjArrangement& arr);

/// Points of multiplicity >= min_mult (min_mult >= 2), in canonical order.
std::vector<PointRecord> multiple_points(const IncidenceData& inc, std::size_t min_mult);
/// Same filter, returning point ids.
std::vector<std::size_t> multiple_point_ids(const IncidenceData& inc, std::size_t min_mult);

ProjArrangement cone(const AffArrangement& arr, const std::string& infinity_label = "@inf");

/// Affine arrangement seen from the chart where line `at` is at infinity.
/// Line order is preserved with `at` removed.
AffArrangement decone(const ProjArrangement& arr, std::size_t at);

/// Maps a projective line index to its index in decone(arr, at).
std::size_t decone_index(std::size_t line, std::size_t at);

struct AffinePoint {
  Rational x;
  Rational y;
  std::vector<std::size_t> incident;  // sorted; size >= 2
};

/// Finite intersection points of an affine arrangement, ordered by (x, y).
/// Parallel lines contribute nothing.
std::vector<AffinePoint> affine_points(const AffArrangement& arr);

enum class CrossPairIssue { Parallel, HighMultiplicity };

struct CrossPairDiagnostic {
  std::size_t first;   // index into part1's arrangement
  std::size_t second;  // index into part2's arrangement
  CrossPairIssue issue;
  std::optional<AffinePoint> point;  // meeting point when not parallel
};

struct TransversalityReport {
  bool holds = false;
  std::size_t transverse_double_points = 0;
  std::vector<CrossPairDiagnostic> offenders;
};

/// Checks that every cross pair meets in a finite point of multiplicity
/// exactly two. Throws BadPartition unless the parts are disjoint, nonempty
/// and cover every index.
TransversalityReport check_transversality(const AffArrangement& arr, std::span<const std::size_t> part1,
                                          std::span<const std::size_t> part2);

bool is_general_position_partition(const AffArrangement& arr, std::span<const std::size_t> part1,
                                   std::span<const std::size_t> part2);

/// Transversality of a1 against a2 inside their union (a1 first, then a2).
/// Diagnostic indices are local to a1 and a2 respectively.
TransversalityReport check_oka_sakamoto_hypothesis(const AffArrangement& a1, const AffArrangement& a2);

}  // namespace arrprod
