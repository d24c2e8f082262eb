#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arrprod/gpp.hpp"
#include "arrprod/incidence.hpp"
#include "arrprod/rational.hpp"

namespace arrprod {

/// Coordinate i belongs to line i of the arrangement.
using RatVector = std::vector<Rational>;

/// Linear subspace of Q^n stored as its reduced row echelon basis, so equal
/// subspaces compare equal structurally.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static SubspaceBasis span_of(std::size_t ambient_dim, std::span<const RatVector> generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<RatVector>& rows() const { return rows_; }
  bool contains(const RatVector& v) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_;
  std::vector<RatVector> rows_;
};

/// Reduced row echelon form of `rows` with zero rows dropped.
std::vector<RatVector> row_reduce(std::vector<RatVector> rows);

SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b);
std::size_t span_dim(const SubspaceBasis& a);
/// dim(a) + dim(b) - dim(a + b).
std::size_t intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b);

/// The local resonance component of a point of multiplicity m >= 3:
/// vectors supported on the point's lines with coordinate sum zero, spanned by
/// f_i - f_k (k the largest incident index). Its dimension is m - 1.
struct LocalComponent {
  std::size_t point_id;
  ProjPoint point;
  std::vector<std::size_t> incident;
  SubspaceBasis basis;
};

std::vector<LocalComponent> local_components(const IncidenceData& inc);

SubspaceBasis combined_span(std::span<const LocalComponent> comps, std::span<const std::size_t> which);

struct Bipartition {
  std::vector<std::size_t> first;   // component indices
  std::vector<std::size_t> second;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// A split of the components into two nonempty families whose spans meet only
/// in zero. Components with nontrivially intersecting spans must stay
/// together, so only unions of those clusters are tried; each candidate is
/// then checked with the exact dimension count. The first family always
/// contains component 0.
std::optional<Bipartition> find_span_disjoint_bipartition(std::span<const LocalComponent> comps);

enum class VerdictKind { ProductPossible, NotAProduct };

struct ResonanceEvidence {
  std::size_t component_count = 0;
  bool searched = false;  // false when fewer than two components exist
  std::optional<Bipartition> bipartition;
};

struct Verdict {
  VerdictKind kind;
  std::optional<GppWitness> witness;
  ResonanceEvidence evidence;
};

/// Decided by the decone partition search; the resonance search result is
/// attached as supporting evidence. Needs at least 3 lines.
Verdict product_obstruction(const IncidenceData& inc);

const char* to_string(VerdictKind kind) noexcept;

}  // namespace arrprod
