#include "arrprod/resonance.hpp"

#include <algorithm>
#include <numeric>

#include "arrprod/error.hpp"

namespace arrprod {

namespace {

void require_length(const RatVector& v, std::size_t n) {
  if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
}

RatVector basis_vector_difference(std::size_t n, std::size_t i, std::size_t k) {
  RatVector v(n, Rational(0));
  v[i] = 1;
  v[k] = -1;
  return v;
}

}  // namespace

std::vector<RatVector> row_reduce(std::vector<RatVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);

    const Rational inv = Rational(1) / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

SubspaceBasis SubspaceBasis::span_of(std::size_t ambient_dim, std::span<const RatVector> generators) {
  std::vector<RatVector> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    require_length(g, ambient_dim);
    rows.push_back(g);
  }
  SubspaceBasis out(ambient_dim);
  out.rows_ = row_reduce(std::move(rows));
  return out;
}

bool SubspaceBasis::contains(const RatVector& v) const {
  require_length(v, ambient_);
  auto rows = rows_;
  rows.push_back(v);
  return row_reduce(std::move(rows)).size() == rows_.size();
}

SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  std::vector<RatVector> gens = a.rows();
  gens.insert(gens.end(), b.rows().begin(), b.rows().end());
  return SubspaceBasis::span_of(a.ambient_dim(), gens);
}

std::size_t span_dim(const SubspaceBasis& a) { return a.dim(); }

std::size_t intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.dim() + b.dim() - span_sum(a, b).dim();
}

std::vector<LocalComponent> local_components(const IncidenceData& inc) {
  const std::size_t n = inc.line_count();
  std::vector<LocalComponent> out;
  for (std::size_t id : multiple_point_ids(inc, 3)) {
    const auto& rec = inc.points[id];
    const std::size_t k = rec.incident.back();
    std::vector<RatVector> gens;
    for (std::size_t i : rec.incident) {
      if (i != k) gens.push_back(basis_vector_difference(n, i, k));
    }
    out.push_back({id, rec.point, rec.incident, SubspaceBasis::span_of(n, gens)});
  }
  return out;
}

SubspaceBasis combined_span(std::span<const LocalComponent> comps, std::span<const std::size_t> which) {
  if (comps.empty()) throw Error(ErrorCode::TooFewComponents, "no components to combine");
  std::vector<RatVector> gens;
  for (std::size_t i : which) gens.insert(gens.end(), comps[i].basis.rows().begin(), comps[i].basis.rows().end());
  return SubspaceBasis::span_of(comps.front().basis.ambient_dim(), gens);
}

std::optional<Bipartition> find_span_disjoint_bipartition(std::span<const LocalComponent> comps) {
  const std::size_t k = comps.size();
  if (k < 2) throw Error(ErrorCode::TooFewComponents, "need at least two local components to split");

  // Cluster components whose spans meet nontrivially.
  std::vector<std::size_t> cluster(k);
  std::iota(cluster.begin(), cluster.end(), 0);
  const auto find = [&](std::size_t x) {
    while (cluster[x] != x) x = cluster[x] = cluster[cluster[x]];
    return x;
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (intersection_dim(comps[a].basis, comps[b].basis) > 0) {
        const std::size_t ra = find(a);
        const std::size_t rb = find(b);
        if (ra != rb) cluster[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of_root(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t r = find(a);
    if (group_of_root[r] == k) {
      group_of_root[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of_root[r]].push_back(a);
  }

  const std::size_t g = groups.size();
  if (g < 2) return std::nullopt;
  if (g > 30) throw Error(ErrorCode::TooLarge, "too many independent component clusters to search");

  std::vector<std::size_t> all(k);
  std::iota(all.begin(), all.end(), 0);
  const std::size_t total_dim = combined_span(comps, all).dim();

  // Group 0 stays in the first family; bits select groups for the second.
  for (std::size_t mask = 1; mask < (std::size_t{1} << (g - 1)); ++mask) {
    Bipartition split;
    for (std::size_t j = 0; j < g; ++j) {
      auto& side = (j > 0 && ((mask >> (j - 1)) & 1)) ? split.second : split.first;
      side.insert(side.end(), groups[j].begin(), groups[j].end());
    }
    std::sort(split.first.begin(), split.first.end());
    std::sort(split.second.begin(), split.second.end());
    if (combined_span(comps, split.first).dim() + combined_span(comps, split.second).dim() == total_dim) {
      return split;
    }
  }
  return std::nullopt;
}

Verdict product_obstruction(const IncidenceData& inc) {
  if (inc.line_count() < 3) throw Error(ErrorCode::TooSmall, "verdict needs at least three lines");
  Verdict verdict{VerdictKind::NotAProduct, has_gpp_decone(inc), {}};
  if (verdict.witness) verdict.kind = VerdictKind::ProductPossible;

  const auto comps = local_components(inc);
  verdict.evidence.component_count = comps.size();
  if (comps.size() >= 2) {
    verdict.evidence.searched = true;
    verdict.evidence.bipartition = find_span_disjoint_bipartition(comps);
  }
  return verdict;
}

const char* to_string(VerdictKind kind) noexcept {
  return kind == VerdictKind::ProductPossible ? "ProductPossible" : "NotAProduct";
}

}  // namespace arrprod
