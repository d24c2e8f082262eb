#include "arrprod/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "arrprod/error.hpp"

namespace arrprod {

namespace {

template <typename Line>
void check_distinct(const std::vector<Line>& lines, bool unique_labels) {
  if (lines.empty()) throw Error(ErrorCode::InvalidArrangement, "arrangement must contain at least one line");
  std::unordered_set<std::string> labels;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (lines[i] == lines[j]) {
        throw Error(ErrorCode::DuplicateLine,
                    "lines '" + lines[j].label() + "' and '" + lines[i].label() + "' coincide");
      }
    }
    if (unique_labels && !labels.insert(lines[i].label()).second) {
      throw Error(ErrorCode::InvalidArrangement, "duplicate label '" + lines[i].label() + "'");
    }
  }
}

template <typename Line>
std::optional<std::size_t> find_label(const std::vector<Line>& lines, std::string_view label) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].label() == label) return i;
  }
  return std::nullopt;
}

void check_partition(std::size_t n, std::span<const std::size_t> part1, std::span<const std::size_t> part2) {
  if (part1.empty() || part2.empty()) throw Error(ErrorCode::BadPartition, "both parts must be nonempty");
  std::vector<int> seen(n, 0);
  for (auto part : {part1, part2}) {
    for (std::size_t i : part) {
      if (i >= n) throw Error(ErrorCode::BadPartition, "partition index out of range");
      if (seen[i]++) throw Error(ErrorCode::BadPartition, "parts overlap or repeat an index");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorCode::BadPartition, "parts do not cover every line");
  }
}

}  // namespace

ProjArrangement::ProjArrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
  check_distinct(lines_, true);
}

std::optional<std::size_t> ProjArrangement::index_of(std::string_view label) const {
  return find_label(lines_, label);
}

AffArrangement::AffArrangement(std::vector<AffLine> lines) : lines_(std::move(lines)) {
  check_distinct(lines_, false);
}

std::optional<std::size_t> AffArrangement::index_of(std::string_view label) const {
  return find_label(lines_, label);
}

std::vector<std::size_t> IncidenceData::points_on_line(std::size_t line, std::size_t min_mult) const {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < points.size(); ++id) {
    if (points[id].multiplicity() >= min_mult && shares_point(id, line)) out.push_back(id);
  }
  return out;
}

bool IncidenceData::shares_point(std::size_t point_id, std::size_t line) const {
  const auto& inc = points[point_id].incident;
  return std::binary_search(inc.begin(), inc.end(), line);
}

IncidenceData build_incidence(const ProjArrangement& arr) {
  std::map<ProjPoint, std::set<std::size_t>> grouped;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      auto& bucket = grouped[intersect(arr[i], arr[j])];
      bucket.insert(i);
      bucket.insert(j);
    }
  }
  IncidenceData inc{arr, {}};
  inc.points.reserve(grouped.size());
  for (auto& [point, lines] : grouped) {
    inc.points.push_back({point, std::vector<std::size_t>(lines.begin(), lines.end())});
  }
  return inc;
}

std::vector<PointRecord> multiple_points(const IncidenceData& inc, std::size_t min_mult) {
  std::vector<PointRecord> out;
  for (std::size_t id : multiple_point_ids(inc, min_mult)) out.push_back(inc.points[id]);
  return out;
}

std::vector<std::size_t> multiple_point_ids(const IncidenceData& inc, std::size_t min_mult) {
  if (min_mult < 2) throw Error(ErrorCode::InvalidArgument, "minimum multiplicity must be at least 2");
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < inc.points.size(); ++id) {
    if (inc.points[id].multiplicity() >= min_mult) out.push_back(id);
  }
  return out;
}

ProjArrangement cone(const AffArrangement& arr, const std::string& infinity_label) {
  std::vector<ProjLine> lines;
  lines.reserve(arr.size() + 1);
  for (const auto& l : arr.lines()) lines.push_back(projectivize(l));
  lines.emplace_back(Triple{0, 0, 1}, infinity_label);
  return ProjArrangement(std::move(lines));
}

AffArrangement decone(const ProjArrangement& arr, std::size_t at) {
  if (at >= arr.size()) throw Error(ErrorCode::IndexOutOfRange, "decone line index out of range");
  if (arr.size() < 2) throw Error(ErrorCode::TooSmall, "decone needs at least two lines");
  std::vector<AffLine> lines;
  lines.reserve(arr.size() - 1);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i != at) lines.push_back(restrict_to_affine(arr[i], arr[at]));
  }
  return AffArrangement(std::move(lines));
}

std::size_t decone_index(std::size_t line, std::size_t at) {
  if (line == at) throw Error(ErrorCode::LineAtInfinity, "line at infinity has no affine image");
  return line < at ? line : line - 1;
}

std::vector<AffinePoint> affine_points(const AffArrangement& arr) {
  std::map<std::pair<Rational, Rational>, std::set<std::size_t>> grouped;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Triple& p = arr[i].coeffs();
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      const Triple& q = arr[j].coeffs();
      const Rational det = p[0] * q[1] - p[1] * q[0];
      if (det.is_zero()) continue;
      Rational x = (p[1] * q[2] - q[1] * p[2]) / det;
      Rational y = (p[2] * q[0] - q[2] * p[0]) / det;
      auto& bucket = grouped[{std::move(x), std::move(y)}];
      bucket.insert(i);
      bucket.insert(j);
    }
  }
  std::vector<AffinePoint> out;
  out.reserve(grouped.size());
  for (auto& [xy, lines] : grouped) {
    out.push_back({xy.first, xy.second, std::vector<std::size_t>(lines.begin(), lines.end())});
  }
  return out;
}

TransversalityReport check_transversality(const AffArrangement& arr, std::span<const std::size_t> part1,
                                          std::span<const std::size_t> part2) {
  check_partition(arr.size(), part1, part2);

  const auto points = affine_points(arr);
  // For each cross pair find the point where it meets, if any.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_to_point;
  for (std::size_t id = 0; id < points.size(); ++id) {
    const auto& inc = points[id].incident;
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) pair_to_point[{inc[a], inc[b]}] = id;
    }
  }

  TransversalityReport report;
  std::set<std::size_t> double_points;
  for (std::size_t i : part1) {
    for (std::size_t j : part2) {
      const auto it = pair_to_point.find({std::min(i, j), std::max(i, j)});
      if (it == pair_to_point.end()) {
        report.offenders.push_back({i, j, CrossPairIssue::Parallel, std::nullopt});
        continue;
      }
      const AffinePoint& pt = points[it->second];
      if (pt.incident.size() != 2) {
        report.offenders.push_back({i, j, CrossPairIssue::HighMultiplicity, pt});
        continue;
      }
      double_points.insert(it->second);
    }
  }
  report.transverse_double_points = double_points.size();
  report.holds = report.offenders.empty() && double_points.size() == part1.size() * part2.size();
  return report;
}

bool is_general_position_partition(const AffArrangement& arr, std::span<const std::size_t> part1,
                                   std::span<const std::size_t> part2) {
  return check_transversality(arr, part1, part2).holds;
}

TransversalityReport check_oka_sakamoto_hypothesis(const AffArrangement& a1, const AffArrangement& a2) {
  for (const auto& l1 : a1.lines()) {
    for (const auto& l2 : a2.lines()) {
      if (l1 == l2) {
        throw Error(ErrorCode::SharedLine,
                    "line '" + l1.label() + "' also occurs as '" + l2.label() + "' in the second arrangement");
      }
    }
  }
  std::vector<AffLine> lines = a1.lines();
  lines.insert(lines.end(), a2.lines().begin(), a2.lines().end());
  const AffArrangement both(std::move(lines));

  std::vector<std::size_t> part1(a1.size());
  std::vector<std::size_t> part2(a2.size());
  for (std::size_t i = 0; i < part1.size(); ++i) part1[i] = i;
  for (std::size_t j = 0; j < part2.size(); ++j) part2[j] = a1.size() + j;

  TransversalityReport report = check_transversality(both, part1, part2);
  for (auto& d : report.offenders) d.second -= a1.size();
  return report;
}

}  // namespace arrprod
