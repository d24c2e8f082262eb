#include "arrprod/gpp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arrprod/error.hpp"

namespace arrprod {

namespace {

std::vector<std::size_t> lines_through(const IncidenceData& inc, const std::vector<std::size_t>& point_ids) {
  std::set<std::size_t> lines;
  for (std::size_t id : point_ids) lines.insert(inc.points[id].incident.begin(), inc.points[id].incident.end());
  return {lines.begin(), lines.end()};
}

// Splits every line except `infinity` into (members of `first`, the rest).
GppWitness split_around(const IncidenceData& inc, std::size_t infinity, const std::vector<std::size_t>& first) {
  GppWitness w{infinity, {}, {}};
  for (std::size_t line = 0; line < inc.line_count(); ++line) {
    if (line == infinity) continue;
    if (std::binary_search(first.begin(), first.end(), line)) {
      w.part1.push_back(line);
    } else {
      w.part2.push_back(line);
    }
  }
  return w;
}

std::string describe_point(const IncidenceData& inc, std::size_t id) { return inc.points[id].point.to_string(); }

}  // namespace

SharingGraph sharing_graph(const IncidenceData& inc, std::size_t exclude) {
  const std::size_t n = inc.line_count();
  if (exclude >= n) throw Error(ErrorCode::IndexOutOfRange, "excluded line index out of range");
  if (n < 2) throw Error(ErrorCode::TooSmall, "sharing graph needs at least two lines");

  SharingGraph g{exclude, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (i != exclude) g.nodes.push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& p : inc.points) {
    if (p.multiplicity() < 3) continue;
    for (std::size_t a = 0; a < p.incident.size(); ++a) {
      for (std::size_t b = a + 1; b < p.incident.size(); ++b) {
        if (p.incident[a] != exclude && p.incident[b] != exclude) edges.insert({p.incident[a], p.incident[b]});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::optional<GppWitness> gpp_witness_for_line(const IncidenceData& inc, std::size_t line) {
  const SharingGraph g = sharing_graph(inc, line);
  if (g.nodes.size() < 2) return std::nullopt;

  // Flood the component of the smallest remaining line.
  std::vector<std::vector<std::size_t>> adj(inc.line_count());
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(inc.line_count(), false);
  std::vector<std::size_t> stack{g.nodes.front()};
  seen[g.nodes.front()] = true;
  std::vector<std::size_t> component;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    component.push_back(a);
    for (std::size_t b : adj[a]) {
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  if (component.size() == g.nodes.size()) return std::nullopt;
  std::sort(component.begin(), component.end());
  return split_around(inc, line, component);
}

std::optional<GppWitness> has_gpp_decone(const IncidenceData& inc) {
  if (inc.line_count() < 3) throw Error(ErrorCode::TooSmall, "a decone partition needs at least three lines");
  for (std::size_t line = 0; line < inc.line_count(); ++line) {
    if (auto w = gpp_witness_for_line(inc, line)) return w;
  }
  return std::nullopt;
}

std::optional<GppWitness> gpp_oracle(const IncidenceData& inc, std::size_t max_lines) {
  const std::size_t n = inc.line_count();
  if (n > max_lines) {
    throw Error(ErrorCode::TooLarge, "exhaustive search limited to " + std::to_string(max_lines) + " lines");
  }
  if (n < 3) return std::nullopt;

  for (std::size_t at = 0; at < n; ++at) {
    const AffArrangement affine = decone(inc.arrangement, at);
    const std::size_t m = affine.size();
    // Affine line 0 stays in part1; the remaining bits choose part2.
    for (std::size_t mask = 1; mask < (std::size_t{1} << (m - 1)); ++mask) {
      std::vector<std::size_t> part1{0};
      std::vector<std::size_t> part2;
      for (std::size_t k = 1; k < m; ++k) ((mask >> (k - 1)) & 1 ? part2 : part1).push_back(k);
      if (!is_general_position_partition(affine, part1, part2)) continue;

      GppWitness w{at, {}, {}};
      for (std::size_t k : part1) w.part1.push_back(k < at ? k : k + 1);
      for (std::size_t k : part2) w.part2.push_back(k < at ? k : k + 1);
      return w;
    }
  }
  return std::nullopt;
}

bool verify_witness(const IncidenceData& inc, const GppWitness& witness) {
  try {
    const AffArrangement affine = decone(inc.arrangement, witness.infinity_line);
    std::vector<std::size_t> part1;
    std::vector<std::size_t> part2;
    for (std::size_t l : witness.part1) part1.push_back(decone_index(l, witness.infinity_line));
    for (std::size_t l : witness.part2) part2.push_back(decone_index(l, witness.infinity_line));
    return is_general_position_partition(affine, part1, part2);
  } catch (const Error&) {
    return false;
  }
}

LemmaReport lemma_pipeline_report(const IncidenceData& inc) {
  LemmaReport report;
  const FanGraph fan = build_fan_graph(inc);
  const auto components = connected_components(fan);
  const auto bridges = bridge_edges(fan);
  const std::size_t n = inc.line_count();

  std::vector<std::size_t> lines_without_vertex;
  for (std::size_t line = 0; line < n; ++line) {
    if (inc.points_on_line(line, 3).empty()) lines_without_vertex.push_back(line);
  }

  report.corollary.connected = components.size() <= 1;
  report.corollary.every_edge_on_circuit = bridges.empty();
  report.corollary.every_line_has_vertex = lines_without_vertex.empty();

  if (components.size() >= 2) {
    // Lines through the first component against all other lines, deconed at
    // the first line of the component.
    const auto touching = lines_through(inc, components.front());
    auto& out = report.disconnected;
    out.fired = true;
    out.witness = split_around(inc, touching.front(), touching);
    out.detail = std::to_string(components.size()) + " components; first contains " +
                 std::to_string(components.front().size()) + " vertices";
  }

  if (const auto h = lemma_multipt_witness(inc)) {
    auto& out = report.multi_point;
    out.fired = true;
    const std::size_t at = (*h == 0) ? 1 : 0;
    out.witness = split_around(inc, at, {*h});
    out.detail = "line '" + inc.arrangement[*h].label() + "' carries only double points";
  }

  if (report.corollary.connected && report.corollary.every_line_has_vertex && !bridges.empty()) {
    const FanEdge& e = fan.edges[bridges.front()];
    FanGraph without = fan;
    without.edges.erase(without.edges.begin() + static_cast<std::ptrdiff_t>(bridges.front()));
    std::vector<std::size_t> side;
    for (const auto& comp : connected_components(without)) {
      if (std::binary_search(comp.begin(), comp.end(), e.u)) side = comp;
    }
    auto touching = lines_through(inc, side);
    touching.erase(std::remove(touching.begin(), touching.end(), e.line), touching.end());
    auto& out = report.simple;
    out.fired = true;
    out.witness = split_around(inc, e.line, touching);
    out.detail = "edge " + describe_point(inc, e.u) + " -- " + describe_point(inc, e.v) + " on line '" +
                 inc.arrangement[e.line].label() + "' is a bridge";
  }

  if (const auto nr = norepeats_witness(inc)) {
    const auto label = components_without_line(inc, nr->line);
    std::vector<std::size_t> reachable;
    for (std::size_t id = 0; id < inc.points.size(); ++id) {
      if (label[id] == label[nr->v]) reachable.push_back(id);
    }
    auto touching = lines_through(inc, reachable);
    touching.erase(std::remove(touching.begin(), touching.end(), nr->line), touching.end());
    auto& out = report.norepeats;
    out.fired = true;
    out.witness = split_around(inc, nr->line, touching);
    out.detail = "points " + describe_point(inc, nr->v) + " and " + describe_point(inc, nr->w) +
                 " are joined only through line '" + inc.arrangement[nr->line].label() + "'";
  }
  return report;
}

}  // namespace arrprod
