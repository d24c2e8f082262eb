#include "arrprod/fan_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "arrprod/error.hpp"

namespace arrprod {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Dense vertex numbering for the algorithms below.
struct DenseGraph {
  std::vector<std::size_t> ids;                                       // dense -> point id
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // (neighbour, edge index)

  explicit DenseGraph(const FanGraph& g) : ids(g.vertices), adj(g.vertices.size()) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const std::size_t a = dense(g.edges[e].u);
      const std::size_t b = dense(g.edges[e].v);
      adj[a].emplace_back(b, e);
      adj[b].emplace_back(a, e);
    }
  }

  std::size_t dense(std::size_t id) const {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw Error(ErrorCode::InvalidArgument, "edge endpoint is not a vertex");
    return static_cast<std::size_t>(it - ids.begin());
  }
};

void add_path_edges(FanGraph& g, std::size_t line, const std::vector<std::size_t>& order) {
  for (std::size_t k = 0; k + 1 < order.size(); ++k) g.edges.push_back({line, order[k], order[k + 1]});
}

FanGraph assemble(const std::vector<std::size_t>& vertices,
                  const std::map<std::size_t, std::vector<std::size_t>>& orderings) {
  FanGraph g;
  g.vertices = vertices;
  g.orderings = orderings;
  for (const auto& [line, order] : orderings) add_path_edges(g, line, order);
  return g;
}

std::map<std::size_t, std::vector<std::size_t>> canonical_orderings(const IncidenceData& inc) {
  std::map<std::size_t, std::vector<std::size_t>> out;
  for (std::size_t line = 0; line < inc.line_count(); ++line) {
    auto s = inc.points_on_line(line, 3);
    if (!s.empty()) out.emplace(line, std::move(s));
  }
  return out;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

}  // namespace

FanGraph build_fan_graph(const IncidenceData& inc, const OrderingPolicy& policy) {
  auto orderings = canonical_orderings(inc);
  for (const auto& [line, order] : policy.explicit_orders) {
    if (line >= inc.line_count()) throw Error(ErrorCode::BadOrdering, "ordering given for unknown line");
    const auto it = orderings.find(line);
    const std::vector<std::size_t> expected = it == orderings.end() ? std::vector<std::size_t>{} : it->second;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected) {
      throw Error(ErrorCode::BadOrdering, "ordering for line '" + inc.arrangement[line].label() +
                                              "' is not a permutation of its multiple points");
    }
    if (!order.empty()) orderings[line] = order;
  }
  return assemble(multiple_point_ids(inc, 3), orderings);
}

std::size_t fan_graph_count(const IncidenceData& inc) {
  std::size_t total = 1;
  for (std::size_t line = 0; line < inc.line_count(); ++line) {
    const std::size_t m = inc.points_on_line(line, 3).size();
    // m!/2 = 3 * 4 * ... * m
    for (std::size_t k = 3; k <= m; ++k) total = saturating_mul(total, k);
  }
  return total;
}

FanEnumeration enumerate_fan_graphs(const IncidenceData& inc, std::size_t max_count) {
  if (max_count < 1) throw Error(ErrorCode::InvalidArgument, "max_count must be at least 1");
  const auto vertices = multiple_point_ids(inc, 3);
  auto orderings = canonical_orderings(inc);

  FanEnumeration result;
  result.total = fan_graph_count(inc);
  std::vector<std::size_t> varying;  // lines with >= 3 points; the only ones with a real choice
  for (const auto& [line, order] : orderings) {
    if (order.size() >= 3) varying.push_back(line);
  }

  // Odometer over the varying lines. Each line's state is a permutation of
  // its sorted points with front < back, which picks one representative per
  // reversal pair.
  const auto advance_line = [&](std::vector<std::size_t>& order) {
    do {
      if (!std::next_permutation(order.begin(), order.end())) return false;
    } while (order.front() > order.back());
    return true;
  };

  while (true) {
    if (result.graphs.size() == max_count) {
      result.truncated = result.total > max_count;
      break;
    }
    result.graphs.push_back(assemble(vertices, orderings));

    std::size_t pos = 0;
    for (; pos < varying.size(); ++pos) {
      auto& order = orderings[varying[pos]];
      if (advance_line(order)) break;
      std::sort(order.begin(), order.end());
    }
    if (pos == varying.size()) break;
  }
  return result;
}

std::vector<std::vector<std::size_t>> connected_components(const FanGraph& g) {
  const DenseGraph dg(g);
  DisjointSets sets(dg.ids.size());
  for (std::size_t a = 0; a < dg.adj.size(); ++a) {
    for (const auto& [b, e] : dg.adj[a]) sets.unite(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t a = 0; a < dg.ids.size(); ++a) by_root[sets.find(a)].push_back(dg.ids[a]);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  // Roots are the smallest dense index, so this is already ordered by smallest vertex.
  return out;
}

bool is_connected(const FanGraph& g) { return connected_components(g).size() <= 1; }

std::vector<std::size_t> bridge_edges(const FanGraph& g) {
  const DenseGraph dg(g);
  const std::size_t n = dg.ids.size();
  std::vector<std::size_t> disc(n, kNone);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> bridges;
  std::size_t timer = 0;

  // Iterative DFS; the parent is tracked by edge index so parallel edges
  // correctly close 2-circuits.
  struct Frame {
    std::size_t vertex;
    std::size_t via_edge;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < dg.adj[f.vertex].size()) {
        const auto [to, e] = dg.adj[f.vertex][f.next++];
        if (e == f.via_edge) continue;
        if (disc[to] == kNone) {
          disc[to] = low[to] = timer++;
          stack.push_back({to, e, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], disc[to]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const std::size_t parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > disc[parent]) bridges.push_back(done.via_edge);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::optional<std::size_t> lemma_multipt_witness(const IncidenceData& inc) {
  if (inc.line_count() < 3) return std::nullopt;
  for (std::size_t line = 0; line < inc.line_count(); ++line) {
    if (inc.points_on_line(line, 3).empty()) return line;
  }
  return std::nullopt;
}

std::vector<std::size_t> components_without_line(const IncidenceData& inc, std::size_t removed) {
  DisjointSets sets(inc.points.size());
  for (std::size_t line = 0; line < inc.line_count(); ++line) {
    if (line == removed) continue;
    const auto s = inc.points_on_line(line, 3);
    for (std::size_t k = 1; k < s.size(); ++k) sets.unite(s[0], s[k]);
  }
  std::vector<std::size_t> label(inc.points.size(), kNone);
  for (std::size_t id = 0; id < inc.points.size(); ++id) {
    if (inc.points[id].multiplicity() >= 3) label[id] = sets.find(id);
  }
  return label;
}

std::optional<NorepeatsWitness> norepeats_witness(const IncidenceData& inc) {
  for (std::size_t line = 0; line < inc.line_count(); ++line) {
    const auto s = inc.points_on_line(line, 3);
    if (s.size() < 2) continue;
    const auto label = components_without_line(inc, line);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (label[s[a]] != label[s[b]]) return NorepeatsWitness{line, s[a], s[b]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace arrprod
