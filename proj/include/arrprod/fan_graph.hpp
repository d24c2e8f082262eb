#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "arrprod/incidence.hpp"

namespace arrprod {

struct FanEdge {
  std::size_t line;
  std::size_t u;  // point ids
  std::size_t v;

  friend bool operator==(const FanEdge&, const FanEdge&) = default;
};

/// Multigraph of Fan type: vertices are the points of multiplicity >= 3,
/// and each line contributes a path through its vertices in the chosen order.
/// Only incidence and edge structure is kept; the arcs themselves are not.
struct FanGraph {
  std::vector<std::size_t> vertices;                         // point ids, ascending
  std::map<std::size_t, std::vector<std::size_t>> orderings;  // line -> its vertices in path order
  std::vector<FanEdge> edges;
};

/// Explicit per-line orderings; lines without an entry use the canonical
/// (ascending point id) order.
struct OrderingPolicy {
  std::map<std::size_t, std::vector<std::size_t>> explicit_orders;
};

FanGraph build_fan_graph(const IncidenceData& inc, const OrderingPolicy& policy = {});

struct FanEnumeration {
  std::vector<FanGraph> graphs;
  bool truncated = false;
  /// Number of graphs modulo reversal of each line's ordering, saturating at
  /// SIZE_MAX.
  std::size_t total = 0;
};

inline constexpr std::size_t kDefaultFanEnumerationLimit = 10000;

/// Number of distinct Fan graphs (orderings up to reversal), saturating at
/// SIZE_MAX.
std::size_t fan_graph_count(const IncidenceData& inc);

/// One graph per combination of per-line orderings, each line's ordering
/// taken up to reversal. Stops after max_count graphs.
FanEnumeration enumerate_fan_graphs(const IncidenceData& inc,
                                    std::size_t max_count = kDefaultFanEnumerationLimit);

/// Graphs with at most one vertex count as connected.
bool is_connected(const FanGraph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const FanGraph& g);

/// Indices into g.edges of every edge that lies on no simple circuit.
/// Parallel edges form 2-circuits and are never bridges.
std::vector<std::size_t> bridge_edges(const FanGraph& g);

/// A line carrying no point of multiplicity >= 3 (needs at least 3 lines).
std::optional<std::size_t> lemma_multipt_witness(const IncidenceData& inc);

struct NorepeatsWitness {
  std::size_t line;
  std::size_t v;  // point ids on `line`
  std::size_t w;
};

/// Finds a line L and two of its multiple points that fall into different
/// components once L is removed: the components are those of the
/// hypergraph on the points of multiplicity >= 3 whose hyperedges are the
/// point sets of the other lines. This does not depend on the orderings.
std::optional<NorepeatsWitness> norepeats_witness(const IncidenceData& inc);

/// Component label per point id (points of multiplicity < 3 get SIZE_MAX) in
/// the hypergraph above with line `removed` deleted.
std::vector<std::size_t> components_without_line(const IncidenceData& inc, std::size_t removed);

}  // namespace arrprod
