#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrprod/fan_graph.hpp"
#include "arrprod/incidence.hpp"

namespace arrprod {

/// A line to send to infinity and a split of the remaining lines (projective
/// indices) whose affine images meet only in transverse double points.
struct GppWitness {
  std::size_t infinity_line;
  std::vector<std::size_t> part1;
  std::vector<std::size_t> part2;

  friend bool operator==(const GppWitness&, const GppWitness&) = default;
};

/// Lines other than `excluded`, joined when some point of multiplicity >= 3 of
/// the whole arrangement lies on both. The excluded line still counts toward
/// that multiplicity.
struct SharingGraph {
  std::size_t excluded;
  std::vector<std::size_t> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (a, b) with a < b, sorted
};

SharingGraph sharing_graph(const IncidenceData& inc, std::size_t exclude);

/// Witness with `line` at infinity, or nothing if no split works for it.
/// Parts are the connected component of the sharing graph holding the
/// smallest line index versus everything else.
std::optional<GppWitness> gpp_witness_for_line(const IncidenceData& inc, std::size_t line);

/// First witness over lines in index order. Needs at least 3 lines.
std::optional<GppWitness> has_gpp_decone(const IncidenceData& inc);

inline constexpr std::size_t kDefaultOracleLineBound = 12;

/// Brute force over every line and every split of the others, testing the
/// decone directly with is_general_position_partition.
std::optional<GppWitness> gpp_oracle(const IncidenceData& inc, std::size_t max_lines = kDefaultOracleLineBound);

/// Deconed check of a witness against its own arrangement.
bool verify_witness(const IncidenceData& inc, const GppWitness& witness);

struct LemmaOutcome {
  bool fired = false;
  std::optional<GppWitness> witness;
  std::string detail;
};

struct CorollaryConditions {
  bool connected = false;
  bool every_edge_on_circuit = false;
  bool every_line_has_vertex = false;

  bool all_hold() const { return connected && every_edge_on_circuit && every_line_has_vertex; }
};

/// Hypotheses of the Fan-graph lemmas evaluated on the canonical Fan graph,
/// each with the split its proof produces.
struct LemmaReport {
  LemmaOutcome disconnected;
  LemmaOutcome multi_point;
  LemmaOutcome simple;
  LemmaOutcome norepeats;
  CorollaryConditions corollary;

  bool any_fired() const { return disconnected.fired || multi_point.fired || simple.fired || norepeats.fired; }
};

LemmaReport lemma_pipeline_report(const IncidenceData& inc);

}  // namespace arrprod
