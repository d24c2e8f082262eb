#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrprod/fan_graph.hpp"
#include "arrprod/gpp.hpp"
#include "arrprod/incidence.hpp"
#include "arrprod/resonance.hpp"

namespace arrprod {

struct AnalysisOptions {
  std::size_t min_mult = 2;
};

/// Everything the analyzer knows about one projective arrangement.
struct Report {
  IncidenceData incidence;
  std::optional<std::string> added_infinity_label;  // set when the input was affine
  std::size_t min_mult = 2;
  FanGraph fan;
  std::vector<std::size_t> bridges;
  std::size_t fan_graph_count = 0;
  LemmaReport lemmas;
  std::vector<LocalComponent> components;
  Verdict verdict;
};

Report analyze(const ProjArrangement& arr, const AnalysisOptions& options = {},
               std::optional<std::string> added_infinity_label = std::nullopt);

/// Stable JSON shape; every rational is an exact string and counts are
/// integers, so the output never contains a floating-point token.
std::string to_json(const Report& report);
std::string to_text(const Report& report);

std::string gpp_report_text(const IncidenceData& inc);
std::string resonance_report_text(const IncidenceData& inc);
/// Canonical Fan graph summary; with enumerate > 0 also lists up to that many
/// graphs of the family.
std::string fan_report_text(const IncidenceData& inc, std::size_t enumerate);

struct OkaOutcome {
  TransversalityReport report;
  std::string text;
};

OkaOutcome oka_report(const AffArrangement& a1, const AffArrangement& a2);

}  // namespace arrprod
