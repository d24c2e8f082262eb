#include "arrprod/report.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

namespace arrprod {

namespace {

using Json = nlohmann::ordered_json;

Json exact(const Triple& t) { return Json::array({t[0].to_string(), t[1].to_string(), t[2].to_string()}); }

Json exact(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json labels(const ProjArrangement& arr, const std::vector<std::size_t>& lines) {
  Json out = Json::array();
  for (std::size_t l : lines) out.push_back(arr[l].label());
  return out;
}

std::string label_list(const ProjArrangement& arr, const std::vector<std::size_t>& lines) {
  std::string out = "{";
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (k) out += ", ";
    out += arr[lines[k]].label();
  }
  return out + "}";
}

std::string vector_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].to_string();
  }
  return out + ")";
}

Json witness_json(const ProjArrangement& arr, const std::optional<GppWitness>& w) {
  if (!w) return nullptr;
  return Json{{"infinity", arr[w->infinity_line].label()},
              {"part1", labels(arr, w->part1)},
              {"part2", labels(arr, w->part2)}};
}

std::string witness_text(const ProjArrangement& arr, const GppWitness& w) {
  return "decone at " + arr[w.infinity_line].label() + ": " + label_list(arr, w.part1) + " | " +
         label_list(arr, w.part2);
}

Json lemma_json(const ProjArrangement& arr, const LemmaOutcome& o) {
  return Json{{"fired", o.fired}, {"detail", o.detail}, {"witness", witness_json(arr, o.witness)}};
}

Json edge_json(const IncidenceData& inc, const FanEdge& e) {
  return Json{{"line", inc.arrangement[e.line].label()},
              {"from", exact(inc.points[e.u].point.coords())},
              {"to", exact(inc.points[e.v].point.coords())}};
}

std::string edge_text(const IncidenceData& inc, const FanEdge& e) {
  return inc.points[e.u].point.to_string() + " -- " + inc.points[e.v].point.to_string() + " on " +
         inc.arrangement[e.line].label();
}

std::string count_text(std::size_t count) {
  return count == std::numeric_limits<std::size_t>::max() ? std::string("overflow") : std::to_string(count);
}

// Indices of components on one side, rendered as the points they belong to.
Json component_points(const std::vector<LocalComponent>& comps, const std::vector<std::size_t>& which) {
  Json out = Json::array();
  for (std::size_t i : which) out.push_back(exact(comps[i].point.coords()));
  return out;
}

std::string component_points_text(const std::vector<LocalComponent>& comps, const std::vector<std::size_t>& which) {
  std::string out = "{";
  for (std::size_t k = 0; k < which.size(); ++k) {
    if (k) out += ", ";
    out += comps[which[k]].point.to_string();
  }
  return out + "}";
}

void write_lemma_text(std::ostream& os, const ProjArrangement& arr, const char* name, const LemmaOutcome& o) {
  os << "  " << name << ": " << (o.fired ? "fires" : "does not fire");
  if (o.fired) os << " (" << o.detail << "); " << witness_text(arr, *o.witness);
  os << '\n';
}

}  // namespace

Report analyze(const ProjArrangement& arr, const AnalysisOptions& options,
               std::optional<std::string> added_infinity_label) {
  IncidenceData inc = build_incidence(arr);
  multiple_point_ids(inc, options.min_mult);  // validates min_mult
  FanGraph fan = build_fan_graph(inc);
  auto bridges = bridge_edges(fan);
  const std::size_t count = fan_graph_count(inc);
  LemmaReport lemmas = lemma_pipeline_report(inc);
  auto components = local_components(inc);
  Verdict verdict = product_obstruction(inc);
  return Report{std::move(inc),   std::move(added_infinity_label), options.min_mult, std::move(fan),
                std::move(bridges), count, std::move(lemmas), std::move(components), std::move(verdict)};
}

std::string to_json(const Report& r) {
  const IncidenceData& inc = r.incidence;
  const ProjArrangement& arr = inc.arrangement;

  Json lines = Json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    lines.push_back(Json{{"index", i}, {"label", arr[i].label()}, {"coeffs", exact(arr[i].coeffs())}});
  }
  Json arrangement{{"kind", "projective"},
                   {"infinity_label", r.added_infinity_label ? Json(*r.added_infinity_label) : Json(nullptr)},
                   {"line_count", arr.size()},
                   {"lines", lines}};

  Json points = Json::array();
  for (const auto& p : multiple_points(inc, r.min_mult)) {
    points.push_back(Json{{"coords", exact(p.point.coords())},
                          {"multiplicity", p.multiplicity()},
                          {"lines", labels(arr, p.incident)}});
  }

  Json bridges = Json::array();
  for (std::size_t e : r.bridges) bridges.push_back(edge_json(inc, r.fan.edges[e]));
  Json edges = Json::array();
  for (const auto& e : r.fan.edges) edges.push_back(edge_json(inc, e));
  Json fan{{"vertex_count", r.fan.vertices.size()},
           {"edge_count", r.fan.edges.size()},
           {"connected", is_connected(r.fan)},
           {"edges", edges},
           {"bridges", bridges},
           {"graph_count", count_text(r.fan_graph_count)}};

  Json lemmas{{"disconnected", lemma_json(arr, r.lemmas.disconnected)},
              {"multi_point", lemma_json(arr, r.lemmas.multi_point)},
              {"simple", lemma_json(arr, r.lemmas.simple)},
              {"norepeats", lemma_json(arr, r.lemmas.norepeats)},
              {"corollary",
               Json{{"connected", r.lemmas.corollary.connected},
                    {"every_edge_on_circuit", r.lemmas.corollary.every_edge_on_circuit},
                    {"every_line_has_vertex", r.lemmas.corollary.every_line_has_vertex},
                    {"holds", r.lemmas.corollary.all_hold()}}}};

  Json gpp{{"found", r.verdict.witness.has_value()}, {"witness", witness_json(arr, r.verdict.witness)}};

  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json basis = Json::array();
    for (const auto& row : c.basis.rows()) basis.push_back(exact(row));
    comps.push_back(Json{{"point", exact(c.point.coords())},
                         {"lines", labels(arr, c.incident)},
                         {"dimension", c.basis.dim()},
                         {"basis", basis}});
  }

  const auto& ev = r.verdict.evidence;
  Json bipartition{{"searched", ev.searched}, {"found", ev.bipartition.has_value()}};
  if (ev.bipartition) {
    bipartition["first"] = component_points(r.components, ev.bipartition->first);
    bipartition["second"] = component_points(r.components, ev.bipartition->second);
  } else {
    bipartition["first"] = nullptr;
    bipartition["second"] = nullptr;
  }

  Json out{{"arrangement", arrangement},
           {"points", points},
           {"fan_graph", fan},
           {"lemmas", lemmas},
           {"gpp", gpp},
           {"local_components", comps},
           {"bipartition", bipartition},
           {"verdict", to_string(r.verdict.kind)}};
  return out.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  const IncidenceData& inc = r.incidence;
  const ProjArrangement& arr = inc.arrangement;
  std::ostringstream os;

  os << "Arrangement: " << arr.size() << " projective lines";
  if (r.added_infinity_label) os << " (affine input coned; added line " << *r.added_infinity_label << ")";
  os << '\n';
  for (const auto& l : arr.lines()) {
    const Triple& c = l.coeffs();
    os << "  " << l.label() << ": (" << c[0] << ", " << c[1] << ", " << c[2] << ")\n";
  }

  const auto points = multiple_points(inc, r.min_mult);
  os << "\nPoints of multiplicity >= " << r.min_mult << ": " << points.size() << '\n';
  for (const auto& p : points) {
    os << "  " << p.point.to_string() << "  multiplicity " << p.multiplicity() << "  " << label_list(arr, p.incident)
       << '\n';
  }

  os << "\nFan graph (canonical ordering): " << r.fan.vertices.size() << " vertices, " << r.fan.edges.size()
     << " edges, " << (is_connected(r.fan) ? "connected" : "disconnected") << '\n';
  os << "  bridges: " << r.bridges.size() << '\n';
  for (std::size_t e : r.bridges) os << "    " << edge_text(inc, r.fan.edges[e]) << '\n';
  os << "  graphs in family: " << count_text(r.fan_graph_count) << '\n';

  os << "\nLemmas:\n";
  write_lemma_text(os, arr, "disconnected", r.lemmas.disconnected);
  write_lemma_text(os, arr, "multi-point", r.lemmas.multi_point);
  write_lemma_text(os, arr, "simple", r.lemmas.simple);
  write_lemma_text(os, arr, "norepeats", r.lemmas.norepeats);
  const auto& cor = r.lemmas.corollary;
  os << "  corollary conditions: connected=" << (cor.connected ? "yes" : "no")
     << " every-edge-on-circuit=" << (cor.every_edge_on_circuit ? "yes" : "no")
     << " every-line-has-vertex=" << (cor.every_line_has_vertex ? "yes" : "no") << '\n';

  os << "\nDecone with general position partition: ";
  if (r.verdict.witness) {
    os << witness_text(arr, *r.verdict.witness) << '\n';
  } else {
    os << "none\n";
  }

  os << "\nLocal resonance components: " << r.components.size() << '\n';
  for (const auto& c : r.components) {
    os << "  " << c.point.to_string() << " " << label_list(arr, c.incident) << " dim " << c.basis.dim() << '\n';
    for (const auto& row : c.basis.rows()) os << "    " << vector_string(row) << '\n';
  }
  const auto& ev = r.verdict.evidence;
  os << "Span-disjoint bipartition: ";
  if (!ev.searched) {
    os << "not searched (fewer than two components)\n";
  } else if (ev.bipartition) {
    os << component_points_text(r.components, ev.bipartition->first) << " | "
       << component_points_text(r.components, ev.bipartition->second) << '\n';
  } else {
    os << "none\n";
  }

  os << "\nVerdict: " << to_string(r.verdict.kind) << '\n';
  if (r.verdict.kind == VerdictKind::ProductPossible) {
    os << "  the decone splits into two transverse parts, so its complement group is the product of theirs\n";
  } else {
    os << "  no decone has a general position partition, so the complement group is not a nontrivial direct "
          "product\n";
  }
  return os.str();
}

std::string gpp_report_text(const IncidenceData& inc) {
  const ProjArrangement& arr = inc.arrangement;
  std::ostringstream os;
  const auto witness = has_gpp_decone(inc);
  for (std::size_t line = 0; line < arr.size(); ++line) {
    const auto g = sharing_graph(inc, line);
    const auto w = gpp_witness_for_line(inc, line);
    os << "infinity " << arr[line].label() << ": sharing graph " << g.edges.size() << " edges, "
       << (w ? "disconnected" : "connected") << '\n';
  }
  if (!witness) {
    os << "result: no decone has a general position partition\n";
  } else {
    const AffArrangement affine = decone(arr, witness->infinity_line);
    std::vector<std::size_t> p1;
    std::vector<std::size_t> p2;
    for (std::size_t l : witness->part1) p1.push_back(decone_index(l, witness->infinity_line));
    for (std::size_t l : witness->part2) p2.push_back(decone_index(l, witness->infinity_line));
    const auto check = check_transversality(affine, p1, p2);
    os << "result: " << witness_text(arr, *witness) << '\n';
    os << "transverse double points: " << check.transverse_double_points << " = " << p1.size() << " x " << p2.size()
       << '\n';
  }
  if (arr.size() <= kDefaultOracleLineBound) {
    const bool oracle = gpp_oracle(inc).has_value();
    os << "exhaustive check: " << (oracle == witness.has_value() ? "agrees" : "DISAGREES") << '\n';
  }
  return os.str();
}

std::string resonance_report_text(const IncidenceData& inc) {
  const ProjArrangement& arr = inc.arrangement;
  std::ostringstream os;
  const auto comps = local_components(inc);
  os << "local components: " << comps.size() << '\n';
  for (std::size_t i = 0; i < comps.size(); ++i) {
    os << "  #" << i << ' ' << comps[i].point.to_string() << ' ' << label_list(arr, comps[i].incident) << " dim "
       << comps[i].basis.dim() << '\n';
    for (const auto& row : comps[i].basis.rows()) os << "    " << vector_string(row) << '\n';
  }
  if (comps.empty()) return os.str();

  std::vector<std::size_t> all(comps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  os << "dimension of combined span: " << combined_span(comps, all).dim() << '\n';
  os << "pairwise intersection dimensions:\n";
  for (std::size_t a = 0; a < comps.size(); ++a) {
    os << "  ";
    for (std::size_t b = 0; b < comps.size(); ++b) {
      os << (b ? " " : "") << (a == b ? comps[a].basis.dim() : intersection_dim(comps[a].basis, comps[b].basis));
    }
    os << '\n';
  }
  if (comps.size() < 2) {
    os << "span-disjoint bipartition: not searched (fewer than two components)\n";
  } else if (const auto split = find_span_disjoint_bipartition(comps)) {
    os << "span-disjoint bipartition: " << component_points_text(comps, split->first) << " | "
       << component_points_text(comps, split->second) << '\n';
  } else {
    os << "span-disjoint bipartition: none\n";
  }
  return os.str();
}

std::string fan_report_text(const IncidenceData& inc, std::size_t enumerate) {
  std::ostringstream os;
  const FanGraph fan = build_fan_graph(inc);
  const auto write_graph = [&](const FanGraph& g) {
    os << "  vertices: " << g.vertices.size() << ", edges: " << g.edges.size() << ", "
       << (is_connected(g) ? "connected" : "disconnected") << '\n';
    for (const auto& e : g.edges) os << "    " << edge_text(inc, e) << '\n';
    const auto bridges = bridge_edges(g);
    os << "  bridges: " << bridges.size() << '\n';
    for (std::size_t e : bridges) os << "    " << edge_text(inc, g.edges[e]) << '\n';
  };
  os << "canonical Fan graph:\n";
  write_graph(fan);
  os << "graphs in family: " << count_text(fan_graph_count(inc)) << '\n';
  if (const auto h = lemma_multipt_witness(inc)) {
    os << "line without multiple points: " << inc.arrangement[*h].label() << '\n';
  }
  if (const auto nr = norepeats_witness(inc)) {
    os << "separating line: " << inc.arrangement[nr->line].label() << " between "
       << inc.points[nr->v].point.to_string() << " and " << inc.points[nr->w].point.to_string() << '\n';
  }
  if (enumerate > 0) {
    const auto family = enumerate_fan_graphs(inc, enumerate);
    os << "enumerated " << family.graphs.size() << (family.truncated ? " (truncated)" : "") << ":\n";
    for (std::size_t i = 0; i < family.graphs.size(); ++i) {
      os << "graph " << i << ":\n";
      write_graph(family.graphs[i]);
    }
  }
  return os.str();
}

OkaOutcome oka_report(const AffArrangement& a1, const AffArrangement& a2) {
  OkaOutcome out{check_oka_sakamoto_hypothesis(a1, a2), {}};
  std::ostringstream os;
  os << (out.report.holds ? "true" : "false") << '\n';
  os << "transverse double points: " << out.report.transverse_double_points << " of " << a1.size() * a2.size()
     << '\n';
  for (const auto& d : out.report.offenders) {
    os << "  " << a1[d.first].label() << " x " << a2[d.second].label() << ": ";
    if (d.issue == CrossPairIssue::Parallel) {
      os << "parallel\n";
    } else {
      os << "meet at (" << d.point->x << ", " << d.point->y << ") with multiplicity " << d.point->incident.size()
         << '\n';
    }
  }
  out.text = os.str();
  return out;
}

}  // namespace arrprod
