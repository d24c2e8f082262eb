#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "arrprod/fan_graph.hpp"
#include "arrprod/incidence.hpp"

namespace arrprod {

struct Window {
  Rational x0, y0, x1, y1;
};

struct Segment {
  Rational ax, ay, bx, by;
};

/// Exact part of `line` inside the closed window; nothing if the line misses
/// it or only touches a corner.
std::optional<Segment> clip_to_window(const AffLine& line, const Window& window);

/// SVG 1.1 drawing on a fixed 600x600 viewBox. Coordinates become decimals
/// (6 significant digits) only when written out.
std::string render_svg(const AffArrangement& arr, const Window& window);

/// Decones at the line labelled `infinity_label` and draws the result.
std::string render_svg(const ProjArrangement& arr, std::string_view infinity_label, const Window& window);

/// Graphviz DOT for a Fan graph: nodes are labelled by point coordinates and
/// edges by the line they lie on.
std::string fan_graph_dot(const IncidenceData& inc, const FanGraph& g);

}  // namespace arrprod
