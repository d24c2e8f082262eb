#include "arrprod/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "arrprod/error.hpp"

namespace arrprod {

namespace {

constexpr double kCanvas = 600.0;

std::string decimal(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void check_window(const Window& w) {
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) {
    throw Error(ErrorCode::DegenerateWindow, "window needs x0 < x1 and y0 < y1");
  }
}

}  // namespace

std::optional<Segment> clip_to_window(const AffLine& line, const Window& w) {
  check_window(w);
  const Rational& a = line.coeffs()[0];
  const Rational& b = line.coeffs()[1];
  const Rational& c = line.coeffs()[2];

  std::vector<std::pair<Rational, Rational>> hits;
  if (!b.is_zero()) {
    for (const Rational& x : {w.x0, w.x1}) {
      Rational y = -(a * x + c) / b;
      if (w.y0 <= y && y <= w.y1) hits.emplace_back(x, std::move(y));
    }
  }
  if (!a.is_zero()) {
    for (const Rational& y : {w.y0, w.y1}) {
      Rational x = -(b * y + c) / a;
      if (w.x0 <= x && x <= w.x1) hits.emplace_back(std::move(x), y);
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  if (hits.size() < 2) return std::nullopt;
  return Segment{hits.front().first, hits.front().second, hits.back().first, hits.back().second};
}

std::string render_svg(const AffArrangement& arr, const Window& w) {
  check_window(w);
  const Rational width = w.x1 - w.x0;
  const Rational height = w.y1 - w.y0;
  const auto sx = [&](const Rational& x) { return ((x - w.x0) / width).to_double() * kCanvas; };
  const auto sy = [&](const Rational& y) { return ((w.y1 - y) / height).to_double() * kCanvas; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n"
     << "<!-- window x: [" << w.x0 << ", " << w.x1 << "] y: [" << w.y0 << ", " << w.y1 << "] -->\n"
     << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\" stroke=\"gray\"/>\n";
  for (const auto& line : arr.lines()) {
    const auto seg = clip_to_window(line, w);
    if (!seg) {
      os << "<!-- line " << xml_escape(line.label()) << " does not meet the window -->\n";
      continue;
    }
    const double ax = sx(seg->ax), ay = sy(seg->ay), bx = sx(seg->bx), by = sy(seg->by);
    os << "<line x1=\"" << decimal(ax) << "\" y1=\"" << decimal(ay) << "\" x2=\"" << decimal(bx) << "\" y2=\""
       << decimal(by) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    // Label a tenth of the way along the segment, nudged off the stroke.
    const double lx = ax + 0.1 * (bx - ax) + 6.0;
    const double ly = ay + 0.1 * (by - ay) - 6.0;
    os << "<text x=\"" << decimal(lx) << "\" y=\"" << decimal(ly) << "\" font-family=\"sans-serif\" "
       << "font-size=\"14\">" << xml_escape(line.label()) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const ProjArrangement& arr, std::string_view infinity_label, const Window& window) {
  const auto at = arr.index_of(infinity_label);
  if (!at) throw Error(ErrorCode::LabelNotFound, "no line labelled '" + std::string(infinity_label) + "'");
  return render_svg(decone(arr, *at), window);
}

std::string fan_graph_dot(const IncidenceData& inc, const FanGraph& g) {
  std::ostringstream os;
  os << "graph fan {\n";
  for (std::size_t id : g.vertices) {
    os << "  p" << id << " [label=\"" << inc.points[id].point.to_string() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  p" << e.u << " -- p" << e.v << " [label=\"" << inc.arrangement[e.line].label() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace arrprod
