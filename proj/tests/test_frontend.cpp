#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "arrprod/arrangement_file.hpp"
#include "arrprod/builtin_examples.hpp"
#include "arrprod/render.hpp"
#include "arrprod/report.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace arrprod;
using oracle::triple;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file " << p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Every number token in the text (outside strings) must be an integer.
bool json_has_float_token(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (json_has_float_token(item)) return true;
    }
  }
  return false;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_SUITE("arrangement file") {
  TEST_CASE("projective triangle") {
    const auto parsed = parse_arrangement("P 1 0 0 H1\nP 0 1 0 H2\nP 0 0 1 H3\n");
    const auto& arr = std::get<ProjArrangement>(parsed);
    CHECK(arr.size() == 3);
    CHECK(arr[2].label() == "H3");
  }

  TEST_CASE("comments, blank lines, header") {
    const auto parsed = parse_arrangement("# triangle\n\nprojective   # kind\n  P 1 0 0 a  # x\nP 0 1 0 b\n\n");
    CHECK(std::get<ProjArrangement>(parsed).size() == 2);
    const auto aff = parse_arrangement("affine\nA 1 0 -1/2 L1\n");
    const auto& a = std::get<AffArrangement>(aff);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == AffLine(triple(2, 0, -1)));
    CHECK(a[0] == AffLine({Rational(1), Rational(0), Rational(-1, 2)}));
  }

  TEST_CASE("errors") {
    CHECK_ERROR_CODE(parse_arrangement("P 2 0 0 H1\nP 1 0 0 H2\n"), ErrorCode::DuplicateLine);
    try {
      parse_arrangement("P 2 0 0 H1\n# gap\nP 1 0 0 H2\n");
      FAIL("expected a duplicate line error");
    } catch (const Error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("H1") != std::string::npos);
      CHECK(msg.find("H2") != std::string::npos);
      CHECK(msg.find("line 3") != std::string::npos);
    }
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 0 H1\nA 0 1 0 L\n"), ErrorCode::MixedKinds);
    CHECK_ERROR_CODE(parse_arrangement("affine\nP 1 0 0 H1\n"), ErrorCode::MixedKinds);
    CHECK_ERROR_CODE(parse_arrangement(""), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("# nothing\n\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 H1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 0 H1 extra\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 0.5 H1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 1/0 H1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 sqrt2 H1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("Q 1 0 0 H1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 0 0 0 H1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("A 0 0 1 L1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 0 H1\nP 0 1 0 H1\n"), ErrorCode::ParseError);
    CHECK_ERROR_CODE(parse_arrangement("P 1 0 0 H1\nprojective\n"), ErrorCode::ParseError);
    try {
      parse_arrangement("P 1 0 0 H1\n\nP 1 x 0 H2\n");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
    CHECK_ERROR_CODE(load_arrangement("/nonexistent/arrangement.txt"), ErrorCode::Io);
  }

  TEST_CASE("emit round trip") {
    for (const auto& ex : builtin_examples()) {
      const auto parsed = parse_arrangement(ex.text);
      const auto& arr = std::get<ProjArrangement>(parsed);
      const auto again = std::get<ProjArrangement>(parse_arrangement(emit_arrangement(arr)));
      CHECK(again.lines() == arr.lines());
      for (std::size_t i = 0; i < arr.size(); ++i) CHECK(again[i].label() == arr[i].label());
    }
    const AffArrangement a = oracle::aff({{1, 0, -1}, {0, 3, 2}});
    const auto back = std::get<AffArrangement>(parse_arrangement(emit_arrangement(a)));
    CHECK(back.lines() == a.lines());
    CHECK(emit_arrangement(a) == "affine\nA 1 0 -1 L1\nA 0 3 2 L2\n");
  }

  TEST_CASE("affine files are coned with @inf") {
    const auto p = as_projective(parse_arrangement("A 1 0 0 a\nA 0 1 0 b\n"));
    CHECK(p.size() == 3);
    CHECK(p[2].label() == "@inf");
    CHECK(p[2].coeffs() == triple(0, 0, 1));
  }
}

TEST_SUITE("builtin examples") {
  TEST_CASE("names and contents") {
    std::vector<std::string> names;
    for (const auto& ex : builtin_examples()) names.emplace_back(ex.name);
    CHECK(names == std::vector<std::string>{"triangle", "pencil3", "generic3", "braid", "braid-plus-generic", "two-pencils"});
    CHECK_ERROR_CODE(find_example("nope"), ErrorCode::UnknownExample);

    const auto braid = oracle::example("braid");
    REQUIRE(braid.size() == 6);
    const std::vector<std::array<long, 3>> expected{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, -1}, {1, 0, -1}, {1, -1, 0}};
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(braid[i].coeffs() == triple(expected[i][0], expected[i][1], expected[i][2]));
      CHECK(braid[i].label() == "H" + std::to_string(i + 1));
    }
    const auto pencil = oracle::example("pencil3");
    CHECK(pencil.lines() == oracle::proj({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}}).lines());
  }

  TEST_CASE("H7 is generic for the braid") {
    const auto plus = oracle::example("braid-plus-generic");
    REQUIRE(plus.size() == 7);
    CHECK(plus[6].coeffs() == triple(1, 2, 5));
    const auto braid_points = build_incidence(oracle::example("braid")).points;
    CHECK(braid_points.size() == 7);
    const std::vector<long> values{5, 2, 7, 1, 6, 3, 8};
    for (std::size_t i = 0; i < braid_points.size(); ++i) {
      CHECK(dot(plus[6].coeffs(), braid_points[i].point.coords()) == Rational(values[i]));
    }
  }
}

TEST_SUITE("report") {
  TEST_CASE("golden JSON for every builtin") {
    for (const auto& ex : builtin_examples()) {
      CAPTURE(ex.name);
      const auto arr = as_projective(parse_arrangement(ex.text));
      const std::string json = to_json(analyze(arr));
      const auto golden = read_file(std::filesystem::path(ARRPROD_GOLDEN_DIR) / (std::string(ex.name) + ".json"));
      CHECK(json == golden);
      // Re-emitting and re-analysing reproduces the same report.
      const auto again = as_projective(parse_arrangement(emit_arrangement(arr)));
      CHECK(to_json(analyze(again)) == json);
    }
  }

  TEST_CASE("JSON shape and no floating point tokens") {
    oracle::RandomArrangements gen(17);
    std::vector<ProjArrangement> corpus;
    for (const auto& name : oracle::example_names()) corpus.push_back(oracle::example(name));
    for (int i = 0; i < 30; ++i) corpus.push_back(gen.small());
    for (const auto& arr : corpus) {
      const std::string text = to_json(analyze(arr));
      const auto j = nlohmann::json::parse(text);
      for (const char* key : {"arrangement", "points", "fan_graph", "lemmas", "gpp", "local_components", "bipartition",
                              "verdict"}) {
        CHECK(j.contains(key));
      }
      CHECK_FALSE(json_has_float_token(j));
      CHECK(count_matches(text, R"([0-9]\.[0-9]|[0-9][eE][+-]?[0-9])") == 0);
    }
  }

  TEST_CASE("braid report content") {
    const auto report = analyze(oracle::example("braid"));
    const auto j = nlohmann::json::parse(to_json(report));
    CHECK(j["verdict"] == "NotAProduct");
    std::size_t triples = 0, doubles = 0;
    for (const auto& p : j["points"]) {
      if (p["multiplicity"] == 3) ++triples;
      if (p["multiplicity"] == 2) ++doubles;
    }
    CHECK(triples == 4);
    CHECK(doubles == 3);
    CHECK(j["fan_graph"]["vertex_count"] == 4);
    CHECK(j["fan_graph"]["edge_count"] == 6);
    CHECK(j["fan_graph"]["graph_count"] == "1");
    CHECK(j["local_components"].size() == 4);
    CHECK(j["local_components"][0]["basis"][0] == nlohmann::json({"1", "0", "0", "0", "0", "-1"}));
    CHECK(j["gpp"]["found"] == false);
  }

  TEST_CASE("min_mult filters listed points only") {
    AnalysisOptions opts;
    opts.min_mult = 3;
    const auto j = nlohmann::json::parse(to_json(analyze(oracle::example("braid"), opts)));
    CHECK(j["points"].size() == 4);
    CHECK(j["verdict"] == "NotAProduct");
  }

  TEST_CASE("affine inputs name the added line") {
    const auto arr = as_projective(parse_arrangement("A 1 0 0 a\nA 0 1 0 b\nA 1 1 -1 c\n"));
    const auto report = analyze(arr, {}, std::string("@inf"));
    const auto j = nlohmann::json::parse(to_json(report));
    CHECK(j["arrangement"]["infinity_label"] == "@inf");
    CHECK(to_text(report).find("@inf") != std::string::npos);
  }

  TEST_CASE("text reports") {
    const auto text = to_text(analyze(oracle::example("braid")));
    CHECK(text.find("Verdict: NotAProduct") != std::string::npos);
    CHECK(text.find("{H1, H2, H6}") != std::string::npos);
    const auto gpp = gpp_report_text(build_incidence(oracle::example("braid-plus-generic")));
    CHECK(gpp.find("H7") != std::string::npos);
    const auto res = resonance_report_text(build_incidence(oracle::example("braid")));
    CHECK(res.find("none") != std::string::npos);
    const auto fan = fan_report_text(build_incidence(oracle::example("braid")), 5);
    CHECK(fan.find("vertices: 4, edges: 6") != std::string::npos);
  }

  TEST_CASE("Oka report text") {
    const auto ok = oka_report(oracle::aff({{1, 0, 0}}), oracle::aff({{0, 1, 0}}));
    CHECK(ok.report.holds);
    CHECK(ok.text.rfind("true", 0) == 0);
    const auto par = oka_report(oracle::aff({{1, 0, 0}}), oracle::aff({{1, 0, -1}}));
    CHECK(par.text.rfind("false", 0) == 0);
    CHECK(par.text.find("parallel") != std::string::npos);
    const auto tri = oka_report(oracle::aff({{1, 0, 0}, {0, 1, 0}}), oracle::aff({{1, -1, 0}}));
    CHECK(tri.text.find("multiplicity 3") != std::string::npos);
    CHECK(tri.text.find("(0, 0)") != std::string::npos);
  }
}

TEST_SUITE("render") {
  TEST_CASE("clipping is exact") {
    const Window w{Rational(-1), Rational(-1), Rational(1), Rational(1)};
    const auto seg = clip_to_window(AffLine(triple(1, -1, 0)), w);
    REQUIRE(seg.has_value());
    CHECK(seg->ax == Rational(-1));
    CHECK(seg->ay == Rational(-1));
    CHECK(seg->bx == Rational(1));
    CHECK(seg->by == Rational(1));
    const auto third = clip_to_window(AffLine(triple(3, 0, -1)), w);
    REQUIRE(third.has_value());
    CHECK(third->ax == Rational(1, 3));
    CHECK_FALSE(clip_to_window(AffLine(triple(1, 0, -5)), w).has_value());
    // Touching only a corner is not a segment.
    CHECK_FALSE(clip_to_window(AffLine(triple(1, 1, -2)), w).has_value());
    CHECK_ERROR_CODE(clip_to_window(AffLine(triple(1, 0, 0)), Window{Rational(1), Rational(0), Rational(1), Rational(2)}),
                     ErrorCode::DegenerateWindow);
  }

  TEST_CASE("affine cross") {
    const Window w{Rational(-1), Rational(-1), Rational(1), Rational(1)};
    const auto svg = render_svg(oracle::aff({{1, 0, 0}, {0, 1, 0}}), w);
    CHECK(count_matches(svg, "<line ") == 2);
    CHECK(svg.find(R"(<line x1="300" y1="600" x2="300" y2="0")") != std::string::npos);
    CHECK(svg.find(R"(<line x1="0" y1="300" x2="600" y2="300")") != std::string::npos);
    CHECK(count_matches(svg, "<text ") == 2);
    CHECK(svg.find("viewBox=\"0 0 600 600\"") != std::string::npos);
    CHECK(render_svg(oracle::aff({{1, 0, 0}, {0, 1, 0}}), w) == svg);
  }

  TEST_CASE("braid at H6") {
    const Window w{Rational(-3), Rational(-3), Rational(3), Rational(3)};
    const auto svg = render_svg(oracle::example("braid"), "H6", w);
    CHECK(count_matches(svg, "<line ") == 5);
    CHECK(count_matches(svg, "<text ") == 5);
    CHECK(svg.find(">H6<") == std::string::npos);
    CHECK_ERROR_CODE(render_svg(oracle::example("braid"), "H9", w), ErrorCode::LabelNotFound);
  }

  TEST_CASE("lines missing the window are noted") {
    const Window w{Rational(-1), Rational(-1), Rational(1), Rational(1)};
    const auto svg = render_svg(oracle::aff({{1, 0, 0}, {1, 0, -5}}), w);
    CHECK(count_matches(svg, "<line ") == 1);
    CHECK(count_matches(svg, "<text ") == 1);
    CHECK(svg.find("<!-- line L2 does not meet the window -->") != std::string::npos);
  }

  TEST_CASE("DOT output") {
    const auto inc = build_incidence(oracle::example("braid"));
    const auto dot = fan_graph_dot(inc, build_fan_graph(inc));
    CHECK(dot.rfind("graph fan {", 0) == 0);
    CHECK(count_matches(dot, R"(\n  p\d+ \[label=)") == 4);
    CHECK(count_matches(dot, " -- ") == 6);
    CHECK(dot.find("[label=\"[1:1:1]\"]") != std::string::npos);
    CHECK(dot.find("[label=\"H6\"]") != std::string::npos);
  }
}
