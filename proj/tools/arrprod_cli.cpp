// Command line front end. Everything goes through the C API in arrprod.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrprod/arrprod.h"

namespace {

constexpr int kExitError = 2;

struct ArrangementDeleter {
  void operator()(arrprod_arrangement* a) const { arrprod_arrangement_free(a); }
};
using ArrangementPtr = std::unique_ptr<arrprod_arrangement, ArrangementDeleter>;

struct StringDeleter {
  void operator()(char* s) const { arrprod_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class CliFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(arrprod_status status) {
  if (status != ARRPROD_OK) {
    throw CliFailure(std::string(arrprod_status_name(status)) + ": " + arrprod_last_error());
  }
}

// A path that does not exist but names a builtin example loads the builtin.
ArrangementPtr open_arrangement(const std::string& path) {
  arrprod_arrangement* raw = nullptr;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) && arrprod_arrangement_from_example(path.c_str(), &raw) == ARRPROD_OK) {
    return ArrangementPtr(raw);
  }
  check(arrprod_arrangement_load(path.c_str(), &raw));
  return ArrangementPtr(raw);
}

void print(const OwnedString& s) { std::fputs(s.get(), stdout); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of complex line arrangements: decone partitions, Fan graphs, resonance"};
  app.require_subcommand(1);

  std::string path;
  std::string path2;
  std::string format = "text";
  int min_mult = 2;
  bool dot = false;
  std::size_t enumerate = 0;
  std::string output;
  std::vector<std::string> window;
  std::string infinity;
  std::string example_name;

  auto* analyze = app.add_subcommand("analyze", "full report; exit 0 = ProductPossible, 1 = NotAProduct");
  analyze->add_option("path", path, "arrangement file or builtin example name")->required();
  analyze->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--min-mult", min_mult, "smallest multiplicity listed")->check(CLI::Range(2, 1 << 20));

  auto* gpp = app.add_subcommand("gpp", "search for a decone with a general position partition");
  gpp->add_option("path", path, "arrangement file or builtin example name")->required();

  auto* resonance = app.add_subcommand("resonance", "local resonance components and span-disjoint splits");
  resonance->add_option("path", path, "arrangement file or builtin example name")->required();

  auto* fan = app.add_subcommand("fan", "graphs of Fan type");
  fan->add_option("path", path, "arrangement file or builtin example name")->required();
  fan->add_flag("--dot", dot, "print the canonical Fan graph as Graphviz DOT");
  fan->add_option("--enumerate", enumerate, "list up to N graphs of the family");

  auto* oka = app.add_subcommand("oka", "transversality of two affine arrangements; exit 0 = holds");
  oka->add_option("path1", path, "first affine arrangement")->required();
  oka->add_option("path2", path2, "second affine arrangement")->required();

  auto* render = app.add_subcommand("render", "draw the real picture as SVG");
  render->add_option("path", path, "arrangement file or builtin example name")->required();
  render->add_option("-o", output, "output SVG file")->required();
  render->add_option("--window", window, "x0 y0 x1 y1")->expected(4)->required();
  render->add_option("--infinity", infinity, "label of the line sent to infinity (projective input)");

  auto* examples = app.add_subcommand("examples", "builtin arrangements");
  examples->require_subcommand(1);
  auto* list = examples->add_subcommand("list", "names with a one-line description");
  auto* emit = examples->add_subcommand("emit", "print an example in the arrangement file format");
  emit->add_option("name", example_name, "example name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (analyze->parsed()) {
      const auto arr = open_arrangement(path);
      char* out = nullptr;
      arrprod_verdict verdict{};
      check(arrprod_analyze(arr.get(), format == "json" ? ARRPROD_FORMAT_JSON : ARRPROD_FORMAT_TEXT, min_mult, &out,
                            &verdict));
      print(OwnedString(out));
      return verdict == ARRPROD_PRODUCT_POSSIBLE ? 0 : 1;
    }
    if (gpp->parsed()) {
      const auto arr = open_arrangement(path);
      char* out = nullptr;
      int found = 0;
      check(arrprod_gpp(arr.get(), &out, &found));
      print(OwnedString(out));
      return found ? 0 : 1;
    }
    if (resonance->parsed()) {
      const auto arr = open_arrangement(path);
      char* out = nullptr;
      check(arrprod_resonance(arr.get(), &out));
      print(OwnedString(out));
      return 0;
    }
    if (fan->parsed()) {
      const auto arr = open_arrangement(path);
      char* out = nullptr;
      check(dot ? arrprod_fan_dot(arr.get(), &out) : arrprod_fan(arr.get(), enumerate, &out));
      print(OwnedString(out));
      if (dot && enumerate > 0) {
        check(arrprod_fan(arr.get(), enumerate, &out));
        std::fputs("// ", stdout);
        for (const char* c = out; *c; ++c) {
          std::fputc(*c, stdout);
          if (*c == '\n' && c[1]) std::fputs("// ", stdout);
        }
        arrprod_string_free(out);
      }
      return 0;
    }
    if (oka->parsed()) {
      const auto a1 = open_arrangement(path);
      const auto a2 = open_arrangement(path2);
      char* out = nullptr;
      int holds = 0;
      check(arrprod_oka(a1.get(), a2.get(), &out, &holds));
      print(OwnedString(out));
      return holds ? 0 : 1;
    }
    if (render->parsed()) {
      const auto arr = open_arrangement(path);
      const char* bounds[4] = {window[0].c_str(), window[1].c_str(), window[2].c_str(), window[3].c_str()};
      char* out = nullptr;
      check(arrprod_render_svg(arr.get(), infinity.empty() ? nullptr : infinity.c_str(), bounds, &out));
      const OwnedString svg(out);
      std::ofstream file(output, std::ios::binary);
      if (!file || !(file << svg.get())) throw CliFailure("cannot write '" + output + "'");
      return 0;
    }
    if (list->parsed()) {
      char* out = nullptr;
      check(arrprod_examples_list(&out));
      print(OwnedString(out));
      return 0;
    }
    if (emit->parsed()) {
      char* out = nullptr;
      check(arrprod_example_emit(example_name.c_str(), &out));
      print(OwnedString(out));
      return 0;
    }
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
