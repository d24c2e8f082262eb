#include "arrprod/arrangement_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "arrprod/error.hpp"

namespace arrprod {

namespace {

std::vector<std::string> split_whitespace(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& reason) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + reason);
}

template <typename Line>
std::string emit_lines(std::string_view header, char kind, const std::vector<Line>& lines) {
  std::ostringstream out;
  out << header << '\n';
  for (const auto& l : lines) {
    const Triple& c = l.coeffs();
    out << kind << ' ' << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << l.label() << '\n';
  }
  return out.str();
}

}  // namespace

ParsedArrangement parse_arrangement(std::string_view text) {
  std::optional<char> kind;
  std::vector<ProjLine> proj;
  std::vector<AffLine> aff;
  std::vector<std::size_t> source_line;
  std::unordered_set<std::string> labels;
  bool seen_entry = false;

  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = split_whitespace(raw);
    if (tokens.empty()) continue;

    if (tokens.size() == 1 && (tokens[0] == "projective" || tokens[0] == "affine")) {
      if (seen_entry || kind) fail(line_no, "header must precede all entries and appear once");
      kind = tokens[0] == "projective" ? 'P' : 'A';
      continue;
    }
    if (tokens[0] != "P" && tokens[0] != "A") fail(line_no, "expected entry kind 'P' or 'A'");
    const char entry_kind = tokens[0][0];
    if (kind && *kind != entry_kind) {
      throw Error(ErrorCode::MixedKinds,
                  "line " + std::to_string(line_no) + ": projective and affine entries cannot be mixed");
    }
    kind = entry_kind;
    seen_entry = true;
    if (tokens.size() != 5) fail(line_no, "expected '<kind> a b c label'");

    Triple coeffs;
    for (std::size_t i = 0; i < 3; ++i) {
      try {
        coeffs[i] = Rational::parse(tokens[i + 1]);
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
    }
    const std::string& label = tokens[4];
    if (!labels.insert(label).second) fail(line_no, "duplicate label '" + label + "'");

    try {
      if (entry_kind == 'P') {
        proj.emplace_back(coeffs, label);
      } else {
        aff.emplace_back(coeffs, label);
      }
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
    source_line.push_back(line_no);
  }

  if (!seen_entry) throw Error(ErrorCode::ParseError, "no arrangement lines found");

  // Reject duplicates here so the message can carry both labels and lines.
  const auto check_duplicates = [&](const auto& lines) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (lines[i] == lines[j]) {
          throw Error(ErrorCode::DuplicateLine, "lines '" + lines[j].label() + "' (line " +
                                                    std::to_string(source_line[j]) + ") and '" +
                                                    lines[i].label() + "' (line " +
                                                    std::to_string(source_line[i]) + ") are the same line");
        }
      }
    }
  };
  if (*kind == 'P') {
    check_duplicates(proj);
    return ProjArrangement(std::move(proj));
  }
  check_duplicates(aff);
  return AffArrangement(std::move(aff));
}

ParsedArrangement load_arrangement(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_arrangement(buffer.str());
}

std::string emit_arrangement(const ProjArrangement& arr) { return emit_lines("projective", 'P', arr.lines()); }

std::string emit_arrangement(const AffArrangement& arr) { return emit_lines("affine", 'A', arr.lines()); }

ProjArrangement as_projective(const ParsedArrangement& parsed, std::string_view infinity_label) {
  if (const auto* proj = std::get_if<ProjArrangement>(&parsed)) return *proj;
  return cone(std::get<AffArrangement>(parsed), std::string(infinity_label));
}

}  // namespace arrprod
