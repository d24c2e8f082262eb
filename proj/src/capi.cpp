#include "arrprod/arrprod.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "arrprod/arrangement_file.hpp"
#include "arrprod/builtin_examples.hpp"
#include "arrprod/error.hpp"
#include "arrprod/render.hpp"
#include "arrprod/report.hpp"

struct arrprod_arrangement {
  arrprod::ParsedArrangement value;
};

namespace {

thread_local std::string last_error;

arrprod_status to_status(arrprod::ErrorCode code) {
  using arrprod::ErrorCode;
  switch (code) {
    case ErrorCode::ParseError: return ARRPROD_ERR_PARSE;
    case ErrorCode::DuplicateLine: return ARRPROD_ERR_DUPLICATE_LINE;
    case ErrorCode::MixedKinds: return ARRPROD_ERR_MIXED_KINDS;
    case ErrorCode::Io: return ARRPROD_ERR_IO;
    case ErrorCode::UnknownExample: return ARRPROD_ERR_UNKNOWN_EXAMPLE;
    case ErrorCode::LabelNotFound: return ARRPROD_ERR_LABEL_NOT_FOUND;
    case ErrorCode::DegenerateWindow: return ARRPROD_ERR_DEGENERATE_WINDOW;
    case ErrorCode::SharedLine: return ARRPROD_ERR_SHARED_LINE;
    case ErrorCode::TooSmall: return ARRPROD_ERR_TOO_SMALL;
    case ErrorCode::TooLarge: return ARRPROD_ERR_TOO_LARGE;
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidArrangement:
    case ErrorCode::BadOrdering:
    case ErrorCode::BadPartition:
    case ErrorCode::IndexOutOfRange: return ARRPROD_ERR_INVALID_ARGUMENT;
    case ErrorCode::DivisionByZero:
    case ErrorCode::ZeroTriple:
    case ErrorCode::DegenerateLine:
    case ErrorCode::EqualLines:
    case ErrorCode::LineAtInfinity:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::TooFewComponents: return ARRPROD_ERR_GEOMETRY;
  }
  return ARRPROD_ERR_INTERNAL;
}

arrprod_status fail(arrprod_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
arrprod_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const arrprod::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(ARRPROD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ARRPROD_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

arrprod_status null_argument() { return fail(ARRPROD_ERR_INVALID_ARGUMENT, "null argument"); }

arrprod::ProjArrangement projective_view(const arrprod_arrangement* arr) {
  return arrprod::as_projective(arr->value);
}

std::optional<std::string> infinity_label_of(const arrprod_arrangement* arr) {
  if (std::holds_alternative<arrprod::AffArrangement>(arr->value)) {
    return std::string(arrprod::kDefaultInfinityLabel);
  }
  return std::nullopt;
}

// Window bounds accept the rational syntax and plain decimals such as -2.5.
arrprod::Rational parse_bound(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return arrprod::Rational::parse(text);
  std::string digits(text.substr(0, dot));
  const std::string_view fraction = text.substr(dot + 1);
  if (fraction.empty() || digits.empty() || digits == "-") {
    throw arrprod::Error(arrprod::ErrorCode::InvalidArgument, "malformed window bound '" + std::string(text) + "'");
  }
  digits += fraction;
  std::string denominator = "1" + std::string(fraction.size(), '0');
  try {
    return arrprod::Rational::parse(digits + "/" + denominator);
  } catch (const arrprod::Error&) {
    throw arrprod::Error(arrprod::ErrorCode::InvalidArgument, "malformed window bound '" + std::string(text) + "'");
  }
}

}  // namespace

extern "C" {

const char* arrprod_last_error(void) { return last_error.c_str(); }

const char* arrprod_status_name(arrprod_status status) {
  switch (status) {
    case ARRPROD_OK: return "ok";
    case ARRPROD_ERR_PARSE: return "parse error";
    case ARRPROD_ERR_DUPLICATE_LINE: return "duplicate line";
    case ARRPROD_ERR_MIXED_KINDS: return "mixed kinds";
    case ARRPROD_ERR_IO: return "i/o error";
    case ARRPROD_ERR_UNKNOWN_EXAMPLE: return "unknown example";
    case ARRPROD_ERR_LABEL_NOT_FOUND: return "label not found";
    case ARRPROD_ERR_DEGENERATE_WINDOW: return "degenerate window";
    case ARRPROD_ERR_SHARED_LINE: return "shared line";
    case ARRPROD_ERR_TOO_SMALL: return "too small";
    case ARRPROD_ERR_TOO_LARGE: return "too large";
    case ARRPROD_ERR_WRONG_KIND: return "wrong arrangement kind";
    case ARRPROD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ARRPROD_ERR_GEOMETRY: return "geometry error";
    case ARRPROD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void arrprod_string_free(char* s) { std::free(s); }

arrprod_status arrprod_arrangement_parse(const char* text, arrprod_arrangement** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    *out = new arrprod_arrangement{arrprod::parse_arrangement(text)};
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_arrangement_load(const char* path, arrprod_arrangement** out) {
  if (!path || !out) return null_argument();
  return guarded([&] {
    *out = new arrprod_arrangement{arrprod::load_arrangement(path)};
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_arrangement_from_example(const char* name, arrprod_arrangement** out) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    *out = new arrprod_arrangement{arrprod::parse_arrangement(arrprod::find_example(name).text)};
    return ARRPROD_OK;
  });
}

void arrprod_arrangement_free(arrprod_arrangement* arr) { delete arr; }

int arrprod_arrangement_is_affine(const arrprod_arrangement* arr) {
  return arr && std::holds_alternative<arrprod::AffArrangement>(arr->value) ? 1 : 0;
}

size_t arrprod_arrangement_line_count(const arrprod_arrangement* arr) {
  if (!arr) return 0;
  return std::visit([](const auto& a) { return a.size(); }, arr->value);
}

arrprod_status arrprod_arrangement_emit(const arrprod_arrangement* arr, char** out) {
  if (!arr || !out) return null_argument();
  return guarded([&] {
    *out = duplicate(std::visit([](const auto& a) { return arrprod::emit_arrangement(a); }, arr->value));
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_analyze(const arrprod_arrangement* arr, arrprod_format format, int min_mult, char** out,
                               arrprod_verdict* verdict) {
  if (!arr || !out) return null_argument();
  if (min_mult < 2) return fail(ARRPROD_ERR_INVALID_ARGUMENT, "min_mult must be at least 2");
  return guarded([&] {
    arrprod::AnalysisOptions options;
    options.min_mult = static_cast<std::size_t>(min_mult);
    const auto report = arrprod::analyze(projective_view(arr), options, infinity_label_of(arr));
    *out = duplicate(format == ARRPROD_FORMAT_JSON ? arrprod::to_json(report) : arrprod::to_text(report));
    if (verdict) {
      *verdict = report.verdict.kind == arrprod::VerdictKind::ProductPossible ? ARRPROD_PRODUCT_POSSIBLE
                                                                                : ARRPROD_NOT_A_PRODUCT;
    }
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_gpp(const arrprod_arrangement* arr, char** out, int* found) {
  if (!arr || !out) return null_argument();
  return guarded([&] {
    const auto inc = arrprod::build_incidence(projective_view(arr));
    const bool has = arrprod::has_gpp_decone(inc).has_value();
    *out = duplicate(arrprod::gpp_report_text(inc));
    if (found) *found = has ? 1 : 0;
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_resonance(const arrprod_arrangement* arr, char** out) {
  if (!arr || !out) return null_argument();
  return guarded([&] {
    *out = duplicate(arrprod::resonance_report_text(arrprod::build_incidence(projective_view(arr))));
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_fan(const arrprod_arrangement* arr, size_t enumerate, char** out) {
  if (!arr || !out) return null_argument();
  return guarded([&] {
    *out = duplicate(arrprod::fan_report_text(arrprod::build_incidence(projective_view(arr)), enumerate));
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_fan_dot(const arrprod_arrangement* arr, char** out) {
  if (!arr || !out) return null_argument();
  return guarded([&] {
    const auto inc = arrprod::build_incidence(projective_view(arr));
    *out = duplicate(arrprod::fan_graph_dot(inc, arrprod::build_fan_graph(inc)));
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_oka(const arrprod_arrangement* a1, const arrprod_arrangement* a2, char** out, int* holds) {
  if (!a1 || !a2 || !out) return null_argument();
  const auto* aff1 = std::get_if<arrprod::AffArrangement>(&a1->value);
  const auto* aff2 = std::get_if<arrprod::AffArrangement>(&a2->value);
  if (!aff1 || !aff2) return fail(ARRPROD_ERR_WRONG_KIND, "transversality check needs two affine arrangements");
  return guarded([&] {
    const auto outcome = arrprod::oka_report(*aff1, *aff2);
    *out = duplicate(outcome.text);
    if (holds) *holds = outcome.report.holds ? 1 : 0;
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_render_svg(const arrprod_arrangement* arr, const char* infinity_label,
                                  const char* const window[4], char** out) {
  if (!arr || !window || !out) return null_argument();
  for (int i = 0; i < 4; ++i) {
    if (!window[i]) return null_argument();
  }
  return guarded([&] {
    const arrprod::Window w{parse_bound(window[0]), parse_bound(window[1]), parse_bound(window[2]),
                            parse_bound(window[3])};
    if (const auto* proj = std::get_if<arrprod::ProjArrangement>(&arr->value)) {
      if (!infinity_label) return fail(ARRPROD_ERR_INVALID_ARGUMENT, "projective input needs an infinity label");
      *out = duplicate(arrprod::render_svg(*proj, infinity_label, w));
    } else {
      if (infinity_label) return fail(ARRPROD_ERR_WRONG_KIND, "affine input is drawn as is; drop the infinity label");
      *out = duplicate(arrprod::render_svg(std::get<arrprod::AffArrangement>(arr->value), w));
    }
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_examples_list(char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    std::string text;
    for (const auto& ex : arrprod::builtin_examples()) {
      text += std::string(ex.name) + "\t" + std::string(ex.summary) + "\n";
    }
    *out = duplicate(text);
    return ARRPROD_OK;
  });
}

arrprod_status arrprod_example_emit(const char* name, char** out) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    *out = duplicate(std::string(arrprod::find_example(name).text));
    return ARRPROD_OK;
  });
}

}  // extern "C"
