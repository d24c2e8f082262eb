#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "arrprod/incidence.hpp"

namespace arrprod {

// Text format, one arrangement per file:
//
//   # comment (from '#' to end of line)
//   projective            optional header, or `affine`
//   P 1 0 0 H1            projective line a*x + b*y + c*z = 0
//   A 1 0 -1/2 L1         affine line a*x + b*y + c = 0
//
// Coefficients are integers or p/q with q > 0. Labels are unique and contain
// no whitespace. P and A entries may not be mixed.

using ParsedArrangement = std::variant<ProjArrangement, AffArrangement>;

inline constexpr std::string_view kDefaultInfinityLabel = "@inf";

ParsedArrangement parse_arrangement(std::string_view text);
ParsedArrangement load_arrangement(const std::filesystem::path& path);

std::string emit_arrangement(const ProjArrangement& arr);
std::string emit_arrangement(const AffArrangement& arr);

/// Projective arrangements pass through; affine ones are coned with
/// `infinity_label` as the added line.
ProjArrangement as_projective(const ParsedArrangement& parsed,
                              std::string_view infinity_label = kDefaultInfinityLabel);

}  // namespace arrprod
