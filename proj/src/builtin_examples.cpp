#include "arrprod/builtin_examples.hpp"

#include <array>
#include <string>

#include "arrprod/error.hpp"

namespace arrprod {

namespace {

constexpr std::array<BuiltinExample, 6> kExamples{{
    {"triangle", "coordinate triangle xyz; three double points",
     "# coordinate triangle: x y z\n"
     "projective\n"
     "P 1 0 0 H1\n"
     "P 0 1 0 H2\n"
     "P 0 0 1 H3\n"},
    {"pencil3", "three concurrent lines x, y, x-y",
     "# pencil of three lines through [0:0:1]\n"
     "projective\n"
     "P 1 0 0 H1\n"
     "P 0 1 0 H2\n"
     "P 1 -1 0 H3\n"},
    {"generic3", "three lines in general position x, y, x+y+z",
     "# three generic lines\n"
     "projective\n"
     "P 1 0 0 H1\n"
     "P 0 1 0 H2\n"
     "P 1 1 1 H3\n"},
    {"braid", "braid arrangement xyz(x-y)(x-z)(y-z); triple points {1,2,6} {1,3,5} {2,3,4} {4,5,6}",
     "# braid arrangement Q = xyz(x-y)(x-z)(y-z)\n"
     "projective\n"
     "P 1 0 0 H1\n"
     "P 0 1 0 H2\n"
     "P 0 0 1 H3\n"
     "P 0 1 -1 H4\n"
     "P 1 0 -1 H5\n"
     "P 1 -1 0 H6\n"},
    {"braid-plus-generic", "braid arrangement plus the generic line x+2y+5z (projective closure of a generic section)",
     "# braid arrangement plus a line through none of its intersection points\n"
     "projective\n"
     "P 1 0 0 H1\n"
     "P 0 1 0 H2\n"
     "P 0 0 1 H3\n"
     "P 0 1 -1 H4\n"
     "P 1 0 -1 H5\n"
     "P 1 -1 0 H6\n"
     "P 1 2 5 H7\n"},
    {"two-pencils", "pencils x, y, x-y and x-3z, y-5z, x+y-8z with disjoint centres",
     "# two triple points [0:0:1] and [3:5:1]; every other crossing is double\n"
     "projective\n"
     "P 1 0 0 H1\n"
     "P 0 1 0 H2\n"
     "P 1 -1 0 H3\n"
     "P 1 0 -3 H4\n"
     "P 0 1 -5 H5\n"
     "P 1 1 -8 H6\n"},
}};

}  // namespace

std::span<const BuiltinExample> builtin_examples() { return kExamples; }

const BuiltinExample& find_example(std::string_view name) {
  for (const auto& ex : kExamples) {
    if (ex.name == name) return ex;
  }
  throw Error(ErrorCode::UnknownExample, "unknown example '" + std::string(name) + "'");
}

}  // namespace arrprod
