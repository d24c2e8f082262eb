#pragma once

#include <span>
#include <string_view>

namespace arrprod {

struct BuiltinExample {
  std::string_view name;
  std::string_view summary;
  std::string_view text;  // arrangement file contents
};

std::span<const BuiltinExample> builtin_examples();

/// Throws Error(UnknownExample) for names outside the corpus.
const BuiltinExample& find_example(std::string_view name);

}  // namespace arrprod
