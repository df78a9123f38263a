#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colombeau/kernels/smooth_function.hpp"

namespace colombeau {

struct NamedFunction {
  std::string name;
  std::string description;
  SmoothFunction f;
};

struct BuiltinEntry {
  std::string name;
  std::string description;
};

/// C-infinity cutoff: 1 on [-2, 2], 0 outside (-3, 3).
SmoothFunction smooth_window();

/// Named smooth functions in listing order.
const std::vector<NamedFunction>& named_functions();
std::optional<SmoothFunction> find_function(const std::string& name);

const std::vector<BuiltinEntry>& builtin_fields();
const std::vector<BuiltinEntry>& builtin_diffeos();
const std::vector<BuiltinEntry>& builtin_demos();

/// Stable text listing of every registry section.
std::string list_builtins();

}  // namespace colombeau
