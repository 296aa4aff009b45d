#pragma once

#include "arens/multimap.hpp"

#include <filesystem>
#include <string>

namespace arens {

struct LoadedMap {
  MultiMap map;
  /// True when some entry was a JSON floating-point number (imported float
  /// data); such maps are compared with an absolute tolerance.
  bool from_float = false;
};

/// JSON document with fields name, arity, input_dims, codomain_dim,
/// axis_labels (codomain first) and entries (strings `p/q` or integers,
/// row-major with the codomain axis slowest).
std::string to_json(const MultiMap& m);
LoadedMap from_json(const std::string& text);

void save_map(const MultiMap& m, const std::filesystem::path& path);
LoadedMap load_map(const std::filesystem::path& path);

/// Absolute tolerance used for maps carrying imported floating data.
Rational float_tolerance();

}  // namespace arens
