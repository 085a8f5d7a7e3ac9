#pragma once

#include <string>

#include "phm/core.hpp"

namespace phm {

class MapSpecError : public std::runtime_error {
public:
  explicit MapSpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a map-spec document: either
///   {"p": 2, "layers": [{"h": [[re,im], ...], "g": [[re,im], ...]}, ...]}
/// or
///   {"builtin": "EXAMPLE1", "C": 1.0, "J": 64}.
/// Malformed documents raise MapSpecError with a position diagnostic.
PolyharmonicMap parse_map_spec(const std::string& json_text, int default_builtin_J = 64);

PolyharmonicMap load_map_spec(const std::string& path, int default_builtin_J = 64);

}  // namespace phm
