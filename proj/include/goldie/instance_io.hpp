#pragma once

#include <string>

#include "goldie/arrangement.hpp"

namespace goldie {

/// Parses the JSON instance format: {"n": int, "r": int, "g_basis": [[q, ...], ...],
/// "chi": [q, ...]?, "alpha": [q, ...]?} where every q is an integer or a "p/q" string.
RawInstance parse_instance_json(const std::string& text);
RawInstance read_instance_file(const std::string& path);

/// Validated instance that must carry alpha.
Instance load_instance(const std::string& path);

std::string instance_to_json(const ArrangementSpec& spec, const Point& alpha);

}  // namespace goldie
