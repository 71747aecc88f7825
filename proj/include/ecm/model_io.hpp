#pragma once

#include "ecm/edge_model.hpp"
#include "ecm/parse_error.hpp"
#include "ecm/vertex_model.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace ecm {

/// Edge-model files:
///
///   model <name>
///   colors <d>
///   scalar rational|real|complex     (default rational)
///   default <value>                  (default 0)
///   max-height <n>                   optional
///   w <c1> ... <cd> = <value>
///   builtin <zoo-name> [param]       instead of colors/scalar/w lines
///
/// Values are p/q or decimals; complex values are written (re,im).
EdgeModel parse_model(std::string_view text);
EdgeModel load_model(const std::filesystem::path& path);

/// Writes a model back in the format above. Rule-based models other than
/// builtins must be tabulated first.
std::string format_model(const EdgeModel& model);

/// Table-only copy of `model` holding every count vector of height <= h that
/// has a nonzero weight; the copy is limited to height h.
EdgeModel tabulate(const EdgeModel& model, unsigned max_height);

/// Vertex-model files:
///
///   vertex-model <name>
///   nodes <n>
///   alpha <i> <value>       node weight, default 1
///   beta <i> <j> <value>    symmetric edge weight, default 0
VertexModel parse_vertex_model(std::string_view text);
VertexModel load_vertex_model(const std::filesystem::path& path);

}  // namespace ecm
