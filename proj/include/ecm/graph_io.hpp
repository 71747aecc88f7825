#pragma once

#include "ecm/graph.hpp"
#include "ecm/parse_error.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace ecm {

/// Line-oriented graph format:
///
///   graph <name>          optional header
///   vertices <n>          vertices are 0..n-1
///   edge <u> <v>          loop when u == v
///   circle                one circle per line
///   open <label> <v>      open end hanging off vertex v
///   open <label> *e<i>    open end on bare edge i (each *e<i> exactly twice)
///
/// '#' starts a comment. Throws ParseError.
OpenGraph parse_graph(std::string_view text);

std::string format_graph(const OpenGraph& g, std::string_view name = {});

OpenGraph load_graph(const std::filesystem::path& path);

}  // namespace ecm
