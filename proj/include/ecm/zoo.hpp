#pragma once

#include "ecm/edge_model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ecm {

struct ZooEntry {
  std::string name;
  bool takes_param;      // d_regular_subgraphs(r), proper_edge_colorings(q)
  std::string support;   // the indicator set S
  std::string counts;    // what the partition function counts on simple graphs
};

/// Models whose partition functions count classical structures. All are
/// exact rational indicator models t_S except pm_rotated_scaled, t(a,b) = a-b.
const std::vector<ZooEntry>& zoo_catalog();

/// Builds a zoo model. `param` is the regularity for d_regular_subgraphs and
/// the number of colors for proper_edge_colorings; the other kinds take none.
/// Throws std::invalid_argument on unknown kinds or a parameter < 1.
EdgeModel make_zoo_model(std::string_view kind, std::optional<unsigned> param = std::nullopt);

}  // namespace ecm
