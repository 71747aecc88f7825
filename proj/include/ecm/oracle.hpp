#pragma once

#include "ecm/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ecm {

struct CountKind {
  enum Kind {
    perfect_matchings,
    matchings,
    spanning_2_regular,
    partial_2_regular,
    d_regular_subgraphs,    // param: regularity r
    proper_edge_colorings,  // param: number of colors q
    nowhere_zero_Z2xZ2_flows,
    permanent_adjacency,
  };
  Kind kind;
  unsigned param = 0;

  std::string name() const;
  /// "perfect_matchings", "d_regular_subgraphs(3)", "proper_edge_colorings(4)", ...
  static CountKind parse(std::string_view text);
};

/// The counting problem a zoo model solves, or nullopt for pm_rotated_scaled.
std::optional<CountKind> counterpart_of_zoo(std::string_view zoo_name, std::optional<unsigned> param);

/// Direct brute-force count on a closed, circle-free multigraph. Subset kinds
/// enumerate edge subsets (|E| <= 24), coloring kinds enumerate labelings
/// (q^|E| <= 1e8), the permanent expands over permutations (n <= 10) of the
/// matrix A(i,j) = multiplicity of ij, A(i,i) = 2 * loops at i.
/// Throws std::invalid_argument for bad graphs and std::length_error past a cap.
std::uint64_t oracle_count(const OpenGraph& g, CountKind kind);

}  // namespace ecm
