#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecm {

/// One end of an edge: either a vertex or a labeled open end.
struct Endpoint {
  enum class Kind : std::uint8_t { vertex, open };

  Kind kind = Kind::vertex;
  unsigned id = 0;  // vertex id, or open-end label (1-based)

  static Endpoint vertex(unsigned v) { return {Kind::vertex, v}; }
  static Endpoint open(unsigned label) { return {Kind::open, label}; }

  bool is_vertex() const { return kind == Kind::vertex; }
  bool is_open() const { return kind == Kind::open; }

  auto operator<=>(const Endpoint&) const = default;
};

struct Edge {
  Endpoint a;
  Endpoint b;

  bool is_loop() const { return a.is_vertex() && a == b; }
  bool is_closed() const { return a.is_vertex() && b.is_vertex(); }
  bool is_bare() const { return a.is_open() && b.is_open(); }
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multigraph with loops, circle edges and labeled open ends.
///
/// An open end is the free end of an edge. It is attached either to a vertex
/// (the edge runs from that vertex to the open end) or to another open end
/// (a bare edge with no vertex at all). Circles are edges without endpoints and
/// are only counted.
class OpenGraph {
 public:
  OpenGraph() = default;
  explicit OpenGraph(unsigned n_vertices) : n_vertices_(n_vertices) {}

  unsigned add_vertex() { return n_vertices_++; }
  /// Adds u-v; a loop when u == v.
  void add_edge(unsigned u, unsigned v);
  void add_circles(unsigned count = 1) { n_circles_ += count; }
  /// Open end `label` hanging off vertex v.
  void attach_open(unsigned label, unsigned v);
  /// Bare edge whose two ends are the open ends `label_a` and `label_b`.
  void add_bare_edge(unsigned label_a, unsigned label_b);

  unsigned n_vertices() const { return n_vertices_; }
  unsigned n_circles() const { return n_circles_; }
  /// Every edge record, including edges that end in open ends (circles excluded).
  const std::vector<Edge>& edges() const { return edges_; }
  /// Number of open ends (k).
  unsigned n_open() const { return static_cast<unsigned>(open_edge_.size()); }
  bool is_closed() const { return open_edge_.empty(); }

  /// Index into edges() of the edge carrying open end `label`.
  std::size_t open_edge(unsigned label) const;
  /// Vertex the open end hangs off, or nullopt for a bare edge.
  std::optional<unsigned> open_attachment(unsigned label) const;

  /// Incident edge-ends; loops count twice.
  unsigned degree(unsigned v) const;
  std::vector<unsigned> degrees() const;
  unsigned max_degree() const;

  /// Throws GraphError unless the open labels are exactly 1..k and all edge
  /// endpoints are valid.
  void validate() const;

 private:
  void register_open(unsigned label, std::size_t edge_index);
  void check_vertex(unsigned v) const;

  unsigned n_vertices_ = 0;
  unsigned n_circles_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> open_edge_;  // label-1 -> edge index, npos while unassigned
};

/// Disjoint union of two closed graphs.
OpenGraph disjoint_union(const OpenGraph& g1, const OpenGraph& g2);

/// Identifies equally labeled open ends of g1 and g2 and splices every
/// resulting junction into a single edge. Closed chains of open ends become
/// circles. For k = 0 this is the disjoint union.
OpenGraph glue(const OpenGraph& g1, const OpenGraph& g2);

/// Sorted vertex degrees; requires a closed, circle-free graph.
std::vector<unsigned> degree_multiset(const OpenGraph& g);

/// True when the graph has no loops, no parallel edges, no circles and no open ends.
bool is_simple(const OpenGraph& g);

/// Vertex count above which canonical_key stops searching for a canonical
/// labeling and keys on the literal edge list instead.
inline constexpr unsigned kCanonicalVertexCap = 10;

/// Isomorphism key respecting open-end labels. Up to kCanonicalVertexCap
/// vertices isomorphic graphs get equal keys; above the cap only identical
/// presentations do. Equal keys always imply isomorphism.
struct GraphKey {
  std::string repr;
  auto operator<=>(const GraphKey&) const = default;
};

GraphKey canonical_key(const OpenGraph& g);

// Common graphs.
OpenGraph complete_graph(unsigned n);
OpenGraph cycle_graph(unsigned n);
/// Path on n vertices (n-1 edges).
OpenGraph path_graph(unsigned n);
OpenGraph circle_graph(unsigned circles = 1);

}  // namespace ecm
