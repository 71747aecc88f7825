#include "ecm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ecm {

namespace {

struct Named {
  const char* name;
  CountKind::Kind kind;
  bool param;
};

constexpr Named kNames[] = {
    {"perfect_matchings", CountKind::perfect_matchings, false},
    {"matchings", CountKind::matchings, false},
    {"spanning_2_regular", CountKind::spanning_2_regular, false},
    {"partial_2_regular", CountKind::partial_2_regular, false},
    {"d_regular_subgraphs", CountKind::d_regular_subgraphs, true},
    {"proper_edge_colorings", CountKind::proper_edge_colorings, true},
    {"nowhere_zero_Z2xZ2_flows", CountKind::nowhere_zero_Z2xZ2_flows, false},
    {"permanent_adjacency", CountKind::permanent_adjacency, false},
};

const Named& lookup(CountKind::Kind kind) {
  for (const auto& n : kNames)
    if (n.kind == kind) return n;
  throw std::logic_error("unknown count kind");
}

std::vector<std::pair<unsigned, unsigned>> closed_edges(const OpenGraph& g) {
  g.validate();
  if (!g.is_closed()) throw std::invalid_argument("oracle needs a closed graph");
  if (g.n_circles() != 0) throw std::invalid_argument("oracle does not accept circles");
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.a.id, e.b.id);
  return out;
}

// Counts edge subsets whose degree at every vertex satisfies `ok`.
template <class Pred>
std::uint64_t count_subsets(const OpenGraph& g, Pred ok) {
  const auto edges = closed_edges(g);
  if (edges.size() > 24) throw std::length_error("subset oracle is limited to 24 edges");
  std::vector<unsigned> deg(g.n_vertices());
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << edges.size()); ++mask) {
    std::fill(deg.begin(), deg.end(), 0u);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1u) {
        ++deg[edges[i].first];
        ++deg[edges[i].second];
      }
    if (std::all_of(deg.begin(), deg.end(), ok)) ++count;
  }
  return count;
}

// Counts labelings of the edges with `labels` values such that `ok` holds for
// the labels of every vertex's half-edges.
template <class Pred>
std::uint64_t count_labelings(const OpenGraph& g, unsigned labels, Pred ok) {
  const auto edges = closed_edges(g);
  if (std::pow(static_cast<double>(labels), static_cast<double>(edges.size())) > 1e8)
    throw std::length_error("labeling oracle is limited to 1e8 labelings");
  if (labels == 0) return edges.empty() ? 1 : 0;
  std::vector<std::vector<std::size_t>> half(g.n_vertices());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    half[edges[i].first].push_back(i);
    half[edges[i].second].push_back(i);
  }
  std::vector<unsigned> label(edges.size(), 0);
  std::vector<unsigned> seen;
  std::uint64_t count = 0;
  while (true) {
    bool good = true;
    for (const auto& ends : half) {
      seen.clear();
      for (std::size_t e : ends) seen.push_back(label[e]);
      if (!ok(seen)) {
        good = false;
        break;
      }
    }
    if (good) ++count;
    std::size_t i = 0;
    while (i < label.size() && ++label[i] == labels) label[i++] = 0;
    if (i == label.size()) break;
  }
  return count;
}

std::uint64_t permanent(const OpenGraph& g) {
  const auto edges = closed_edges(g);
  const unsigned n = g.n_vertices();
  if (n > 10) throw std::length_error("permanent oracle is limited to 10 vertices");
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u == v) {
      a[u * n + u] += 2;
    } else {
      ++a[u * n + v];
      ++a[v * n + u];
    }
  }
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t total = 0;
  do {
    std::uint64_t term = 1;
    for (unsigned i = 0; i < n && term != 0; ++i) term *= a[i * n + perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

std::string CountKind::name() const {
  const Named& n = lookup(kind);
  if (n.param) return std::string(n.name) + "(" + std::to_string(param) + ")";
  return n.name;
}

CountKind CountKind::parse(std::string_view text) {
  std::string_view base = text;
  std::optional<unsigned> param;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw std::invalid_argument("malformed count kind '" + std::string(text) + "'");
    base = text.substr(0, open);
    const std::string digits(text.substr(open + 1, text.size() - open - 2));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed count kind parameter '" + digits + "'");
    param = static_cast<unsigned>(std::stoul(digits));
  }
  for (const auto& n : kNames) {
    if (base != n.name) continue;
    if (n.param != param.has_value())
      throw std::invalid_argument(n.param ? "count kind '" + std::string(base) + "' needs a parameter, e.g. " +
                                                std::string(base) + "(3)"
                                          : "count kind '" + std::string(base) + "' takes no parameter");
    if (param && *param == 0) throw std::invalid_argument("count kind parameter must be at least 1");
    return CountKind{n.kind, param.value_or(0)};
  }
  throw std::invalid_argument("unknown count kind '" + std::string(text) + "'");
}

std::optional<CountKind> counterpart_of_zoo(std::string_view zoo_name, std::optional<unsigned> param) {
  if (zoo_name == "perfect_matchings") return CountKind{CountKind::perfect_matchings};
  if (zoo_name == "fully_packed_loops") return CountKind{CountKind::spanning_2_regular};
  if (zoo_name == "matchings") return CountKind{CountKind::matchings};
  if (zoo_name == "loop_configs") return CountKind{CountKind::partial_2_regular};
  if (zoo_name == "d_regular_subgraphs") return CountKind{CountKind::d_regular_subgraphs, param.value_or(0)};
  if (zoo_name == "proper_edge_colorings") return CountKind{CountKind::proper_edge_colorings, param.value_or(0)};
  if (zoo_name == "nowhere_zero_4_flows") return CountKind{CountKind::nowhere_zero_Z2xZ2_flows};
  if (zoo_name == "permanent") return CountKind{CountKind::permanent_adjacency};
  return std::nullopt;
}

std::uint64_t oracle_count(const OpenGraph& g, CountKind kind) {
  switch (kind.kind) {
    case CountKind::perfect_matchings: return count_subsets(g, [](unsigned d) { return d == 1; });
    case CountKind::matchings: return count_subsets(g, [](unsigned d) { return d <= 1; });
    case CountKind::spanning_2_regular: return count_subsets(g, [](unsigned d) { return d == 2; });
    case CountKind::partial_2_regular: return count_subsets(g, [](unsigned d) { return d == 0 || d == 2; });
    case CountKind::d_regular_subgraphs: {
      const unsigned r = kind.param;
      return count_subsets(g, [r](unsigned d) { return d == 0 || d == r; });
    }
    case CountKind::proper_edge_colorings:
      return count_labelings(g, kind.param, [](std::vector<unsigned>& seen) {
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
      });
    case CountKind::nowhere_zero_Z2xZ2_flows:
      // Labels 0,1,2 stand for the nonzero elements 01, 10, 11 of Z2 x Z2;
      // the flow condition is that the half-edge values XOR to zero.
      return count_labelings(g, 3, [](const std::vector<unsigned>& seen) {
        unsigned x = 0;
        for (unsigned l : seen) x ^= l + 1;
        return x == 0;
      });
    case CountKind::permanent_adjacency: return permanent(g);
  }
  throw std::logic_error("unknown count kind");
}

}  // namespace ecm
