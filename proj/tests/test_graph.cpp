#include <doctest.h>

#include "corpus.hpp"
#include "ecm/connection.hpp"
#include "ecm/graph.hpp"
#include "ecm/graph_io.hpp"
#include "ecm/quantum_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace ecm;
using ecm::testing::isomorphic_brute_force;
using ecm::testing::splice_by_junctions;

namespace {

OpenGraph loop_vertex() {
  OpenGraph g(1);
  g.add_edge(0, 0);
  return g;
}

OpenGraph bare_edge() {
  OpenGraph g;
  g.add_bare_edge(1, 2);
  return g;
}

// Same structure as g, vertices renumbered by p.
OpenGraph relabel(const OpenGraph& g, const std::vector<unsigned>& p) {
  OpenGraph out(g.n_vertices());
  for (const Edge& e : g.edges()) {
    if (e.is_closed())
      out.add_edge(p[e.a.id], p[e.b.id]);
    else if (e.is_bare())
      out.add_bare_edge(e.a.id, e.b.id);
    else
      out.attach_open(e.a.is_open() ? e.a.id : e.b.id, p[e.a.is_vertex() ? e.a.id : e.b.id]);
  }
  out.add_circles(g.n_circles());
  return out;
}

}  // namespace

TEST_CASE("parse_graph: circles, loops and bare edges") {
  const OpenGraph c = parse_graph("graph g\nvertices 0\ncircle");
  CHECK(c.n_vertices() == 0);
  CHECK(c.n_circles() == 1);

  const OpenGraph l = parse_graph("vertices 1\nedge 0 0");
  CHECK(l.degree(0) == 2);

  const OpenGraph b = parse_graph("vertices 0\nopen 1 *e0\nopen 2 *e0");
  REQUIRE(b.edges().size() == 1);
  CHECK(b.edges()[0].is_bare());
  CHECK(b.n_open() == 2);
}

TEST_CASE("parse_graph: errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("vertices 2\nopen 1 0\nopen 1 1") == 3);    // duplicate label
  CHECK(line_of("vertices 2\nedge 0 5") == 2);              // unknown vertex
  CHECK(line_of("vertices 1\nfrobnicate") == 2);
  CHECK_THROWS_AS(parse_graph("vertices 1\nopen 2 0"), ParseError);        // labels not 1..k
  CHECK_THROWS_AS(parse_graph("vertices 0\nopen 1 *e0"), ParseError);      // *e used once
  CHECK_THROWS_AS(parse_graph("vertices 0\nopen 1 *e0\nopen 2 *e0\nopen 3 *e0"), ParseError);
}

TEST_CASE("format_graph round-trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const OpenGraph g = ecm::testing::random_open_graph(rng, static_cast<unsigned>(rng() % 5));
    const OpenGraph back = parse_graph(format_graph(g, "x"));
    CHECK(canonical_key(back) == canonical_key(g));
    CHECK(format_graph(back, "x") == format_graph(g, "x"));
  }
}

TEST_CASE("degree counts loops twice and open ends once") {
  OpenGraph g(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.attach_open(1, 1);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("disjoint_union") {
  CHECK(disjoint_union(OpenGraph(), OpenGraph()).n_vertices() == 0);
  CHECK(disjoint_union(circle_graph(), circle_graph()).n_circles() == 2);
  const OpenGraph u = disjoint_union(complete_graph(3), loop_vertex());
  CHECK(u.n_vertices() == 4);
  CHECK(u.edges().size() == 4);
  CHECK_THROWS_AS(disjoint_union(bare_edge(), OpenGraph()), GraphError);
}

TEST_CASE("disjoint_union is associative and commutative up to isomorphism") {
  const auto& c = ecm::testing::corpus();
  for (std::size_t i = 0; i + 2 < c.size(); i += 3) {
    const OpenGraph& a = c[i].graph;
    const OpenGraph& b = c[i + 1].graph;
    const OpenGraph& d = c[i + 2].graph;
    if (a.n_vertices() + b.n_vertices() + d.n_vertices() > kCanonicalVertexCap) continue;
    CHECK(canonical_key(disjoint_union(a, b)) == canonical_key(disjoint_union(b, a)));
    CHECK(canonical_key(disjoint_union(disjoint_union(a, b), d)) ==
          canonical_key(disjoint_union(a, disjoint_union(b, d))));
  }
}

TEST_CASE("glue: bare edges and permutation graphs") {
  const OpenGraph self = glue(bare_edge(), bare_edge());
  CHECK(self.n_circles() == 1);
  CHECK(self.n_vertices() == 0);
  CHECK(self.edges().empty());

  const OpenGraph id = permutation_graph({0, 1});
  const OpenGraph swap = permutation_graph({1, 0});
  CHECK(glue(id, id).n_circles() == 2);
  CHECK(glue(id, swap).n_circles() == 1);

  CHECK_THROWS_AS(glue(bare_edge(), OpenGraph()), GraphError);
}

TEST_CASE("glue of a_pi and a_rho has c(pi rho^-1) circles for n <= 5") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (std::size_t i = 0; i < perms.size(); i += (n == 5 ? 7 : 1))
      for (std::size_t j = 0; j < perms.size(); j += (n == 5 ? 5 : 1)) {
        const OpenGraph g = glue(permutation_graph(perms[i]), permutation_graph(perms[j]));
        // Independent cycle count of pi rho^-1.
        Permutation q(n);
        for (unsigned x = 0; x < n; ++x) q[perms[j][x]] = x;
        std::vector<char> seen(n, 0);
        unsigned cycles = 0;
        for (unsigned x = 0; x < n; ++x) {
          if (seen[x]) continue;
          ++cycles;
          for (unsigned y = x; !seen[y]; y = perms[i][q[y]]) seen[y] = 1;
        }
        CHECK(g.n_circles() == cycles);
        CHECK(g.n_vertices() == 0);
        CHECK(g.edges().empty());
      }
  }
}

TEST_CASE("glue is symmetric and independent of splicing order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = static_cast<unsigned>(rng() % 6);
    const OpenGraph a = ecm::testing::random_open_graph(rng, k);
    const OpenGraph b = ecm::testing::random_open_graph(rng, k);
    const OpenGraph ab = glue(a, b);
    CHECK(ab.is_closed());
    CHECK(canonical_key(ab) == canonical_key(glue(b, a)));
    const OpenGraph other = splice_by_junctions(a, b);
    CHECK(isomorphic_brute_force(ab, other));
  }
}

TEST_CASE("glue with k = 0 is the disjoint union") {
  const OpenGraph g = glue(complete_graph(3), cycle_graph(4));
  CHECK(canonical_key(g) == canonical_key(disjoint_union(complete_graph(3), cycle_graph(4))));
}

TEST_CASE("degree_multiset") {
  CHECK(degree_multiset(complete_graph(3)) == std::vector<unsigned>{2, 2, 2});
  CHECK(degree_multiset(loop_vertex()) == std::vector<unsigned>{2});
  OpenGraph theta(2);
  for (int i = 0; i < 3; ++i) theta.add_edge(0, 1);
  CHECK(degree_multiset(theta) == std::vector<unsigned>{3, 3});
  CHECK_THROWS_AS(degree_multiset(circle_graph()), GraphError);
}

TEST_CASE("canonical_key examples") {
  const OpenGraph c4 = cycle_graph(4);
  CHECK(canonical_key(c4) == canonical_key(relabel(c4, {2, 0, 3, 1})));
  CHECK(canonical_key(c4) != canonical_key(path_graph(4)));
  CHECK(canonical_key(permutation_graph({0, 1})) != canonical_key(permutation_graph({1, 0})));
}

TEST_CASE("canonical_key agrees with brute-force isomorphism") {
  std::mt19937_64 rng(3);
  int merged = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = static_cast<unsigned>(rng() % 3);
    const OpenGraph a = ecm::testing::random_open_graph(rng, k, 4, 5);
    OpenGraph b = ecm::testing::random_open_graph(rng, k, 4, 5);
    if (trial % 3 == 0) {
      std::vector<unsigned> p(a.n_vertices());
      std::iota(p.begin(), p.end(), 0u);
      std::shuffle(p.begin(), p.end(), rng);
      b = relabel(a, p);
    }
    const bool same = canonical_key(a) == canonical_key(b);
    CHECK(same == isomorphic_brute_force(a, b));
    merged += same;
  }
  CHECK(merged >= 100);
}

TEST_CASE("QuantumGraph merges isomorphic terms and drops zeros") {
  QuantumGraph q(0);
  q.add(Rational(2), cycle_graph(4));
  q.add(Rational(3), relabel(cycle_graph(4), {1, 2, 3, 0}));
  REQUIRE(q.size() == 1);
  CHECK(q.terms()[0].coefficient == 5);
  q.add(Rational(-5), cycle_graph(4));
  CHECK(q.empty());
  CHECK_THROWS_AS(q.add(Rational(1), bare_edge()), GraphError);
}

TEST_CASE("glue_quantum is bilinear") {
  const OpenGraph h1 = bare_edge();
  OpenGraph h2(2);
  h2.attach_open(1, 0);
  h2.attach_open(2, 1);
  h2.add_edge(0, 1);

  const QuantumGraph single = glue_quantum(QuantumGraph::single(h1), QuantumGraph::single(h1));
  REQUIRE(single.size() == 1);
  CHECK(canonical_key(single.terms()[0].graph) == canonical_key(glue(h1, h1)));

  const Rational a(2), b(-3);
  QuantumGraph q(2);
  q.add(a, h1);
  q.add(b, h2);
  const QuantumGraph g = glue_quantum(q, q);
  QuantumGraph expected(0);
  expected.add(a * a, glue(h1, h1));
  expected.add(Rational(2 * a * b), glue(h1, h2));
  expected.add(b * b, glue(h2, h2));
  REQUIRE(g.size() == expected.size());
  for (const auto& t : expected.terms()) {
    bool found = false;
    for (const auto& u : g.terms())
      if (canonical_key(u.graph) == canonical_key(t.graph)) {
        CHECK(u.coefficient == t.coefficient);
        found = true;
      }
    CHECK(found);
  }
}

TEST_CASE("glue_quantum of the alternating element of S_2 matches d^c entries") {
  // w = a_id - a_(12); g(w, w) = 2 * (2 circles) - 2 * (1 circle).
  QuantumGraph w(4);
  w.add(Rational(1), permutation_graph({0, 1}));
  w.add(Rational(-1), permutation_graph({1, 0}));
  const QuantumGraph g = glue_quantum(w, w);
  const PermConnectionMatrix m(Rational(7), 2);
  Rational via_matrix(0);
  const int s[2] = {1, -1};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) via_matrix += s[i] * s[j] * m.entry(i, j);
  Rational via_graphs(0);
  for (const auto& t : g.terms()) via_graphs += t.coefficient * pow(Rational(7), t.graph.n_circles());
  CHECK(via_graphs == via_matrix);
  CHECK(via_matrix == Rational(2 * 49 - 2 * 7));
}

TEST_CASE("canonical_key above the vertex cap only merges identical presentations") {
  const OpenGraph big = cycle_graph(kCanonicalVertexCap + 2);
  CHECK(canonical_key(big) == canonical_key(big));
  std::vector<unsigned> p(big.n_vertices());
  std::iota(p.begin(), p.end(), 0u);
  std::reverse(p.begin(), p.end());
  // Not required to merge, but must never merge a non-isomorphic graph.
  CHECK(canonical_key(big) != canonical_key(path_graph(kCanonicalVertexCap + 2)));
}
