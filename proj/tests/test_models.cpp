#include <doctest.h>

#include "corpus.hpp"
#include "ecm/eval.hpp"
#include "ecm/model_io.hpp"
#include "ecm/vertex_model.hpp"
#include "ecm/zoo.hpp"

#include <cmath>
#include <random>

using namespace ecm;

TEST_CASE("scalar backends never mix") {
  CHECK_THROWS_AS(Scalar(Rational(1)) + Scalar(1.0), ScalarKindMismatch);
  CHECK_THROWS_AS(Scalar(1.0) * Scalar(Complex(1, 0)), ScalarKindMismatch);
  CHECK(Scalar(Rational(1, 3)).convert(ScalarKind::real).real() == doctest::Approx(1.0 / 3));
  CHECK_THROWS(Scalar(1.0).convert(ScalarKind::rational));
  CHECK(Scalar(Complex(2, 0)).convert(ScalarKind::real) == Scalar(2.0));
  CHECK_THROWS(Scalar(Complex(2, 1)).convert(ScalarKind::real));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("2.5e-1") == make_rational(1, 4));
  CHECK(parse_rational("0.1") == make_rational(1, 10));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("weight lookup") {
  const EdgeModel pm = make_zoo_model("perfect_matchings");
  CHECK(pm.weight(CountVector{1, 3}) == Scalar(Rational(1)));
  CHECK(pm.weight(CountVector{0, 2}) == Scalar(Rational(0)));
  CHECK_THROWS(pm.weight(CountVector{1, 0, 0}));

  EdgeModel t("t", 2, ScalarKind::rational);
  t.set_default(Scalar(Rational(5)));
  t.set_rule("ones", [](const CountVector&) { return Scalar(Rational(1)); });
  t.set_weight(CountVector{1, 1}, Scalar(Rational(9)));
  CHECK(t.weight(CountVector{1, 1}) == Scalar(Rational(9)));  // table first
  CHECK(t.weight(CountVector{2, 0}) == Scalar(Rational(1)));  // then rule
  CHECK_THROWS(t.set_weight(CountVector{0, 0}, Scalar(1.0)));
  t.set_max_height(3);
  CHECK_THROWS_AS(t.weight(CountVector{2, 2}), HeightOverflow);
}

TEST_CASE("zoo models") {
  const EdgeModel pm = make_zoo_model("perfect_matchings");
  CHECK(pm.colors() == 2);
  CHECK(pm.rule_name() == "first coordinate = 1");

  const EdgeModel flows = make_zoo_model("nowhere_zero_4_flows");
  CHECK(flows.colors() == 3);
  CHECK(flows.weight(CountVector{1, 1, 1}) == Scalar(Rational(1)));
  CHECK(flows.weight(CountVector{2, 0, 0}) == Scalar(Rational(1)));
  CHECK(flows.weight(CountVector{3, 1, 1}) == Scalar(Rational(1)));
  CHECK(flows.weight(CountVector{1, 0, 1}) == Scalar(Rational(0)));
  CHECK(flows.weight(CountVector{1, 1, 0}) == Scalar(Rational(0)));

  const EdgeModel perm = make_zoo_model("permanent");
  CHECK(perm.colors() == 4);
  CHECK(perm.weight(CountVector{2, 0, 0, 5}) == Scalar(Rational(1)));
  CHECK(perm.weight(CountVector{0, 0, 1, 1}) == Scalar(Rational(1)));
  CHECK(perm.weight(CountVector{1, 1, 0, 0}) == Scalar(Rational(0)));

  const unsigned colors[] = {2, 2, 2, 2, 2, 5, 3, 4, 2};
  std::size_t i = 0;
  for (const auto& entry : zoo_catalog()) {
    const EdgeModel m = entry.takes_param ? make_zoo_model(entry.name, 5) : make_zoo_model(entry.name);
    CHECK(m.colors() == colors[i++]);
  }
  CHECK_THROWS(make_zoo_model("nope"));
  CHECK_THROWS(make_zoo_model("proper_edge_colorings", 0));
  CHECK_THROWS(make_zoo_model("proper_edge_colorings"));
  CHECK_THROWS(make_zoo_model("matchings", 2));
}

TEST_CASE("ising_edge_model") {
  const EdgeModel t = ising_edge_model(3, 1);
  CHECK(t.weight(CountVector{2, 0}).real() == doctest::Approx(4));
  CHECK(t.weight(CountVector{0, 2}).real() == doctest::Approx(2));
  for (unsigned s1 = 0; s1 < 5; ++s1) CHECK(t.weight(CountVector{s1, 1}).real() == 0.0);
  CHECK(ising_edge_model(1, 1).weight(CountVector{0, 2}).real() == 0.0);
  CHECK_THROWS(ising_edge_model(-1, 0));
}

TEST_CASE("hom_partition") {
  const VertexModel h({1, 1}, {0, 1, 1, 0});
  CHECK(hom_partition(complete_graph(3), h) == 0);
  CHECK(hom_partition(complete_graph(2), h) == 2);
  CHECK(hom_partition(cycle_graph(4), h) == 2);
  OpenGraph loop(1);
  loop.add_edge(0, 0);
  CHECK_THROWS(hom_partition(loop, h));
}

TEST_CASE("VertexModel validation") {
  CHECK_THROWS(VertexModel({1, 0}, {0, 1, 1, 0}));   // alpha must be positive
  CHECK_THROWS(VertexModel({1, 1}, {0, 1, 2, 0}));   // beta must be symmetric
  CHECK_THROWS(VertexModel({1, 1}, {0, 1, 1}));
}

TEST_CASE("vertex_to_edge on the Ising model") {
  const EdgeModel t = vertex_to_edge(ising_vertex_model(3, 1));
  CHECK(t.colors() == 2);
  CHECK(t.kind() == ScalarKind::complex);
  CHECK(std::abs(t.weight(CountVector{2, 0}).complex() - Complex(4, 0)) < 1e-12);
  CHECK(std::abs(t.weight(CountVector{1, 1}).complex()) < 1e-12);
  CHECK(std::abs(t.weight(CountVector{0, 2}).complex() - Complex(2, 0)) < 1e-12);
}

TEST_CASE("vertex_to_edge with beta = identity reproduces hom on the corpus") {
  const VertexModel h({1, 1}, {1, 0, 0, 1});
  const EdgeConversion c = vertex_to_edge_detailed(h);
  CHECK(c.eigenvalues.size() == 2);
  for (const auto& [name, g] : ecm::testing::corpus()) {
    if (!is_simple(g)) continue;
    CAPTURE(name);
    const Complex v = evaluate(c.model, g).complex();
    CHECK(std::abs(v - Complex(hom_partition(g, h), 0)) <= 1e-8 * (1 + hom_partition(g, h)));
  }
}

TEST_CASE("vertex_to_edge with PSD beta is real valued") {
  const VertexModel h({1, 2, 0.5}, {2, 1, 0, 1, 2, 1, 0, 1, 2});
  const EdgeConversion c = vertex_to_edge_detailed(h);
  for (int s : c.signs) CHECK(s == 1);
  for (unsigned height = 0; height <= 5; ++height)
    for (const CountVector& v : count_vectors_of_height(c.model.colors(), height))
      CHECK(std::abs(c.model.weight(v).complex().imag()) < 1e-12);
}

TEST_CASE("vertex_to_edge with an indefinite beta needs imaginary parts") {
  const VertexModel h({1, 1}, {0, 1, 1, 0});  // eigenvalues 1 and -1
  const EdgeConversion c = vertex_to_edge_detailed(h);
  REQUIRE(c.signs.size() == 2);
  CHECK(c.signs[0] == 1);
  CHECK(c.signs[1] == -1);
  for (const auto& [name, g] : ecm::testing::corpus()) {
    if (!is_simple(g)) continue;
    const Complex v = evaluate(c.model, g).complex();
    CHECK(std::abs(v.real() - hom_partition(g, h)) <= 1e-8 * (1 + std::abs(hom_partition(g, h))));
    CHECK(std::abs(v.imag()) <= 1e-8);
  }
}

TEST_CASE("vertex_to_edge of the zero matrix has no colors") {
  const VertexModel h({2, 3}, {0, 0, 0, 0});
  const EdgeModel t = vertex_to_edge(h);
  CHECK(t.colors() == 0);
  // Edgeless graphs: the defining sum is (sum alpha)^|V|.
  CHECK(std::abs(evaluate(t, OpenGraph(2)).complex() - Complex(25, 0)) < 1e-12);
  CHECK(std::abs(hom_partition(OpenGraph(2), h) - 25) < 1e-12);
  CHECK(std::abs(evaluate(t, complete_graph(2)).complex()) == 0.0);
}

TEST_CASE("model files") {
  const EdgeModel m = parse_model(
      "model demo\ncolors 2\nscalar rational\ndefault 1/2\n# comment\nw 1 0 = 3\nw 0 2 = -0.25\n");
  CHECK(m.name() == "demo");
  CHECK(m.weight(CountVector{1, 0}) == Scalar(Rational(3)));
  CHECK(m.weight(CountVector{0, 2}) == Scalar(make_rational(-1, 4)));
  CHECK(m.weight(CountVector{5, 5}) == Scalar(make_rational(1, 2)));
  CHECK(format_model(parse_model(format_model(m))) == format_model(m));

  const EdgeModel b = parse_model("model mine\nbuiltin proper_edge_colorings 3\n");
  CHECK(b.colors() == 3);
  CHECK(b.name() == "mine");
  CHECK(parse_model(format_model(b)).weight(CountVector{1, 1, 1}) == Scalar(Rational(1)));

  const EdgeModel c = parse_model("colors 1\nscalar complex\nw 2 = (1.5,-2)\n");
  CHECK(c.weight(CountVector{2}) == Scalar(Complex(1.5, -2)));
  CHECK(parse_model(format_model(c)).weight(CountVector{2}) == Scalar(Complex(1.5, -2)));

  auto line_of = [](const char* text) {
    try {
      parse_model(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("colors 2\nw 1 = 1\n") == 2);
  CHECK(line_of("colors 2\nw 1 0 = 1\nw 1 0 = 2\n") == 3);
  CHECK(line_of("colors 2\nscalar quaternion\n") == 2);
  CHECK(line_of("colors 2\nw 1 0 = 1/0\n") == 2);
  CHECK(line_of("builtin nope\n") == 1);
  CHECK(line_of("colors 2\nbuiltin matchings\n") == 2);
  CHECK_THROWS_AS(parse_model("scalar real\n"), ParseError);
}

TEST_CASE("tabulate keeps weights up to the height cap") {
  const EdgeModel pm = make_zoo_model("perfect_matchings");
  const EdgeModel t = tabulate(pm, 4);
  CHECK(t.max_height() == 4u);
  for (unsigned h = 0; h <= 4; ++h)
    for (const CountVector& v : count_vectors_of_height(2, h)) CHECK(t.weight(v) == pm.weight(v));
  CHECK_THROWS_AS(t.weight(CountVector{1, 4}), HeightOverflow);
  CHECK_THROWS(format_model(vertex_to_edge(ising_vertex_model(3, 1))));
}

TEST_CASE("vertex model files") {
  const VertexModel h = parse_vertex_model("vertex-model ising\nnodes 2\nbeta 0 0 3\nbeta 0 1 1\nbeta 1 1 3\n");
  CHECK(h.name() == "ising");
  CHECK(h.beta(1, 0) == 1);
  CHECK(h.alpha(1) == 1);
  CHECK_THROWS_AS(parse_vertex_model("nodes 2\nbeta 0 1 1\nbeta 1 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_vertex_model("beta 0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_vertex_model("nodes 2\nalpha 0 -1\n"), ParseError);
}
