// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "corpus.hpp"
#include "ecm/brauer.hpp"
#include "ecm/connection.hpp"
#include "ecm/eval.hpp"
#include "ecm/oracle.hpp"
#include "ecm/ortho.hpp"
#include "ecm/vertex_model.hpp"
#include "ecm/zoo.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace ecm;
using ecm::testing::corpus;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Fails the criterion and keeps the first few reasons.
class Tally {
 public:
  void fail(const std::string& why) {
    if (failures_++ < 3) reasons_ << (reasons_.tellp() > 0 ? "; " : "") << why;
  }
  void count() { ++checks_; }
  Outcome outcome(const std::string& extra = "") const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (!extra.empty()) s << ", " << extra;
    if (failures_ > 0) s << ", " << failures_ << " failures: " << reasons_.str();
    return {failures_ == 0, s.str()};
  }

 private:
  unsigned checks_ = 0, failures_ = 0;
  std::ostringstream reasons_;
};

struct ZooRow {
  std::string name;
  std::optional<unsigned> param;
  std::string label() const { return param ? name + "(" + std::to_string(*param) + ")" : name; }
};

const std::vector<ZooRow>& table_rows() {
  static const std::vector<ZooRow> rows = {
      {"perfect_matchings", {}}, {"fully_packed_loops", {}}, {"matchings", {}},
      {"loop_configs", {}},      {"d_regular_subgraphs", 3}, {"proper_edge_colorings", 3},
      {"nowhere_zero_4_flows", {}}, {"permanent", {}}};
  return rows;
}

Scalar integer(std::uint64_t n) { return Scalar(Rational(std::to_string(n))); }

Outcome zoo_oracle() {
  Tally t;
  for (const ZooRow& row : table_rows()) {
    const EdgeModel model = make_zoo_model(row.name, row.param);
    const CountKind kind = *counterpart_of_zoo(row.name, row.param);
    for (const auto& [name, g] : corpus()) {
      const Scalar expected = integer(oracle_count(g, kind));
      const Scalar a = eval_enum(model, g), b = eval_tensor(model, g);
      t.count();
      if (!(a == expected && b == expected))
        t.fail(row.label() + " on " + name + ": enum " + a.to_string() + ", tensor " + b.to_string() +
               ", oracle " + expected.to_string());
    }
  }
  return t.outcome(std::to_string(corpus().size()) + " graphs");
}

Outcome rotated_matchings() {
  Tally t;
  const EdgeModel scaled = make_zoo_model("pm_rotated_scaled");
  for (const auto& [name, g] : corpus()) {
    const std::uint64_t pm = oracle_count(g, CountKind{CountKind::perfect_matchings});
    const Scalar expected(pow(Rational(2), static_cast<unsigned>(g.edges().size())) * Rational(std::to_string(pm)));
    const Scalar value = evaluate(scaled, g);
    t.count();
    if (!(value == expected)) t.fail(name + ": " + value.to_string() + " != " + expected.to_string());
  }
  const EdgeModel pm = make_zoo_model("perfect_matchings");
  int matching_signs = 0;
  for (double sign : {1.0, -1.0}) {
    const EdgeModel r = rotate_model(pm, OrthogonalMatrix::rotation(sign * std::numbers::pi / 4), 8);
    double gap = 0;
    for (unsigned h = 0; h <= 8; ++h)
      for (const CountVector& v : count_vectors_of_height(2, h)) {
        const double want = std::pow(std::sqrt(2.0), -double(h)) * (double(v[0]) - double(v[1]));
        gap = std::max(gap, std::abs(r.weight(v).real() - want));
      }
    if (gap <= 1e-10) ++matching_signs;
  }
  t.count();
  if (matching_signs != 1) t.fail(std::to_string(matching_signs) + " rotation signs match, expected 1");
  return t.outcome();
}

Outcome invariance() {
  Tally t;
  double worst = 0;
  for (const ZooRow& row : table_rows()) {
    const EdgeModel model = make_zoo_model(row.name, row.param);
    for (const auto& [name, g] : corpus()) {
      if (g.max_degree() > 6) continue;
      const InvarianceReport r = check_invariance(model, g, 20, 1000, name);
      worst = std::max(worst, r.max_rel_dev);
      t.count();
      if (r.max_rel_dev > 1e-8) t.fail(row.label() + " on " + name);
    }
  }
  std::ostringstream s;
  s << "20 rotations each, max relative deviation " << worst;
  return t.outcome(s.str());
}

EdgeModel rational_model(unsigned colors) {
  EdgeModel m("dense" + std::to_string(colors), colors, ScalarKind::rational);
  m.set_rule("(1 + sum (i+2)^2 v_i) / (2 + height)", [](const CountVector& v) {
    Rational num = 1;
    for (std::size_t i = 0; i < v.size(); ++i) num += Rational(static_cast<long>((i + 2) * (i + 2) * v[i]));
    return Scalar(Rational(num / Rational(2 + v.height())));
  });
  return m;
}

Outcome gluing() {
  Tally t;
  std::mt19937_64 rng(4);
  const EdgeModel models[] = {rational_model(2), rational_model(3), make_zoo_model("permanent")};
  for (int i = 0; i < 60; ++i) {
    const unsigned k = 1 + i % 4;
    const OpenGraph a = ecm::testing::random_open_graph(rng, k), b = ecm::testing::random_open_graph(rng, k);
    const EdgeModel& m = models[i % 3];
    Scalar sum = Scalar::zero(m.kind());
    BoundaryColoring chi{std::vector<unsigned>(k, 0)};
    for (;;) {
      sum += eval_boundary(m, a, chi) * eval_boundary(m, b, chi);
      unsigned j = k;
      while (j > 0 && ++chi.colors[j - 1] == m.colors()) chi.colors[--j] = 0;
      if (j == 0) break;
    }
    t.count();
    const Scalar glued = evaluate(m, glue(a, b));
    if (!(glued == sum)) t.fail("pair " + std::to_string(i) + ": " + glued.to_string() + " != " + sum.to_string());
  }
  return t.outcome("k in 1..4");
}

Outcome conversion() {
  Tally t;
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> entry(-2, 2), weight(0.1, 2);
  for (int i = 0; i < 20; ++i) {
    const unsigned n = 1 + i % 4;
    std::vector<double> alpha(n), beta(n * n);
    for (double& a : alpha) a = weight(rng);
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = r; c < n; ++c) beta[r * n + c] = beta[c * n + r] = entry(rng);
    const VertexModel h(alpha, beta);
    const EdgeModel model = vertex_to_edge(h);
    for (const auto& [name, g] : corpus()) {
      if (!is_simple(g) || g.edges().size() > 8) continue;
      const double hom = hom_partition(g, h);
      const Complex v = evaluate(model, g).complex();
      t.count();
      if (std::abs(v - Complex(hom, 0)) > 1e-8 * (1 + std::abs(hom)) || std::abs(v.imag()) > 1e-8)
        t.fail("model " + std::to_string(i) + " on " + name);
    }
  }

  // Closed form against the constructive conversion. The conversion keeps one
  // color per nonzero eigenvalue, ordered by decreasing eigenvalue, and fixes
  // each color only up to sign.
  for (const auto& [a, b] : {std::pair{3.0, 1.0}, {2.0, 2.0}, {1.0, 0.0}}) {
    const EdgeModel closed = ising_edge_model(a, b);
    const EdgeModel built = vertex_to_edge(ising_vertex_model(a, b));
    const std::string tag = "ising(" + std::to_string(int(a)) + "," + std::to_string(int(b)) + ")";
    t.count();
    if (b == 0) {
      // Both eigenvalues equal 1: the eigenbasis is arbitrary, so compare the
      // parameters themselves.
      for (const auto& [name, g] : corpus()) {
        if (!is_simple(g)) continue;
        const double x = evaluate(closed, g).real(), y = evaluate(built, g).complex().real();
        if (std::abs(x - y) > 1e-10 * (1 + std::abs(x))) t.fail(tag + " on " + name);
      }
      continue;
    }
    double best = 1e300;
    for (int flips = 0; flips < 4; ++flips) {
      double gap = 0;
      for (unsigned height = 0; height <= 6; ++height)
        for (const CountVector& s : count_vectors_of_height(2, height)) {
          double want = closed.weight(s).real();
          if ((flips & 1) && s[0] % 2) want = -want;
          if ((flips & 2) && s[1] % 2) want = -want;
          Complex got;
          if (built.colors() == 2) {
            got = built.weight(s).complex();
          } else if (s[1] == 0) {  // a - b == 0 dropped the second color
            got = built.weight(CountVector{s[0]}).complex();
          }
          gap = std::max(gap, std::abs(got - Complex(want, 0)));
        }
      best = std::min(best, gap);
    }
    if (best > 1e-10) t.fail(tag + " weights differ by " + std::to_string(best));
  }
  return t.outcome("20 random targets + 3 Ising cases");
}

Outcome circles() {
  Tally t;
  for (int d = 0; d <= 3; ++d) {
    const CircleReport r = circle_integrality_check(Rational(d), 6);
    for (const CircleLevel& l : r.levels) {
      t.count();
      if (!l.eigen_identity || l.max_rel_residual > 1e-9)
        t.fail("d=" + std::to_string(d) + " n=" + std::to_string(l.n));
    }
    if (r.violation) t.fail("spurious violation at d=" + std::to_string(d));
  }
  std::string witnesses;
  for (const Rational& d : {make_rational(1, 2), make_rational(3, 2), make_rational(5, 2)}) {
    const CircleReport r = circle_integrality_check(d, 4);
    t.count();
    if (!r.violation) {
      t.fail("no witness for d=" + to_string(d));
    } else {
      witnesses += (witnesses.empty() ? "" : " ") + to_string(d) + "@n=" + std::to_string(*r.violation);
    }
  }
  return t.outcome("witnesses " + witnesses);
}

Outcome rank_bound() {
  Tally t;
  std::vector<ZooRow> rows = table_rows();
  rows.push_back({"pm_rotated_scaled", {}});
  for (const ZooRow& row : rows) {
    const EdgeModel model = make_zoo_model(row.name, row.param);
    for (unsigned k : {2u, 4u, 6u}) {
      const ConnectionReport r = connection_submatrix(model, k, matchings_basis(k));
      t.count();
      if (!r.psd_pass || !r.rank_pass || !r.symmetric)
        t.fail(row.label() + " k=" + std::to_string(k) + " rank " + std::to_string(r.rank) + " min eig " +
               std::to_string(r.min_eigenvalue));
    }
  }
  return t.outcome();
}

Outcome brauer() {
  const BrauerSelftestReport r = brauer_selftest(2024);
  std::ostringstream s;
  s << r.pairs << " pairs (" << r.nonzero_products << " nonzero products), " << r.triples << " triples, "
    << r.positivity_checks << " positivity checks";
  if (!r.pass())
    s << "; failures: homomorphism " << r.homomorphism_failures << ", transpose " << r.transpose_failures
      << ", associativity " << r.associativity_failures << ", positivity " << r.positivity_failures
      << ", route mismatches " << r.route_mismatches;
  const bool sizes = r.pairs == 200 && r.triples == 100 && r.positivity_checks == 150;
  return {r.pass() && sizes, s.str()};
}

Outcome universal() {
  Tally t;
  std::vector<EdgeModel> models = {rational_model(1), rational_model(2), make_zoo_model("perfect_matchings"),
                                   make_zoo_model("permanent"), make_zoo_model("pm_rotated_scaled")};
  EdgeModel single("one", 1, ScalarKind::rational);
  single.set_rule("1/(1+h)", [](const CountVector& v) { return Scalar(make_rational(1, 1 + v[0])); });
  models.push_back(single);
  for (const auto& [name, g] : corpus()) {
    if (g.edges().size() > 6) continue;
    for (unsigned d : {1u, 2u}) {
      const Poly p = eval_universal(g, d);
      const auto grades = height_grade(p);
      std::vector<unsigned> expected = degree_multiset(g);
      t.count();
      if (grades.size() != 1 || grades.begin()->first != expected) t.fail(name + " grade, d=" + std::to_string(d));
      for (const EdgeModel& m : models) {
        if (m.colors() != d) continue;
        t.count();
        if (!(poly_substitute(p, m) == eval_enum(m, g))) t.fail(name + " with " + m.name());
      }
    }
  }
  return t.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    double time_limit;  // seconds; 0 = none
  };
  const Criterion criteria[] = {
      {1, "zoo models equal brute-force counts", zoo_oracle, 60},
      {2, "rotated matching model", rotated_matchings, 0},
      {3, "orthogonal invariance", invariance, 120},
      {4, "gluing identity", gluing, 0},
      {5, "vertex to edge conversion", conversion, 0},
      {6, "circle value integrality", circles, 30},
      {7, "connection rank bound and PSD", rank_bound, 0},
      {8, "Brauer algebra", brauer, 0},
      {9, "universal model", universal, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    if (!o.pass) ++failed;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << "  [" << time.str() << " s"
              << (c.time_limit > 0 ? " / " + std::to_string(int(c.time_limit)) + " s" : std::string()) << "]  "
              << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
