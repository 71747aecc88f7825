#pragma once

#include "ecm/edge_model.hpp"
#include "ecm/quantum_graph.hpp"
#include "ecm/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace ecm {

using Multiset = std::vector<unsigned>;  // sorted ascending, positive entries

unsigned mu(const Multiset& s);

/// a(S1, S2, M). Nodes are numbered left side first (0..mu(S1)-1), then the
/// right side; within a side, block b of P(S) holds the next S[b] nodes.
/// partner[x] is the node matched with x.
struct MatchingDiagram {
  Multiset left;
  Multiset right;
  std::vector<unsigned> partner;

  MatchingDiagram() = default;
  MatchingDiagram(Multiset left, Multiset right, std::vector<unsigned> partner);
  /// Builds the matching from node pairs.
  static MatchingDiagram from_pairs(Multiset left, Multiset right,
                                    const std::vector<std::pair<unsigned, unsigned>>& pairs);
  /// Left node i matched with right node i.
  static MatchingDiagram identity(const Multiset& s);

  unsigned left_size() const { return mu(left); }
  unsigned right_size() const { return mu(right); }
  std::string to_string() const;

  auto operator<=>(const MatchingDiagram&) const = default;
};

/// Formal combination of diagrams with exact coefficients; cycles created by
/// multiplication are worth d.
class BrauerElement {
 public:
  explicit BrauerElement(Rational d) : d_(std::move(d)) {}
  BrauerElement(Rational d, const MatchingDiagram& a, Rational coefficient = Rational(1));

  const Rational& d() const { return d_; }
  const std::map<MatchingDiagram, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Rational& coefficient, const MatchingDiagram& a);
  BrauerElement& operator+=(const BrauerElement& other);
  friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
  friend BrauerElement operator*(const Rational& c, BrauerElement a);
  friend bool operator==(const BrauerElement&, const BrauerElement&) = default;

  std::string to_string() const;

 private:
  Rational d_;
  std::map<MatchingDiagram, Rational> terms_;
};

BrauerElement brauer_mul(const BrauerElement& a, const BrauerElement& b);
BrauerElement brauer_transpose(const BrauerElement& a);

/// Sparse rational matrix block: rows are colorings of the left nodes, columns
/// colorings of the right nodes (node 0 is the most significant digit).
struct OmegaBlock {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;

  friend bool operator==(const OmegaBlock&, const OmegaBlock&) = default;
};

/// Block-diagonal-by-boundary matrix, keyed by (S1, S2).
using OmegaMatrix = std::map<std::pair<Multiset, Multiset>, OmegaBlock>;

/// Linear extension of the 0/1 compatibility matrices with `colors` colors.
OmegaMatrix brauer_omega(const BrauerElement& a, unsigned colors);
OmegaMatrix omega_product(const OmegaMatrix& x, const OmegaMatrix& y);
OmegaMatrix omega_transpose(const OmegaMatrix& x);

/// Contracts every block of both sides to a vertex.
QuantumGraph brauer_tau(const BrauerElement& a);
/// All terms must share the right boundary S: contracts the left blocks and
/// leaves the right nodes as open ends 1..mu(S).
QuantumGraph brauer_tau1(const BrauerElement& a);
/// All terms must share the left boundary S: contracts the right blocks and
/// leaves the left nodes as open ends 1..mu(S).
QuantumGraph brauer_tau2(const BrauerElement& a);

struct PositivityReport {
  double value = 0;      // f(tau(b b^T))
  double via_glue = 0;   // sum over S of f(glue(tau1(b_S), tau1(b_S)))
  double scale = 1;      // sum of |coefficient * f(term)|, at least 1
  bool pass = true;      // value >= -1e-9 * scale
};

/// Requires f to have exactly d colors (d a positive integer).
PositivityReport brauer_positivity_check(const BrauerElement& b, const EdgeModel& f);

/// Random diagram with mu(S1), mu(S2) <= max_mu and mu(S1) + mu(S2) even.
MatchingDiagram random_diagram(std::mt19937_64& rng, unsigned max_mu);
/// Diagram with the given left boundary and a random right one.
MatchingDiagram random_diagram_from(std::mt19937_64& rng, const Multiset& left, unsigned max_mu);

struct BrauerSelftestOptions {
  unsigned pairs = 200;       // omega homomorphism + transpose, d alternating 2, 3
  unsigned triples = 100;     // associativity
  unsigned positivity = 50;   // random b, each against three zoo models
  unsigned max_mu = 4;
};

struct BrauerSelftestReport {
  std::uint64_t seed = 0;
  unsigned pairs = 0, homomorphism_failures = 0, transpose_failures = 0;
  unsigned nonzero_products = 0;
  unsigned triples = 0, associativity_failures = 0;
  unsigned positivity_checks = 0, positivity_failures = 0, route_mismatches = 0;
  double min_positivity_ratio = 0;  // min over checks of value / scale
  bool pass() const {
    return homomorphism_failures == 0 && transpose_failures == 0 && associativity_failures == 0 &&
           positivity_failures == 0 && route_mismatches == 0;
  }
};

BrauerSelftestReport brauer_selftest(std::uint64_t seed, const BrauerSelftestOptions& options = {});

}  // namespace ecm
