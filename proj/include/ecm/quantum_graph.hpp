#pragma once

#include "ecm/graph.hpp"
#include "ecm/rational.hpp"

#include <map>
#include <vector>

namespace ecm {

/// Formal rational linear combination of graphs sharing one open-end count.
/// Isomorphic terms (by canonical_key) are merged; zero terms are dropped.
class QuantumGraph {
 public:
  struct Term {
    Rational coefficient;
    OpenGraph graph;
  };

  explicit QuantumGraph(unsigned k = 0) : k_(k) {}
  static QuantumGraph single(OpenGraph g, Rational coefficient = Rational(1));

  unsigned k() const { return k_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  void add(const Rational& coefficient, OpenGraph g);

  QuantumGraph& operator+=(const QuantumGraph& other);
  QuantumGraph& operator*=(const Rational& factor);
  friend QuantumGraph operator+(QuantumGraph a, const QuantumGraph& b) { return a += b; }
  friend QuantumGraph operator-(QuantumGraph a, const QuantumGraph& b);
  friend QuantumGraph operator*(const Rational& factor, QuantumGraph q) { return q *= factor; }

 private:
  void compact();

  unsigned k_;
  std::vector<Term> terms_;
  std::map<GraphKey, std::size_t> index_;
};

/// Bilinear extension of glue.
QuantumGraph glue_quantum(const QuantumGraph& a, const QuantumGraph& b);

/// Bilinear extension of disjoint_union (the algebra product on closed graphs).
QuantumGraph product(const QuantumGraph& a, const QuantumGraph& b);

}  // namespace ecm
