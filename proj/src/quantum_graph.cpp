#include "ecm/quantum_graph.hpp"

namespace ecm {

QuantumGraph QuantumGraph::single(OpenGraph g, Rational coefficient) {
  QuantumGraph q(g.n_open());
  q.add(coefficient, std::move(g));
  return q;
}

void QuantumGraph::add(const Rational& coefficient, OpenGraph g) {
  if (g.n_open() != k_)
    throw GraphError("quantum graph term has " + std::to_string(g.n_open()) + " open ends, expected " +
                     std::to_string(k_));
  if (coefficient == 0) return;
  GraphKey key = canonical_key(g);
  if (auto it = index_.find(key); it != index_.end()) {
    terms_[it->second].coefficient += coefficient;
    if (terms_[it->second].coefficient == 0) compact();
    return;
  }
  index_.emplace(std::move(key), terms_.size());
  terms_.push_back({coefficient, std::move(g)});
}

void QuantumGraph::compact() {
  std::vector<Term> kept;
  for (auto& t : terms_)
    if (t.coefficient != 0) kept.push_back(std::move(t));
  terms_ = std::move(kept);
  index_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(canonical_key(terms_[i].graph), i);
}

QuantumGraph& QuantumGraph::operator+=(const QuantumGraph& other) {
  if (other.k_ != k_ && !other.empty())
    throw GraphError("cannot add quantum graphs with different open-end counts");
  for (const auto& t : other.terms_) add(t.coefficient, t.graph);
  return *this;
}

QuantumGraph& QuantumGraph::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    index_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= factor;
  return *this;
}

QuantumGraph operator-(QuantumGraph a, const QuantumGraph& b) {
  QuantumGraph neg = b;
  neg *= Rational(-1);
  return a += neg;
}

QuantumGraph glue_quantum(const QuantumGraph& a, const QuantumGraph& b) {
  if (a.k() != b.k())
    throw GraphError("cannot glue quantum graphs with " + std::to_string(a.k()) + " and " +
                     std::to_string(b.k()) + " open ends");
  QuantumGraph out(0);
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.add(Rational(s.coefficient * t.coefficient), glue(s.graph, t.graph));
  return out;
}

QuantumGraph product(const QuantumGraph& a, const QuantumGraph& b) {
  QuantumGraph out(0);
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      out.add(Rational(s.coefficient * t.coefficient), disjoint_union(s.graph, t.graph));
  return out;
}

}  // namespace ecm
