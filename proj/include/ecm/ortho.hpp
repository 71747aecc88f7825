#pragma once

#include "ecm/edge_model.hpp"
#include "ecm/graph.hpp"
#include "ecm/jacobi.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace ecm {

/// Real d x d matrix with orthonormal columns (checked to 1e-12 on construction).
class OrthogonalMatrix {
 public:
  explicit OrthogonalMatrix(DenseMatrix m);

  static OrthogonalMatrix identity(unsigned d);
  /// [[cos, -sin], [sin, cos]].
  static OrthogonalMatrix rotation(double theta);

  unsigned dim() const { return static_cast<unsigned>(m_.rows); }
  double operator()(unsigned i, unsigned j) const { return m_(i, j); }
  const DenseMatrix& matrix() const { return m_; }

  OrthogonalMatrix transpose() const;
  friend OrthogonalMatrix operator*(const OrthogonalMatrix& a, const OrthogonalMatrix& b);

  /// max |A^T A - I|.
  double orthogonality_defect() const;

 private:
  DenseMatrix m_;
};

/// d(d-1)/2 Givens rotations with angles drawn from mt19937_64(seed), then a
/// random diagonal sign flip. Deterministic per seed on every platform.
OrthogonalMatrix random_orthogonal(unsigned d, std::uint64_t seed);

/// The transformed model: new basis vectors c_i' = sum_k a(k,i) c_k, so
///   t'(j_1..j_n) = sum_k prod_m a(k_m, j_m) t(k_1..k_n)
/// for every index sequence of length n <= n_max. Real backend, limited to
/// height n_max. Rational inputs are rounded to doubles.
EdgeModel rotate_model(const EdgeModel& t, const OrthogonalMatrix& a, unsigned n_max = 8);

/// Image of the universal variable x_v: coefficients on the variables x_w.
std::map<CountVector, double> rotate_universal_variable(const CountVector& v, const OrthogonalMatrix& a);

struct InvarianceReport {
  std::string model;
  std::string graph;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  double value = 0;  // t(G)
  double max_abs_dev = 0;
  double max_rel_dev = 0;  // |t'(G) - t(G)| / max(|t(G)|, 1)
  bool pass = true;
};

/// Evaluates t and `trials` random rotations of t (trial i uses seed + i) on
/// the closed graph g. Throws CapExceeded when g has a vertex of degree above
/// n_max.
InvarianceReport check_invariance(const EdgeModel& t, const OpenGraph& g, unsigned trials, std::uint64_t seed,
                                  const std::string& graph_name = "G", unsigned n_max = 8);

}  // namespace ecm
