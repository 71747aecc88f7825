#pragma once

#include "ecm/edge_model.hpp"
#include "ecm/graph.hpp"

#include <string>
#include <vector>

namespace ecm {

/// Weighted target graph H: positive node weights and a symmetric real
/// edge-weight matrix.
class VertexModel {
 public:
  VertexModel(std::vector<double> alpha, std::vector<double> beta_row_major, std::string name = "H");

  unsigned nodes() const { return static_cast<unsigned>(alpha_.size()); }
  const std::string& name() const { return name_; }
  double alpha(unsigned i) const { return alpha_[i]; }
  double beta(unsigned i, unsigned j) const { return beta_[i * nodes() + j]; }
  const std::vector<double>& alphas() const { return alpha_; }

 private:
  std::vector<double> alpha_;
  std::vector<double> beta_;
  std::string name_;
};

/// Weighted homomorphism count: sum over maps V(G) -> V(H) of node weights
/// times edge weights. G must be simple.
double hom_partition(const OpenGraph& g, const VertexModel& h);

/// Result of the eigendecomposition behind vertex_to_edge.
struct EdgeConversion {
  EdgeModel model;
  std::vector<double> eigenvalues;     // retained, in color order
  std::vector<std::vector<double>> u;  // u[i][j]: color i, node j, scaled by sqrt|eigenvalue|
  std::vector<int> signs;              // +1 / -1 per color
};

/// Rewrites hom(., H) as a complex edge coloring model with one color per
/// nonzero eigenvalue of beta (|mu| > 1e-10 * max|beta|), ordered by
/// decreasing eigenvalue: t(s) = sum_j alpha_j prod_i (u_i(j) sqrt(sign_i))^{s_i}.
EdgeConversion vertex_to_edge_detailed(const VertexModel& h);
EdgeModel vertex_to_edge(const VertexModel& h);

/// Closed form of the converted two-node Ising model (beta = [[a,b],[b,a]],
/// unit node weights): t(s1,s2) = 2((a+b)/2)^{s1/2} ((a-b)/2)^{s2/2} for even
/// s2 and 0 for odd s2. Real backend.
EdgeModel ising_edge_model(double a, double b);

VertexModel ising_vertex_model(double a, double b);

}  // namespace ecm
