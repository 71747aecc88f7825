#include "ecm/vertex_model.hpp"

#include "ecm/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ecm {

VertexModel::VertexModel(std::vector<double> alpha, std::vector<double> beta, std::string name)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), name_(std::move(name)) {
  const std::size_t n = alpha_.size();
  if (beta_.size() != n * n) throw std::invalid_argument("beta must be an n x n matrix");
  for (double a : alpha_)
    if (!(a > 0.0)) throw std::invalid_argument("vertex weights must be strictly positive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (beta_[i * n + j] != beta_[j * n + i]) throw std::invalid_argument("beta must be symmetric");
}

double hom_partition(const OpenGraph& g, const VertexModel& h) {
  if (!is_simple(g)) throw GraphError("hom_partition needs a simple closed graph");
  const unsigned n = g.n_vertices();
  const unsigned m = h.nodes();
  if (m == 0) return n == 0 ? 1.0 : 0.0;
  std::vector<unsigned> phi(n, 0);
  double total = 0.0;
  for (;;) {
    double w = 1.0;
    for (unsigned v = 0; v < n; ++v) w *= h.alpha(phi[v]);
    for (const Edge& e : g.edges()) w *= h.beta(phi[e.a.id], phi[e.b.id]);
    total += w;
    unsigned i = 0;
    while (i < n && ++phi[i] == m) phi[i++] = 0;
    if (i == n) break;
  }
  return total;
}

EdgeConversion vertex_to_edge_detailed(const VertexModel& h) {
  const unsigned n = h.nodes();
  DenseMatrix b(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) b(i, j) = h.beta(i, j);
  const double rank_tol = 1e-10 * b.max_abs();
  SymmetricEigen eig = jacobi_eigen(b, 1e-12);

  EdgeConversion out{EdgeModel("edge(" + h.name() + ")", 0, ScalarKind::complex), {}, {}, {}};
  // Descending eigenvalue order.
  for (std::size_t idx = n; idx-- > 0;) {
    const double mu = eig.values[idx];
    if (!(std::abs(mu) > rank_tol)) continue;
    const double scale = std::sqrt(std::abs(mu));
    std::vector<double> col(n);
    for (unsigned j = 0; j < n; ++j) col[j] = eig.vectors(j, idx) * scale;
    out.eigenvalues.push_back(mu);
    out.u.push_back(std::move(col));
    out.signs.push_back(mu > 0 ? 1 : -1);
  }

  const unsigned r = static_cast<unsigned>(out.u.size());
  // factor[i][j] = u_i(j) * sqrt(sign_i)
  std::vector<std::vector<Complex>> factor(r, std::vector<Complex>(n));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < n; ++j)
      factor[i][j] = out.signs[i] > 0 ? Complex(out.u[i][j], 0.0) : Complex(0.0, out.u[i][j]);

  EdgeModel model("edge(" + h.name() + ")", r, ScalarKind::complex);
  model.set_rule("sum_j alpha_j prod_i (u_i(j) sqrt(lambda_i))^s_i",
                 [alpha = h.alphas(), factor](const CountVector& s) {
                   Complex total(0.0, 0.0);
                   for (std::size_t j = 0; j < alpha.size(); ++j) {
                     Complex term(alpha[j], 0.0);
                     for (std::size_t i = 0; i < factor.size(); ++i)
                       for (unsigned p = 0; p < s[i]; ++p) term *= factor[i][j];
                     total += term;
                   }
                   return Scalar(total);
                 });
  out.model = std::move(model);
  return out;
}

EdgeModel vertex_to_edge(const VertexModel& h) { return vertex_to_edge_detailed(h).model; }

EdgeModel ising_edge_model(double a, double b) {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("Ising weights must be nonnegative");
  EdgeModel m("ising(" + std::to_string(a) + "," + std::to_string(b) + ")", 2, ScalarKind::real);
  const double plus = (a + b) / 2.0;
  const double minus = (a - b) / 2.0;
  m.set_rule("2((a+b)/2)^(s1/2)((a-b)/2)^(s2/2) for even s2, else 0", [plus, minus](const CountVector& s) {
    if (s[1] % 2 != 0) return Scalar(0.0);
    double first = s[0] % 2 == 0 ? std::pow(plus, static_cast<int>(s[0] / 2)) : std::pow(plus, s[0] / 2.0);
    double second = std::pow(minus, static_cast<int>(s[1] / 2));
    return Scalar(2.0 * first * second);
  });
  return m;
}

VertexModel ising_vertex_model(double a, double b) {
  return VertexModel({1.0, 1.0}, {a, b, b, a}, "ising");
}

}  // namespace ecm
