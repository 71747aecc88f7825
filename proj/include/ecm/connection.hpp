#pragma once

#include "ecm/edge_model.hpp"
#include "ecm/eval.hpp"
#include "ecm/graph.hpp"
#include "ecm/jacobi.hpp"
#include "ecm/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ecm {

/// The (k-1)!! vertex-free graphs whose edges pair up the open ends 1..k.
/// Empty for odd k. k <= 10.
std::vector<OpenGraph> matchings_basis(unsigned k);

using Permutation = std::vector<unsigned>;  // 0-based images

/// All permutations of 0..n-1 in lexicographic order.
std::vector<Permutation> all_permutations(unsigned n);
unsigned cycle_count(const Permutation& p);
int sign(const Permutation& p);
Permutation compose(const Permutation& p, const Permutation& q);  // (p q)(i) = p(q(i))
Permutation inverse(const Permutation& p);

/// The graph a_pi: 2n open ends, a bare edge from end i to end n + pi(i)
/// (1-based labels).
OpenGraph permutation_graph(const Permutation& pi);

/// Matrix over S_n (lexicographic order) with entry d^c(pi rho^-1). Entries
/// are computed on demand; n <= 7.
class PermConnectionMatrix {
 public:
  PermConnectionMatrix(Rational d, unsigned n);

  unsigned n() const { return n_; }
  const Rational& d() const { return d_; }
  std::size_t size() const { return perms_.size(); }
  const std::vector<Permutation>& permutations() const { return perms_; }

  unsigned cycles(std::size_t i, std::size_t j) const;
  Rational entry(std::size_t i, std::size_t j) const;
  DenseMatrix to_dense() const;

 private:
  Rational d_;
  unsigned n_;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
  std::vector<Rational> powers_;  // d^0 .. d^n
};

struct CircleLevel {
  unsigned n = 0;
  Rational lambda;             // d(d-1)...(d-n+1)
  bool eigen_identity = true;  // M_n w = lambda w holds exactly
  double max_rel_residual = 0;
};

struct CircleReport {
  Rational d;
  unsigned n_max = 0;
  std::vector<CircleLevel> levels;
  /// Smallest n with lambda_n < 0: w^T M_n w = n! lambda_n < 0 there, so M_n
  /// is not positive semidefinite.
  std::optional<unsigned> violation;
};

/// Checks the alternating vector w = sum sgn(pi) pi against M_n for n = 1..n_max.
CircleReport circle_integrality_check(const Rational& d, unsigned n_max);

struct ConnectionReport {
  unsigned k = 0;
  std::size_t basis_size = 0;
  DenseMatrix matrix;
  double min_eigenvalue = 0;
  std::size_t rank = 0;
  double rank_bound = 0;  // d^k
  bool symmetric = true;
  bool psd_pass = true;
  bool rank_pass = true;
};

/// Evaluates f on every gluing of two basis graphs. PSD means the smallest
/// eigenvalue is >= -1e-8 * max|entry|; the numerical rank counts eigenvalues
/// above 1e-8 * max|entry|.
ConnectionReport connection_submatrix(const EdgeModel& f, unsigned k, const std::vector<OpenGraph>& basis,
                                      const EvalLimits& limits = {});

}  // namespace ecm
