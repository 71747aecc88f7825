#include "ecm/connection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ecm {

namespace {

void matchings_rec(std::vector<unsigned>& free, OpenGraph& g, std::vector<OpenGraph>& out) {
  if (free.empty()) {
    out.push_back(g);
    return;
  }
  const unsigned first = free.front();
  for (std::size_t i = 1; i < free.size(); ++i) {
    const unsigned partner = free[i];
    std::vector<unsigned> rest;
    for (std::size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    OpenGraph next = g;
    next.add_bare_edge(first, partner);
    matchings_rec(rest, next, out);
  }
}

}  // namespace

std::vector<OpenGraph> matchings_basis(unsigned k) {
  if (k > 10) throw std::invalid_argument("matchings_basis is limited to k <= 10");
  std::vector<OpenGraph> out;
  if (k % 2 == 1) return out;
  std::vector<unsigned> labels(k);
  std::iota(labels.begin(), labels.end(), 1u);
  OpenGraph g;
  matchings_rec(labels, g, out);
  return out;
}

std::vector<Permutation> all_permutations(unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

unsigned cycle_count(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  unsigned cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

int sign(const Permutation& p) { return (p.size() - cycle_count(p)) % 2 == 0 ? 1 : -1; }

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<unsigned>(i);
  return r;
}

OpenGraph permutation_graph(const Permutation& pi) {
  const unsigned n = static_cast<unsigned>(pi.size());
  OpenGraph g;
  for (unsigned i = 0; i < n; ++i) g.add_bare_edge(i + 1, n + pi[i] + 1);
  return g;
}

PermConnectionMatrix::PermConnectionMatrix(Rational d, unsigned n) : d_(std::move(d)), n_(n) {
  if (n > 7) throw std::invalid_argument("permutation connection matrices are limited to n <= 7");
  perms_ = all_permutations(n);
  for (const auto& p : perms_) inverses_.push_back(inverse(p));
  powers_.push_back(Rational(1));
  for (unsigned i = 0; i < n; ++i) powers_.push_back(Rational(powers_.back() * d_));
}

unsigned PermConnectionMatrix::cycles(std::size_t i, std::size_t j) const {
  return cycle_count(compose(perms_[i], inverses_[j]));
}

Rational PermConnectionMatrix::entry(std::size_t i, std::size_t j) const { return powers_[cycles(i, j)]; }

DenseMatrix PermConnectionMatrix::to_dense() const {
  DenseMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = to_double(entry(i, j));
  return m;
}

CircleReport circle_integrality_check(const Rational& d, unsigned n_max) {
  if (n_max > 7) throw std::invalid_argument("circle_integrality_check is limited to n <= 7");
  CircleReport report;
  report.d = d;
  report.n_max = n_max;
  Rational lambda(1);
  for (unsigned n = 1; n <= n_max; ++n) {
    lambda *= d - Rational(n - 1);
    CircleLevel level;
    level.n = n;
    level.lambda = lambda;
    const PermConnectionMatrix m(d, n);
    std::vector<int> signs;
    for (const auto& p : m.permutations()) signs.push_back(sign(p));
    const double scale = std::max(std::abs(to_double(lambda)), 1e-300);
    for (std::size_t i = 0; i < m.size(); ++i) {
      // (M w)_pi = sum_j d^j * (signed number of rho with c(pi rho^-1) = j).
      std::vector<long long> tally(n + 1, 0);
      for (std::size_t j = 0; j < m.size(); ++j) tally[m.cycles(i, j)] += signs[j];
      Rational value(0);
      Rational power(1);
      for (unsigned c = 0; c <= n; ++c) {
        value += Rational(mpz_class(std::to_string(tally[c]))) * power;
        power *= d;
      }
      const Rational expected = lambda * signs[i];
      if (value != expected) level.eigen_identity = false;
      const double residual = std::abs(to_double(value) - to_double(expected));
      level.max_rel_residual = std::max(level.max_rel_residual, lambda == 0 ? residual : residual / scale);
    }
    if (!report.violation && lambda < 0) report.violation = n;
    report.levels.push_back(std::move(level));
  }
  return report;
}

ConnectionReport connection_submatrix(const EdgeModel& f, unsigned k, const std::vector<OpenGraph>& basis,
                                      const EvalLimits& limits) {
  for (const auto& g : basis)
    if (g.n_open() != k)
      throw std::invalid_argument("basis graph has " + std::to_string(g.n_open()) + " open ends, expected " +
                                  std::to_string(k));
  ConnectionReport r;
  r.k = k;
  r.basis_size = basis.size();
  r.rank_bound = std::pow(static_cast<double>(f.colors()), static_cast<double>(k));
  const std::size_t n = basis.size();
  r.matrix = DenseMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar v = evaluate(f, glue(basis[i], basis[j]), Method::automatic, limits);
      if (v.kind() == ScalarKind::complex && std::abs(v.complex().imag()) > 1e-8 * (1 + std::abs(v.complex())))
        throw std::domain_error("connection matrix entry has a nonzero imaginary part");
      r.matrix(i, j) = v.to_double();
    }
  if (n == 0) return r;
  const double scale = r.matrix.max_abs();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(r.matrix(i, j) - r.matrix(j, i)) > 1e-12 * std::max(scale, 1.0)) r.symmetric = false;
  const SymmetricEigen eig = jacobi_eigen(r.matrix);
  r.min_eigenvalue = eig.values.front();
  r.rank = numerical_rank(eig, 1e-8 * scale);
  r.psd_pass = r.min_eigenvalue >= -1e-8 * scale;
  r.rank_pass = static_cast<double>(r.rank) <= r.rank_bound;
  return r;
}

}  // namespace ecm
