#include "ecm/ortho.hpp"

#include "ecm/eval.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ecm {

OrthogonalMatrix::OrthogonalMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows != m_.cols || m_.rows == 0) throw std::invalid_argument("orthogonal matrix must be square and nonempty");
  if (orthogonality_defect() > 1e-12) throw std::invalid_argument("matrix is not orthogonal");
}

OrthogonalMatrix OrthogonalMatrix::identity(unsigned d) {
  DenseMatrix m(d, d);
  for (unsigned i = 0; i < d; ++i) m(i, i) = 1.0;
  return OrthogonalMatrix(std::move(m));
}

OrthogonalMatrix OrthogonalMatrix::rotation(double theta) {
  DenseMatrix m(2, 2);
  m(0, 0) = std::cos(theta);
  m(0, 1) = -std::sin(theta);
  m(1, 0) = std::sin(theta);
  m(1, 1) = std::cos(theta);
  return OrthogonalMatrix(std::move(m));
}

OrthogonalMatrix OrthogonalMatrix::transpose() const {
  DenseMatrix t(m_.cols, m_.rows);
  for (std::size_t i = 0; i < m_.rows; ++i)
    for (std::size_t j = 0; j < m_.cols; ++j) t(j, i) = m_(i, j);
  return OrthogonalMatrix(std::move(t));
}

OrthogonalMatrix operator*(const OrthogonalMatrix& a, const OrthogonalMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("orthogonal matrices of different size");
  const unsigned d = a.dim();
  DenseMatrix c(d, d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned k = 0; k < d; ++k)
      for (unsigned j = 0; j < d; ++j) c(i, j) += a(i, k) * b(k, j);
  return OrthogonalMatrix(std::move(c));
}

double OrthogonalMatrix::orthogonality_defect() const {
  double worst = 0;
  for (std::size_t i = 0; i < m_.cols; ++i)
    for (std::size_t j = 0; j < m_.cols; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < m_.rows; ++k) dot += m_(k, i) * m_(k, j);
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

OrthogonalMatrix random_orthogonal(unsigned d, std::uint64_t seed) {
  if (d == 0) throw std::invalid_argument("random_orthogonal needs d >= 1");
  std::mt19937_64 rng(seed);
  // std::uniform_real_distribution is implementation-defined; build the
  // uniform variate from the top 53 bits instead.
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  DenseMatrix m(d, d);
  for (unsigned i = 0; i < d; ++i) m(i, i) = 1.0;
  for (unsigned p = 0; p < d; ++p)
    for (unsigned q = p + 1; q < d; ++q) {
      const double theta = 2.0 * std::numbers::pi * uniform();
      const double c = std::cos(theta), s = std::sin(theta);
      for (unsigned r = 0; r < d; ++r) {
        const double x = m(r, p), y = m(r, q);
        m(r, p) = c * x + s * y;
        m(r, q) = -s * x + c * y;
      }
    }
  for (unsigned j = 0; j < d; ++j)
    if (rng() & 1u)
      for (unsigned r = 0; r < d; ++r) m(r, j) = -m(r, j);
  return OrthogonalMatrix(std::move(m));
}

namespace {

// Applies a along every mode of a dense d^n tensor (index 0 most significant).
void transform_modes(std::vector<double>& tensor, unsigned d, unsigned n, const OrthogonalMatrix& a) {
  std::vector<double> next(tensor.size());
  std::size_t stride = 1;
  for (unsigned mode = 0; mode < n; ++mode, stride *= d) {
    const std::size_t block = stride * d;
    for (std::size_t base = 0; base < tensor.size(); base += block)
      for (std::size_t low = 0; low < stride; ++low)
        for (unsigned j = 0; j < d; ++j) {
          double acc = 0;
          for (unsigned k = 0; k < d; ++k) acc += a(k, j) * tensor[base + k * stride + low];
          next[base + j * stride + low] = acc;
        }
    tensor.swap(next);
  }
}

// Index of the sorted sequence with the given color counts.
std::size_t sorted_index(const CountVector& v, unsigned d) {
  std::size_t idx = 0;
  for (unsigned c = 0; c < v.size(); ++c)
    for (unsigned r = 0; r < v[c]; ++r) idx = idx * d + c;
  return idx;
}

}  // namespace

EdgeModel rotate_model(const EdgeModel& t, const OrthogonalMatrix& a, unsigned n_max) {
  const unsigned d = t.colors();
  if (a.dim() != d)
    throw std::invalid_argument("rotation is " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                                " but the model has " + std::to_string(d) + " colors");
  if (t.kind() == ScalarKind::complex) throw std::invalid_argument("rotate_model needs a rational or real model");
  if (auto h = t.max_height()) n_max = std::min(n_max, *h);

  EdgeModel out(t.name() + "^a", d, ScalarKind::real);
  out.set_max_height(n_max);
  std::vector<unsigned> digit;
  std::vector<unsigned> counts(d);
  for (unsigned n = 0; n <= n_max; ++n) {
    std::size_t size = 1;
    for (unsigned i = 0; i < n; ++i) size *= d;
    std::map<CountVector, double> weights;
    for (const CountVector& v : count_vectors_of_height(d, n)) weights[v] = t.weight(v).to_double();
    std::vector<double> tensor(size);
    digit.assign(n, 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::fill(counts.begin(), counts.end(), 0u);
      for (unsigned c : digit) ++counts[c];
      tensor[idx] = weights.at(CountVector(counts));
      for (unsigned i = n; i-- > 0;) {
        if (++digit[i] < d) break;
        digit[i] = 0;
      }
    }
    transform_modes(tensor, d, n, a);
    for (const auto& [v, w] : weights) {
      (void)w;
      const double value = tensor[sorted_index(v, d)];
      if (value != 0.0) out.set_weight(v, Scalar(value));
    }
  }
  out.set_default(Scalar(0.0));
  return out;
}

std::map<CountVector, double> rotate_universal_variable(const CountVector& v, const OrthogonalMatrix& a) {
  const unsigned d = static_cast<unsigned>(v.size());
  if (a.dim() != d) throw std::invalid_argument("rotation size does not match the variable");
  // x_v' = sum over sequences k of prod_m a(k_m, j_m) x_{counts(k)}, j the
  // sorted sequence of v.
  std::vector<unsigned> j;
  for (unsigned c = 0; c < d; ++c)
    for (unsigned r = 0; r < v[c]; ++r) j.push_back(c);
  const unsigned n = static_cast<unsigned>(j.size());
  std::map<CountVector, double> out;
  std::vector<unsigned> k(n, 0);
  std::vector<unsigned> counts(d);
  while (true) {
    double coeff = 1;
    std::fill(counts.begin(), counts.end(), 0u);
    for (unsigned m = 0; m < n; ++m) {
      coeff *= a(k[m], j[m]);
      ++counts[k[m]];
    }
    out[CountVector(counts)] += coeff;
    unsigned i = n;
    while (i > 0) {
      --i;
      if (++k[i] < d) break;
      k[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

InvarianceReport check_invariance(const EdgeModel& t, const OpenGraph& g, unsigned trials, std::uint64_t seed,
                                  const std::string& graph_name, unsigned n_max) {
  if (g.max_degree() > n_max)
    throw CapExceeded("graph has a vertex of degree " + std::to_string(g.max_degree()) +
                      ", above the rotation height cap " + std::to_string(n_max));
  InvarianceReport report;
  report.model = t.name();
  report.graph = graph_name;
  report.trials = trials;
  report.seed = seed;
  report.value = evaluate(t, g).to_double();
  const unsigned height = g.max_degree();
  for (unsigned i = 0; i < trials; ++i) {
    const OrthogonalMatrix a = random_orthogonal(t.colors(), seed + i);
    const EdgeModel rotated = rotate_model(t, a, height);
    const double value = evaluate(rotated, g).to_double();
    const double dev = std::abs(value - report.value);
    report.max_abs_dev = std::max(report.max_abs_dev, dev);
    report.max_rel_dev = std::max(report.max_rel_dev, dev / std::max(std::abs(report.value), 1.0));
  }
  report.pass = report.max_rel_dev <= 1e-8;
  return report;
}

}  // namespace ecm
