#include "ecm/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>

namespace ecm {

EvalLimits EvalLimits::from_environment() {
  EvalLimits limits;
  if (const char* env = std::getenv("EMODEL_MAX_STATES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw std::invalid_argument("EMODEL_MAX_STATES must be a positive integer, got '" + std::string(env) + "'");
    limits.max_states = v;
  }
  return limits;
}

const Scalar& BoundaryTensor::at(const BoundaryColoring& chi) const {
  if (chi.colors.size() != k) throw std::invalid_argument("boundary coloring must assign all open ends");
  std::size_t idx = 0;
  for (unsigned c : chi.colors) {
    if (c >= colors) throw std::invalid_argument("boundary color out of range");
    idx = idx * colors + c;
  }
  return values[idx];
}

namespace {

template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}

template <class F>
decltype(auto) dispatch(ScalarKind kind, F&& f) {
  switch (kind) {
    case ScalarKind::rational: return f(Rational());
    case ScalarKind::real: return f(double());
    case ScalarKind::complex: break;
  }
  return f(Complex());
}

/// Memoized weight lookups keyed by a raw count row.
template <class T>
class WeightCache {
 public:
  WeightCache(const EdgeModel& model, unsigned max_count)
      : model_(model), colors_(model.colors()), base_(max_count + 1) {
    double size = std::pow(static_cast<double>(base_), static_cast<double>(colors_));
    if (size <= double(1 << 22)) {
      dense_.resize(static_cast<std::size_t>(size));
      known_.assign(dense_.size(), 0);
    }
  }

  const T& get(const unsigned* counts) {
    if (!known_.empty()) {
      std::size_t idx = 0;
      for (unsigned c = colors_; c-- > 0;) idx = idx * base_ + counts[c];
      if (!known_[idx]) {
        dense_[idx] = lookup(counts);
        known_[idx] = 1;
      }
      return dense_[idx];
    }
    std::vector<unsigned> key(counts, counts + colors_);
    auto it = sparse_.find(key);
    if (it == sparse_.end()) it = sparse_.emplace(key, lookup(counts)).first;
    return it->second;
  }

 private:
  T lookup(const unsigned* counts) const {
    return model_.weight(CountVector(std::vector<unsigned>(counts, counts + colors_))).template get<T>();
  }

  const EdgeModel& model_;
  unsigned colors_;
  std::size_t base_;
  std::vector<T> dense_;
  std::vector<char> known_;
  std::map<std::vector<unsigned>, T> sparse_;
};

void check_height(const EdgeModel& model, const OpenGraph& g) {
  if (auto h = model.max_height(); h && g.max_degree() > *h)
    throw HeightOverflow("model '" + model.name() + "' is defined up to height " + std::to_string(*h) +
                         " but the graph has a vertex of degree " + std::to_string(g.max_degree()));
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumSetup {
  unsigned colors = 0;
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> free_edges;
  std::vector<std::vector<unsigned>> finishing;  // per free edge: vertices completed by it
  std::vector<unsigned> upfront;                 // vertices with no free edge
  std::vector<unsigned> counts;                  // n x colors
  bool infeasible = false;
};

EnumSetup prepare(const OpenGraph& g, unsigned colors, const BoundaryColoring* chi, const EvalLimits& limits) {
  g.validate();
  EnumSetup s;
  s.colors = colors;
  s.n = g.n_vertices();
  s.counts.assign(static_cast<std::size_t>(s.n) * colors, 0);
  if (chi != nullptr) {
    if (chi->colors.size() != g.n_open())
      throw std::invalid_argument("boundary coloring assigns " + std::to_string(chi->colors.size()) +
                                  " open ends, graph has " + std::to_string(g.n_open()));
    for (unsigned c : chi->colors)
      if (c >= colors) throw std::invalid_argument("boundary color " + std::to_string(c) + " out of range");
  }

  std::vector<std::pair<unsigned, unsigned>> closed;
  for (const Edge& e : g.edges()) {
    if (e.is_closed()) {
      closed.emplace_back(e.a.id, e.b.id);
    } else if (e.is_bare()) {
      if (chi->colors[e.a.id - 1] != chi->colors[e.b.id - 1]) s.infeasible = true;
    } else {
      const Endpoint& v = e.a.is_vertex() ? e.a : e.b;
      const Endpoint& o = e.a.is_vertex() ? e.b : e.a;
      ++s.counts[static_cast<std::size_t>(v.id) * colors + chi->colors[o.id - 1]];
    }
  }

  const double states = std::pow(static_cast<double>(colors), static_cast<double>(closed.size()));
  if (states > static_cast<double>(limits.max_states))
    throw CapExceeded("enumeration needs " + std::to_string(colors) + "^" + std::to_string(closed.size()) +
                      " states, above the cap of " + std::to_string(limits.max_states));

  // Breadth-first vertex order so that vertices complete early and zero
  // weights prune whole subtrees.
  std::vector<std::vector<unsigned>> adj(s.n);
  for (auto [a, b] : closed) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> pos(s.n, -1);
  int next = 0;
  for (unsigned root = 0; root < s.n; ++root) {
    if (pos[root] >= 0) continue;
    std::deque<unsigned> queue{root};
    pos[root] = next++;
    while (!queue.empty()) {
      unsigned v = queue.front();
      queue.pop_front();
      for (unsigned u : adj[v])
        if (pos[u] < 0) {
          pos[u] = next++;
          queue.push_back(u);
        }
    }
  }
  std::stable_sort(closed.begin(), closed.end(), [&](auto x, auto y) {
    return std::max(pos[x.first], pos[x.second]) < std::max(pos[y.first], pos[y.second]);
  });
  s.free_edges = closed;

  std::vector<int> last(s.n, -1);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    last[closed[i].first] = static_cast<int>(i);
    last[closed[i].second] = static_cast<int>(i);
  }
  s.finishing.assign(closed.size(), {});
  for (unsigned v = 0; v < s.n; ++v) {
    if (last[v] < 0)
      s.upfront.push_back(v);
    else
      s.finishing[last[v]].push_back(v);
  }
  return s;
}

template <class T>
class Enumerator {
 public:
  Enumerator(EnumSetup& setup, WeightCache<T>& cache) : s_(setup), cache_(cache), total_(0) {}

  T run() {
    if (s_.infeasible) return T(0);
    T start(1);
    for (unsigned v : s_.upfront) start *= cache_.get(row(v));
    if (!is_zero(start)) recurse(0, start);
    return total_;
  }

 private:
  unsigned* row(unsigned v) { return s_.counts.data() + static_cast<std::size_t>(v) * s_.colors; }

  void recurse(std::size_t i, const T& partial) {
    if (i == s_.free_edges.size()) {
      total_ += partial;
      return;
    }
    const auto [a, b] = s_.free_edges[i];
    for (unsigned c = 0; c < s_.colors; ++c) {
      ++row(a)[c];
      ++row(b)[c];
      if (s_.finishing[i].empty()) {
        recurse(i + 1, partial);
      } else {
        T p = partial;
        bool zero = false;
        for (unsigned v : s_.finishing[i]) {
          p *= cache_.get(row(v));
          if (is_zero(p)) {
            zero = true;
            break;
          }
        }
        if (!zero) recurse(i + 1, p);
      }
      --row(a)[c];
      --row(b)[c];
    }
  }

  EnumSetup& s_;
  WeightCache<T>& cache_;
  T total_;
};

template <class T>
T circle_factor(unsigned colors, unsigned circles) {
  T f(1);
  for (unsigned i = 0; i < circles; ++i) f *= T(colors);
  return f;
}

Scalar enumerate(const EdgeModel& model, const OpenGraph& g, const BoundaryColoring* chi, const EvalLimits& limits) {
  check_height(model, g);
  EnumSetup setup = prepare(g, model.colors(), chi, limits);
  return dispatch(model.kind(), [&](auto tag) -> Scalar {
    using T = decltype(tag);
    WeightCache<T> cache(model, g.max_degree());
    Enumerator<T> e(setup, cache);
    T value = e.run();
    value *= circle_factor<T>(model.colors(), g.n_circles());
    return Scalar(value);
  });
}

// ---------------------------------------------------------------------------
// Tensor contraction

struct Incidence {
  std::vector<std::vector<std::pair<int, unsigned>>> vertex;  // (label, multiplicity)
  std::vector<unsigned> loops;                                // per vertex; summed inside its tensor
  std::vector<std::pair<int, int>> bare;                      // label pairs
  int open_base = 0;
};

Incidence incidence(const OpenGraph& g) {
  Incidence inc;
  inc.vertex.resize(g.n_vertices());
  inc.loops.assign(g.n_vertices(), 0);
  inc.open_base = static_cast<int>(g.edges().size());
  auto add = [&](unsigned v, int label) {
    auto& list = inc.vertex[v];
    for (auto& [l, m] : list)
      if (l == label) {
        ++m;
        return;
      }
    list.emplace_back(label, 1u);
  };
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.is_loop()) {
      ++inc.loops[e.a.id];
    } else if (e.is_closed()) {
      add(e.a.id, static_cast<int>(i));
      add(e.b.id, static_cast<int>(i));
    } else if (e.is_bare()) {
      inc.bare.emplace_back(inc.open_base + static_cast<int>(e.a.id), inc.open_base + static_cast<int>(e.b.id));
    } else {
      const Endpoint& v = e.a.is_vertex() ? e.a : e.b;
      const Endpoint& o = e.a.is_vertex() ? e.b : e.a;
      add(v.id, inc.open_base + static_cast<int>(o.id));
    }
  }
  return inc;
}

struct Shape {
  unsigned id;
  std::vector<int> labels;
};

std::vector<Shape> initial_shapes(const Incidence& inc) {
  std::vector<Shape> shapes;
  for (unsigned v = 0; v < inc.vertex.size(); ++v) {
    Shape s{v, {}};
    for (auto [l, m] : inc.vertex[v]) s.labels.push_back(l);
    shapes.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < inc.bare.size(); ++i)
    shapes.push_back({static_cast<unsigned>(inc.vertex.size() + i), {inc.bare[i].first, inc.bare[i].second}});
  return shapes;
}

std::vector<int> merged_labels(const std::vector<int>& a, const std::vector<int>& b, unsigned* shared) {
  std::vector<int> out;
  unsigned common = 0;
  for (int l : a) {
    if (std::find(b.begin(), b.end(), l) == b.end())
      out.push_back(l);
    else
      ++common;
  }
  for (int l : b)
    if (std::find(a.begin(), a.end(), l) == a.end()) out.push_back(l);
  if (shared != nullptr) *shared = common;
  return out;
}

ContractionPlan plan_from_shapes(std::vector<Shape> active, unsigned colors) {
  ContractionPlan plan;
  for (const auto& s : active) plan.peak_rank = std::max<unsigned>(plan.peak_rank, s.labels.size());
  const double d = colors;
  for (;;) {
    std::size_t best_i = 0, best_j = 0;
    bool found = false;
    unsigned best_rank = 0;
    double best_size = 0;
    unsigned best_lo = 0, best_hi = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        unsigned shared = 0;
        auto labels = merged_labels(active[i].labels, active[j].labels, &shared);
        if (shared == 0) continue;
        const unsigned rank = static_cast<unsigned>(labels.size());
        const double size = std::pow(d, active[i].labels.size()) + std::pow(d, active[j].labels.size());
        const unsigned lo = std::min(active[i].id, active[j].id), hi = std::max(active[i].id, active[j].id);
        bool better = !found || rank < best_rank || (rank == best_rank && size < best_size) ||
                      (rank == best_rank && size == best_size && std::pair(lo, hi) < std::pair(best_lo, best_hi));
        if (better) {
          found = true;
          best_i = i;
          best_j = j;
          best_rank = rank;
          best_size = size;
          best_lo = lo;
          best_hi = hi;
        }
      }
    }
    if (!found) break;
    Shape& a = active[best_i].id < active[best_j].id ? active[best_i] : active[best_j];
    Shape& b = active[best_i].id < active[best_j].id ? active[best_j] : active[best_i];
    unsigned shared = 0;
    Shape merged{a.id, merged_labels(a.labels, b.labels, &shared)};
    plan.steps.push_back({a.id, b.id, best_rank, shared});
    plan.peak_rank = std::max(plan.peak_rank, best_rank);
    const unsigned drop = b.id;
    a = std::move(merged);
    active.erase(std::find_if(active.begin(), active.end(), [drop](const Shape& s) { return s.id == drop; }));
  }
  std::sort(active.begin(), active.end(), [](const Shape& x, const Shape& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < active.size(); ++i) {
    active[0].labels.insert(active[0].labels.end(), active[i].labels.begin(), active[i].labels.end());
    const unsigned rank = static_cast<unsigned>(active[0].labels.size());
    plan.steps.push_back({active[0].id, active[i].id, rank, 0});
    plan.peak_rank = std::max(plan.peak_rank, rank);
  }
  return plan;
}

template <class T>
struct Tensor {
  std::vector<int> labels;
  std::vector<T> data;
};

std::vector<std::size_t> offsets(const std::vector<std::size_t>& positions, std::size_t rank, unsigned d) {
  std::vector<std::size_t> stride(rank, 1);
  for (std::size_t i = rank; i-- > 1;) stride[i - 1] = stride[i] * d;
  std::vector<std::size_t> out{0};
  for (std::size_t p : positions) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * d);
    for (std::size_t base : out)
      for (unsigned c = 0; c < d; ++c) next.push_back(base + c * stride[p]);
    out = std::move(next);
  }
  return out;
}

template <class T>
Tensor<T> contract(const Tensor<T>& a, const Tensor<T>& b, unsigned d) {
  std::vector<std::size_t> a_free, a_shared, b_free, b_shared;
  Tensor<T> out;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it == b.labels.end()) {
      a_free.push_back(i);
      out.labels.push_back(a.labels[i]);
    } else {
      a_shared.push_back(i);
      b_shared.push_back(static_cast<std::size_t>(it - b.labels.begin()));
    }
  }
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[j]) == a.labels.end()) {
      b_free.push_back(j);
      out.labels.push_back(b.labels[j]);
    }
  const auto oa_free = offsets(a_free, a.labels.size(), d);
  const auto oa_shared = offsets(a_shared, a.labels.size(), d);
  const auto ob_free = offsets(b_free, b.labels.size(), d);
  const auto ob_shared = offsets(b_shared, b.labels.size(), d);
  const std::size_t nb = ob_free.size();
  out.data.assign(oa_free.size() * nb, T(0));
  for (std::size_t i = 0; i < oa_free.size(); ++i) {
    for (std::size_t s = 0; s < oa_shared.size(); ++s) {
      const T& x = a.data[oa_free[i] + oa_shared[s]];
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < nb; ++j) {
        const T& y = b.data[ob_free[j] + ob_shared[s]];
        if (!is_zero(y)) out.data[i * nb + j] += x * y;
      }
    }
  }
  return out;
}

template <class T>
Tensor<T> vertex_tensor(const std::vector<std::pair<int, unsigned>>& slots, unsigned loops, unsigned d,
                        WeightCache<T>& cache) {
  Tensor<T> t;
  const std::size_t r = slots.size();
  for (auto [l, m] : slots) t.labels.push_back(l);
  std::size_t size = 1;
  for (std::size_t i = 0; i < r; ++i) size *= d;
  std::size_t loop_states = 1;
  for (unsigned i = 0; i < loops; ++i) loop_states *= d;
  t.data.reserve(size);
  std::vector<unsigned> digit(r, 0);
  std::vector<unsigned> counts(d, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    T sum(0);
    // Each loop adds two ends of one color.
    for (std::size_t ls = 0; ls < loop_states; ++ls) {
      std::fill(counts.begin(), counts.end(), 0u);
      for (std::size_t i = 0; i < r; ++i) counts[digit[i]] += slots[i].second;
      for (std::size_t rest = ls, i = 0; i < loops; ++i, rest /= d) counts[rest % d] += 2;
      sum += cache.get(counts.data());
    }
    t.data.push_back(sum);
    for (std::size_t i = r; i-- > 0;) {
      if (++digit[i] < d) break;
      digit[i] = 0;
    }
  }
  return t;
}

template <class T>
BoundaryTensor contract_graph(const EdgeModel& model, const OpenGraph& g, const EvalLimits& limits) {
  const unsigned d = model.colors();
  const Incidence inc = incidence(g);
  const auto degrees = g.degrees();
  for (unsigned v = 0; v < g.n_vertices(); ++v)
    if (degrees[v] > limits.max_arity)
      throw CapExceeded("vertex " + std::to_string(v) + " has degree " + std::to_string(degrees[v]) +
                        ", above the tensor arity cap of " + std::to_string(limits.max_arity) +
                        "; use the enumeration evaluator");
  auto shapes = initial_shapes(inc);
  const ContractionPlan plan = plan_from_shapes(shapes, d);
  if (std::pow(static_cast<double>(d), plan.peak_rank) > static_cast<double>(limits.max_tensor_entries))
    throw CapExceeded("contraction needs a tensor with " + std::to_string(d) + "^" + std::to_string(plan.peak_rank) +
                      " entries, above the cap of " + std::to_string(limits.max_tensor_entries) +
                      "; use the enumeration evaluator");

  WeightCache<T> cache(model, g.max_degree());
  std::map<unsigned, Tensor<T>> live;
  for (unsigned v = 0; v < g.n_vertices(); ++v) live.emplace(v, vertex_tensor<T>(inc.vertex[v], inc.loops[v], d, cache));
  for (std::size_t i = 0; i < inc.bare.size(); ++i) {
    Tensor<T> id;
    id.labels = {inc.bare[i].first, inc.bare[i].second};
    id.data.assign(static_cast<std::size_t>(d) * d, T(0));
    for (unsigned c = 0; c < d; ++c) id.data[c * d + c] = T(1);
    live.emplace(static_cast<unsigned>(g.n_vertices() + i), std::move(id));
  }
  for (const ContractionStep& step : plan.steps) {
    Tensor<T> merged = contract(live.at(step.left), live.at(step.right), d);
    live.erase(step.right);
    live.at(step.left) = std::move(merged);
  }

  Tensor<T> result;
  if (live.empty()) {
    result.data = {T(1)};
  } else {
    result = std::move(live.begin()->second);
  }

  const unsigned k = g.n_open();
  BoundaryTensor out;
  out.colors = d;
  out.k = k;
  // Reorder the free indices into label order 1..k.
  std::vector<std::size_t> pos;
  for (unsigned label = 1; label <= k; ++label) {
    auto it = std::find(result.labels.begin(), result.labels.end(), inc.open_base + static_cast<int>(label));
    pos.push_back(static_cast<std::size_t>(it - result.labels.begin()));
  }
  const auto src = offsets(pos, result.labels.size(), d);
  const T circles = circle_factor<T>(d, g.n_circles());
  out.values.reserve(src.size());
  for (std::size_t off : src) out.values.emplace_back(T(result.data[off] * circles));
  return out;
}

}  // namespace

Scalar eval_enum(const EdgeModel& model, const OpenGraph& g, const EvalLimits& limits) {
  if (!g.is_closed()) throw GraphError("eval_enum needs a closed graph; use eval_boundary for open ends");
  return enumerate(model, g, nullptr, limits);
}

Scalar eval_boundary(const EdgeModel& model, const OpenGraph& g, const BoundaryColoring& chi,
                     const EvalLimits& limits) {
  return enumerate(model, g, &chi, limits);
}

ContractionPlan plan_contraction(const OpenGraph& g, unsigned colors) {
  return plan_from_shapes(initial_shapes(incidence(g)), colors);
}

BoundaryTensor boundary_tensor(const EdgeModel& model, const OpenGraph& g, const EvalLimits& limits) {
  g.validate();
  check_height(model, g);
  return dispatch(model.kind(), [&](auto tag) { return contract_graph<decltype(tag)>(model, g, limits); });
}

Scalar eval_tensor(const EdgeModel& model, const OpenGraph& g, const EvalLimits& limits) {
  if (!g.is_closed()) throw GraphError("eval_tensor needs a closed graph; use boundary_tensor for open ends");
  return boundary_tensor(model, g, limits).values.front();
}

Scalar evaluate(const EdgeModel& model, const OpenGraph& g, Method method, const EvalLimits& limits) {
  switch (method) {
    case Method::enumerate: return eval_enum(model, g, limits);
    case Method::tensor: return eval_tensor(model, g, limits);
    case Method::automatic: break;
  }
  try {
    return eval_tensor(model, g, limits);
  } catch (const CapExceeded&) {
    return eval_enum(model, g, limits);
  }
}

Poly eval_universal(const OpenGraph& g, unsigned colors, const EvalLimits& limits) {
  if (!g.is_closed()) throw GraphError("eval_universal needs a closed graph");
  EnumSetup s = prepare(g, colors, nullptr, limits);
  std::map<Monomial, std::uint64_t> tally;
  std::vector<CountVector> vars(s.n);

  auto leaf = [&] {
    for (unsigned v = 0; v < s.n; ++v)
      vars[v] = CountVector(std::vector<unsigned>(s.counts.begin() + static_cast<std::ptrdiff_t>(v) * colors,
                                                  s.counts.begin() + static_cast<std::ptrdiff_t>(v + 1) * colors));
    std::vector<CountVector> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    Monomial m;
    for (auto& v : sorted) {
      if (!m.empty() && m.back().first == v)
        ++m.back().second;
      else
        m.emplace_back(std::move(v), 1u);
    }
    ++tally[m];
  };

  std::vector<unsigned> color(s.free_edges.size(), 0);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == s.free_edges.size()) {
      leaf();
      return;
    }
    const auto [a, b] = s.free_edges[i];
    for (unsigned c = 0; c < colors; ++c) {
      ++s.counts[a * colors + c];
      ++s.counts[b * colors + c];
      self(self, i + 1);
      --s.counts[a * colors + c];
      --s.counts[b * colors + c];
    }
  };
  recurse(recurse, 0);

  Poly out(colors);
  const Rational circles = pow(Rational(colors), g.n_circles());
  for (const auto& [m, count] : tally) {
    Rational c(mpz_class(std::to_string(count)));
    out.add_term(m, Rational(c * circles));
  }
  return out;
}

Scalar eval_quantum(const EdgeModel& model, const QuantumGraph& q, Method method, const EvalLimits& limits) {
  Scalar total = Scalar::zero(model.kind());
  for (const auto& term : q.terms()) {
    if (!term.graph.is_closed()) throw GraphError("eval_quantum needs closed terms");
    total = total + Scalar(term.coefficient).convert(model.kind()) * evaluate(model, term.graph, method, limits);
  }
  return total;
}

}  // namespace ecm
