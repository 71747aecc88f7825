#include "ecm/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ecm {

namespace {
constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
}

void OpenGraph::check_vertex(unsigned v) const {
  if (v >= n_vertices_)
    throw GraphError("vertex " + std::to_string(v) + " out of range (graph has " +
                     std::to_string(n_vertices_) + " vertices)");
}

void OpenGraph::add_edge(unsigned u, unsigned v) {
  check_vertex(u);
  check_vertex(v);
  edges_.push_back({Endpoint::vertex(u), Endpoint::vertex(v)});
}

void OpenGraph::register_open(unsigned label, std::size_t edge_index) {
  if (label == 0) throw GraphError("open-end labels start at 1");
  if (label > open_edge_.size()) open_edge_.resize(label, kUnassigned);
  if (open_edge_[label - 1] != kUnassigned)
    throw GraphError("duplicate open-end label " + std::to_string(label));
  open_edge_[label - 1] = edge_index;
}

void OpenGraph::attach_open(unsigned label, unsigned v) {
  check_vertex(v);
  register_open(label, edges_.size());
  edges_.push_back({Endpoint::vertex(v), Endpoint::open(label)});
}

void OpenGraph::add_bare_edge(unsigned label_a, unsigned label_b) {
  if (label_a == label_b) throw GraphError("bare edge needs two distinct open labels");
  register_open(label_a, edges_.size());
  try {
    register_open(label_b, edges_.size());
  } catch (...) {
    open_edge_[label_a - 1] = kUnassigned;
    while (!open_edge_.empty() && open_edge_.back() == kUnassigned) open_edge_.pop_back();
    throw;
  }
  edges_.push_back({Endpoint::open(label_a), Endpoint::open(label_b)});
}

std::size_t OpenGraph::open_edge(unsigned label) const {
  if (label == 0 || label > open_edge_.size() || open_edge_[label - 1] == kUnassigned)
    throw GraphError("no open end with label " + std::to_string(label));
  return open_edge_[label - 1];
}

std::optional<unsigned> OpenGraph::open_attachment(unsigned label) const {
  const Edge& e = edges_[open_edge(label)];
  if (e.a.is_vertex()) return e.a.id;
  if (e.b.is_vertex()) return e.b.id;
  return std::nullopt;
}

unsigned OpenGraph::degree(unsigned v) const {
  check_vertex(v);
  unsigned deg = 0;
  for (const Edge& e : edges_) {
    if (e.a == Endpoint::vertex(v)) ++deg;
    if (e.b == Endpoint::vertex(v)) ++deg;
  }
  return deg;
}

std::vector<unsigned> OpenGraph::degrees() const {
  std::vector<unsigned> deg(n_vertices_, 0);
  for (const Edge& e : edges_) {
    if (e.a.is_vertex()) ++deg[e.a.id];
    if (e.b.is_vertex()) ++deg[e.b.id];
  }
  return deg;
}

unsigned OpenGraph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

void OpenGraph::validate() const {
  for (std::size_t i = 0; i < open_edge_.size(); ++i)
    if (open_edge_[i] == kUnassigned)
      throw GraphError("open-end labels must be exactly 1.." + std::to_string(open_edge_.size()) +
                       "; label " + std::to_string(i + 1) + " is missing");
  for (const Edge& e : edges_)
    for (const Endpoint& p : {e.a, e.b})
      if (p.is_vertex()) check_vertex(p.id);
}

OpenGraph disjoint_union(const OpenGraph& g1, const OpenGraph& g2) {
  if (!g1.is_closed() || !g2.is_closed())
    throw GraphError("disjoint_union is only defined for closed graphs");
  OpenGraph out(g1.n_vertices() + g2.n_vertices());
  for (const Edge& e : g1.edges()) out.add_edge(e.a.id, e.b.id);
  for (const Edge& e : g2.edges()) out.add_edge(e.a.id + g1.n_vertices(), e.b.id + g1.n_vertices());
  out.add_circles(g1.n_circles() + g2.n_circles());
  return out;
}

OpenGraph glue(const OpenGraph& g1, const OpenGraph& g2) {
  if (g1.n_open() != g2.n_open())
    throw GraphError("cannot glue graphs with " + std::to_string(g1.n_open()) + " and " +
                     std::to_string(g2.n_open()) + " open ends");
  g1.validate();
  g2.validate();
  const unsigned offset = g1.n_vertices();
  OpenGraph out(g1.n_vertices() + g2.n_vertices());
  out.add_circles(g1.n_circles() + g2.n_circles());

  // Edges touching an open end, from both sides, with ends in global vertex ids.
  struct Piece {
    int side;
    Endpoint end[2];
  };
  std::vector<Piece> pieces;
  // (side, label) -> piece index
  std::vector<std::size_t> holder[2];
  holder[0].assign(g1.n_open() + 1, 0);
  holder[1].assign(g1.n_open() + 1, 0);

  const OpenGraph* sides[2] = {&g1, &g2};
  for (int s = 0; s < 2; ++s) {
    const unsigned shift = s == 0 ? 0 : offset;
    for (const Edge& e : sides[s]->edges()) {
      auto lift = [shift](Endpoint p) { return p.is_vertex() ? Endpoint::vertex(p.id + shift) : p; };
      if (e.is_closed()) {
        out.add_edge(e.a.id + shift, e.b.id + shift);
        continue;
      }
      Piece piece{s, {lift(e.a), lift(e.b)}};
      for (const Endpoint& p : piece.end)
        if (p.is_open()) holder[s][p.id] = pieces.size();
      pieces.push_back(piece);
    }
  }

  std::vector<bool> used(pieces.size(), false);
  // Follows the chain entered through end `enter` of piece `idx`; returns the
  // endpoint where the chain leaves, or nullopt if it closed on itself.
  auto walk = [&](std::size_t idx, int enter) -> std::optional<Endpoint> {
    const std::size_t start = idx;
    const int start_enter = enter;
    for (;;) {
      used[idx] = true;
      const Piece& p = pieces[idx];
      const Endpoint exit = p.end[1 - enter];
      if (exit.is_vertex()) return exit;
      std::size_t next = holder[1 - p.side][exit.id];
      const Piece& q = pieces[next];
      int next_enter = q.end[0] == exit ? 0 : 1;
      if (next == start && next_enter == start_enter) return std::nullopt;
      idx = next;
      enter = next_enter;
    }
  };

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (used[i]) continue;
    for (int end = 0; end < 2; ++end) {
      if (pieces[i].end[end].is_vertex()) {
        auto exit = walk(i, end);
        out.add_edge(pieces[i].end[end].id, exit->id);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (used[i]) continue;
    walk(i, 0);
    out.add_circles(1);
  }
  return out;
}

std::vector<unsigned> degree_multiset(const OpenGraph& g) {
  if (!g.is_closed()) throw GraphError("degree_multiset requires a closed graph");
  if (g.n_circles() != 0) throw GraphError("degree_multiset is undefined for graphs with circles");
  auto deg = g.degrees();
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool is_simple(const OpenGraph& g) {
  if (!g.is_closed() || g.n_circles() != 0) return false;
  std::vector<std::pair<unsigned, unsigned>> seen;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    seen.emplace_back(std::min(e.a.id, e.b.id), std::max(e.a.id, e.b.id));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// ---------------------------------------------------------------------------
// Canonical keys

namespace {

std::string bare_and_header(const OpenGraph& g) {
  std::vector<std::pair<unsigned, unsigned>> bare;
  for (const Edge& e : g.edges())
    if (e.is_bare()) bare.emplace_back(std::min(e.a.id, e.b.id), std::max(e.a.id, e.b.id));
  std::sort(bare.begin(), bare.end());
  std::string out = "V" + std::to_string(g.n_vertices()) + "|C" + std::to_string(g.n_circles()) +
                    "|K" + std::to_string(g.n_open()) + "|B";
  for (auto [a, b] : bare) out += std::to_string(a) + "-" + std::to_string(b) + ",";
  return out;
}

GraphKey raw_key(const OpenGraph& g) {
  std::vector<std::string> items;
  for (const Edge& e : g.edges()) {
    if (e.is_bare()) continue;
    auto enc = [](Endpoint p) { return (p.is_vertex() ? "v" : "o") + std::to_string(p.id); };
    std::string x = enc(e.a), y = enc(e.b);
    if (y < x) std::swap(x, y);
    items.push_back(x + "-" + y);
  }
  std::sort(items.begin(), items.end());
  std::string out = "raw|" + bare_and_header(g) + "|";
  for (const auto& s : items) out += s + ",";
  return {out};
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const OpenGraph& g) : g_(g), n_(g.n_vertices()) {
    mult_.assign(n_ * n_, 0);
    loops_.assign(n_, 0);
    opens_.assign(n_, {});
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) {
        ++loops_[e.a.id];
      } else if (e.is_closed()) {
        ++mult_[e.a.id * n_ + e.b.id];
        ++mult_[e.b.id * n_ + e.a.id];
      } else if (!e.is_bare()) {
        const Endpoint& v = e.a.is_vertex() ? e.a : e.b;
        const Endpoint& o = e.a.is_vertex() ? e.b : e.a;
        opens_[v.id].push_back(static_cast<int>(o.id));
      }
    }
    for (auto& o : opens_) std::sort(o.begin(), o.end());
  }

  std::optional<GraphKey> run(std::size_t budget) {
    refine();
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](unsigned a, unsigned b) { return color_[a] < color_[b]; });
    cell_of_pos_.resize(n_);
    for (unsigned p = 0; p < n_; ++p) cell_of_pos_[p] = color_[order_[p]];
    placed_.assign(n_, 0);
    used_.assign(n_, false);
    best_.clear();
    current_.assign(n_, {});
    budget_ = budget;
    if (!search(0, false)) return std::nullopt;

    std::string out = "canon|" + bare_and_header(g_) + "|";
    for (const auto& row : best_) {
      for (int x : row) out += std::to_string(x) + ".";
      out += ";";
    }
    return GraphKey{out};
  }

 private:
  void refine() {
    std::vector<std::vector<int>> sig(n_);
    for (unsigned v = 0; v < n_; ++v) {
      sig[v] = {static_cast<int>(g_.degree(v)), loops_[v]};
      sig[v].push_back(-1);
      sig[v].insert(sig[v].end(), opens_[v].begin(), opens_[v].end());
    }
    unsigned n_colors = rank(sig);
    for (;;) {
      for (unsigned v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> nb;
        for (unsigned u = 0; u < n_; ++u)
          if (u != v && mult_[v * n_ + u] != 0) nb.emplace_back(color_[u], mult_[v * n_ + u]);
        std::sort(nb.begin(), nb.end());
        sig[v] = {color_[v]};
        for (auto [c, m] : nb) {
          sig[v].push_back(c);
          sig[v].push_back(m);
        }
      }
      unsigned next = rank(sig);
      if (next == n_colors) break;
      n_colors = next;
    }
  }

  unsigned rank(const std::vector<std::vector<int>>& sig) {
    std::vector<std::vector<int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    color_.resize(n_);
    for (unsigned v = 0; v < n_; ++v)
      color_[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    return static_cast<unsigned>(sorted.size());
  }

  // Returns false when the node budget is exhausted.
  bool search(unsigned pos, bool below_best) {
    if (budget_-- == 0) return false;
    if (pos == n_) {
      best_ = current_;
      ++generation_;
      return true;
    }
    for (unsigned v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != cell_of_pos_[pos]) continue;
      std::vector<int>& row = current_[pos];
      row.clear();
      row.push_back(loops_[v]);
      row.insert(row.end(), opens_[v].begin(), opens_[v].end());
      row.push_back(-1);
      for (unsigned q = 0; q < pos; ++q) row.push_back(mult_[v * n_ + placed_[q]]);
      bool now_below = below_best;
      if (!below_best && !best_.empty()) {
        if (row > best_[pos]) continue;
        now_below = row < best_[pos];
      }
      used_[v] = true;
      placed_[pos] = v;
      const std::size_t generation = generation_;
      bool ok = search(pos + 1, now_below || best_.empty());
      used_[v] = false;
      if (!ok) return false;
      // A new best shares our prefix, so later siblings must compare again.
      if (generation_ != generation) below_best = false;
    }
    return true;
  }

  const OpenGraph& g_;
  unsigned n_;
  std::vector<int> mult_;
  std::vector<int> loops_;
  std::vector<std::vector<int>> opens_;
  std::vector<int> color_;
  std::vector<unsigned> order_;
  std::vector<int> cell_of_pos_;
  std::vector<unsigned> placed_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> best_;
  std::vector<std::vector<int>> current_;
  std::size_t budget_ = 0;
  std::size_t generation_ = 0;
};

}  // namespace

GraphKey canonical_key(const OpenGraph& g) {
  if (g.n_vertices() <= kCanonicalVertexCap) {
    Canonicalizer c(g);
    if (auto key = c.run(2'000'000)) return *key;
  }
  return raw_key(g);
}

OpenGraph complete_graph(unsigned n) {
  OpenGraph g(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

OpenGraph cycle_graph(unsigned n) {
  OpenGraph g(n);
  for (unsigned i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

OpenGraph path_graph(unsigned n) {
  OpenGraph g(n);
  for (unsigned i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

OpenGraph circle_graph(unsigned circles) {
  OpenGraph g;
  g.add_circles(circles);
  return g;
}

}  // namespace ecm
