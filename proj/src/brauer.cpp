#include "ecm/brauer.hpp"

#include "ecm/eval.hpp"
#include "ecm/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ecm {

unsigned mu(const Multiset& s) { return std::accumulate(s.begin(), s.end(), 0u); }

namespace {

void check_multiset(const Multiset& s) {
  if (!std::is_sorted(s.begin(), s.end())) throw std::invalid_argument("boundary multiset must be sorted");
  if (std::find(s.begin(), s.end(), 0u) != s.end()) throw std::invalid_argument("boundary block sizes must be positive");
}

// Block index of every node of one side.
std::vector<unsigned> block_of(const Multiset& s) {
  std::vector<unsigned> out;
  for (unsigned b = 0; b < s.size(); ++b) out.insert(out.end(), s[b], b);
  return out;
}

std::string multiset_string(const Multiset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

MatchingDiagram::MatchingDiagram(Multiset l, Multiset r, std::vector<unsigned> p)
    : left(std::move(l)), right(std::move(r)), partner(std::move(p)) {
  check_multiset(left);
  check_multiset(right);
  const std::size_t n = mu(left) + mu(right);
  if (partner.size() != n) throw std::invalid_argument("matching must cover all " + std::to_string(n) + " nodes");
  for (std::size_t x = 0; x < n; ++x)
    if (partner[x] >= n || partner[x] == x || partner[partner[x]] != x)
      throw std::invalid_argument("partner list is not a perfect matching");
}

MatchingDiagram MatchingDiagram::from_pairs(Multiset l, Multiset r,
                                            const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  const std::size_t n = mu(l) + mu(r);
  std::vector<unsigned> p(n, static_cast<unsigned>(n));
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n || p[x] != n || p[y] != n || x == y) throw std::invalid_argument("bad matching pair");
    p[x] = y;
    p[y] = x;
  }
  return MatchingDiagram(std::move(l), std::move(r), std::move(p));
}

MatchingDiagram MatchingDiagram::identity(const Multiset& s) {
  const unsigned m = mu(s);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < m; ++i) pairs.emplace_back(i, m + i);
  return from_pairs(s, s, pairs);
}

std::string MatchingDiagram::to_string() const {
  std::ostringstream os;
  os << "a(" << multiset_string(left) << "," << multiset_string(right) << ",{";
  const unsigned l = left_size();
  auto node = [l](unsigned x) { return x < l ? "p" + std::to_string(x + 1) : "q" + std::to_string(x - l + 1); };
  bool first = true;
  for (unsigned x = 0; x < partner.size(); ++x)
    if (x < partner[x]) {
      os << (first ? "" : ",") << node(x) << node(partner[x]);
      first = false;
    }
  os << "})";
  return os.str();
}

BrauerElement::BrauerElement(Rational d, const MatchingDiagram& a, Rational coefficient) : d_(std::move(d)) {
  add(coefficient, a);
}

void BrauerElement::add(const Rational& coefficient, const MatchingDiagram& a) {
  if (coefficient == 0) return;
  auto [it, fresh] = terms_.emplace(a, coefficient);
  if (!fresh) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& other) {
  if (other.d_ != d_) throw std::invalid_argument("Brauer elements with different d");
  for (const auto& [a, c] : other.terms_) add(c, a);
  return *this;
}

BrauerElement operator*(const Rational& c, BrauerElement a) {
  if (c == 0) return BrauerElement(a.d_);
  for (auto& [diagram, coefficient] : a.terms_) coefficient *= c;
  return a;
}

std::string BrauerElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [a, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += ecm::to_string(c) + "*" + a.to_string();
  }
  return out;
}

namespace {

// Concatenates x and y along their shared middle boundary. Returns the number
// of closed cycles and the resulting diagram.
std::pair<unsigned, MatchingDiagram> multiply(const MatchingDiagram& x, const MatchingDiagram& y) {
  const unsigned p = x.left_size(), q = x.right_size(), r = y.right_size();
  // Global numbering: x's nodes keep their ids, y's node j becomes p + j.
  auto via_x = [&](unsigned g) { return x.partner[g]; };
  auto via_y = [&](unsigned g) { return p + y.partner[g - p]; };
  auto middle = [&](unsigned g) { return g >= p && g < p + q; };
  std::vector<char> seen(p + q + r, 0);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  auto result_id = [&](unsigned g) { return g < p ? g : g - q; };

  for (unsigned start = 0; start < p + q + r; ++start) {
    if (middle(start) || seen[start]) continue;
    seen[start] = 1;
    bool use_x = start < p;
    unsigned cur = use_x ? via_x(start) : via_y(start);
    while (middle(cur)) {
      seen[cur] = 1;
      use_x = !use_x;
      cur = use_x ? via_x(cur) : via_y(cur);
    }
    seen[cur] = 1;
    pairs.emplace_back(result_id(start), result_id(cur));
  }
  unsigned cycles = 0;
  for (unsigned start = p; start < p + q; ++start) {
    if (seen[start]) continue;
    ++cycles;
    unsigned cur = start;
    bool use_x = true;
    do {
      seen[cur] = 1;
      cur = use_x ? via_x(cur) : via_y(cur);
      seen[cur] = 1;
      use_x = !use_x;
      cur = use_x ? via_x(cur) : via_y(cur);
      use_x = !use_x;
    } while (cur != start);
  }
  return {cycles, MatchingDiagram::from_pairs(x.left, y.right, pairs)};
}

}  // namespace

BrauerElement brauer_mul(const BrauerElement& a, const BrauerElement& b) {
  if (a.d() != b.d()) throw std::invalid_argument("Brauer elements with different d");
  BrauerElement out(a.d());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      if (x.right != y.left) continue;
      auto [cycles, z] = multiply(x, y);
      out.add(Rational(cx * cy * pow(a.d(), cycles)), z);
    }
  return out;
}

BrauerElement brauer_transpose(const BrauerElement& a) {
  BrauerElement out(a.d());
  for (const auto& [x, c] : a.terms()) {
    const unsigned l = x.left_size(), r = x.right_size();
    // Old right node l + j becomes new left node j; old left node i becomes r + i.
    auto map = [&](unsigned g) { return g < l ? r + g : g - l; };
    std::vector<unsigned> partner(l + r);
    for (unsigned g = 0; g < l + r; ++g) partner[map(g)] = map(x.partner[g]);
    out.add(c, MatchingDiagram(x.right, x.left, std::move(partner)));
  }
  return out;
}

namespace {

std::size_t ipow(unsigned base, unsigned e) {
  std::size_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

void prune(OmegaMatrix& m) {
  for (auto it = m.begin(); it != m.end();) {
    auto& entries = it->second.entries;
    std::erase_if(entries, [](const auto& kv) { return kv.second == 0; });
    it = entries.empty() ? m.erase(it) : std::next(it);
  }
}

}  // namespace

OmegaMatrix brauer_omega(const BrauerElement& a, unsigned colors) {
  if (colors == 0) throw std::invalid_argument("omega needs at least one color");
  OmegaMatrix out;
  for (const auto& [x, c] : a.terms()) {
    const unsigned l = x.left_size(), r = x.right_size();
    if (l > 8 || r > 8) throw std::length_error("omega is limited to 8 nodes per boundary");
    OmegaBlock& block = out[{x.left, x.right}];
    block.rows = ipow(colors, l);
    block.cols = ipow(colors, r);
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned g = 0; g < l + r; ++g)
      if (g < x.partner[g]) edges.emplace_back(g, x.partner[g]);
    std::vector<unsigned> edge_color(edges.size(), 0);
    std::vector<unsigned> node_color(l + r);
    while (true) {
      for (std::size_t e = 0; e < edges.size(); ++e) node_color[edges[e].first] = node_color[edges[e].second] = edge_color[e];
      std::size_t row = 0, col = 0;
      for (unsigned g = 0; g < l; ++g) row = row * colors + node_color[g];
      for (unsigned g = l; g < l + r; ++g) col = col * colors + node_color[g];
      block.entries[{row, col}] += c;
      std::size_t i = 0;
      while (i < edge_color.size() && ++edge_color[i] == colors) edge_color[i++] = 0;
      if (i == edge_color.size()) break;
    }
  }
  prune(out);
  return out;
}

OmegaMatrix omega_product(const OmegaMatrix& x, const OmegaMatrix& y) {
  OmegaMatrix out;
  for (const auto& [kx, bx] : x)
    for (const auto& [ky, by] : y) {
      if (kx.second != ky.first) continue;
      std::map<std::size_t, std::vector<std::pair<std::size_t, const Rational*>>> rows_of_y;
      for (const auto& [pos, v] : by.entries) rows_of_y[pos.first].emplace_back(pos.second, &v);
      OmegaBlock& block = out[{kx.first, ky.second}];
      block.rows = bx.rows;
      block.cols = by.cols;
      for (const auto& [pos, v] : bx.entries) {
        auto it = rows_of_y.find(pos.second);
        if (it == rows_of_y.end()) continue;
        for (const auto& [col, w] : it->second) block.entries[{pos.first, col}] += v * *w;
      }
    }
  prune(out);
  return out;
}

OmegaMatrix omega_transpose(const OmegaMatrix& x) {
  OmegaMatrix out;
  for (const auto& [key, block] : x) {
    OmegaBlock& t = out[{key.second, key.first}];
    t.rows = block.cols;
    t.cols = block.rows;
    for (const auto& [pos, v] : block.entries) t.entries[{pos.second, pos.first}] = v;
  }
  return out;
}

namespace {

enum class Contract { both, left, right };

OpenGraph tau_graph(const MatchingDiagram& x, Contract mode) {
  const unsigned l = x.left_size(), r = x.right_size();
  const auto lb = block_of(x.left), rb = block_of(x.right);
  const unsigned nl = static_cast<unsigned>(x.left.size());
  OpenGraph g;
  // vertex id or open label for node n; open labels are marked by `open`.
  struct Slot {
    bool open;
    unsigned id;
  };
  auto slot = [&](unsigned n) -> Slot {
    if (n < l) {
      if (mode == Contract::right) return {true, n + 1};
      return {false, lb[n]};
    }
    if (mode == Contract::left) return {true, n - l + 1};
    return {false, (mode == Contract::both ? nl : 0) + rb[n - l]};
  };
  unsigned vertices = 0;
  if (mode != Contract::right) vertices += nl;
  if (mode != Contract::left) vertices += static_cast<unsigned>(x.right.size());
  for (unsigned v = 0; v < vertices; ++v) g.add_vertex();
  for (unsigned n = 0; n < l + r; ++n) {
    if (n > x.partner[n]) continue;
    const Slot a = slot(n), b = slot(x.partner[n]);
    if (!a.open && !b.open)
      g.add_edge(a.id, b.id);
    else if (a.open && b.open)
      g.add_bare_edge(a.id, b.id);
    else if (a.open)
      g.attach_open(a.id, b.id);
    else
      g.attach_open(b.id, a.id);
  }
  return g;
}

}  // namespace

QuantumGraph brauer_tau(const BrauerElement& a) {
  QuantumGraph out(0);
  for (const auto& [x, c] : a.terms()) out.add(c, tau_graph(x, Contract::both));
  return out;
}

QuantumGraph brauer_tau1(const BrauerElement& a) {
  if (a.is_zero()) return QuantumGraph(0);
  const Multiset& s = a.terms().begin()->first.right;
  QuantumGraph out(mu(s));
  for (const auto& [x, c] : a.terms()) {
    if (x.right != s) throw std::invalid_argument("tau1 needs every term to have the same right boundary");
    out.add(c, tau_graph(x, Contract::left));
  }
  return out;
}

QuantumGraph brauer_tau2(const BrauerElement& a) {
  if (a.is_zero()) return QuantumGraph(0);
  const Multiset& s = a.terms().begin()->first.left;
  QuantumGraph out(mu(s));
  for (const auto& [x, c] : a.terms()) {
    if (x.left != s) throw std::invalid_argument("tau2 needs every term to have the same left boundary");
    out.add(c, tau_graph(x, Contract::right));
  }
  return out;
}

PositivityReport brauer_positivity_check(const BrauerElement& b, const EdgeModel& f) {
  if (b.d() != Rational(f.colors()))
    throw std::invalid_argument("positivity check needs a model with d = " + to_string(b.d()) + " colors");
  if (f.kind() == ScalarKind::complex) throw std::invalid_argument("positivity check needs a real-valued model");
  PositivityReport report;
  const QuantumGraph q = brauer_tau(brauer_mul(b, brauer_transpose(b)));
  double scale = 0;
  for (const auto& term : q.terms()) {
    const double v = to_double(term.coefficient) * evaluate(f, term.graph).to_double();
    report.value += v;
    scale += std::abs(v);
  }
  report.scale = std::max(scale, 1.0);

  std::map<Multiset, BrauerElement> by_right;
  for (const auto& [x, c] : b.terms()) by_right.try_emplace(x.right, b.d()).first->second.add(c, x);
  for (const auto& [s, part] : by_right) {
    const QuantumGraph half = brauer_tau1(part);
    report.via_glue += eval_quantum(f, glue_quantum(half, half)).to_double();
  }
  report.pass = report.value >= -1e-9 * report.scale;
  return report;
}

namespace {

Multiset random_multiset(std::mt19937_64& rng, unsigned total) {
  Multiset s;
  while (total > 0) {
    const unsigned part = 1 + static_cast<unsigned>(rng() % total);
    s.push_back(part);
    total -= part;
  }
  std::sort(s.begin(), s.end());
  return s;
}

MatchingDiagram random_matching(std::mt19937_64& rng, Multiset left, Multiset right) {
  const unsigned n = mu(left) + mu(right);
  std::vector<unsigned> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0u);
  // Fisher-Yates with raw draws keeps the stream identical across platforms.
  for (unsigned i = n; i > 1; --i) std::swap(nodes[i - 1], nodes[rng() % i]);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i + 1 < n; i += 2) pairs.emplace_back(nodes[i], nodes[i + 1]);
  return MatchingDiagram::from_pairs(std::move(left), std::move(right), pairs);
}

unsigned random_size_with_parity(std::mt19937_64& rng, unsigned max_mu, unsigned parity) {
  std::vector<unsigned> options;
  for (unsigned m = 0; m <= max_mu; ++m)
    if (m % 2 == parity) options.push_back(m);
  return options[rng() % options.size()];
}

}  // namespace

MatchingDiagram random_diagram(std::mt19937_64& rng, unsigned max_mu) {
  const unsigned l = static_cast<unsigned>(rng() % (max_mu + 1));
  return random_diagram_from(rng, random_multiset(rng, l), max_mu);
}

MatchingDiagram random_diagram_from(std::mt19937_64& rng, const Multiset& left, unsigned max_mu) {
  const unsigned l = mu(left);
  if (max_mu == 0 && l % 2 == 1) throw std::invalid_argument("odd boundary needs max_mu >= 1");
  const unsigned r = random_size_with_parity(rng, max_mu, l % 2);
  return random_matching(rng, left, random_multiset(rng, r));
}

namespace {

Rational random_coefficient(std::mt19937_64& rng) {
  const long v = static_cast<long>(rng() % 6);
  return Rational(v < 3 ? v - 3 : v - 2);  // -3..-1, 1..3
}

// Up to three terms; with probability 3/4 every term starts at `left` when given.
BrauerElement random_element(std::mt19937_64& rng, const Rational& d, unsigned max_mu, const Multiset* left) {
  BrauerElement out(d);
  const unsigned terms = 1 + static_cast<unsigned>(rng() % 3);
  for (unsigned t = 0; t < terms; ++t) {
    const MatchingDiagram x = left != nullptr && rng() % 4 != 0 ? random_diagram_from(rng, *left, max_mu)
                                                                : random_diagram(rng, max_mu);
    out.add(random_coefficient(rng), x);
  }
  return out;
}

}  // namespace

BrauerSelftestReport brauer_selftest(std::uint64_t seed, const BrauerSelftestOptions& options) {
  BrauerSelftestReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);

  for (unsigned i = 0; i < options.pairs; ++i) {
    const unsigned d = 2 + i % 2;
    const MatchingDiagram x = random_diagram(rng, options.max_mu);
    const MatchingDiagram y = rng() % 4 != 0 ? random_diagram_from(rng, x.right, options.max_mu)
                                             : random_diagram(rng, options.max_mu);
    const BrauerElement a(Rational(d), x), b(Rational(d), y);
    const BrauerElement ab = brauer_mul(a, b);
    if (!ab.is_zero()) ++report.nonzero_products;
    ++report.pairs;
    if (brauer_omega(ab, d) != omega_product(brauer_omega(a, d), brauer_omega(b, d))) ++report.homomorphism_failures;
    if (brauer_omega(brauer_transpose(a), d) != omega_transpose(brauer_omega(a, d)) ||
        brauer_omega(brauer_transpose(b), d) != omega_transpose(brauer_omega(b, d)))
      ++report.transpose_failures;
  }

  const Rational ds[] = {Rational(2), Rational(3), Rational(5, 2)};
  for (unsigned i = 0; i < options.triples; ++i) {
    const Rational& d = ds[i % 3];
    const BrauerElement a = random_element(rng, d, options.max_mu, nullptr);
    const Multiset& ar = a.terms().begin()->first.right;
    const BrauerElement b = random_element(rng, d, options.max_mu, &ar);
    const Multiset& br = b.terms().begin()->first.right;
    const BrauerElement c = random_element(rng, d, options.max_mu, &br);
    ++report.triples;
    if (brauer_mul(brauer_mul(a, b), c) != brauer_mul(a, brauer_mul(b, c))) ++report.associativity_failures;
  }

  const EdgeModel models[] = {make_zoo_model("perfect_matchings"), make_zoo_model("matchings"),
                              make_zoo_model("nowhere_zero_4_flows")};
  bool first = true;
  for (unsigned i = 0; i < options.positivity; ++i) {
    for (const EdgeModel& f : models) {
      const BrauerElement b = random_element(rng, Rational(f.colors()), options.max_mu, nullptr);
      const PositivityReport p = brauer_positivity_check(b, f);
      ++report.positivity_checks;
      if (!p.pass) ++report.positivity_failures;
      if (std::abs(p.value - p.via_glue) > 1e-9 * p.scale) ++report.route_mismatches;
      const double ratio = p.value / p.scale;
      report.min_positivity_ratio = first ? ratio : std::min(report.min_positivity_ratio, ratio);
      first = false;
    }
  }
  return report;
}

}  // namespace ecm
