#include "ecm/graph_io.hpp"

#include "text_util.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ecm {

namespace detail {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

OpenGraph parse_graph(std::string_view text) {
  OpenGraph g;
  bool have_vertices = false;
  std::size_t last_line = 0;
  // bare edge id -> (label, line) occurrences
  std::map<unsigned, std::vector<std::pair<unsigned, std::size_t>>> bare;

  detail::for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    last_line = line_no;
    auto words = detail::split_words(detail::strip_comment(raw));
    if (words.empty()) return;
    auto number = [&](std::string_view w) {
      auto v = detail::parse_unsigned(w);
      if (!v) throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(w) + "'");
      return *v;
    };
    auto arity = [&](std::size_t n) {
      if (words.size() != n + 1)
        throw ParseError(line_no, "'" + std::string(words[0]) + "' takes " + std::to_string(n) + " argument(s)");
    };
    const std::string_view cmd = words[0];
    try {
      if (cmd == "graph") {
        if (words.size() > 2) throw ParseError(line_no, "'graph' takes at most one name");
      } else if (cmd == "vertices") {
        arity(1);
        if (have_vertices) throw ParseError(line_no, "duplicate 'vertices' line");
        if (!g.edges().empty() || g.n_circles() != 0)
          throw ParseError(line_no, "'vertices' must precede edges and open ends");
        g = OpenGraph(number(words[1]));
        have_vertices = true;
      } else if (cmd == "edge") {
        arity(2);
        g.add_edge(number(words[1]), number(words[2]));
      } else if (cmd == "circle") {
        arity(0);
        g.add_circles(1);
      } else if (cmd == "open") {
        arity(2);
        unsigned label = number(words[1]);
        if (label == 0) throw ParseError(line_no, "open-end labels start at 1");
        std::string_view target = words[2];
        if (target.starts_with("*e")) {
          auto& uses = bare[number(target.substr(2))];
          for (auto& [other, l] : uses)
            if (other == label) throw ParseError(line_no, "duplicate open-end label " + std::to_string(label));
          if (uses.size() == 2)
            throw ParseError(line_no, "bare edge '" + std::string(target) + "' used more than twice");
          uses.emplace_back(label, line_no);
        } else {
          g.attach_open(label, number(target));
        }
      } else {
        throw ParseError(line_no, "unknown directive '" + std::string(cmd) + "'");
      }
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  });

  for (const auto& [id, uses] : bare) {
    if (uses.size() != 2)
      throw ParseError(uses.front().second, "bare edge *e" + std::to_string(id) + " must be used by exactly two open ends");
    try {
      g.add_bare_edge(uses[0].first, uses[1].first);
    } catch (const GraphError& e) {
      throw ParseError(uses[1].second, e.what());
    }
  }
  try {
    g.validate();
  } catch (const GraphError& e) {
    throw ParseError(last_line, e.what());
  }
  return g;
}

std::string format_graph(const OpenGraph& g, std::string_view name) {
  std::ostringstream out;
  if (!name.empty()) out << "graph " << name << '\n';
  out << "vertices " << g.n_vertices() << '\n';
  for (const Edge& e : g.edges())
    if (e.is_closed()) out << "edge " << e.a.id << ' ' << e.b.id << '\n';
  for (unsigned i = 0; i < g.n_circles(); ++i) out << "circle\n";
  std::map<std::size_t, unsigned> bare_ids;
  for (unsigned label = 1; label <= g.n_open(); ++label) {
    std::size_t idx = g.open_edge(label);
    if (auto v = g.open_attachment(label)) {
      out << "open " << label << ' ' << *v << '\n';
    } else {
      auto [it, inserted] = bare_ids.emplace(idx, static_cast<unsigned>(bare_ids.size()));
      out << "open " << label << " *e" << it->second << '\n';
    }
  }
  return out.str();
}

OpenGraph load_graph(const std::filesystem::path& path) {
  return parse_graph(detail::read_file(path.string()));
}

}  // namespace ecm
