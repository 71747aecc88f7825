#include "ecm/model_io.hpp"

#include "ecm/zoo.hpp"
#include "text_util.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

namespace ecm {

namespace {

double parse_double(std::string_view s) {
  if (s.find('/') != std::string_view::npos) return to_double(parse_rational(s));
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) throw std::invalid_argument("bad number '" + buf + "'");
  return v;
}

Scalar parse_value(std::string_view s, ScalarKind kind) {
  switch (kind) {
    case ScalarKind::rational: return Scalar(parse_rational(s));
    case ScalarKind::real: return Scalar(parse_double(s));
    case ScalarKind::complex: break;
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    auto inner = s.substr(1, s.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("complex value needs (re,im)");
    return Scalar(Complex(parse_double(inner.substr(0, comma)), parse_double(inner.substr(comma + 1))));
  }
  return Scalar(Complex(parse_double(s), 0.0));
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_value(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::rational: return to_string(s.rational());
    case ScalarKind::real: return format_double(s.real());
    case ScalarKind::complex: break;
  }
  return "(" + format_double(s.complex().real()) + "," + format_double(s.complex().imag()) + ")";
}

unsigned need_unsigned(std::size_t line, std::string_view word, const char* what) {
  auto v = detail::parse_unsigned(word);
  if (!v) throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(word) + "'");
  return *v;
}

}  // namespace

EdgeModel parse_model(std::string_view text) {
  std::optional<std::string> name;
  std::optional<unsigned> colors;
  std::optional<ScalarKind> kind;
  std::optional<unsigned> max_height;
  std::optional<std::pair<std::size_t, std::string>> default_value;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> builtin;
  struct Row {
    std::size_t line;
    std::vector<unsigned> counts;
    std::string value;
  };
  std::vector<Row> rows;
  std::size_t colors_line = 0;

  detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
    auto words = detail::split_words(detail::strip_comment(raw));
    if (words.empty()) return;
    const std::string_view key = words[0];
    auto arity = [&](std::size_t n) {
      if (words.size() != n) throw ParseError(line, "'" + std::string(key) + "' takes " + std::to_string(n - 1) + " argument(s)");
    };
    if (key == "model") {
      if (words.size() < 2) throw ParseError(line, "'model' needs a name");
      std::string n(words[1]);
      for (std::size_t i = 2; i < words.size(); ++i) n += " " + std::string(words[i]);
      name = n;
    } else if (key == "colors") {
      arity(2);
      if (colors) throw ParseError(line, "duplicate 'colors'");
      colors = need_unsigned(line, words[1], "a color count");
      colors_line = line;
    } else if (key == "scalar") {
      arity(2);
      try {
        kind = parse_scalar_kind(words[1]);
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "default") {
      arity(2);
      default_value = {line, std::string(words[1])};
    } else if (key == "max-height") {
      arity(2);
      max_height = need_unsigned(line, words[1], "a height");
    } else if (key == "builtin") {
      if (words.size() < 2 || words.size() > 3) throw ParseError(line, "'builtin' takes a zoo name and an optional parameter");
      std::vector<std::string> args;
      for (std::size_t i = 1; i < words.size(); ++i) args.emplace_back(words[i]);
      builtin = {line, args};
    } else if (key == "w") {
      auto eq = std::find(words.begin(), words.end(), std::string_view("="));
      if (eq == words.end() || eq + 2 != words.end()) throw ParseError(line, "expected 'w <c1> ... <cd> = <value>'");
      Row r{line, {}, std::string(*(eq + 1))};
      for (auto it = words.begin() + 1; it != eq; ++it) r.counts.push_back(need_unsigned(line, *it, "a color count"));
      rows.push_back(std::move(r));
    } else {
      throw ParseError(line, "unknown directive '" + std::string(key) + "'");
    }
  });

  if (builtin) {
    if (colors || kind || default_value || !rows.empty() || max_height)
      throw ParseError(builtin->first, "'builtin' cannot be combined with colors/scalar/default/max-height/w lines");
    const auto& args = builtin->second;
    std::optional<unsigned> param;
    if (args.size() == 2) param = need_unsigned(builtin->first, args[1], "a model parameter");
    try {
      EdgeModel m = make_zoo_model(args[0], param);
      if (name) m.set_name(*name);
      return m;
    } catch (const std::invalid_argument& e) {
      throw ParseError(builtin->first, e.what());
    }
  }

  if (!colors) throw ParseError(0, "model file has no 'colors' line");
  const ScalarKind k = kind.value_or(ScalarKind::rational);
  EdgeModel m(name.value_or("model"), *colors, k);
  (void)colors_line;
  if (max_height) m.set_max_height(*max_height);
  try {
    if (default_value) m.set_default(parse_value(default_value->second, k));
  } catch (const std::invalid_argument& e) {
    throw ParseError(default_value->first, e.what());
  }
  std::map<CountVector, std::size_t> seen;
  for (const Row& r : rows) {
    if (r.counts.size() != *colors)
      throw ParseError(r.line, "weight row has " + std::to_string(r.counts.size()) + " counts, model has " +
                                   std::to_string(*colors) + " colors");
    CountVector v(r.counts);
    if (auto [it, fresh] = seen.emplace(v, r.line); !fresh)
      throw ParseError(r.line, "count vector " + v.to_string() + " already given on line " + std::to_string(it->second));
    if (max_height && v.height() > *max_height)
      throw ParseError(r.line, "count vector " + v.to_string() + " exceeds max-height");
    try {
      m.set_weight(v, parse_value(r.value, k));
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.line, e.what());
    }
  }
  return m;
}

EdgeModel load_model(const std::filesystem::path& path) { return parse_model(detail::read_file(path.string())); }

std::string format_model(const EdgeModel& model) {
  std::ostringstream os;
  os << "model " << model.name() << "\n";
  if (!model.builtin_spec().empty()) {
    os << model.builtin_spec() << "\n";
    return os.str();
  }
  if (model.has_rule())
    throw std::invalid_argument("model '" + model.name() + "' is defined by a rule; tabulate it before writing");
  os << "colors " << model.colors() << "\n";
  os << "scalar " << to_string(model.kind()) << "\n";
  if (!model.default_weight().is_zero()) os << "default " << format_value(model.default_weight()) << "\n";
  if (auto h = model.max_height()) os << "max-height " << *h << "\n";
  for (const auto& [v, w] : model.table()) {
    os << "w";
    for (unsigned c : v.entries()) os << " " << c;
    os << " = " << format_value(w) << "\n";
  }
  return os.str();
}

EdgeModel tabulate(const EdgeModel& model, unsigned max_height) {
  if (auto h = model.max_height(); h && *h < max_height) max_height = *h;
  EdgeModel out(model.name(), model.colors(), model.kind());
  out.set_max_height(max_height);
  for (unsigned h = 0; h <= max_height; ++h)
    for (const CountVector& v : count_vectors_of_height(model.colors(), h)) {
      Scalar w = model.weight(v);
      if (!w.is_zero()) out.set_weight(v, w);
    }
  return out;
}

VertexModel parse_vertex_model(std::string_view text) {
  std::string name = "H";
  std::optional<unsigned> nodes;
  std::vector<double> alpha, beta;
  std::vector<std::size_t> beta_line;

  detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
    auto words = detail::split_words(detail::strip_comment(raw));
    if (words.empty()) return;
    const std::string_view key = words[0];
    auto number = [&](std::string_view w) {
      try {
        return parse_double(w);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
    };
    auto node = [&](std::string_view w) {
      if (!nodes) throw ParseError(line, "'nodes' must come first");
      unsigned i = need_unsigned(line, w, "a node index");
      if (i >= *nodes) throw ParseError(line, "node " + std::to_string(i) + " out of range");
      return i;
    };
    if (key == "vertex-model") {
      if (words.size() != 2) throw ParseError(line, "'vertex-model' takes a name");
      name = std::string(words[1]);
    } else if (key == "nodes") {
      if (words.size() != 2) throw ParseError(line, "'nodes' takes a count");
      if (nodes) throw ParseError(line, "duplicate 'nodes'");
      nodes = need_unsigned(line, words[1], "a node count");
      alpha.assign(*nodes, 1.0);
      beta.assign(static_cast<std::size_t>(*nodes) * *nodes, 0.0);
      beta_line.assign(beta.size(), 0);
    } else if (key == "alpha") {
      if (words.size() != 3) throw ParseError(line, "expected 'alpha <i> <value>'");
      alpha[node(words[1])] = number(words[2]);
    } else if (key == "beta") {
      if (words.size() != 4) throw ParseError(line, "expected 'beta <i> <j> <value>'");
      const unsigned i = node(words[1]), j = node(words[2]);
      const double v = number(words[3]);
      const std::size_t ij = static_cast<std::size_t>(i) * *nodes + j, ji = static_cast<std::size_t>(j) * *nodes + i;
      if (beta_line[ij] != 0 && beta[ij] != v)
        throw ParseError(line, "conflicting weight for beta " + std::to_string(i) + " " + std::to_string(j) +
                                   " (see line " + std::to_string(beta_line[ij]) + ")");
      beta[ij] = beta[ji] = v;
      beta_line[ij] = beta_line[ji] = line;
    } else {
      throw ParseError(line, "unknown directive '" + std::string(key) + "'");
    }
  });
  if (!nodes) throw ParseError(0, "vertex model has no 'nodes' line");
  try {
    return VertexModel(alpha, beta, name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

VertexModel load_vertex_model(const std::filesystem::path& path) {
  return parse_vertex_model(detail::read_file(path.string()));
}

}  // namespace ecm
