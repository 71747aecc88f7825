#include "ecm/zoo.hpp"

namespace ecm {

const std::vector<ZooEntry>& zoo_catalog() {
  static const std::vector<ZooEntry> catalog = {
      {"perfect_matchings", false, "{1} x N", "perfect matchings"},
      {"fully_packed_loops", false, "{2} x N", "spanning 2-regular subgraphs"},
      {"matchings", false, "{0,1} x N", "matchings"},
      {"loop_configs", false, "{0,2} x N", "2-regular subgraphs (loop configurations)"},
      {"d_regular_subgraphs", true, "{0,r} x N", "r-regular subgraphs"},
      {"proper_edge_colorings", true, "{0,1}^q", "proper edge colorings with q colors"},
      {"nowhere_zero_4_flows", false, "{(b,c,e) : b+e, c+e even}", "nowhere-zero Z2xZ2 flows"},
      {"permanent", false, "{(2,0,0),(0,2,0),(0,0,1)} x N", "permanent of the adjacency matrix"},
      {"pm_rotated_scaled", false, "t(a,b) = a-b", "2^|E| times the perfect matchings"},
  };
  return catalog;
}

namespace {

Scalar indicator(bool in_set) { return Scalar(Rational(in_set ? 1 : 0)); }

EdgeModel indicator_model(std::string name, unsigned colors, std::string rule,
                          std::function<bool(const CountVector&)> member) {
  EdgeModel m(std::move(name), colors, ScalarKind::rational);
  m.set_rule(std::move(rule), [member = std::move(member)](const CountVector& v) { return indicator(member(v)); });
  return m;
}

}  // namespace

EdgeModel make_zoo_model(std::string_view kind, std::optional<unsigned> param) {
  const ZooEntry* entry = nullptr;
  for (const auto& e : zoo_catalog())
    if (e.name == kind) entry = &e;
  if (entry == nullptr) throw std::invalid_argument("unknown zoo model '" + std::string(kind) + "'");
  if (entry->takes_param) {
    if (!param) throw std::invalid_argument("zoo model '" + std::string(kind) + "' needs a parameter");
    if (*param < 1) throw std::invalid_argument("zoo model parameter must be at least 1");
  } else if (param) {
    throw std::invalid_argument("zoo model '" + std::string(kind) + "' takes no parameter");
  }

  EdgeModel model("", 0, ScalarKind::rational);
  if (kind == "perfect_matchings") {
    model = indicator_model("perfect_matchings", 2, "first coordinate = 1",
                            [](const CountVector& v) { return v[0] == 1; });
  } else if (kind == "fully_packed_loops") {
    model = indicator_model("fully_packed_loops", 2, "first coordinate = 2",
                            [](const CountVector& v) { return v[0] == 2; });
  } else if (kind == "matchings") {
    model = indicator_model("matchings", 2, "first coordinate in {0,1}",
                            [](const CountVector& v) { return v[0] <= 1; });
  } else if (kind == "loop_configs") {
    model = indicator_model("loop_configs", 2, "first coordinate in {0,2}",
                            [](const CountVector& v) { return v[0] == 0 || v[0] == 2; });
  } else if (kind == "d_regular_subgraphs") {
    const unsigned r = *param;
    model = indicator_model("d_regular_subgraphs", 2, "first coordinate in {0," + std::to_string(r) + "}",
                            [r](const CountVector& v) { return v[0] == 0 || v[0] == r; });
  } else if (kind == "proper_edge_colorings") {
    model = indicator_model("proper_edge_colorings", *param, "every coordinate in {0,1}", [](const CountVector& v) {
      for (unsigned x : v.entries())
        if (x > 1) return false;
      return true;
    });
  } else if (kind == "nowhere_zero_4_flows") {
    model = indicator_model("nowhere_zero_4_flows", 3, "v1+v3 and v2+v3 even", [](const CountVector& v) {
      return (v[0] + v[2]) % 2 == 0 && (v[1] + v[2]) % 2 == 0;
    });
  } else if (kind == "permanent") {
    model = indicator_model("permanent", 4, "(v1,v2,v3) in {(2,0,0),(0,2,0),(0,0,1)}", [](const CountVector& v) {
      return (v[0] == 2 && v[1] == 0 && v[2] == 0) || (v[0] == 0 && v[1] == 2 && v[2] == 0) ||
             (v[0] == 0 && v[1] == 0 && v[2] == 1);
    });
  } else {
    model = EdgeModel("pm_rotated_scaled", 2, ScalarKind::rational);
    model.set_rule("t(a,b) = a-b", [](const CountVector& v) {
      return Scalar(Rational(Rational(v[0]) - Rational(v[1])));
    });
  }
  std::string spec = "builtin " + std::string(kind);
  if (param) {
    spec += " " + std::to_string(*param);
    model.set_name(model.name() + "(" + std::to_string(*param) + ")");
  }
  model.set_builtin_spec(spec);
  return model;
}

}  // namespace ecm
