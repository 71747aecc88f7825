#include "ecm/cli.hpp"

#include "ecm/brauer.hpp"
#include "ecm/connection.hpp"
#include "ecm/eval.hpp"
#include "ecm/graph_io.hpp"
#include "ecm/model_io.hpp"
#include "ecm/oracle.hpp"
#include "ecm/ortho.hpp"
#include "ecm/vertex_model.hpp"
#include "ecm/zoo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace ecm {

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// `zoo:<name>` or `zoo:<name>:<param>` selects a built-in model; anything
/// else is a model file.
EdgeModel load_model_arg(const std::string& arg) {
  if (arg.rfind("zoo:", 0) == 0) {
    std::string rest = arg.substr(4);
    std::optional<unsigned> param;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      param = static_cast<unsigned>(std::stoul(rest.substr(colon + 1)));
      rest.resize(colon);
    }
    return make_zoo_model(rest, param);
  }
  return load_model(arg);
}

json scalar_json(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::rational: return to_string(s.rational());
    case ScalarKind::real: return s.real();
    case ScalarKind::complex: break;
  }
  return json{{"re", s.complex().real()}, {"im", s.complex().imag()}};
}

void emit(std::ostream& out, const json& report, const std::string& format) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

json matrix_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge coloring models: evaluation, oracles and algebraic checks", "emodel"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::string graph_path, model_arg, method = "auto";
  std::uint64_t max_states = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate a model on a closed graph");
  eval->add_option("--graph", graph_path, "Graph file")->required();
  eval->add_option("--model", model_arg, "Model file or zoo:<name>[:param]")->required();
  eval->add_option("--method", method, "Evaluator")->check(CLI::IsMember({"enum", "tensor", "both", "auto"}));
  eval->add_option("--max-states", max_states, "Enumeration cap (overrides EMODEL_MAX_STATES)");

  std::string count_kind;
  auto* oracle = app.add_subcommand("oracle", "Brute-force combinatorial count");
  oracle->add_option("--graph", graph_path, "Graph file")->required();
  oracle->add_option("--count", count_kind, "Count kind, e.g. perfect_matchings or d_regular_subgraphs(3)")
      ->required();

  unsigned trials = 20, n_max = 8;
  std::uint64_t seed = 42;
  auto* invariance = app.add_subcommand("invariance", "Compare t(G) with t^a(G) for random orthogonal a");
  invariance->add_option("--graph", graph_path, "Graph file")->required();
  invariance->add_option("--model", model_arg, "Model file or zoo:<name>[:param]")->required();
  invariance->add_option("--trials", trials, "Number of random rotations");
  invariance->add_option("--seed", seed, "Seed of the first rotation");
  invariance->add_option("--n-max", n_max, "Largest rotated height");

  std::string vertex_path;
  unsigned max_height = 6;
  auto* convert = app.add_subcommand("convert", "Rewrite a vertex model as an edge model file");
  convert->add_option("--vertex-model", vertex_path, "Vertex model file")->required();
  convert->add_option("--max-height", max_height, "Largest tabulated height");

  unsigned ends = 2;
  std::string basis = "matchings";
  auto* connmat = app.add_subcommand("connmat", "Connection submatrix over a basis of G_k");
  connmat->add_option("--model", model_arg, "Model file or zoo:<name>[:param]")->required();
  connmat->add_option("--ends", ends, "Number of open ends k");
  connmat->add_option("--basis", basis, "Basis")->check(CLI::IsMember({"matchings"}));

  std::string d_text;
  unsigned n_levels = 4;
  auto* circle = app.add_subcommand("circle-test", "Alternating-vector test of the circle value d");
  circle->add_option("--d", d_text, "Circle value (p/q or decimal)")->required();
  circle->add_option("--n", n_levels, "Largest n (at most 7)");

  unsigned cases = 200;
  auto* brauer = app.add_subcommand("brauer-selftest", "Randomized identities of the Brauer algebra");
  brauer->add_option("--seed", seed, "Seed");
  brauer->add_option("--cases", cases, "Random diagram pairs (triples and positivity scale with it)");

  auto* zoo = app.add_subcommand("zoo", "Built-in models");
  auto* zoo_list = zoo->add_subcommand("list", "List the built-in models");
  zoo->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    json report;
    int status = kOk;
    if (eval->parsed()) {
      const OpenGraph g = load_graph(graph_path);
      const EdgeModel model = load_model_arg(model_arg);
      EvalLimits limits = EvalLimits::from_environment();
      if (max_states != 0) limits.max_states = max_states;
      report["graph"] = graph_path;
      report["model"] = model.name();
      report["method"] = method;
      if (method == "both") {
        const Scalar a = eval_enum(model, g, limits);
        const Scalar b = eval_tensor(model, g, limits);
        report["enum"] = scalar_json(a);
        report["tensor"] = scalar_json(b);
        const bool agree = approx_equal(a, b);
        report["agree"] = agree;
        report["value"] = scalar_json(a);
        if (!agree) status = kCheckFailed;
      } else {
        const Method m = method == "enum" ? Method::enumerate : method == "tensor" ? Method::tensor : Method::automatic;
        report["value"] = scalar_json(evaluate(model, g, m, limits));
      }
    } else if (oracle->parsed()) {
      const OpenGraph g = load_graph(graph_path);
      const CountKind kind = CountKind::parse(count_kind);
      report["graph"] = graph_path;
      report["count"] = kind.name();
      report["value"] = oracle_count(g, kind);
    } else if (invariance->parsed()) {
      const OpenGraph g = load_graph(graph_path);
      const EdgeModel model = load_model_arg(model_arg);
      const InvarianceReport r = check_invariance(model, g, trials, seed, graph_path, n_max);
      report = {{"model", r.model},     {"graph", r.graph},
                {"trials", r.trials},   {"seed", r.seed},
                {"value", r.value},     {"max_abs_dev", r.max_abs_dev},
                {"max_rel_dev", r.max_rel_dev}, {"pass", r.pass}};
      if (!r.pass) status = kCheckFailed;
    } else if (convert->parsed()) {
      const VertexModel h = load_vertex_model(vertex_path);
      out << format_model(tabulate(vertex_to_edge(h), max_height));
      return kOk;
    } else if (connmat->parsed()) {
      const EdgeModel model = load_model_arg(model_arg);
      const ConnectionReport r = connection_submatrix(model, ends, matchings_basis(ends));
      report = {{"model", model.name()},
                {"basis", basis},
                {"k", r.k},
                {"basis_size", r.basis_size},
                {"matrix", matrix_json(r.matrix)},
                {"min_eigenvalue", r.min_eigenvalue},
                {"rank", r.rank},
                {"rank_bound", r.rank_bound},
                {"symmetric", r.symmetric},
                {"psd_pass", r.psd_pass},
                {"rank_pass", r.rank_pass}};
      if (!(r.symmetric && r.psd_pass && r.rank_pass)) status = kCheckFailed;
    } else if (circle->parsed()) {
      const CircleReport r = circle_integrality_check(parse_rational(d_text), n_levels);
      json levels = json::array();
      bool identities = true;
      for (const auto& l : r.levels) {
        levels.push_back({{"n", l.n},
                          {"lambda", to_string(l.lambda)},
                          {"eigen_identity", l.eigen_identity},
                          {"max_rel_residual", l.max_rel_residual}});
        identities = identities && l.eigen_identity;
      }
      report = {{"d", to_string(r.d)}, {"n_max", r.n_max}, {"levels", levels}};
      report["violation"] = r.violation ? json(*r.violation) : json(nullptr);
      report["status"] = r.violation ? "violation at n=" + std::to_string(*r.violation) : "consistent";
      if (r.violation || !identities) status = kCheckFailed;
    } else if (brauer->parsed()) {
      BrauerSelftestOptions options;
      options.pairs = cases;
      options.triples = cases / 2;
      options.positivity = cases / 4;
      const BrauerSelftestReport r = brauer_selftest(seed, options);
      report = {{"seed", r.seed},
                {"pairs", r.pairs},
                {"nonzero_products", r.nonzero_products},
                {"homomorphism_failures", r.homomorphism_failures},
                {"transpose_failures", r.transpose_failures},
                {"triples", r.triples},
                {"associativity_failures", r.associativity_failures},
                {"positivity_checks", r.positivity_checks},
                {"positivity_failures", r.positivity_failures},
                {"route_mismatches", r.route_mismatches},
                {"min_positivity_ratio", r.min_positivity_ratio},
                {"pass", r.pass()}};
      if (!r.pass()) status = kCheckFailed;
    } else if (zoo_list->parsed()) {
      if (format == "json") {
        json list = json::array();
        for (const auto& e : zoo_catalog())
          list.push_back({{"name", e.name}, {"takes_param", e.takes_param}, {"support", e.support}, {"counts", e.counts}});
        out << list.dump(2) << "\n";
      } else {
        for (const auto& e : zoo_catalog())
          out << e.name << (e.takes_param ? " <param>" : "") << "  S = " << e.support << "  counts " << e.counts << "\n";
      }
      return kOk;
    }
    emit(out, report, format);
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace ecm
