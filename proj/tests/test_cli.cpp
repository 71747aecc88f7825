#include <doctest.h>

#include "ecm/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ecm::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return nlohmann::json::parse(r.out);
}

const std::string data = ECM_DATA_DIR;
const std::string k4 = data + "/graphs/k4.g";

}  // namespace

TEST_CASE("eval") {
  const Run r = run({"eval", "--graph", k4, "--model", data + "/models/pm.m", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value: 3\n") != std::string::npos);

  const auto j = run_json({"eval", "--graph", k4, "--model", "zoo:permanent", "--method", "tensor"});
  CHECK(j["value"] == "9");

  const auto colors = run_json({"eval", "--graph", k4, "--model", "zoo:proper_edge_colorings:3"});
  CHECK(colors["value"] == "6");
}

TEST_CASE("eval errors") {
  CHECK(run({"eval", "--graph", data + "/graphs/missing.g", "--model", "zoo:matchings"}).code == 2);
  CHECK(run({"eval", "--graph", k4, "--model", "zoo:no_such_model"}).code == 2);
  CHECK(run({"eval", "--graph", k4, "--model", "zoo:matchings", "--method", "magic"}).code == 2);
  // The state cap binds the enumerator only.
  CHECK(run({"eval", "--graph", k4, "--model", "zoo:matchings", "--method", "enum", "--max-states", "2"}).code == 2);
  CHECK(run({"eval", "--graph", k4, "--model", "zoo:matchings", "--max-states", "2"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("oracle") {
  CHECK(run_json({"oracle", "--graph", k4, "--count", "perfect_matchings"})["value"] == 3);
  CHECK(run_json({"oracle", "--graph", k4, "--count", "proper_edge_colorings(3)"})["value"] == 6);
  CHECK(run({"oracle", "--graph", k4, "--count", "cliques"}).code == 2);
}

TEST_CASE("invariance") {
  const auto j = run_json({"invariance", "--graph", k4, "--model", "zoo:perfect_matchings", "--trials", "5"});
  CHECK(j["pass"] == true);
  CHECK(j["trials"] == 5);
  CHECK(j["value"] == 3.0);
  CHECK(j["max_rel_dev"].get<double>() <= 1e-8);
}

TEST_CASE("convert") {
  const std::string path = "test_cli_ising.vm";
  {
    std::ofstream f(path);
    f << "vertex-model ising\nnodes 2\nbeta 0 0 2\nbeta 0 1 1\nbeta 1 1 2\n";
  }
  const Run r = run({"convert", "--vertex-model", path, "--max-height", "3"});
  std::remove(path.c_str());
  REQUIRE_MESSAGE(r.code == 0, r.err);
  CHECK(r.out.find("model ") != std::string::npos);
  CHECK(r.out.find("max-height 3") != std::string::npos);
  CHECK(run({"convert", "--vertex-model", "nowhere.vm"}).code == 2);
}

TEST_CASE("connmat") {
  const auto j = run_json({"connmat", "--model", "zoo:perfect_matchings", "--ends", "4"});
  CHECK(j["basis_size"] == 3);
  CHECK(j["rank"] == 3);
  CHECK(j["psd_pass"] == true);
  CHECK(j["matrix"][0][0] == 4.0);
  CHECK(j["matrix"][0][1] == 2.0);
}

TEST_CASE("circle-test") {
  const Run bad = run({"circle-test", "--d", "0.5", "--n", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("violation at n=2") != std::string::npos);

  const auto ok = run_json({"circle-test", "--d", "2", "--n", "5"});
  CHECK(ok["violation"].is_null());
  CHECK(ok["levels"].size() == 5);

  CHECK(run({"circle-test", "--d", "x", "--n", "3"}).code == 2);
}

TEST_CASE("brauer-selftest") {
  const auto j = run_json({"brauer-selftest", "--seed", "3", "--cases", "20"});
  CHECK(j["pass"] == true);
  CHECK(j["pairs"] == 20);
}

TEST_CASE("zoo list") {
  const auto j = run_json({"zoo", "list"});
  CHECK(j.size() == 9);
  const Run text = run({"zoo", "list"});
  CHECK(text.out.find("perfect_matchings") != std::string::npos);
}
