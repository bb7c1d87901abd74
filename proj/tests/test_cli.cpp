#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "cyclab/analysis.hpp"
#include "cyclab/families.hpp"
#include "cyclab/graph_io.hpp"

using namespace cyclab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string inflated() { return to_json(families::petersen_inflated()).dump(); }

}  // namespace

TEST_CASE("gen writes parseable graphs") {
  auto r = run({"gen", "petersen-inflated", "--clique", "3"});
  CHECK(r.code == 0);
  Graph g = parse_graph(r.out);
  CHECK(g.order() == 30);
  CHECK(g.find_label("7").has_value());
  r = run({"gen", "cycle", "--size", "5"});
  CHECK(parse_graph(r.out).size() == 5);
  r = run({"gen", "random", "--seed", "3", "--class", "line-cubic-16"});
  CHECK(parse_graph(r.out).order() == 24);
  CHECK(run({"gen", "random", "--seed", "3", "--class", "line-cubic-16"}).out == r.out);
  CHECK(parse_graph(run({"gen", "fig3", "--stack", "2"}).out).order() == 13);
  CHECK(run({"gen", "cycle"}).code == 2);
  CHECK(run({"gen", "random", "--class", "bogus"}).code == 2);
}

TEST_CASE("cycle queries resolve labels and report verdicts") {
  auto r = run({"--input", "-", "--format", "json", "cycle", "find", "--include", "1,2,3,4,5,6", "--avoid", "7"},
               inflated());
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "FAIL");
  CHECK_FALSE(doc.contains("cycle"));

  r = run({"--input", "-", "--expect", "pass", "--format", "json", "cycle", "find", "--include", "1,2,3,4,5", "--avoid",
           "7"},
          inflated());
  CHECK(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "PASS");
  CHECK(doc["cycle"].size() >= 5);

  CHECK(run({"--input", "-", "--expect", "pass", "cycle", "find", "--include", "1,2,3,4,5,6", "--avoid", "7"},
            inflated())
            .code == 1);
  CHECK(run({"--input", "-", "cycle", "find", "--include", "#0,#1"}, inflated()).code == 0);
  CHECK(run({"--input", "-", "cycle", "find", "--include", "nine"}, inflated()).code == 2);
  CHECK(run({"--input", "-", "cycle", "find", "--include", "1", "--avoid", "1"}, inflated()).code == 2);
}

TEST_CASE("property, check and wheel commands") {
  auto r = run({"--input", "-", "--format", "json", "property", "--m", "6", "--n", "1"}, inflated());
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "FAIL");
  CHECK(doc["witness"]["include"] == nlohmann::json({"1", "2", "3", "4", "5", "6"}));
  CHECK(doc["witness"]["avoid"] == nlohmann::json({"7"}));

  CHECK(run({"--input", "-", "--budget", "5", "property", "--m", "3", "--n", "0"}, inflated()).code == 3);
  CHECK(run({"--input", "-", "property", "--m", "2", "--n", "1", "--mode", "sample:1:20", "--expect", "pass"},
            inflated())
            .code == 0);
  CHECK(run({"--input", "-", "property", "--m", "2", "--n", "1", "--mode", "sample:x"}, inflated()).code == 2);

  r = run({"--input", "-", "--format", "json", "check", "connectivity"}, inflated());
  CHECK(nlohmann::json::parse(r.out)["kappa"] == 3);
  CHECK(run({"--input", "-", "check", "claw-free", "--expect", "pass"}, inflated()).code == 0);
  r = run({"--input", "-", "--format", "json", "check", "cuts", "--size", "3"}, inflated());
  CHECK(nlohmann::json::parse(r.out)["count"] == enumerate_cuts(families::petersen_inflated(), 3).size());

  auto wheel = to_edge_list(families::wheel(4));
  CHECK(run({"--input", "-", "wheel", "--hub", "0", "--k", "4", "--expect", "pass"}, wheel).code == 0);
  CHECK(run({"--input", "-", "wheel", "--hub", "1", "--k", "4", "--expect", "pass"}, wheel).code == 1);
}

TEST_CASE("link commands") {
  auto r = run({"--format", "json", "link", "verify-fig1"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["no_refining_link"] == true);
  CHECK(doc["verdict"] == "PASS");

  std::string fig1 = to_json(families::fig1().graph).dump();
  r = run({"--input", "-", "--format", "json", "link", "extend-link", "--s1", "u1,u2,u3", "--s2", "w1,w2,w3", "--t1",
           "u1,u2", "--t2", "w1,w2", "--k", "3"},
          fig1);
  CHECK(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["paths"].size() == 3);
  CHECK(doc["added_a"] == nlohmann::json({"u3"}));
  CHECK(run({"--input", "-", "link", "extend-fan", "--x", "x1", "--s", "w1,w2", "--t", "w1", "--k", "3"}, fig1).code ==
        2);
  CHECK(run({"--input", "-", "link", "teleport", "--k", "2"}, fig1).code == 2);
}

TEST_CASE("verify and usage errors") {
  CHECK(run({"verify", "fig1"}).code == 0);
  auto r = run({"--format", "json", "verify", "negatives"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["summary"]["unexpected"] == 0);
  CHECK(run({"verify", "nothing"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--format", "yaml", "verify", "fig1"}).code == 2);
  CHECK(run({"check", "connectivity"}).code == 2);
  CHECK(run({"--input", "-", "check", "connectivity"}, "3 1\n0 0\n").code == 2);
  CHECK(run({"--help"}).code == 0);
}
