#include <doctest.h>

#include "cyclab/analysis.hpp"
#include "cyclab/harness.hpp"

using namespace cyclab;
using namespace cyclab::harness;

TEST_CASE("suite catalogue") {
  auto names = suite_names();
  CHECK(names.size() == 11);
  CHECK(std::find(names.begin(), names.end(), "c61-sharp") != names.end());
  CHECK_THROWS_AS(run_suite("nope"), UnknownSuite);
}

TEST_CASE("report bodies are deterministic and thread independent") {
  SuiteConfig one;
  one.trials = 15;
  SuiteConfig four = one;
  four.threads = 4;
  for (const char* suite : {"perfect", "strong-perfect", "clawfree-c41", "negatives"}) {
    auto a = run_suite(suite, one);
    auto b = run_suite(suite, one);
    auto c = run_suite(suite, four);
    CHECK(a.body() == b.body());
    CHECK(a.body() == c.body());
    CHECK(a.all_expected());
  }
  SuiteConfig other = one;
  other.seed = 43;
  CHECK(run_suite("perfect", one).body() != run_suite("perfect", other).body());
}

TEST_CASE("report layout") {
  auto rep = run_suite("fig1");
  json body = rep.body();
  CHECK(body["schema_version"] == PropertyReport::kSchemaVersion);
  CHECK(body["suite"] == "fig1");
  CHECK(body["summary"]["total"] == 3);
  CHECK(body["summary"]["unexpected"] == 0);
  CHECK_FALSE(body.contains("timings"));
  CHECK(rep.to_json().contains("timings"));
  CHECK(rep.to_text().find("3/3 as expected") != std::string::npos);
}

TEST_CASE("expected failures carry witnesses") {
  auto rep = run_suite("negatives");
  for (const auto& r : rep.instances) {
    CHECK(r.as_expected());
    if (r.verdict == Verdict::Fail) CHECK_FALSE(r.witness.is_null());
  }
}

TEST_CASE("corpora") {
  CHECK(planar_three_connected_corpus().size() == 50);
  CHECK(planar_two_cut_corpus().size() == 20);
  for (const auto& cg : planar_two_cut_corpus()) CHECK(vertex_connectivity(cg.graph) == 2);
  auto corpus = claw_free_corpus(42, 4, 24);
  REQUIRE(corpus.size() == 6);
  CHECK(corpus[0].graph.order() == 30);
  for (const auto& cg : corpus) {
    CHECK(is_claw_free(cg.graph));
    CHECK(vertex_connectivity(cg.graph) >= 3);
  }
  CHECK(mix_seed(42, 1) == mix_seed(42, 1));
  CHECK(mix_seed(42, 1) != mix_seed(42, 2));
}

TEST_CASE("single instances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(run_fan_instance(random_fan_instance(seed)).verdict == Verdict::Pass);
    CHECK(run_link_instance(random_link_instance(seed, 2)).verdict == Verdict::Pass);
    CHECK(claw_free_cycle_trial(seed, 5).verdict == Verdict::Pass);
  }
}
