#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclab/cycles.hpp"
#include "cyclab/graph.hpp"

namespace cyclab::harness {

using json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Error };
std::string to_string(Verdict v);

struct InstanceResult {
  std::string id;
  json params = json::object();   // family, seed, sizes
  Verdict expected = Verdict::Pass;
  Verdict verdict = Verdict::Error;
  json witness = nullptr;         // FAIL entries always carry one
  std::string detail;
  double seconds = 0;             // informational, excluded from the body

  bool as_expected() const { return verdict == expected; }
};

struct PropertyReport {
  static constexpr int kSchemaVersion = 1;

  std::string suite;
  std::uint64_t seed = 0;
  json config = json::object();
  std::vector<InstanceResult> instances;
  double seconds = 0;

  int unexpected() const;
  int errors() const;
  bool all_expected() const { return unexpected() == 0; }

  /// Deterministic given suite, seed and config.
  json body() const;
  /// body() plus a "timings" member.
  json to_json() const;
  std::string to_text() const;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials = -1;  // suite default when negative
  std::uint64_t budget = kDefaultOracleBudget;
  unsigned threads = 1;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> suite_names();
PropertyReport run_suite(const std::string& name, const SuiteConfig& config = {});

// ------------------------------------------------------------ instances

/// splitmix64 step, used to derive per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

struct CorpusGraph {
  std::string family;
  std::uint64_t seed = 0;
  Graph graph;
};

/// 3-connected claw-free graph of order in [lo, hi].
CorpusGraph claw_free_sample(std::uint64_t seed, int lo, int hi);
/// Inflated Petersen, inflated K4, then `random_count` random samples of order <= max_order.
std::vector<CorpusGraph> claw_free_corpus(std::uint64_t seed, int random_count, int max_order);

/// Wheels, prisms, stacked triangulations, antiprisms: 50 graphs.
std::vector<CorpusGraph> planar_three_connected_corpus();
/// Glued wheels and cycles: 20 planar graphs with a 2-cut.
std::vector<CorpusGraph> planar_two_cut_corpus();

struct FanInstance {
  CorpusGraph host;
  Vertex x = -1;
  VertexSet s, t;
  int k = 0;
};

struct LinkInstance {
  CorpusGraph host;
  VertexSet s1, s2, t1, t2;
  int k = 0;
  int t = 1;  // |t_i| = k - t
};

/// Hypothesis-satisfying random instances on small random graphs, the line
/// graph of Petersen and claw-free corpus graphs.
FanInstance random_fan_instance(std::uint64_t seed);
LinkInstance random_link_instance(std::uint64_t seed, int t);

InstanceResult run_fan_instance(const FanInstance& inst);
InstanceResult run_link_instance(const LinkInstance& inst);

/// One cycle query on a claw-free graph: m random vertices plus a distinct z
/// to avoid. Expected PASS.
InstanceResult claw_free_cycle_trial(std::uint64_t seed, int m);

json to_json(const VertexSet& s);
json to_json(const Path& p);
json to_json(const Cycle& c);
json to_json(const CycleQuery& q);

}  // namespace cyclab::harness
