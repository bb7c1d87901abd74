#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclab/analysis.hpp"
#include "cyclab/graph.hpp"

namespace cyclab {

/// A cycle must pass through every `include` vertex and miss every `avoid` vertex.
struct CycleQuery {
  VertexSet include;
  VertexSet avoid;
  friend bool operator==(const CycleQuery&, const CycleQuery&) = default;
};

struct CycleSearchStats {
  std::uint64_t nodes = 0;  // search-tree nodes expanded
};

/// Exact: returns a witness or nullopt only if no such cycle exists.
std::optional<Cycle> find_cycle(const Graph& g, const CycleQuery& q, CycleSearchStats* stats = nullptr);

/// The oracle for a fixed avoid set, reusable across include sets.
class CycleOracle {
 public:
  CycleOracle(const Graph& g, const VertexSet& avoid);
  std::optional<Cycle> find(const VertexSet& include, CycleSearchStats* stats = nullptr) const;

 private:
  const Graph* g_;
  VertexSet avoid_;
  Subgraph rest_;                   // g - avoid
  std::vector<VertexSet> blocks_;      // blocks of rest_ with >= 3 vertices (rest_ ids)
  std::vector<Subgraph> block_graphs_;
};

/// Raised when an exhaustive computation would exceed its oracle-call cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 5'000'000;

struct CmnOptions {
  enum class Mode { Exhaustive, Sample };
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;  // sample mode only
  std::uint64_t budget = kDefaultOracleBudget;
  unsigned threads = 1;      // exhaustive mode may split the search
};

struct CmnResult {
  bool pass = false;
  int m = 0;
  int n = 0;
  CmnOptions::Mode mode = CmnOptions::Mode::Exhaustive;
  std::uint64_t queries = 0;            // oracle calls that were needed
  std::optional<CycleQuery> witness;    // first failing pair
  std::string certificate;              // why the witness has no cycle
};

/// C(m,n): every disjoint (S1, S2), |S1| = m, |S2| = n, admits a cycle through
/// S1 avoiding S2. Exhaustive mode enumerates avoid sets lexicographically and,
/// within each, include sets lexicographically; it stops at the first failure.
CmnResult has_property_cmn(const Graph& g, int m, int n, const CmnOptions& opts = {});

/// Largest m such that every set of at most m vertices lies on a cycle.
int cyclability(const Graph& g, std::uint64_t budget = kDefaultOracleBudget);

// ---------------------------------------------------------------- jumpers

/// p1 and p2 run from x and y to the same cycle vertex u and otherwise avoid
/// the cycle and each other.
struct JumperInput {
  Cycle cycle;
  Path p1;
  Path p2;
};

struct JoinedPath {
  Path path;  // x ... u3 u4 ... y, avoiding u
};

struct RedirectedPaths {
  Path p1;
  Path p2;
  int redirected = 0;  // 1 or 2: which path now ends at a cycle neighbor of u
};

using JumperOutcome = std::variant<JoinedPath, RedirectedPaths, ClawWitness>;

/// Names the vertices around the collision point: u1/u2 are u's cycle
/// predecessor/successor, u3/u4 the path vertices before u on p1/p2.
struct JumperGeometry {
  Vertex u, u1, u2, u3, u4;
};

JumperGeometry jumper_geometry(const Graph& g, const JumperInput& in);
JumperOutcome apply_jumper(const Graph& g, const JumperInput& in);

// ---------------------------------------------------------------- wheels

struct WheelSubdivision {
  Vertex hub = -1;
  Cycle rim;
  std::vector<Path> spokes;
};

void validate_wheel(const Graph& g, const WheelSubdivision& w);

/// deg(z) < k; a wheel W_k with hub z needs k spokes.
class InsufficientDegree : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Tries k-subsets of N(z) lexicographically as rims through the neighbors,
/// avoiding z; spokes are the k edges from z.
std::optional<WheelSubdivision> find_wheel_subdivision(const Graph& g, Vertex z, int k);

/// A subdivided W_3 with hub z whose rim passes through `rim_vertices`:
/// a cycle through them avoiding z, plus a 3-fan from z onto that cycle.
std::optional<WheelSubdivision> find_w3_through(const Graph& g, Vertex z, const VertexSet& rim_vertices);

}  // namespace cyclab
