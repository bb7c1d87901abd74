#include <doctest.h>

#include <random>

#include "cyclab/families.hpp"
#include "cyclab/harness.hpp"
#include "cyclab/links.hpp"
#include "oracles.hpp"

using namespace cyclab;

namespace {

VertexSet random_subset(std::mt19937_64& rng, int n, int size, const VertexSet& exclude = {}) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (!exclude.contains(v)) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(std::min<int>(size, static_cast<int>(pool.size()))));
  return VertexSet(pool);
}

VertexSet ends_of(const std::vector<Path>& paths) {
  std::vector<Vertex> out;
  for (const auto& p : paths) out.push_back(p.back());
  return VertexSet(out);
}

}  // namespace

TEST_CASE("flow answers match the path-system search on small graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + trial % 4;
    Graph g = oracle::random_connected(rng, n, 0.35 + 0.05 * (trial % 5));
    const int k = 1 + trial % 3;

    Vertex v = static_cast<Vertex>(rng() % n);
    VertexSet target = random_subset(rng, n, k + 1, {v});
    auto fan = find_fan(g, v, target, k);
    CHECK(fan.has_value() == oracle::fan_exists(g, v, target, k));
    CHECK(is_k_linked_vertex(g, v, target, k) == fan.has_value());
    CHECK(exhaustive::vertex_linked(g, v, target, k) == fan.has_value());
    if (fan) {
      CHECK(fan->paths.size() == static_cast<std::size_t>(k));
      CHECK(oracle::is_fan(g, v, target, fan->paths));
    }

    VertexSet a = random_subset(rng, n, k + trial % 2);
    VertexSet b = random_subset(rng, n, k, a);
    auto link = disjoint_paths(g, a, b, k);
    CHECK(link.has_value() == oracle::link_exists(g, a, b, k));
    CHECK(is_k_linked_sets(g, a, b, k) == link.has_value());
    CHECK(exhaustive::sets_linked(g, a, b, k) == link.has_value());
    if (link) {
      CHECK(link->paths.size() == static_cast<std::size_t>(k));
      CHECK(oracle::is_link(g, a, b, link->paths));
    }
  }
}

TEST_CASE("fan extension keeps the old endpoints and adds one from S") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto inst = harness::random_fan_instance(seed);
    const Graph& g = inst.host.graph;
    auto ext = extend_fan(g, inst.x, inst.s, inst.t, inst.k);
    CHECK(inst.s.contains(ext.added));
    CHECK_FALSE(inst.t.contains(ext.added));
    CHECK(ends_of(ext.fan.paths) == inst.t.with(ext.added));
    CHECK(oracle::is_fan(g, inst.x, inst.t.with(ext.added), ext.fan.paths));
    CHECK(ext.fan.paths.size() == static_cast<std::size_t>(inst.k));
  }
}

TEST_CASE("fan extension falls back when every old fan runs through S") {
  // The only path from x to t passes s1, so S \ T merged into one vertex
  // separates x from T + S with a single vertex.
  const Vertex x = 0, s1 = 1, t = 2, s2 = 3;
  Graph g(4, std::vector<Edge>{{x, s1}, {s1, t}, {x, s2}});
  auto ext = extend_fan(g, x, {s1, t, s2}, {t}, 2);
  CHECK(ext.added == s2);
  CHECK(ext.method == ExtensionMethod::Direct);
  CHECK(oracle::is_fan(g, x, {t, s2}, ext.fan.paths));
}

TEST_CASE("fan extension rejects inputs outside the hypotheses") {
  Graph p = families::path(4);
  CHECK_THROWS_AS(extend_fan(p, 0, {1, 2, 3}, {3}, 2), HypothesisError);
  CHECK_THROWS_AS(extend_fan(p, 0, {1, 3}, {2}, 2), PreconditionError);
}

TEST_CASE("link extension forces both endpoint sets") {
  for (int t = 1; t <= 2; ++t) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto inst = harness::random_link_instance(seed, t);
      const Graph& g = inst.host.graph;
      auto ext = extend_link_by_t(g, inst.s1, inst.s2, inst.t1, inst.t2, inst.k, t);
      CHECK(ext.added_a.size() == static_cast<std::size_t>(t));
      CHECK(ext.added_b.size() == static_cast<std::size_t>(t));
      CHECK(ext.added_a.is_subset_of(inst.s1.minus(inst.t1)));
      CHECK(ext.added_b.is_subset_of(inst.s2.minus(inst.t2)));
      const VertexSet a = inst.t1.unite(ext.added_a), b = inst.t2.unite(ext.added_b);
      CHECK(oracle::is_link(g, a, b, ext.link.paths));
      CHECK(ext.link.paths.size() == static_cast<std::size_t>(inst.k));
      std::vector<Vertex> starts;
      for (const auto& p : ext.link.paths) starts.push_back(p.front());
      CHECK(VertexSet(starts) == a);
      CHECK(ends_of(ext.link.paths) == b);
    }
  }
}

TEST_CASE("the first figure's link cannot be refined") {
  auto f = families::fig1_drawing();
  CHECK(is_k_linked_sets(f.graph, f.t1, f.t2, 2));
  CHECK(oracle::link_exists(f.graph, f.t1, f.t2, 2));
  CHECK(is_k_linked_sets(f.graph, f.s1, f.s2, 3));
  CHECK(oracle::link_exists(f.graph, f.s1, f.s2, 3));
  CHECK(verify_no_refining_link(f.graph, f.s1, f.s2, f.t1, f.t2, 3));
  // Extending T1, T2 by one vertex each still succeeds; only the old paths are lost.
  auto ext = extend_link(f.graph, f.s1, f.s2, f.t1, f.t2, 3);
  CHECK(oracle::is_link(f.graph, f.t1.with(ext.added_a), f.t2.with(ext.added_b), ext.link.paths));
  CHECK_NOTHROW(families::fig1());
}

TEST_CASE("refining-link search sees refinable links") {
  Graph k33 = families::k_bipartite(3);
  CHECK_FALSE(verify_no_refining_link(k33, {0, 1, 2}, {3, 4, 5}, {0, 1}, {3, 4}, 3));
}
