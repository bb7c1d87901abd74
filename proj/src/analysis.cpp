#include "cyclab/analysis.hpp"

#include <algorithm>

#include "cyclab/combinations.hpp"
#include "cyclab/flow.hpp"

namespace cyclab {

namespace {

struct BlockStructure {
  std::vector<VertexSet> blocks;
  VertexSet articulation;
};

// Iterative Hopcroft-Tarjan over the whole graph.
BlockStructure block_structure(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Vertex> vstack;
  std::vector<std::vector<Vertex>> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    vstack.push_back(root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          vstack.push_back(w);
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v, parent = f.parent;
      const int children = f.children;
      stack.pop_back();
      if (parent < 0) {
        if (children > 1) is_cut[v] = true;
        vstack.clear();
        continue;
      }
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (stack.back().parent >= 0) is_cut[parent] = true;
        std::vector<Vertex> block;
        while (true) {
          Vertex x = vstack.back();
          vstack.pop_back();
          block.push_back(x);
          if (x == v) break;
        }
        block.push_back(parent);
        blocks.push_back(std::move(block));
      }
    }
  }
  BlockStructure out;
  for (auto& b : blocks) out.blocks.emplace_back(std::move(b));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.ids() < b.ids(); });
  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) cuts.push_back(v);
  out.articulation = VertexSet(std::move(cuts));
  return out;
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  auto sub = delete_vertices(g, removed);
  std::vector<VertexSet> out;
  for (const auto& comp : components(sub.graph)) {
    std::vector<Vertex> ids;
    for (Vertex v : comp) ids.push_back(sub.new_to_old[v]);
    out.emplace_back(std::move(ids));
  }
  return out;
}

}  // namespace

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto& nb = g.neighbors(c);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k)
          if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
            return ClawWitness{c, {nb[i], nb[j], nb[k]}};
      }
  }
  return std::nullopt;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw GraphError("vertex connectivity needs at least two vertices");
  if (g.size() == n * (n - 1) / 2) return n - 1;
  if (!is_connected(g)) return 0;

  // Esfahanian-Hakimi: a minimum-degree vertex v either avoids some minimum
  // separator (then it separates v from a non-neighbor) or lies in every one
  // (then two of its neighbors are separated).
  Vertex v = 0;
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) < g.degree(v)) v = u;
  int best = g.degree(v);
  for (Vertex w = 0; w < n; ++w) {
    if (w == v || g.has_edge(v, w)) continue;
    best = std::min(best, flow::local_connectivity(g, v, w, best));
  }
  const auto& nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) best = std::min(best, flow::local_connectivity(g, nb[i], nb[j], best));
  return best;
}

std::vector<CutSet> enumerate_cuts(const Graph& g, int size, bool allow_large) {
  if (size < 0) throw GraphError("cut size must be non-negative");
  if (size > kDefaultCutSizeGuard && !allow_large)
    throw GraphError("cut size " + std::to_string(size) + " exceeds the guard of " +
                     std::to_string(kDefaultCutSizeGuard) + " (override required)");
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  std::vector<CutSet> out;
  for_each_combination<Vertex>(all, static_cast<std::size_t>(size), [&](std::span<const Vertex> pick) {
    VertexSet s(std::vector<Vertex>(pick.begin(), pick.end()));
    auto comps = components_without(g, s);
    if (comps.size() >= 2) out.push_back({std::move(s), std::move(comps)});
    return true;
  });
  return out;
}

ThreeCutVerdict check_three_cut_structure(const Graph& g, const VertexSet& t) {
  g.check_set(t);
  if (t.size() != 3) throw PreconditionError("cut must have exactly 3 vertices, got " + t.to_string());
  if (auto claw = find_claw(g))
    throw PreconditionError("graph is not claw-free (claw centered at " + std::to_string(claw->center) + ")");
  if (int k = vertex_connectivity(g); k < 3)
    throw PreconditionError("graph is not 3-connected (connectivity " + std::to_string(k) + ")");
  ThreeCutVerdict verdict;
  verdict.cut = t;
  verdict.components = components_without(g, t);
  if (verdict.components.size() < 2) throw PreconditionError(t.to_string() + " is not a vertex cut");
  bool clean = true;
  for (const auto& comp : verdict.components) {
    auto sub = induced_subgraph(g, comp);
    std::vector<Vertex> cuts;
    for (Vertex v : cut_vertices(sub.graph)) cuts.push_back(sub.new_to_old[v]);
    if (!cuts.empty()) clean = false;
    verdict.cutvertices.emplace_back(std::move(cuts));
  }
  verdict.pass = verdict.components.size() == 2 && clean;
  return verdict;
}

std::vector<VertexSet> biconnected_components(const Graph& g) { return block_structure(g).blocks; }

VertexSet cut_vertices(const Graph& g) { return block_structure(g).articulation; }

}  // namespace cyclab
