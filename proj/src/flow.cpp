#include "cyclab/flow.hpp"

#include <algorithm>
#include <deque>

namespace cyclab::flow {

namespace {

struct Arc {
  int to;
  int cap;
  int flow;
  int rev;
};

class Network {
 public:
  explicit Network(int nodes) : arcs_(static_cast<std::size_t>(nodes)) {}

  void add(int from, int to, int cap) {
    auto& a = arcs_[static_cast<std::size_t>(from)];
    auto& b = arcs_[static_cast<std::size_t>(to)];
    a.push_back({to, cap, 0, static_cast<int>(b.size())});
    b.push_back({from, 0, 0, static_cast<int>(a.size() - 1)});
  }

  bool augment(int source, int sink) {
    std::vector<std::pair<int, int>> parent(arcs_.size(), {-1, -1});
    std::deque<int> queue{source};
    parent[static_cast<std::size_t>(source)] = {source, -1};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      const auto& list = arcs_[static_cast<std::size_t>(u)];
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Arc& a = list[i];
        if (a.cap - a.flow <= 0 || parent[static_cast<std::size_t>(a.to)].first >= 0) continue;
        parent[static_cast<std::size_t>(a.to)] = {u, static_cast<int>(i)};
        if (a.to == sink) {
          for (int v = sink; v != source;) {
            auto [p, idx] = parent[static_cast<std::size_t>(v)];
            Arc& fwd = arcs_[static_cast<std::size_t>(p)][static_cast<std::size_t>(idx)];
            fwd.flow += 1;
            arcs_[static_cast<std::size_t>(fwd.to)][static_cast<std::size_t>(fwd.rev)].flow -= 1;
            v = p;
          }
          return true;
        }
        queue.push_back(a.to);
      }
    }
    return false;
  }

  // Follows (and consumes) one unit of flow from `from`; returns the head.
  int step(int from) {
    for (auto& a : arcs_[static_cast<std::size_t>(from)]) {
      if (a.flow > 0) {
        a.flow -= 1;
        return a.to;
      }
    }
    return -1;
  }

 private:
  std::vector<std::vector<Arc>> arcs_;
};

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

}  // namespace

std::vector<Path> disjoint_paths(const Graph& g, const Query& q) {
  g.check_set(q.sources.vertices);
  g.check_set(q.sinks.vertices);
  g.check_set(q.blocked);
  if (q.sources.vertices.intersects(q.sinks.vertices) || q.sources.vertices.intersects(q.blocked) ||
      q.sinks.vertices.intersects(q.blocked))
    throw GraphError("source, sink and blocked sets must be pairwise disjoint");
  for (const Terminals* t : {&q.sources, &q.sinks})
    if (t->mode == TerminalMode::Apex && t->vertices.size() != 1)
      throw GraphError("an apex terminal must be a single vertex");

  const int n = g.order();
  const int source = 2 * n, sink = 2 * n + 1;
  const int wide = n + 1;
  Network net(2 * n + 2);

  auto is_source = [&](Vertex v) { return q.sources.vertices.contains(v); };
  auto is_sink = [&](Vertex v) { return q.sinks.vertices.contains(v); };

  for (Vertex v = 0; v < n; ++v) {
    if (q.blocked.contains(v)) continue;
    bool apex = (is_source(v) && q.sources.mode == TerminalMode::Apex) ||
                (is_sink(v) && q.sinks.mode == TerminalMode::Apex);
    net.add(in_node(v), out_node(v), apex ? wide : 1);
    if (is_source(v)) net.add(source, in_node(v), apex ? wide : 1);
    if (is_sink(v)) net.add(out_node(v), sink, apex ? wide : 1);
    if (is_sink(v)) continue;
    for (Vertex w : g.neighbors(v)) {
      if (q.blocked.contains(w) || is_source(w)) continue;
      net.add(out_node(v), in_node(w), 1);
    }
  }

  int found = 0;
  while ((q.limit <= 0 || found < q.limit) && net.augment(source, sink)) ++found;

  std::vector<Path> paths;
  for (int i = 0; i < found; ++i) {
    std::vector<Vertex> walk;
    int node = net.step(source);
    while (node != sink) {
      if (node % 2 == 0) walk.push_back(node / 2);  // entering in(v)
      node = net.step(node);
    }
    paths.emplace_back(std::move(walk));
  }
  std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    return a.size() > 1 && b.size() > 1 && a[1] < b[1];
  });
  return paths;
}

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  Query q{Terminals::apex(s), Terminals::apex(t), {}, limit};
  return static_cast<int>(disjoint_paths(g, q).size());
}

}  // namespace cyclab::flow
