#include "cyclab/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "cyclab/combinations.hpp"
#include "cyclab/links.hpp"

namespace cyclab {

namespace {

// Backtracking search for a cycle through every include vertex inside one
// block h. The path grows from the anchor (smallest include vertex); a
// cycle is reported only in the orientation whose last vertex exceeds the
// anchor's successor. A branch is cut as soon as some unreached include
// vertex lies off every end-to-anchor path in the residual graph, i.e.
// outside the block of residual + {end, anchor} that holds the edge
// end-anchor.
class CycleSearch {
 public:
  CycleSearch(const Graph& h, const std::vector<Vertex>& include)
      : h_(h),
        is_include_(h.order(), 0),
        on_path_(h.order(), 0),
        mark_(h.order(), 0),
        popped_(h.order(), 0),
        disc_(h.order(), 0),
        low_(h.order(), 0) {
    for (Vertex v : include) is_include_[v] = 1;
    remaining_ = static_cast<int>(include.size());
    anchor_ = include.empty() ? 0 : *std::min_element(include.begin(), include.end());
  }

  std::optional<std::vector<Vertex>> run(std::uint64_t& nodes) {
    path_.assign(1, anchor_);
    on_path_[anchor_] = 1;
    if (is_include_[anchor_]) --remaining_;
    nodes_ = &nodes;
    if (dfs()) return path_;
    return std::nullopt;
  }

 private:
  struct Frame {
    Vertex v, parent;
    std::size_t next;
  };

  bool in_residual(Vertex w, Vertex end) const { return !on_path_[w] || w == end || w == anchor_; }

  // Edges at the anchor are usable only towards vertices above path_[1]
  // (orientation), except the edge to the current end.
  bool edge_ok(Vertex v, Vertex w, Vertex end) const {
    if (!in_residual(w, end)) return false;
    if (v == anchor_ || w == anchor_) {
      Vertex other = v == anchor_ ? w : v;
      return other == end || other > path_[1];
    }
    return true;
  }

  // Marks (with the current generation) the block containing edge
  // end-anchor. Returns false if an unreached include vertex lies outside.
  bool residual_block(Vertex end) {
    ++generation_;
    int timer = 0;
    auto visit = [&](Vertex v) {
      mark_[v] = generation_;
      disc_[v] = low_[v] = timer++;
    };
    visit(anchor_);
    visit(end);
    vstack_.assign(1, end);
    frames_.assign(1, Frame{end, anchor_, 0});
    while (true) {
      const std::size_t top = frames_.size() - 1;
      const Vertex v = frames_[top].v;
      const auto& nb = h_.neighbors(v);
      if (frames_[top].next < nb.size()) {
        Vertex w = nb[frames_[top].next++];
        if (w == frames_[top].parent || !edge_ok(v, w, end)) continue;
        if (mark_[w] != generation_) {
          visit(w);
          vstack_.push_back(w);
          frames_.push_back(Frame{w, v, 0});
        } else {
          low_[v] = std::min(low_[v], disc_[w]);
        }
        continue;
      }
      const Vertex parent = frames_[top].parent;
      frames_.pop_back();
      if (parent == anchor_) break;
      low_[parent] = std::min(low_[parent], low_[v]);
      if (low_[v] >= disc_[parent]) {
        // A block hanging off `parent`, away from the anchor.
        while (true) {
          Vertex x = vstack_.back();
          vstack_.pop_back();
          popped_[x] = generation_;
          if (x == v) break;
        }
      }
    }
    // The block is what is still on vstack_, plus the anchor.
    if (remaining_ == 0) return true;
    for (Vertex w = 0; w < h_.order(); ++w)
      if (is_include_[w] && !on_path_[w] && !in_block(w)) return false;
    return true;
  }

  bool in_block(Vertex w) const { return mark_[w] == generation_ && popped_[w] != generation_; }

  bool dfs() {
    ++*nodes_;
    const Vertex end = path_.back();
    if (remaining_ == 0 && path_.size() >= 3 && end > path_[1] && h_.has_edge(end, anchor_)) return true;
    std::vector<Vertex> next;
    if (path_.size() == 1) {
      for (Vertex w : h_.neighbors(end)) next.push_back(w);
    } else {
      if (!residual_block(end)) return false;
      for (Vertex w : h_.neighbors(end))
        if (!on_path_[w] && w != anchor_ && in_block(w)) next.push_back(w);
    }
    for (Vertex w : next) {
      path_.push_back(w);
      on_path_[w] = 1;
      if (is_include_[w]) --remaining_;
      if (dfs()) return true;
      if (is_include_[w]) ++remaining_;
      on_path_[w] = 0;
      path_.pop_back();
    }
    return false;
  }

  const Graph& h_;
  std::vector<char> is_include_, on_path_;
  std::vector<std::uint32_t> mark_, popped_;
  std::vector<int> disc_, low_;
  std::vector<Vertex> vstack_;
  std::vector<Vertex> path_;
  int remaining_ = 0;
  Vertex anchor_ = 0;
  std::uint32_t generation_ = 0;
  std::uint64_t* nodes_ = nullptr;
  std::vector<Frame> frames_;
};

void validate_query(const Graph& g, const CycleQuery& q) {
  g.check_set(q.include);
  g.check_set(q.avoid);
  if (q.include.intersects(q.avoid)) throw GraphError("include and avoid sets overlap");
  if (q.include.empty() && q.avoid.empty()) throw GraphError("cycle query needs an include or an avoid vertex");
}

VertexSet to_set(std::span<const Vertex> s) { return VertexSet(std::vector<Vertex>(s.begin(), s.end())); }

}  // namespace

// ---------------------------------------------------------------- oracle

CycleOracle::CycleOracle(const Graph& g, const VertexSet& avoid)
    : g_(&g), avoid_(avoid), rest_(delete_vertices(g, avoid)) {
  for (auto& b : biconnected_components(rest_.graph)) {
    if (b.size() < 3) continue;
    block_graphs_.push_back(induced_subgraph(rest_.graph, b));
    blocks_.push_back(std::move(b));
  }
}

std::optional<Cycle> CycleOracle::find(const VertexSet& include, CycleSearchStats* stats) const {
  std::vector<Vertex> local;
  for (Vertex v : include) {
    g_->check_vertex(v);
    Vertex r = rest_.old_to_new[v];
    if (r < 0) throw GraphError("vertex " + std::to_string(v) + " is both included and avoided");
    local.push_back(r);
  }
  // A cycle lives inside one block, and two vertices share at most one.
  std::size_t block = blocks_.size();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (std::all_of(local.begin(), local.end(), [&](Vertex v) { return b.contains(v); })) {
      block = i;
      break;
    }
  }
  if (stats) ++stats->nodes;
  if (block == blocks_.size()) return std::nullopt;

  const Subgraph& sub = block_graphs_[block];
  std::vector<Vertex> inner;
  for (Vertex v : local) inner.push_back(sub.old_to_new[v]);
  std::uint64_t nodes = 0;
  CycleSearch search(sub.graph, inner);
  auto found = search.run(nodes);
  if (stats) stats->nodes += nodes;
  if (!found) return std::nullopt;
  std::vector<Vertex> out;
  for (Vertex v : *found) out.push_back(rest_.new_to_old[sub.new_to_old[v]]);
  return Cycle(std::move(out));
}

std::optional<Cycle> find_cycle(const Graph& g, const CycleQuery& q, CycleSearchStats* stats) {
  validate_query(g, q);
  return CycleOracle(g, q.avoid).find(q.include, stats);
}

// ---------------------------------------------------------------- C(m,n)

namespace {

std::string absence_certificate(const Graph& g, const CycleQuery& q) {
  auto rest = delete_vertices(g, q.avoid);
  std::vector<Vertex> local;
  for (Vertex v : q.include) local.push_back(rest.old_to_new[v]);
  for (const auto& b : biconnected_components(rest.graph))
    if (b.size() >= 3 && std::all_of(local.begin(), local.end(), [&](Vertex v) { return b.contains(v); })) {
      CycleSearchStats stats;
      (void)find_cycle(g, q, &stats);
      return "include set lies in one block of G - avoid; exhaustive search closed after " +
             std::to_string(stats.nodes) + " nodes";
    }
  return "include set does not lie in a single 2-connected block of G - avoid";
}

struct Failure {
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();  // sequential query index (1-based)
  CycleQuery query;
};

}  // namespace

CmnResult has_property_cmn(const Graph& g, int m, int n, const CmnOptions& opts) {
  const int order = g.order();
  if (m < 0 || n < 0 || m + n < 1 || m + n > order)
    throw GraphError("C(m,n) needs m, n >= 0 and 1 <= m + n <= |V|");
  CmnResult result;
  result.m = m;
  result.n = n;
  result.mode = opts.mode;

  std::vector<Vertex> all(static_cast<std::size_t>(order));
  for (Vertex v = 0; v < order; ++v) all[v] = v;

  if (opts.mode == CmnOptions::Mode::Sample) {
    if (opts.trials > opts.budget)
      throw BudgetExceeded("sample size " + std::to_string(opts.trials) + " exceeds budget " +
                           std::to_string(opts.budget));
    std::mt19937_64 rng(opts.seed);
    std::vector<Vertex> pool = all;
    for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
      for (int i = 0; i < m + n; ++i) {
        std::uniform_int_distribution<int> pick(i, order - 1);
        std::swap(pool[i], pool[pick(rng)]);
      }
      CycleQuery q{to_set(std::span<const Vertex>(pool.data(), static_cast<std::size_t>(m))),
                   to_set(std::span<const Vertex>(pool.data() + m, static_cast<std::size_t>(n)))};
      ++result.queries;
      if (!CycleOracle(g, q.avoid).find(q.include)) {
        result.witness = q;
        result.certificate = absence_certificate(g, q);
        return result;
      }
    }
    result.pass = true;
    return result;
  }

  // Exhaustive. Avoid sets are numbered lexicographically; each owns a
  // contiguous range of `per_avoid` sequential query indices.
  std::vector<VertexSet> avoid_sets;
  for_each_combination<Vertex>(all, static_cast<std::size_t>(n), [&](std::span<const Vertex> s) {
    avoid_sets.push_back(to_set(s));
    return true;
  });
  const std::uint64_t per_avoid = binomial(static_cast<unsigned long long>(order - n), static_cast<unsigned long long>(m));
  const std::uint64_t total = per_avoid * avoid_sets.size();

  std::mutex mu;
  Failure best;
  std::atomic<std::uint64_t> best_index{best.index};
  std::atomic<std::size_t> next_avoid{0};

  auto worker = [&] {
    while (true) {
      const std::size_t a = next_avoid.fetch_add(1);
      if (a >= avoid_sets.size()) return;
      const std::uint64_t base = a * per_avoid;
      if (base >= best_index.load() || base >= opts.budget) return;
      const VertexSet& avoid = avoid_sets[a];
      CycleOracle oracle(g, avoid);
      std::vector<Vertex> rest;
      for (Vertex v : all)
        if (!avoid.contains(v)) rest.push_back(v);
      std::uint64_t offset = 0;
      for_each_combination<Vertex>(rest, static_cast<std::size_t>(m), [&](std::span<const Vertex> s) {
        const std::uint64_t index = base + ++offset;
        if (index > opts.budget || index >= best_index.load()) return false;
        VertexSet include = to_set(s);
        if (oracle.find(include)) return true;
        std::lock_guard lock(mu);
        if (index < best.index) {
          best.index = index;
          best.query = CycleQuery{std::move(include), avoid};
          best_index.store(index);
        }
        return false;
      });
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(avoid_sets.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  if (best.index <= opts.budget) {
    result.queries = best.index;
    result.witness = best.query;
    result.certificate = absence_certificate(g, best.query);
    return result;
  }
  if (total > opts.budget)
    throw BudgetExceeded("C(" + std::to_string(m) + "," + std::to_string(n) + ") needs " + std::to_string(total) +
                         " oracle calls, budget is " + std::to_string(opts.budget));
  result.queries = total;
  result.pass = true;
  return result;
}

int cyclability(const Graph& g, std::uint64_t budget) {
  if (g.order() < 3 || !CycleOracle(g, {}).find({})) throw GraphError("cyclability of an acyclic graph");
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  CycleOracle oracle(g, {});
  std::uint64_t used = 0;
  for (int m = 1; m <= g.order(); ++m) {
    bool ok = for_each_combination<Vertex>(all, static_cast<std::size_t>(m), [&](std::span<const Vertex> s) {
      if (++used > budget) throw BudgetExceeded("cyclability exceeded budget of " + std::to_string(budget));
      return oracle.find(to_set(s)).has_value();
    });
    if (!ok) return m - 1;
  }
  return g.order();
}

// ---------------------------------------------------------------- jumpers

JumperGeometry jumper_geometry(const Graph& g, const JumperInput& in) {
  in.cycle.validate(g);
  in.p1.validate(g);
  in.p2.validate(g);
  if (in.p1.size() < 2 || in.p2.size() < 2) throw GraphError("jumper paths need at least one edge");
  const Vertex u = in.p1.back();
  if (in.p2.back() != u) throw GraphError("jumper paths must end at the same vertex");
  if (!in.cycle.contains(u)) throw GraphError("common end of the jumper paths is not on the cycle");
  for (const Path* p : {&in.p1, &in.p2})
    for (std::size_t i = 0; i + 1 < p->size(); ++i)
      if (in.cycle.contains((*p)[i]))
        throw GraphError("jumper path meets the cycle before its end (vertex " + std::to_string((*p)[i]) + ")");
  for (Vertex v : in.p1)
    if (v != u && in.p2.contains(v)) throw GraphError("jumper paths share vertex " + std::to_string(v));
  return {u, in.cycle.prev(u), in.cycle.next(u), in.p1[in.p1.size() - 2], in.p2[in.p2.size() - 2]};
}

JumperOutcome apply_jumper(const Graph& g, const JumperInput& in) {
  const auto [u, u1, u2, u3, u4] = jumper_geometry(g, in);
  if (g.has_edge(u3, u4)) {
    std::vector<Vertex> joined(in.p1.begin(), in.p1.end() - 1);
    for (auto it = in.p2.vertices().rbegin() + 1; it != in.p2.vertices().rend(); ++it) joined.push_back(*it);
    return JoinedPath{Path(std::move(joined))};
  }
  for (int j : {3, 4}) {
    const Vertex uj = j == 3 ? u3 : u4;
    for (Vertex ui : {u1, u2}) {
      if (!g.has_edge(ui, uj)) continue;
      const Path& moved = j == 3 ? in.p1 : in.p2;
      std::vector<Vertex> rerouted(moved.begin(), moved.end() - 1);
      rerouted.push_back(ui);
      Path p(std::move(rerouted));
      return j == 3 ? RedirectedPaths{std::move(p), in.p2, 1} : RedirectedPaths{in.p1, std::move(p), 2};
    }
  }
  std::array<Vertex, 3> leaves{u1, u3, u4};
  std::sort(leaves.begin(), leaves.end());
  return ClawWitness{u, leaves};
}

// ---------------------------------------------------------------- wheels

void validate_wheel(const Graph& g, const WheelSubdivision& w) {
  g.check_vertex(w.hub);
  w.rim.validate(g);
  if (w.rim.contains(w.hub)) throw GraphError("hub lies on the rim");
  if (w.spokes.size() < 3) throw GraphError("a wheel needs at least three spokes");
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> ends;
  for (const auto& s : w.spokes) {
    s.validate(g);
    if (s.size() < 2 || s.front() != w.hub) throw GraphError("spoke must start at the hub");
    if (!w.rim.contains(s.back())) throw GraphError("spoke must end on the rim");
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (seen[s[i]]++) throw GraphError("spokes share vertex " + std::to_string(s[i]));
      if (i + 1 < s.size() && w.rim.contains(s[i])) throw GraphError("spoke meets the rim before its end");
    }
    ends.push_back(s.back());
  }
  (void)VertexSet(std::move(ends));  // distinct rim endpoints
}

std::optional<WheelSubdivision> find_wheel_subdivision(const Graph& g, Vertex z, int k) {
  g.check_vertex(z);
  if (k < 3) throw GraphError("a wheel needs k >= 3");
  if (g.degree(z) < k)
    throw InsufficientDegree("vertex " + std::to_string(z) + " has degree " + std::to_string(g.degree(z)) +
                             " < " + std::to_string(k));
  CycleOracle oracle(g, VertexSet{z});
  std::optional<WheelSubdivision> out;
  for_each_combination<Vertex>(g.neighbors(z), static_cast<std::size_t>(k), [&](std::span<const Vertex> s) {
    auto rim = oracle.find(to_set(s));
    if (!rim) return true;
    WheelSubdivision w{z, std::move(*rim), {}};
    for (Vertex v : s) w.spokes.emplace_back(std::vector<Vertex>{z, v});
    out = std::move(w);
    return false;
  });
  return out;
}

std::optional<WheelSubdivision> find_w3_through(const Graph& g, Vertex z, const VertexSet& rim_vertices) {
  auto rim = find_cycle(g, CycleQuery{rim_vertices, VertexSet{z}});
  if (!rim) return std::nullopt;
  auto fan = find_fan(g, z, rim->vertex_set(), 3);
  if (!fan) return std::nullopt;
  return WheelSubdivision{z, std::move(*rim), std::move(fan->paths)};
}

}  // namespace cyclab
