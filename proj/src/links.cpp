#include "cyclab/links.hpp"

#include <algorithm>
#include <functional>

#include "cyclab/flow.hpp"

namespace cyclab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

void require_k(int k) {
  if (k < 1) throw GraphError("k must be at least 1");
}

// G with each group identified into one vertex, plus maps back to G.
struct Quotient {
  Graph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;  // -1 for merged vertices
  std::vector<Vertex> merged;      // per group
};

Quotient quotient(const Graph& g, const std::vector<VertexSet>& groups) {
  Quotient q;
  q.graph = g;
  q.old_to_new.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) q.old_to_new[v] = v;
  for (const auto& group : groups) {
    std::vector<Vertex> current;
    for (Vertex v : group) current.push_back(q.old_to_new[v]);
    auto c = identify_vertices(q.graph, VertexSet(std::move(current)));
    for (auto& id : q.old_to_new) id = c.old_to_new[id];
    for (auto& m : q.merged) m = c.old_to_new[m];
    q.merged.push_back(c.merged);
    q.graph = std::move(c.graph);
  }
  q.new_to_old.assign(static_cast<std::size_t>(q.graph.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    bool grouped = std::any_of(groups.begin(), groups.end(), [&](const VertexSet& s) { return s.contains(v); });
    if (!grouped) q.new_to_old[q.old_to_new[v]] = v;
  }
  return q;
}

// Smallest member of `group` adjacent to `w`.
Vertex attach(const Graph& g, const VertexSet& group, Vertex w) {
  for (Vertex s : group)
    if (g.has_edge(s, w)) return s;
  throw GraphError("internal: no attachment vertex");
}

// Translates a quotient path back to G, expanding merged vertices at either
// end into the group member adjacent to its path neighbor.
std::vector<Vertex> lift(const Graph& g, const Quotient& q, const std::vector<VertexSet>& groups,
                         const std::vector<Vertex>& path) {
  auto group_of = [&](Vertex v) -> int {
    for (std::size_t i = 0; i < q.merged.size(); ++i)
      if (q.merged[i] == v) return static_cast<int>(i);
    return -1;
  };
  std::vector<Vertex> out(path.size(), -1);
  for (std::size_t i = 0; i < path.size(); ++i)
    if (group_of(path[i]) < 0) out[i] = q.new_to_old[path[i]];
  for (std::size_t i = 0; i < path.size(); ++i) {
    int gi = group_of(path[i]);
    if (gi < 0) continue;
    if (i != 0 && i + 1 != path.size()) throw GraphError("internal: merged vertex inside a path");
    if (path.size() == 1) throw GraphError("internal: single merged vertex path");
    const std::size_t nbr = i == 0 ? 1 : path.size() - 2;
    int gn = group_of(path[nbr]);
    if (gn < 0) {
      out[i] = attach(g, groups[static_cast<std::size_t>(gi)], out[nbr]);
    } else if (out[i] < 0) {
      // Both ends merged: take the lexicographically smallest adjacent pair.
      for (Vertex a : groups[static_cast<std::size_t>(gi)]) {
        for (Vertex b : groups[static_cast<std::size_t>(gn)])
          if (g.has_edge(a, b)) {
            out[i] = a;
            out[nbr] = b;
            break;
          }
        if (out[i] >= 0) break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- brute force

class PathSystemSearch {
 public:
  struct Job {
    VertexSet starts;
    VertexSet ends;
    bool after_previous = false;  // start id must exceed the previous job's start
  };

  PathSystemSearch(const Graph& g, const VertexSet& no_enter, const VertexSet& terminal)
      : g_(g), no_enter_(g.order(), 0), terminal_(g.order(), 0), used_(g.order(), 0) {
    for (Vertex v : no_enter) no_enter_[v] = 1;
    for (Vertex v : terminal) terminal_[v] = 1;
  }

  bool run(std::vector<Job> jobs) {
    jobs_ = std::move(jobs);
    return next_job(0, -1);
  }

 private:
  bool next_job(std::size_t j, Vertex previous_start) {
    if (j == jobs_.size()) return true;
    for (Vertex s : jobs_[j].starts) {
      if (used_[s] || (jobs_[j].after_previous && s <= previous_start)) continue;
      used_[s] = 1;
      bool ok = extend(j, s, s);
      used_[s] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool extend(std::size_t j, Vertex start, Vertex cur) {
    if (cur != start && terminal_[cur]) return jobs_[j].ends.contains(cur) && next_job(j + 1, start);
    for (Vertex w : g_.neighbors(cur)) {
      if (used_[w] || no_enter_[w]) continue;
      used_[w] = 1;
      bool ok = extend(j, start, w);
      used_[w] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> no_enter_, terminal_, used_;
  std::vector<Job> jobs_;
};

class FanSearch {
 public:
  FanSearch(const Graph& g, Vertex apex, const VertexSet& s) : g_(g), apex_(apex), s_(s), used_(g.order(), 0) {
    used_[apex] = 1;
  }

  bool run(int k) { return path(k, -1); }

 private:
  bool path(int remaining, Vertex previous_hop) {
    if (remaining == 0) return true;
    for (Vertex w : g_.neighbors(apex_)) {
      if (w <= previous_hop || used_[w]) continue;
      used_[w] = 1;
      bool ok = walk(w, remaining, w);
      used_[w] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool walk(Vertex cur, int remaining, Vertex hop) {
    if (s_.contains(cur)) return path(remaining - 1, hop);
    for (Vertex w : g_.neighbors(cur)) {
      if (used_[w]) continue;
      used_[w] = 1;
      bool ok = walk(w, remaining, hop);
      used_[w] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  Vertex apex_;
  const VertexSet& s_;
  std::vector<char> used_;
};

}  // namespace

// ---------------------------------------------------------------- value types

VertexSet Fan::endpoints() const {
  std::vector<Vertex> ends;
  for (const auto& p : paths) ends.push_back(p.back());
  return VertexSet(std::move(ends));
}

VertexSet Link::starts() const {
  std::vector<Vertex> out;
  for (const auto& p : paths) out.push_back(p.front());
  return VertexSet(std::move(out));
}

VertexSet Link::ends() const {
  std::vector<Vertex> out;
  for (const auto& p : paths) out.push_back(p.back());
  return VertexSet(std::move(out));
}

void validate_fan(const Graph& g, const Fan& fan) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> ends;
  for (const auto& p : fan.paths) {
    p.validate(g);
    require(p.size() >= 2, "fan path must leave the apex");
    require(p.front() == fan.apex, "fan path does not start at the apex");
    for (std::size_t i = 1; i < p.size(); ++i) {
      require(!seen[p[i]]++, "fan paths share vertex " + std::to_string(p[i]));
      bool last = i + 1 == p.size();
      require(fan.target.contains(p[i]) == last,
              "fan path must meet the target exactly at its last vertex (vertex " + std::to_string(p[i]) + ")");
    }
    ends.push_back(p.back());
  }
  require(!fan.target.contains(fan.apex), "apex lies in the target");
  VertexSet distinct(std::move(ends));  // throws on repeated endpoints
  (void)distinct;
}

void validate_link(const Graph& g, const Link& link) {
  require(!link.side_a.intersects(link.side_b), "link sides overlap");
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  for (const auto& p : link.paths) {
    p.validate(g);
    for (std::size_t i = 0; i < p.size(); ++i) {
      require(!seen[p[i]]++, "link paths share vertex " + std::to_string(p[i]));
      require(link.side_a.contains(p[i]) == (i == 0),
              "link path must meet side A exactly at its first vertex (vertex " + std::to_string(p[i]) + ")");
      require(link.side_b.contains(p[i]) == (i + 1 == p.size()),
              "link path must meet side B exactly at its last vertex (vertex " + std::to_string(p[i]) + ")");
    }
  }
}

// ---------------------------------------------------------------- flow queries

std::optional<Link> disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b, int k,
                                   const VertexSet& forbidden) {
  require_k(k);
  g.check_set(a);
  g.check_set(b);
  g.check_set(forbidden);
  if (a.intersects(b) || a.intersects(forbidden) || b.intersects(forbidden))
    throw GraphError("a, b and forbidden must be pairwise disjoint");
  flow::Query q{flow::Terminals::set(a), flow::Terminals::set(b), forbidden, k};
  auto paths = flow::disjoint_paths(g, q);
  if (static_cast<int>(paths.size()) < k) return std::nullopt;
  return Link{a, b, std::move(paths)};
}

std::optional<Fan> find_fan(const Graph& g, Vertex v, const VertexSet& s, int k, const VertexSet& forbidden) {
  require_k(k);
  g.check_vertex(v);
  g.check_set(s);
  if (s.contains(v)) throw GraphError("apex " + std::to_string(v) + " lies in the target set");
  if (forbidden.contains(v) || forbidden.intersects(s)) throw GraphError("forbidden set overlaps the terminals");
  flow::Query q{flow::Terminals::apex(v), flow::Terminals::set(s), forbidden, k};
  auto paths = flow::disjoint_paths(g, q);
  if (static_cast<int>(paths.size()) < k) return std::nullopt;
  return Fan{v, s, std::move(paths)};
}

bool is_k_linked_vertex(const Graph& g, Vertex v, const VertexSet& s, int k) {
  return find_fan(g, v, s, k).has_value();
}

bool is_k_linked_sets(const Graph& g, const VertexSet& s1, const VertexSet& s2, int k) {
  if (s1.intersects(s2)) throw GraphError("linked sets must be disjoint");
  return disjoint_paths(g, s1, s2, k).has_value();
}

// ---------------------------------------------------------------- extensions

FanExtension extend_fan(const Graph& g, Vertex x, const VertexSet& s, const VertexSet& t, int k,
                        ExtensionOptions opts) {
  require_k(k);
  g.check_vertex(x);
  g.check_set(s);
  g.check_set(t);
  if (!t.is_subset_of(s)) throw HypothesisError("T is a subset of S", t.to_string() + " vs " + s.to_string());
  if (static_cast<int>(t.size()) != k - 1)
    throw HypothesisError("|T| = k-1", "|T| = " + std::to_string(t.size()) + ", k = " + std::to_string(k));
  if (s.contains(x)) throw HypothesisError("x is not in S", "");
  if (opts.check_hypotheses) {
    if (!is_k_linked_vertex(g, x, s, k)) throw HypothesisError("x and S are k-linked", "");
    if (k > 1 && !is_k_linked_vertex(g, x, t, k - 1)) throw HypothesisError("x and T are (k-1)-linked", "");
  }

  // Identify S\T into y and add a terminal x2 adjacent to T + {y}.
  const std::vector<VertexSet> groups{s.minus(t)};
  Quotient q = quotient(g, groups);
  GraphBuilder b(q.graph);
  const Vertex x2 = b.add_vertex();
  for (Vertex v : t) b.add_edge(q.old_to_new[v], x2);
  b.add_edge(q.merged[0], x2);
  const Graph aux = b.build();

  flow::Query fq{flow::Terminals::apex(q.old_to_new[x]), flow::Terminals::apex(x2), {}, k};
  auto paths = flow::disjoint_paths(aux, fq);
  FanExtension out;
  if (static_cast<int>(paths.size()) < k) {
    out.method = ExtensionMethod::Direct;
    for (Vertex cand : s.minus(t)) {
      auto fan = find_fan(g, x, t.with(cand), k);
      if (!fan) continue;
      out.added = cand;
      out.fan = std::move(*fan);
      validate_fan(g, out.fan);
      return out;
    }
    throw NoExtension("no s in S\\T makes x and T + {s} k-linked");
  }

  out.fan.apex = x;
  for (const auto& p : paths) {
    std::vector<Vertex> inner(p.begin(), p.end() - 1);  // drop x2
    auto lifted = lift(g, q, groups, inner);
    if (!t.contains(lifted.back())) out.added = lifted.back();
    out.fan.paths.emplace_back(std::move(lifted));
  }
  out.fan.target = t.with(out.added);
  validate_fan(g, out.fan);
  require(out.fan.endpoints() == out.fan.target, "internal: fan endpoints differ from T + {s}");
  return out;
}

LinkExtension extend_link(const Graph& g, const VertexSet& s1, const VertexSet& s2, const VertexSet& t1,
                          const VertexSet& t2, int k, ExtensionOptions opts) {
  require_k(k);
  for (const auto* set : {&s1, &s2, &t1, &t2}) g.check_set(*set);
  if (s1.intersects(s2)) throw HypothesisError("S1 and S2 are disjoint", "");
  if (!t1.is_subset_of(s1)) throw HypothesisError("T1 is a subset of S1", "");
  if (!t2.is_subset_of(s2)) throw HypothesisError("T2 is a subset of S2", "");
  if (static_cast<int>(t1.size()) != k - 1 || static_cast<int>(t2.size()) != k - 1)
    throw HypothesisError("|T1| = |T2| = k-1", "k = " + std::to_string(k));
  if (opts.check_hypotheses) {
    if (!is_k_linked_sets(g, s1, s2, k)) throw HypothesisError("S1 and S2 are k-linked", "");
    if (k > 1 && !is_k_linked_sets(g, t1, t2, k - 1)) throw HypothesisError("T1 and T2 are (k-1)-linked", "");
  }

  // Identify Si\Ti into yi and join a terminal xi to Ti + {yi}.
  const std::vector<VertexSet> groups{s1.minus(t1), s2.minus(t2)};
  Quotient q = quotient(g, groups);
  GraphBuilder b(q.graph);
  const Vertex x1 = b.add_vertex();
  const Vertex x2 = b.add_vertex();
  for (Vertex v : t1) b.add_edge(x1, q.old_to_new[v]);
  for (Vertex v : t2) b.add_edge(x2, q.old_to_new[v]);
  b.add_edge(x1, q.merged[0]);
  b.add_edge(x2, q.merged[1]);
  const Graph aux = b.build();

  flow::Query fq{flow::Terminals::apex(x1), flow::Terminals::apex(x2), {}, k};
  auto paths = flow::disjoint_paths(aux, fq);
  LinkExtension out;
  if (static_cast<int>(paths.size()) < k) {
    out.method = ExtensionMethod::Direct;
    for (Vertex a : s1.minus(t1))
      for (Vertex b : s2.minus(t2)) {
        auto link = disjoint_paths(g, t1.with(a), t2.with(b), k);
        if (!link) continue;
        out.added_a = a;
        out.added_b = b;
        out.link = std::move(*link);
        validate_link(g, out.link);
        return out;
      }
    throw NoExtension("no (s1, s2) makes T1 + {s1} and T2 + {s2} k-linked");
  }

  for (const auto& p : paths) {
    std::vector<Vertex> inner(p.begin() + 1, p.end() - 1);
    auto lifted = lift(g, q, groups, inner);
    if (!t1.contains(lifted.front())) out.added_a = lifted.front();
    if (!t2.contains(lifted.back())) out.added_b = lifted.back();
    out.link.paths.emplace_back(std::move(lifted));
  }
  std::sort(out.link.paths.begin(), out.link.paths.end(),
            [](const Path& a, const Path& b) { return a.front() < b.front(); });
  out.link.side_a = t1.with(out.added_a);
  out.link.side_b = t2.with(out.added_b);
  validate_link(g, out.link);
  require(out.link.starts() == out.link.side_a && out.link.ends() == out.link.side_b,
          "internal: link endpoints differ from Ti + {si}");
  return out;
}

MultiLinkExtension extend_link_by_t(const Graph& g, const VertexSet& s1, const VertexSet& s2,
                                    const VertexSet& t1, const VertexSet& t2, int k, int t,
                                    ExtensionOptions opts) {
  require_k(k);
  if (t < 1 || t > k) throw GraphError("t must satisfy 1 <= t <= k");
  if (static_cast<int>(t1.size()) != k - t || static_cast<int>(t2.size()) != k - t)
    throw HypothesisError("|T1| = |T2| = k-t", "k = " + std::to_string(k) + ", t = " + std::to_string(t));
  if (opts.check_hypotheses) {
    if (s1.intersects(s2)) throw HypothesisError("S1 and S2 are disjoint", "");
    if (!is_k_linked_sets(g, s1, s2, k)) throw HypothesisError("S1 and S2 are k-linked", "");
    if (k - t > 0 && !is_k_linked_sets(g, t1, t2, k - t)) throw HypothesisError("T1 and T2 are (k-t)-linked", "");
  }
  // Each step is justified by the previous one; only the first needs checks.
  ExtensionOptions inner{false};
  VertexSet cur1 = t1, cur2 = t2;
  MultiLinkExtension out;
  for (int step = 0; step < t; ++step) {
    auto ext = extend_link(g, s1, s2, cur1, cur2, static_cast<int>(cur1.size()) + 1, inner);
    cur1 = cur1.with(ext.added_a);
    cur2 = cur2.with(ext.added_b);
    out.link = std::move(ext.link);
    if (ext.method == ExtensionMethod::Direct) out.method = ExtensionMethod::Direct;
  }
  out.added_a = cur1.minus(t1);
  out.added_b = cur2.minus(t2);
  return out;
}

bool verify_no_refining_link(const Graph& g, const VertexSet& s1, const VertexSet& s2, const VertexSet& t1,
                             const VertexSet& t2, int k) {
  require_k(k);
  if (g.order() > kRefiningSearchMaxOrder)
    throw GraphError("exhaustive refinement search limited to " + std::to_string(kRefiningSearchMaxOrder) +
                     " vertices");
  for (const auto* set : {&s1, &s2, &t1, &t2}) g.check_set(*set);
  if (s1.intersects(s2) || !t1.is_subset_of(s1) || !t2.is_subset_of(s2))
    throw GraphError("need disjoint S1, S2 with Ti a subset of Si");
  if (static_cast<int>(t1.size()) != k - 1 || static_cast<int>(t2.size()) != k - 1)
    throw GraphError("|T1| = |T2| = k-1 required");
  // A refining system routes every T1 vertex to T2, and one more path from
  // S1\T1 to S2\T2 (T2 is exhausted by then).
  std::vector<PathSystemSearch::Job> jobs;
  for (Vertex v : t1) jobs.push_back({VertexSet{v}, t2, false});
  jobs.push_back({s1.minus(t1), s2.minus(t2), false});
  PathSystemSearch search(g, s1, s2);
  return !search.run(std::move(jobs));
}

namespace exhaustive {

bool sets_linked(const Graph& g, const VertexSet& s1, const VertexSet& s2, int k) {
  if (k <= 0) return true;
  std::vector<PathSystemSearch::Job> jobs(static_cast<std::size_t>(k), {s1, s2, true});
  PathSystemSearch search(g, s1, s2);
  return search.run(std::move(jobs));
}

bool vertex_linked(const Graph& g, Vertex v, const VertexSet& s, int k) {
  if (k <= 0) return true;
  FanSearch search(g, v, s);
  return search.run(k);
}

}  // namespace exhaustive

}  // namespace cyclab
