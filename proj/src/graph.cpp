#include "cyclab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclab {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end()) throw GraphError("duplicate vertex " + std::to_string(*dup) + " in vertex set");
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool VertexSet::intersects(const VertexSet& other) const { return !intersect(other).empty(); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

VertexSet VertexSet::with(Vertex v) const {
  if (contains(v)) return *this;
  std::vector<Vertex> out = ids_;
  out.push_back(v);
  return VertexSet(std::move(out));
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) os << (i ? "," : "") << ids_[i];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  *this = b.build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::check_vertex(Vertex v) const {
  if (!valid(v))
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
}

void Graph::check_set(const VertexSet& s) const {
  for (Vertex v : s) check_vertex(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<std::string> Graph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
  for (const auto& [v, l] : labels_)
    if (l == name) return v;
  return std::nullopt;
}

std::string Graph::name(Vertex v) const {
  auto l = label(v);
  return l ? *l : std::to_string(v);
}

// ---------------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

GraphBuilder::GraphBuilder(const Graph& g) : adj_(g.adj_), labels_(g.labels_) {}

Vertex GraphBuilder::add_vertex() {
  adj_.emplace_back();
  return static_cast<Vertex>(adj_.size() - 1);
}

void GraphBuilder::check(Vertex v) const {
  if (v < 0 || v >= order())
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::find(a.begin(), a.end(), v) != a.end();
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) throw GraphError("duplicate edge " + edge_text(u, v));
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  return *this;
}

GraphBuilder& GraphBuilder::connect(Vertex u, Vertex v) {
  if (u != v && !has_edge(u, v)) add_edge(u, v);
  return *this;
}

GraphBuilder& GraphBuilder::label(Vertex v, std::string name) {
  check(v);
  labels_[v] = std::move(name);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.adj_ = adj_;
  std::size_t twice = 0;
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    twice += a.size();
  }
  g.edge_count_ = static_cast<int>(twice / 2);
  g.labels_ = labels_;
  return g;
}

// ---------------------------------------------------------------- Path / Cycle

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw GraphError("path must contain at least one vertex");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GraphError("path repeats a vertex");
}

bool Path::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

Path Path::reversed() const { return Path(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend())); }

void Path::validate(const Graph& g) const {
  for (Vertex v : vertices_) g.check_vertex(v);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (!g.has_edge(vertices_[i], vertices_[i + 1]))
      throw GraphError("path step " + edge_text(vertices_[i], vertices_[i + 1]) + " is not an edge");
}

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GraphError("cycle repeats a vertex");
}

bool Cycle::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t Cycle::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw GraphError("vertex " + std::to_string(v) + " is not on the cycle");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Vertex Cycle::next(Vertex v) const { return vertices_[(position(v) + 1) % vertices_.size()]; }

Vertex Cycle::prev(Vertex v) const {
  return vertices_[(position(v) + vertices_.size() - 1) % vertices_.size()];
}

void Cycle::validate(const Graph& g) const {
  for (Vertex v : vertices_) g.check_vertex(v);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Vertex a = vertices_[i], b = vertices_[(i + 1) % vertices_.size()];
    if (!g.has_edge(a, b)) throw GraphError("cycle step " + edge_text(a, b) + " is not an edge");
  }
}

Path segment(const Cycle& c, Vertex x, Vertex y, Direction dir, Openness open) {
  const std::size_t len = c.size();
  std::size_t i = c.position(x);
  const std::size_t j = c.position(y);
  std::vector<Vertex> out;
  out.push_back(c[i]);
  while (i != j) {
    i = dir == Direction::Clockwise ? (i + 1) % len : (i + len - 1) % len;
    out.push_back(c[i]);
  }
  bool drop_left = open == Openness::OpenLeft || open == Openness::Open;
  bool drop_right = open == Openness::OpenRight || open == Openness::Open;
  if (x == y && (drop_left || drop_right)) throw GraphError("segment is empty");
  std::size_t first = drop_left ? 1 : 0;
  std::size_t last = out.size() - (drop_right ? 1 : 0);
  if (first >= last) throw GraphError("segment is empty");
  return Path(std::vector<Vertex>(out.begin() + static_cast<std::ptrdiff_t>(first),
                                  out.begin() + static_cast<std::ptrdiff_t>(last)));
}

// ---------------------------------------------------------------- derived graphs

Subgraph delete_vertices(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  Subgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    out.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  GraphBuilder b(static_cast<int>(out.new_to_old.size()));
  for (auto [u, v] : g.edges()) {
    Vertex a = out.old_to_new[static_cast<std::size_t>(u)], c = out.old_to_new[static_cast<std::size_t>(v)];
    if (a >= 0 && c >= 0) b.add_edge(a, c);
  }
  for (const auto& [v, l] : g.labels()) {
    Vertex nv = out.old_to_new[static_cast<std::size_t>(v)];
    if (nv >= 0) b.label(nv, l);
  }
  out.graph = b.build();
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  g.check_set(keep);
  std::vector<Vertex> drop;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!keep.contains(v)) drop.push_back(v);
  return delete_vertices(g, VertexSet(std::move(drop)));
}

Contraction identify_vertices(const Graph& g, const VertexSet& q) {
  g.check_set(q);
  if (q.empty()) throw GraphError("cannot identify an empty vertex set");
  Contraction out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!q.contains(v)) out.old_to_new[static_cast<std::size_t>(v)] = next++;
  out.merged = next;
  for (Vertex v : q) out.old_to_new[static_cast<std::size_t>(v)] = out.merged;
  GraphBuilder b(next + 1);
  for (auto [u, v] : g.edges())
    b.connect(out.old_to_new[static_cast<std::size_t>(u)], out.old_to_new[static_cast<std::size_t>(v)]);
  for (const auto& [v, l] : g.labels())
    if (!q.contains(v)) b.label(out.old_to_new[static_cast<std::size_t>(v)], l);
  if (q.size() == 1)
    if (auto l = g.label(q.front())) b.label(out.merged, *l);
  out.graph = b.build();
  return out;
}

Contraction contract(const Graph& g, const VertexSet& q) {
  g.check_set(q);
  if (q.empty() || !is_connected(induced_subgraph(g, q).graph))
    throw GraphError("contraction set " + q.to_string() + " does not induce a connected subgraph");
  return identify_vertices(g, q);
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw GraphError("line graph of an edgeless graph");
  // incident[v] lists the indices of edges at v.
  std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[static_cast<std::size_t>(edges[i].first)].push_back(static_cast<Vertex>(i));
    incident[static_cast<std::size_t>(edges[i].second)].push_back(static_cast<Vertex>(i));
  }
  GraphBuilder b(static_cast<int>(edges.size()));
  for (const auto& at : incident)
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j) b.connect(at[i], at[j]);
  return b.build();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    comp[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace cyclab
