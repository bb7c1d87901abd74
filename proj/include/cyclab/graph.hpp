#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input: bad ids, loops, duplicate edges,
/// broken path/cycle geometry.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  Vertex front() const { return ids_.front(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  VertexSet with(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Simple undirected graph on dense ids 0..n-1 with sorted adjacency.
/// Immutable once built; use GraphBuilder to construct.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool valid(Vertex v) const { return v >= 0 && v < order(); }
  void check_vertex(Vertex v) const;
  void check_set(const VertexSet& s) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::map<Vertex, std::string>& labels() const { return labels_; }
  std::optional<std::string> label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view name) const;
  /// Label if present, otherwise the decimal id.
  std::string name(Vertex v) const;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
  std::map<Vertex, std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return static_cast<int>(adj_.size()); }
  Vertex add_vertex();
  /// Throws GraphError on loops, duplicates or out-of-range ids.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  /// Adds uv unless it is already present or u == v.
  GraphBuilder& connect(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  GraphBuilder& label(Vertex v, std::string name);
  Graph build() const;

 private:
  void check(Vertex v) const;
  std::vector<std::vector<Vertex>> adj_;
  std::map<Vertex, std::string> labels_;
};

/// Ordered vertex sequence with distinct entries.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool contains(Vertex v) const;
  Path reversed() const;

  /// Throws GraphError unless consecutive vertices are adjacent in g.
  void validate(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

enum class Direction { Clockwise, Counterclockwise };
enum class Openness { Closed, OpenLeft, OpenRight, Open };

/// Cycle stored in its clockwise traversal order.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<Vertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool contains(Vertex v) const;
  std::size_t position(Vertex v) const;
  Vertex next(Vertex v) const;
  Vertex prev(Vertex v) const;
  VertexSet vertex_set() const { return VertexSet(vertices_); }

  void validate(const Graph& g) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// C[x,y] and its variants. Closed with x == y yields the single vertex x.
Path segment(const Cycle& c, Vertex x, Vertex y, Direction dir = Direction::Clockwise,
             Openness open = Openness::Closed);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;
};

Subgraph delete_vertices(const Graph& g, const VertexSet& s);
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

struct Contraction {
  Graph graph;
  std::vector<Vertex> old_to_new;
  Vertex merged = -1;  // id of the vertex replacing q (always the last id)
};

/// Merges q into one vertex regardless of whether g[q] is connected.
/// Loops and parallel edges are dropped.
Contraction identify_vertices(const Graph& g, const VertexSet& q);

/// G/Q: requires g[q] connected.
Contraction contract(const Graph& g, const VertexSet& q);

Graph line_graph(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace cyclab
