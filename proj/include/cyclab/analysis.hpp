#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cyclab/graph.hpp"

namespace cyclab {

/// A theorem hypothesis did not hold for the given input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Induced K_{1,3}: center adjacent to all leaves, leaves pairwise non-adjacent.
struct ClawWitness {
  Vertex center = -1;
  std::array<Vertex, 3> leaves{};
  friend bool operator==(const ClawWitness&, const ClawWitness&) = default;
};

struct CutSet {
  VertexSet vertices;
  std::vector<VertexSet> components;  // components of G - vertices, by smallest member
};

/// Lexicographically smallest claw (center first, then sorted leaves).
std::optional<ClawWitness> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// Vertex connectivity; K_n gives n-1, disconnected graphs give 0.
/// Throws GraphError for graphs with fewer than two vertices.
int vertex_connectivity(const Graph& g);

inline constexpr int kDefaultCutSizeGuard = 4;

/// Every `size`-subset whose removal disconnects g, in lexicographic order.
/// Sizes above kDefaultCutSizeGuard require allow_large.
std::vector<CutSet> enumerate_cuts(const Graph& g, int size, bool allow_large = false);

struct ThreeCutVerdict {
  bool pass = false;
  VertexSet cut;
  std::vector<VertexSet> components;
  std::vector<VertexSet> cutvertices;  // per component, cutvertices of G[component]
};

/// Checks that G - t has exactly two components, neither with a cutvertex.
/// Throws PreconditionError unless g is 3-connected and claw-free and t is a 3-cut.
ThreeCutVerdict check_three_cut_structure(const Graph& g, const VertexSet& t);

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices),
/// each sorted, ordered by smallest member.
std::vector<VertexSet> biconnected_components(const Graph& g);
VertexSet cut_vertices(const Graph& g);

}  // namespace cyclab
