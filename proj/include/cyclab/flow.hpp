#pragma once

#include <vector>

#include "cyclab/graph.hpp"

// Vertex-split unit-capacity flow network. Max-flow value equals the maximum
// number of vertex-disjoint source-to-sink paths.
namespace cyclab::flow {

enum class TerminalMode {
  Set,   // each member is a unit-capacity endpoint (one path per vertex)
  Apex,  // a single vertex shared by every path
};

struct Terminals {
  VertexSet vertices;
  TerminalMode mode = TerminalMode::Set;

  static Terminals set(VertexSet s) { return {std::move(s), TerminalMode::Set}; }
  static Terminals apex(Vertex v) { return {VertexSet{v}, TerminalMode::Apex}; }
};

struct Query {
  Terminals sources;
  Terminals sinks;
  VertexSet blocked;
  int limit = 0;  // stop after this many paths; 0 means as many as possible
};

/// Paths run from a source to a sink. Source vertices are never entered from
/// the graph and sink vertices never left, so each path meets the source
/// side only at its first vertex and the sink side only at its last.
/// Augmentation is BFS with ascending-id tie-breaks; paths are returned in
/// order of their first vertex (then first hop for an apex source).
std::vector<Path> disjoint_paths(const Graph& g, const Query& q);

/// Number of internally disjoint s-t paths, capped at `limit` when > 0.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit = 0);

}  // namespace cyclab::flow
