#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclab/graph.hpp"

namespace cyclab::families {

/// A generated graph failed one of its construction gates.
class GateFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// K_{k,k}: side A is 0..k-1 (labels a1..ak), side B is k..2k-1 (b1..bk).
Graph k_bipartite(int k);
/// 3-cube on bit strings 000..111; even-weight class is {0,3,5,6}.
Graph q3();
/// Hub 0, rim 1..k in cyclic order.
Graph wheel(int k);
/// Two n-cycles 0..n-1 and n..2n-1 joined by rungs i ~ n+i.
Graph prism(int n);
/// Two n-cycles with i ~ n+i and i ~ n+(i+1)%n.
Graph antiprism(int n);
/// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram on 5..9.
Graph petersen();

/// Replaces each vertex v of a cubic graph by a clique on
/// clique_size*v .. clique_size*v + clique_size-1. The edges at v attach, in
/// ascending order of the far endpoint, to the three lowest clique vertices.
Graph inflate(const Graph& cubic, int clique_size);

/// Clique-inflated Petersen graph. With clique_size 3 this is the 30-vertex
/// cubic claw-free graph with no cycle through labels 1..6 avoiding label 7.
Graph petersen_inflated(int clique_size = 3);

/// The labeled (6,1) configuration on petersen_inflated(): include 1..6, avoid 7.
/// Found by exhaustive search and frozen.
struct SixOneWitness {
  VertexSet include;
  Vertex avoid;
};
SixOneWitness fig2_witness(int clique_size = 3);

/// The 11-vertex graph with a 2-link between T1 and T2 that no 3-link
/// between S1 and S2 refines.
struct Fig1 {
  Graph graph;
  Vertex x1, x2;
  VertexSet s1, s2, t1, t2;
};
/// Throws GateFailure unless all three gates hold.
Fig1 fig1();
/// The transcribed drawing without gate checks.
Fig1 fig1_drawing();

/// Plane triangulation with a labeled exterior triangle.
struct Triangulation {
  Graph graph;
  std::array<Vertex, 3> exterior;
  VertexSet gray;               // five gray vertices of the base figure
  VertexSet witness_include;    // labels 1..4
  Vertex witness_avoid = -1;    // label 5
  VertexSet acyclic_six;        // gray vertices plus k: no cycle through all six
};
/// 11 vertices, 27 edges, kappa 3; no cycle through 1,2,3,4 avoiding 5 and
/// none through acyclic_six.
Triangulation fig3_triangulation();
Triangulation fig3_drawing();
/// Adds t vertices, each inside the current exterior face and joined to its
/// three corners; the new vertex replaces the first corner of the exterior.
Triangulation stack_apex(const Triangulation& base, int t);

/// 2-connected planar graph with a 2-cut: two copies of a wheel glued along a
/// rim edge.
Graph glued_wheels(int k1, int k2);

/// Uniform random simple cubic graph on n (even, >= 4) vertices via the
/// pairing model with rejection.
Graph random_cubic(std::uint64_t seed, int n);

struct FamilySpec {
  enum class Kind { LineCubic, InflateCubic };
  Kind kind = Kind::LineCubic;
  int cubic_order = 10;  // vertices of the underlying cubic graph
  int clique_size = 3;   // InflateCubic only

  /// "line-cubic-N" or "inflate-cubic-N" optionally followed by "-kC".
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
  int order() const;
};

/// 3-connected claw-free graph: a line graph or clique inflation of a random
/// cubic graph, rejection-sampled until both gates pass.
Graph random_claw_free(std::uint64_t seed, const FamilySpec& spec, int max_attempts = 500);

struct ClawFreeSample {
  FamilySpec spec;
  Graph graph;
};

/// Random claw-free corpus graph of order in [lo, hi] drawn from a mixture of
/// the two families.
ClawFreeSample random_claw_free_in_range(std::uint64_t seed, int lo, int hi);

}  // namespace cyclab::families
