#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclab/analysis.hpp"
#include "cyclab/graph.hpp"

namespace cyclab {

/// k internally disjoint paths from `apex`, each meeting `target` exactly
/// at its last vertex.
struct Fan {
  Vertex apex = -1;
  VertexSet target;
  std::vector<Path> paths;

  VertexSet endpoints() const;
};

/// k vertex-disjoint paths, each meeting side_a only at its first vertex
/// and side_b only at its last.
struct Link {
  VertexSet side_a;
  VertexSet side_b;
  std::vector<Path> paths;

  VertexSet starts() const;
  VertexSet ends() const;
};

/// A named extension hypothesis failed, e.g. "S1 and S2 are k-linked".
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : PreconditionError("hypothesis failed: " + hypothesis + (detail.empty() ? "" : " (" + detail + ")")),
        hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Throw GraphError describing the first violated invariant.
void validate_fan(const Graph& g, const Fan& fan);
void validate_link(const Graph& g, const Link& link);

/// k fully disjoint a->b paths avoiding `forbidden`, or nullopt.
std::optional<Link> disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b, int k,
                                   const VertexSet& forbidden = {});
std::optional<Fan> find_fan(const Graph& g, Vertex v, const VertexSet& s, int k,
                            const VertexSet& forbidden = {});

bool is_k_linked_vertex(const Graph& g, Vertex v, const VertexSet& s, int k);
bool is_k_linked_sets(const Graph& g, const VertexSet& s1, const VertexSet& s2, int k);

struct ExtensionOptions {
  bool check_hypotheses = true;
};

/// Auxiliary: k paths in the graph with S\T identified into one vertex.
/// Direct: that graph had a separator below k (every (k-1)-link of T runs
/// through S\T), so candidates s were tried one by one with a flow on T + {s}.
enum class ExtensionMethod { Auxiliary, Direct };

struct FanExtension {
  Vertex added = -1;
  Fan fan;
  ExtensionMethod method = ExtensionMethod::Auxiliary;
};

struct LinkExtension {
  Vertex added_a = -1;
  Vertex added_b = -1;
  Link link;
  ExtensionMethod method = ExtensionMethod::Auxiliary;
};

struct MultiLinkExtension {
  VertexSet added_a;
  VertexSet added_b;
  Link link;
  ExtensionMethod method = ExtensionMethod::Auxiliary;  // Direct if any step was
};

/// No candidate extends T: the input contradicts the theorem.
class NoExtension : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Perfect's theorem: given a (k-1)-fan from x into t, returns s in s\t and a
/// k-fan from x whose endpoint set is exactly t + {s}.
FanExtension extend_fan(const Graph& g, Vertex x, const VertexSet& s, const VertexSet& t, int k,
                        ExtensionOptions opts = {});

/// Two-sided version: endpoint sets become exactly t1 + {a} and t2 + {b}.
LinkExtension extend_link(const Graph& g, const VertexSet& s1, const VertexSet& s2, const VertexSet& t1,
                          const VertexSet& t2, int k, ExtensionOptions opts = {});

/// Extends |t_i| = k - t to a k-link by t single-vertex steps.
MultiLinkExtension extend_link_by_t(const Graph& g, const VertexSet& s1, const VertexSet& s2,
                                    const VertexSet& t1, const VertexSet& t2, int k, int t,
                                    ExtensionOptions opts = {});

inline constexpr int kRefiningSearchMaxOrder = 16;

/// True iff no k disjoint s1-s2 paths contain k-1 paths linking t1 to t2.
/// Exhaustive; g may have at most kRefiningSearchMaxOrder vertices.
bool verify_no_refining_link(const Graph& g, const VertexSet& s1, const VertexSet& s2, const VertexSet& t1,
                             const VertexSet& t2, int k);

namespace exhaustive {

/// Brute-force path-system search, independent of the flow network.
/// Intended for small graphs only.
bool sets_linked(const Graph& g, const VertexSet& s1, const VertexSet& s2, int k);
bool vertex_linked(const Graph& g, Vertex v, const VertexSet& s, int k);

}  // namespace exhaustive

}  // namespace cyclab
