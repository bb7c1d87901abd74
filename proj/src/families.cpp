#include "cyclab/families.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <string_view>

#include "cyclab/analysis.hpp"
#include "cyclab/cycles.hpp"
#include "cyclab/links.hpp"

namespace cyclab::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GateFailure(what);
}

void check_min(int value, int min, const char* name) {
  if (value < min) throw std::invalid_argument(std::string(name) + " must be at least " + std::to_string(min));
}

// Fisher-Yates with a plain modulus so the stream is identical on every
// standard library.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace

Graph complete(int n) {
  check_min(n, 1, "n");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph cycle(int n) {
  check_min(n, 3, "n");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph path(int n) {
  check_min(n, 1, "n");
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph k_bipartite(int k) {
  check_min(k, 1, "k");
  GraphBuilder b(2 * k);
  for (int i = 0; i < k; ++i) {
    b.label(i, "a" + std::to_string(i + 1));
    b.label(k + i, "b" + std::to_string(i + 1));
    for (int j = 0; j < k; ++j) b.add_edge(i, k + j);
  }
  return b.build();
}

Graph q3() {
  GraphBuilder b(8);
  for (int v = 0; v < 8; ++v) {
    b.label(v, std::to_string(v >> 2 & 1) + std::to_string(v >> 1 & 1) + std::to_string(v & 1));
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((v ^ bit) > v) b.add_edge(v, v ^ bit);
  }
  return b.build();
}

Graph wheel(int k) {
  check_min(k, 3, "k");
  GraphBuilder b(k + 1);
  for (int i = 1; i <= k; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, i % k + 1);
  }
  return b.build();
}

Graph prism(int n) {
  check_min(n, 3, "n");
  GraphBuilder b(2 * n);
  for (int i = 0; i < n; ++i) {
    b.add_edge(i, (i + 1) % n);
    b.add_edge(n + i, n + (i + 1) % n);
    b.add_edge(i, n + i);
  }
  return b.build();
}

Graph antiprism(int n) {
  check_min(n, 3, "n");
  GraphBuilder b(2 * n);
  for (int i = 0; i < n; ++i) {
    b.add_edge(i, (i + 1) % n);
    b.add_edge(n + i, n + (i + 1) % n);
    b.add_edge(i, n + i);
    b.add_edge(i, n + (i + 1) % n);
  }
  return b.build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph inflate(const Graph& cubic, int clique_size) {
  check_min(clique_size, 3, "clique size");
  for (Vertex v = 0; v < cubic.order(); ++v)
    if (cubic.degree(v) != 3) throw std::invalid_argument("inflate needs a cubic graph; vertex " +
                                                          std::to_string(v) + " has degree " +
                                                          std::to_string(cubic.degree(v)));
  const int c = clique_size;
  GraphBuilder b(cubic.order() * c);
  for (Vertex v = 0; v < cubic.order(); ++v)
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j) b.add_edge(c * v + i, c * v + j);
  for (auto [u, v] : cubic.edges()) {
    const auto& nu = cubic.neighbors(u);
    const auto& nv = cubic.neighbors(v);
    int ju = static_cast<int>(std::find(nu.begin(), nu.end(), v) - nu.begin());
    int jv = static_cast<int>(std::find(nv.begin(), nv.end(), u) - nv.begin());
    b.add_edge(c * u + ju, c * v + jv);
  }
  return b.build();
}

namespace {

// First failing (6,1) configuration of the exhaustive C(6,1) search on the
// 3-inflated Petersen graph, stored as (Petersen vertex, clique slot) pairs.
// Include vertices carry labels 1..6 in id order, the avoided vertex 7.
constexpr std::array<std::pair<int, int>, 6> kFig2Include{{{0, 1}, {1, 0}, {3, 0}, {7, 0}, {8, 0}, {9, 0}}};
constexpr std::pair<int, int> kFig2Avoid{0, 0};

}  // namespace

SixOneWitness fig2_witness(int clique_size) {
  check_min(clique_size, 3, "clique size");
  std::vector<Vertex> include;
  for (auto [v, j] : kFig2Include) include.push_back(clique_size * v + j);
  return {VertexSet(include), clique_size * kFig2Avoid.first + kFig2Avoid.second};
}

Graph petersen_inflated(int clique_size) {
  Graph g = inflate(petersen(), clique_size);
  auto w = fig2_witness(clique_size);
  GraphBuilder b(g);
  int label = 1;
  for (Vertex v : w.include) b.label(v, std::to_string(label++));
  b.label(w.avoid, std::to_string(label));
  return b.build();
}

Fig1 fig1_drawing() {
  enum : Vertex { x1, u1, u2, u3, v1, v2, v3, w1, w2, w3, x2 };
  GraphBuilder b(11);
  const char* names[] = {"x1", "u1", "u2", "u3", "v1", "v2", "v3", "w1", "w2", "w3", "x2"};
  for (Vertex v = 0; v < 11; ++v) b.label(v, names[v]);
  const Edge edges[] = {{x1, u1}, {x1, u2}, {x1, u3}, {u2, v2}, {u2, v3}, {u1, v1}, {u1, v3},
                        {u3, v2}, {u3, v1}, {v2, w2}, {v2, w1}, {v1, w2}, {v1, w1}, {v1, w3},
                        {v3, w3}, {v2, w3}, {w1, x2}, {w2, x2}, {w3, x2}};
  for (auto [u, v] : edges) b.add_edge(u, v);
  return Fig1{b.build(), x1, x2, {u1, u2, u3}, {w1, w2, w3}, {u1, u2}, {w1, w2}};
}

Fig1 fig1() {
  static const Fig1 cached = [] {
    Fig1 f = fig1_drawing();
    require(is_k_linked_sets(f.graph, f.t1, f.t2, 2), "fig1: T1 and T2 are not 2-linked");
    require(is_k_linked_sets(f.graph, f.s1, f.s2, 3), "fig1: S1 and S2 are not 3-linked");
    require(verify_no_refining_link(f.graph, f.s1, f.s2, f.t1, f.t2, 3), "fig1: a refining 3-link exists");
    return f;
  }();
  return cached;
}

namespace {

void check_triangulation(const Triangulation& t) {
  const Graph& g = t.graph;
  require(g.size() == 3 * g.order() - 6, "triangulation: edge count is not 3n-6");
  require(vertex_connectivity(g) == 3, "triangulation: connectivity is not 3");
  require(!find_cycle(g, {t.witness_include, VertexSet{t.witness_avoid}}),
          "triangulation: a cycle through 1,2,3,4 avoiding 5 exists");
  require(!find_cycle(g, {t.acyclic_six, {}}), "triangulation: a cycle through the six degree-3 vertices exists");
}

}  // namespace

Triangulation fig3_drawing() {
  enum : Vertex { A, I, H, D, J, B, C, E, F, G, K };
  GraphBuilder b(11);
  const char* names[] = {"5", "1", "2", "3", "4", "b", "c", "e", "f", "g", "k"};
  for (Vertex v = 0; v < 11; ++v) b.label(v, names[v]);
  const Edge edges[] = {{A, B}, {A, C}, {B, C}, {D, E}, {E, F}, {F, G}, {G, C}, {A, E}, {A, F},
                        {A, G}, {A, H}, {A, I}, {A, D}, {H, F}, {F, J}, {J, B}, {H, E}, {E, J},
                        {I, F}, {F, K}, {K, B}, {I, G}, {G, K}, {D, B}, {B, E}, {B, F}, {B, G}};
  for (auto [u, v] : edges) b.add_edge(u, v);
  return Triangulation{b.build(), {A, B, C}, {C, D, H, I, J}, {I, H, D, J}, A, {C, D, H, I, J, K}};
}

Triangulation fig3_triangulation() {
  static const Triangulation cached = [] {
    Triangulation t = fig3_drawing();
    check_triangulation(t);
    return t;
  }();
  return cached;
}

Triangulation stack_apex(const Triangulation& base, int t) {
  check_min(t, 0, "t");
  if (t == 0) return base;
  GraphBuilder b(base.graph);
  auto ext = base.exterior;
  require(b.has_edge(ext[0], ext[1]) && b.has_edge(ext[1], ext[2]) && b.has_edge(ext[0], ext[2]),
          "stack_apex: exterior is not a triangle");
  for (int i = 0; i < t; ++i) {
    Vertex z = b.add_vertex();
    for (Vertex v : ext) b.add_edge(z, v);
    ext = {ext[1], ext[2], z};
  }
  Triangulation out{b.build(), ext, base.gray, base.witness_include, base.witness_avoid, base.acyclic_six};
  check_triangulation(out);
  return out;
}

Graph glued_wheels(int k1, int k2) {
  check_min(k1, 3, "k1");
  check_min(k2, 3, "k2");
  // The second wheel's rim edge (1,2) is identified with the first's rim edge (1,2).
  Graph w1 = wheel(k1);
  Graph w2 = wheel(k2);
  const int n1 = w1.order();
  std::vector<Vertex> map(static_cast<std::size_t>(w2.order()));
  int next = n1;
  for (Vertex v = 0; v < w2.order(); ++v) map[static_cast<std::size_t>(v)] = v == 1 ? 1 : v == 2 ? 2 : next++;
  GraphBuilder b(next);
  for (auto [u, v] : w1.edges()) b.add_edge(u, v);
  for (auto [u, v] : w2.edges()) b.connect(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
  return b.build();
}

Graph random_cubic(std::uint64_t seed, int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("cubic order must be even and at least 4");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points(static_cast<std::size_t>(3 * n));
  for (;;) {
    for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
    shuffle(points, rng);
    GraphBuilder b(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex u = points[i], v = points[i + 1];
      if (u == v || b.has_edge(u, v)) simple = false;
      else b.add_edge(u, v);
    }
    if (simple) return b.build();
  }
}

FamilySpec FamilySpec::parse(const std::string& text) {
  auto fail = [&] { return std::invalid_argument("bad family '" + text + "' (want line-cubic-N or inflate-cubic-N[-kC])"); };
  FamilySpec spec;
  std::string_view rest = text;
  if (rest.starts_with("line-cubic-")) {
    spec.kind = Kind::LineCubic;
    rest.remove_prefix(11);
  } else if (rest.starts_with("inflate-cubic-")) {
    spec.kind = Kind::InflateCubic;
    rest.remove_prefix(14);
  } else {
    throw fail();
  }
  auto number = [&](std::string_view s) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || p != s.data() + s.size()) throw fail();
    return value;
  };
  auto dash = rest.find("-k");
  if (dash == std::string_view::npos) {
    spec.cubic_order = number(rest);
  } else {
    if (spec.kind != Kind::InflateCubic) throw fail();
    spec.cubic_order = number(rest.substr(0, dash));
    spec.clique_size = number(rest.substr(dash + 2));
  }
  if (spec.cubic_order < 4 || spec.cubic_order % 2 != 0 || spec.clique_size < 3) throw fail();
  return spec;
}

std::string FamilySpec::to_string() const {
  if (kind == Kind::LineCubic) return "line-cubic-" + std::to_string(cubic_order);
  std::string s = "inflate-cubic-" + std::to_string(cubic_order);
  if (clique_size != 3) s += "-k" + std::to_string(clique_size);
  return s;
}

int FamilySpec::order() const {
  return kind == Kind::LineCubic ? cubic_order * 3 / 2 : cubic_order * clique_size;
}

Graph random_claw_free(std::uint64_t seed, const FamilySpec& spec, int max_attempts) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph cubic = random_cubic(rng(), spec.cubic_order);
    Graph g = spec.kind == FamilySpec::Kind::LineCubic ? line_graph(cubic) : inflate(cubic, spec.clique_size);
    if (is_claw_free(g) && vertex_connectivity(g) >= 3) return g;
  }
  throw GateFailure("random_claw_free: no 3-connected sample for " + spec.to_string() + " after " +
                    std::to_string(max_attempts) + " attempts");
}

ClawFreeSample random_claw_free_in_range(std::uint64_t seed, int lo, int hi) {
  std::vector<FamilySpec> options;
  for (int n = 4; n <= hi; n += 2) {
    FamilySpec line{FamilySpec::Kind::LineCubic, n, 3};
    if (n >= 6 && line.order() >= lo && line.order() <= hi) options.push_back(line);
    for (int c = 3; c * n <= hi; ++c) {
      FamilySpec inf{FamilySpec::Kind::InflateCubic, n, c};
      if (inf.order() >= lo) options.push_back(inf);
    }
  }
  if (options.empty()) throw std::invalid_argument("no claw-free family has order in the requested range");
  std::mt19937_64 rng(seed);
  const FamilySpec& spec = options[static_cast<std::size_t>(rng() % options.size())];
  return {spec, random_claw_free(rng(), spec)};
}

}  // namespace cyclab::families
