#include "cyclab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "cyclab/analysis.hpp"
#include "cyclab/families.hpp"
#include "cyclab/links.hpp"

namespace cyclab::harness {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Error: return "ERROR";
  }
  return "ERROR";
}

json to_json(const VertexSet& s) { return json(s.ids()); }
json to_json(const Path& p) { return json(p.vertices()); }
json to_json(const Cycle& c) { return json(c.vertices()); }
json to_json(const CycleQuery& q) { return json{{"include", to_json(q.include)}, {"avoid", to_json(q.avoid)}}; }

namespace {

json link_json(const Link& link) {
  json paths = json::array();
  for (const auto& p : link.paths) paths.push_back(to_json(p));
  return json{{"side_a", to_json(link.side_a)}, {"side_b", to_json(link.side_b)}, {"paths", paths}};
}

json fan_json(const Fan& fan) {
  json paths = json::array();
  for (const auto& p : fan.paths) paths.push_back(to_json(p));
  return json{{"apex", fan.apex}, {"target", to_json(fan.target)}, {"paths", paths}};
}

json wheel_json(const WheelSubdivision& w) {
  json spokes = json::array();
  for (const auto& p : w.spokes) spokes.push_back(to_json(p));
  return json{{"hub", w.hub}, {"rim", to_json(w.rim)}, {"spokes", spokes}};
}

std::string method_name(ExtensionMethod m) { return m == ExtensionMethod::Auxiliary ? "auxiliary" : "direct"; }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  std::vector<Vertex> sample(std::vector<Vertex> pool, int k) {
    for (int i = 0; i < k; ++i) {
      int j = i + below(static_cast<int>(pool.size()) - i);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
  }
  VertexSet sample_set(const VertexSet& pool, int k) { return VertexSet(sample(pool.ids(), k)); }

 private:
  std::mt19937_64 gen_;
};

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = v;
  return out;
}

VertexSet all_but(const Graph& g, const VertexSet& s) { return VertexSet(all_vertices(g)).minus(s); }

using Clock = std::chrono::steady_clock;

InstanceResult timed(const std::function<InstanceResult()>& fn) {
  auto start = Clock::now();
  InstanceResult r;
  try {
    r = fn();
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::Error;
    r.detail = std::string("budget: ") + e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

// Runs count instances on up to `threads` workers; results keep index order.
std::vector<InstanceResult> run_all(int count, unsigned threads, const std::function<InstanceResult(int)>& make) {
  std::vector<InstanceResult> out(static_cast<std::size_t>(count));
  auto one = [&](int i) {
    out[static_cast<std::size_t>(i)] = timed([&] { return make(i); });
    if (out[static_cast<std::size_t>(i)].id.empty()) out[static_cast<std::size_t>(i)].id = std::to_string(i);
  };
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) one(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<unsigned>(threads, static_cast<unsigned>(count)); ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) one(i);
    });
  pool.clear();
  return out;
}

CorpusGraph gnp(Rng& rng) {
  for (;;) {
    int n = rng.between(7, 11);
    int pct = rng.between(35, 70);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.below(100) < pct) b.add_edge(u, v);
    Graph g = b.build();
    if (is_connected(g)) return {"gnp-" + std::to_string(n) + "-" + std::to_string(pct), 0, g};
  }
}

CorpusGraph link_host(Rng& rng) {
  int pick = rng.below(10);
  if (pick < 6) return gnp(rng);
  if (pick < 8) return {"line-petersen", 0, line_graph(families::petersen())};
  return claw_free_sample(rng.next(), 12, 21);
}

// Appends every (a, b, k) on which flow and exhaustive search disagree.
void cross_check_mismatches(const Graph& g, const std::vector<std::tuple<VertexSet, VertexSet, int>>& set_queries,
                            json& log) {
  for (const auto& [a, b, k] : set_queries) {
    bool flow = is_k_linked_sets(g, a, b, k);
    bool brute = exhaustive::sets_linked(g, a, b, k);
    if (flow != brute)
      log.push_back(json{{"a", to_json(a)}, {"b", to_json(b)}, {"k", k}, {"flow", flow}, {"exhaustive", brute}});
  }
}

InstanceResult cycle_property(const std::string& id, const CorpusGraph& host, int m, int n, Verdict expected,
                              std::uint64_t budget) {
  InstanceResult r;
  r.id = id;
  r.expected = expected;
  r.params = {{"family", host.family}, {"seed", host.seed}, {"n", host.graph.order()}, {"m", m}, {"avoid", n}};
  CmnOptions opts;
  opts.budget = budget;
  auto res = has_property_cmn(host.graph, m, n, opts);
  r.verdict = res.pass ? Verdict::Pass : Verdict::Fail;
  if (res.witness) {
    r.witness = to_json(*res.witness);
    r.witness["certificate"] = res.certificate;
  }
  r.detail = std::to_string(res.queries) + " queries";
  return r;
}

InstanceResult single_query(const std::string& id, const CorpusGraph& host, const CycleQuery& q, Verdict expected) {
  InstanceResult r;
  r.id = id;
  r.expected = expected;
  r.params = {{"family", host.family}, {"n", host.graph.order()}, {"query", to_json(q)}};
  auto c = find_cycle(host.graph, q);
  if (c) {
    c->validate(host.graph);
    r.verdict = Verdict::Pass;
    r.detail = "cycle of length " + std::to_string(c->size());
    r.witness = json{{"cycle", to_json(*c)}};
  } else {
    r.verdict = Verdict::Fail;
    r.witness = to_json(q);
    r.detail = "no cycle";
  }
  return r;
}

int trials_or(const SuiteConfig& cfg, int fallback) { return cfg.trials >= 0 ? cfg.trials : fallback; }

// ------------------------------------------------------------ suites

std::vector<InstanceResult> suite_perfect(const SuiteConfig& cfg) {
  return run_all(trials_or(cfg, 200), cfg.threads, [&](int i) {
    auto r = run_fan_instance(random_fan_instance(mix_seed(cfg.seed, static_cast<std::uint64_t>(i))));
    r.id = "fan-" + std::to_string(i);
    return r;
  });
}

std::vector<InstanceResult> suite_strong_perfect(const SuiteConfig& cfg) {
  const int trials = trials_or(cfg, 200);
  return run_all(2 * trials, cfg.threads, [&](int i) {
    const int t = i < trials ? 1 : 2;
    const int j = i < trials ? i : i - trials;
    auto r = run_link_instance(random_link_instance(mix_seed(cfg.seed + static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(j)), t));
    r.id = (t == 1 ? "link-" : "link-t2-") + std::to_string(j);
    return r;
  });
}

std::vector<InstanceResult> suite_fig1(const SuiteConfig& cfg) {
  const auto f = families::fig1_drawing();
  const json params{{"family", "fig1"}, {"n", f.graph.order()}, {"m", f.graph.size()}};
  std::vector<std::function<InstanceResult()>> checks{
      [&] {
        InstanceResult r;
        r.id = "t1-t2-2-linked";
        r.params = params;
        auto link = disjoint_paths(f.graph, f.t1, f.t2, 2);
        r.verdict = link ? Verdict::Pass : Verdict::Fail;
        r.witness = link ? link_json(*link) : json{{"t1", to_json(f.t1)}, {"t2", to_json(f.t2)}};
        return r;
      },
      [&] {
        InstanceResult r;
        r.id = "s1-s2-3-linked";
        r.params = params;
        auto link = disjoint_paths(f.graph, f.s1, f.s2, 3);
        r.verdict = link ? Verdict::Pass : Verdict::Fail;
        r.witness = link ? link_json(*link) : json{{"s1", to_json(f.s1)}, {"s2", to_json(f.s2)}};
        return r;
      },
      [&] {
        InstanceResult r;
        r.id = "no-refining-3-link";
        r.params = params;
        bool none = verify_no_refining_link(f.graph, f.s1, f.s2, f.t1, f.t2, 3);
        r.verdict = none ? Verdict::Pass : Verdict::Fail;
        r.witness = json{{"s1", to_json(f.s1)}, {"s2", to_json(f.s2)}, {"t1", to_json(f.t1)}, {"t2", to_json(f.t2)}};
        return r;
      },
  };
  return run_all(static_cast<int>(checks.size()), cfg.threads, [&](int i) { return checks[static_cast<std::size_t>(i)](); });
}

std::vector<InstanceResult> suite_claw_free(const SuiteConfig& cfg, int m) {
  return run_all(trials_or(cfg, 200), cfg.threads, [&](int i) {
    auto r = claw_free_cycle_trial(mix_seed(cfg.seed + static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(i)), m);
    r.id = "trial-" + std::to_string(i);
    return r;
  });
}

std::vector<InstanceResult> suite_c61_sharp(const SuiteConfig& cfg) {
  const CorpusGraph host{"petersen-inflated-3", 0, families::petersen_inflated(3)};
  const auto w = families::fig2_witness(3);
  std::vector<std::function<InstanceResult()>> checks;
  checks.push_back([&] {
    auto r = cycle_property("c61-exhaustive", host, 6, 1, Verdict::Fail, cfg.budget);
    if (r.verdict == Verdict::Fail) {
      bool frozen = r.witness["include"] == to_json(w.include) && r.witness["avoid"] == json::array({w.avoid});
      r.detail += frozen ? ", first failure is the frozen witness" : ", first failure differs from the frozen witness";
    }
    return r;
  });
  checks.push_back([&] { return single_query("frozen-witness", host, {w.include, VertexSet{w.avoid}}, Verdict::Fail); });
  for (Vertex drop : w.include)
    checks.push_back([&, drop] {
      return single_query("frozen-without-" + host.graph.name(drop), host,
                          {w.include.minus(VertexSet{drop}), VertexSet{w.avoid}}, Verdict::Pass);
    });
  return run_all(static_cast<int>(checks.size()), cfg.threads, [&](int i) { return checks[static_cast<std::size_t>(i)](); });
}

std::vector<InstanceResult> suite_planar_c31(const SuiteConfig& cfg) {
  auto good = planar_three_connected_corpus();
  auto bad = planar_two_cut_corpus();
  const int total = static_cast<int>(good.size() + bad.size());
  return run_all(total, cfg.threads, [&](int i) {
    const bool three = i < static_cast<int>(good.size());
    const auto& host = three ? good[static_cast<std::size_t>(i)] : bad[static_cast<std::size_t>(i) - good.size()];
    auto r = cycle_property(host.family, host, 3, 1, three ? Verdict::Pass : Verdict::Fail, cfg.budget);
    r.params["kappa"] = vertex_connectivity(host.graph);
    return r;
  });
}

std::vector<InstanceResult> suite_lemma_3cut(const SuiteConfig& cfg) {
  auto corpus = claw_free_corpus(cfg.seed, trials_or(cfg, 20), 30);
  return run_all(static_cast<int>(corpus.size()), cfg.threads, [&](int i) {
    const auto& host = corpus[static_cast<std::size_t>(i)];
    InstanceResult r;
    r.id = host.family + "#" + std::to_string(i);
    r.params = {{"family", host.family}, {"seed", host.seed}, {"n", host.graph.order()}};
    auto cuts = enumerate_cuts(host.graph, 3);
    r.params["cuts"] = cuts.size();
    r.verdict = Verdict::Pass;
    for (const auto& cut : cuts) {
      auto v = check_three_cut_structure(host.graph, cut.vertices);
      if (!v.pass) {
        r.verdict = Verdict::Fail;
        json comps = json::array();
        for (const auto& c : v.components) comps.push_back(to_json(c));
        json cvs = json::array();
        for (const auto& c : v.cutvertices) cvs.push_back(to_json(c));
        r.witness = {{"cut", to_json(cut.vertices)}, {"components", comps}, {"cutvertices", cvs}};
        break;
      }
    }
    r.detail = std::to_string(cuts.size()) + " 3-cuts";
    return r;
  });
}

std::vector<InstanceResult> suite_wheel_minor(const SuiteConfig& cfg) {
  auto corpus = claw_free_corpus(cfg.seed, trials_or(cfg, 8), 30);
  const int per = 3;
  return run_all(static_cast<int>(corpus.size()) * per, cfg.threads, [&](int idx) {
    const auto& host = corpus[static_cast<std::size_t>(idx / per)];
    const Graph& g = host.graph;
    const int part = idx % per + 1;
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(idx)));
    InstanceResult r;
    r.id = host.family + "#" + std::to_string(idx / per) + "/part" + std::to_string(part);
    r.params = {{"family", host.family}, {"seed", host.seed}, {"n", g.order()}, {"part", part}};
    r.verdict = Verdict::Pass;
    json found = json::array();
    auto fail = [&](json w, std::string why) {
      r.verdict = Verdict::Fail;
      r.witness = std::move(w);
      r.detail = std::move(why);
    };
    if (part == 1) {
      Vertex top = 0;
      for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(top)) top = v;
      for (int k = 3; k <= 5 && r.verdict == Verdict::Pass; ++k) {
        if (g.degree(top) >= k) {
          auto w = find_wheel_subdivision(g, top, k);
          if (!w) fail({{"hub", top}, {"k", k}}, "no wheel despite degree");
          else validate_wheel(g, *w);
        } else {
          try {
            find_wheel_subdivision(g, top, k);
            fail({{"hub", top}, {"k", k}}, "degree shortfall not reported");
          } catch (const InsufficientDegree&) {
          }
        }
      }
      r.params["max_degree"] = g.degree(top);
    } else if (part == 2) {
      for (Vertex z : rng.sample(all_vertices(g), std::min(5, g.order()))) {
        for (int k = 3; k <= std::min(5, g.degree(z)) && r.verdict == Verdict::Pass; ++k) {
          auto w = find_wheel_subdivision(g, z, k);
          if (!w) {
            fail({{"hub", z}, {"k", k}}, "no wheel with this hub");
          } else {
            validate_wheel(g, *w);
            found.push_back(wheel_json(*w));
          }
        }
      }
      r.witness = r.verdict == Verdict::Pass ? json{{"wheels", found}} : r.witness;
    } else {
      VertexSet six(rng.sample(all_vertices(g), 6));
      r.params["six"] = to_json(six);
      for (Vertex z : six) {
        auto w = find_w3_through(g, z, six.minus(VertexSet{z}));
        if (!w) {
          fail({{"hub", z}, {"rim_vertices", to_json(six.minus(VertexSet{z}))}}, "no W3 through the other five");
          break;
        }
        validate_wheel(g, *w);
        found.push_back(wheel_json(*w));
      }
      if (r.verdict == Verdict::Pass) r.witness = json{{"wheels", found}};
    }
    return r;
  });
}

std::vector<InstanceResult> suite_negatives(const SuiteConfig& cfg) {
  const CorpusGraph k33{"k-bipartite-3", 0, families::k_bipartite(3)};
  const CorpusGraph k44{"k-bipartite-4", 0, families::k_bipartite(4)};
  const CorpusGraph cube{"q3", 0, families::q3()};
  const auto fig3 = families::fig3_drawing();
  const CorpusGraph tri{"fig3", 0, fig3.graph};
  std::vector<std::function<InstanceResult()>> checks{
      [&] { return cycle_property("k33-c31", k33, 3, 1, Verdict::Fail, cfg.budget); },
      [&] { return single_query("k33-side", k33, {{3, 4, 5}, {0}}, Verdict::Fail); },
      [&] { return cycle_property("k44-c41", k44, 4, 1, Verdict::Fail, cfg.budget); },
      [&] { return single_query("k44-side", k44, {{4, 5, 6, 7}, {0}}, Verdict::Fail); },
      [&] { return cycle_property("q3-c41", cube, 4, 1, Verdict::Fail, cfg.budget); },
      [&] { return single_query("q3-class", cube, {{0, 3, 5, 6}, {7}}, Verdict::Fail); },
      [&] { return cycle_property("fig3-c41", tri, 4, 1, Verdict::Fail, cfg.budget); },
      [&] { return single_query("fig3-1234-avoid-5", tri, {fig3.witness_include, VertexSet{fig3.witness_avoid}}, Verdict::Fail); },
      [&] { return single_query("fig3-gray-and-k", tri, {fig3.acyclic_six, {}}, Verdict::Fail); },
  };
  return run_all(static_cast<int>(checks.size()), cfg.threads, [&](int i) { return checks[static_cast<std::size_t>(i)](); });
}

using SuiteFn = std::function<std::vector<InstanceResult>(const SuiteConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& catalog() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"perfect", suite_perfect},
      {"strong-perfect", suite_strong_perfect},
      {"fig1", suite_fig1},
      {"clawfree-c31", [](const SuiteConfig& c) { return suite_claw_free(c, 3); }},
      {"clawfree-c41", [](const SuiteConfig& c) { return suite_claw_free(c, 4); }},
      {"clawfree-c51", [](const SuiteConfig& c) { return suite_claw_free(c, 5); }},
      {"c61-sharp", suite_c61_sharp},
      {"planar-c31", suite_planar_c31},
      {"lemma-3cut", suite_lemma_3cut},
      {"wheel-minor", suite_wheel_minor},
      {"negatives", suite_negatives},
  };
  return suites;
}

}  // namespace

// ------------------------------------------------------------ report

int PropertyReport::unexpected() const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.as_expected(); }));
}

int PropertyReport::errors() const {
  return static_cast<int>(
      std::count_if(instances.begin(), instances.end(), [](const auto& r) { return r.verdict == Verdict::Error; }));
}

json PropertyReport::body() const {
  json list = json::array();
  for (const auto& r : instances) {
    json item{{"id", r.id}, {"params", r.params}, {"expected", to_string(r.expected)}, {"verdict", to_string(r.verdict)}};
    if (!r.witness.is_null()) item["witness"] = r.witness;
    if (!r.detail.empty()) item["detail"] = r.detail;
    list.push_back(std::move(item));
  }
  return json{{"schema_version", kSchemaVersion},
              {"suite", suite},
              {"seed", seed},
              {"config", config},
              {"instances", list},
              {"summary",
               {{"total", instances.size()},
                {"as_expected", static_cast<int>(instances.size()) - unexpected()},
                {"unexpected", unexpected()},
                {"errors", errors()}}}};
}

json PropertyReport::to_json() const {
  json out = body();
  json per = json::array();
  for (const auto& r : instances) per.push_back(json{{"id", r.id}, {"seconds", r.seconds}});
  out["timings"] = {{"total_seconds", seconds}, {"instances", per}};
  return out;
}

std::string PropertyReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (seed " << seed << ")\n";
  for (const auto& r : instances) {
    os << "  " << to_string(r.verdict) << (r.as_expected() ? "  " : "! ") << r.id;
    if (!r.detail.empty()) os << "  " << r.detail;
    if (!r.as_expected() && !r.witness.is_null()) os << "  witness " << r.witness.dump();
    os << '\n';
  }
  os << static_cast<int>(instances.size()) - unexpected() << "/" << instances.size() << " as expected";
  if (errors() > 0) os << ", " << errors() << " errors";
  os << '\n';
  return os.str();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : catalog()) out.push_back(name);
  return out;
}

PropertyReport run_suite(const std::string& name, const SuiteConfig& config) {
  for (const auto& [suite, fn] : catalog()) {
    if (suite != name) continue;
    PropertyReport report;
    report.suite = name;
    report.seed = config.seed;
    report.config = {{"trials", config.trials}, {"budget", config.budget}};
    auto start = Clock::now();
    report.instances = fn(config);
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
  }
  throw UnknownSuite("unknown suite '" + name + "'");
}

// ------------------------------------------------------------ instances

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CorpusGraph claw_free_sample(std::uint64_t seed, int lo, int hi) {
  auto s = families::random_claw_free_in_range(seed, lo, hi);
  return {s.spec.to_string(), seed, std::move(s.graph)};
}

std::vector<CorpusGraph> claw_free_corpus(std::uint64_t seed, int random_count, int max_order) {
  std::vector<CorpusGraph> out{{"petersen-inflated-3", 0, families::petersen_inflated(3)},
                               {"inflated-k4", 0, families::inflate(families::complete(4), 3)}};
  for (int i = 0; i < random_count; ++i) out.push_back(claw_free_sample(mix_seed(seed, 1000 + static_cast<std::uint64_t>(i)), 12, max_order));
  return out;
}

std::vector<CorpusGraph> planar_three_connected_corpus() {
  std::vector<CorpusGraph> out;
  for (int k = 3; k <= 17; ++k) out.push_back({"wheel-" + std::to_string(k), 0, families::wheel(k)});
  for (int k = 3; k <= 17; ++k) out.push_back({"prism-" + std::to_string(k), 0, families::prism(k)});
  const auto base = families::fig3_drawing();
  for (int t = 0; t <= 9; ++t)
    out.push_back({"fig3-stack-" + std::to_string(t), 0, t == 0 ? base.graph : families::stack_apex(base, t).graph});
  for (int k = 3; k <= 12; ++k) out.push_back({"antiprism-" + std::to_string(k), 0, families::antiprism(k)});
  return out;
}

std::vector<CorpusGraph> planar_two_cut_corpus() {
  std::vector<CorpusGraph> out;
  for (int a = 3; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      out.push_back({"glued-wheels-" + std::to_string(a) + "-" + std::to_string(b), 0, families::glued_wheels(a, b)});
  for (int n = 4; n <= 13; ++n) out.push_back({"cycle-" + std::to_string(n), 0, families::cycle(n)});
  return out;
}

FanInstance random_fan_instance(std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    CorpusGraph host = link_host(rng);
    const Graph& g = host.graph;
    host.seed = seed;
    for (int attempt = 0; attempt < 40; ++attempt) {
      const int k = rng.between(2, 4);
      const int size = rng.between(k, k + 2);
      if (size + 1 > g.order()) continue;
      const Vertex x = rng.below(g.order());
      VertexSet s(rng.sample(all_but(g, VertexSet{x}).ids(), size));
      if (!is_k_linked_vertex(g, x, s, k)) continue;
      VertexSet t = rng.sample_set(s, k - 1);
      if (!is_k_linked_vertex(g, x, t, k - 1)) continue;
      return {std::move(host), x, std::move(s), std::move(t), k};
    }
  }
}

LinkInstance random_link_instance(std::uint64_t seed, int t) {
  Rng rng(seed);
  for (;;) {
    CorpusGraph host = link_host(rng);
    const Graph& g = host.graph;
    host.seed = seed;
    for (int attempt = 0; attempt < 40; ++attempt) {
      const int k = rng.between(std::max(2, t + 1), 4);
      const int a = rng.between(k, k + 2);
      const int b = rng.between(k, k + 2);
      if (a + b > g.order()) continue;
      auto picked = rng.sample(all_vertices(g), a + b);
      VertexSet s1(std::vector<Vertex>(picked.begin(), picked.begin() + a));
      VertexSet s2(std::vector<Vertex>(picked.begin() + a, picked.end()));
      if (!is_k_linked_sets(g, s1, s2, k)) continue;
      VertexSet t1 = rng.sample_set(s1, k - t);
      VertexSet t2 = rng.sample_set(s2, k - t);
      if (!is_k_linked_sets(g, t1, t2, k - t)) continue;
      return {std::move(host), std::move(s1), std::move(s2), std::move(t1), std::move(t2), k, t};
    }
  }
}

namespace {

constexpr int kCrossCheckMaxOrder = 11;

}  // namespace

InstanceResult run_fan_instance(const FanInstance& inst) {
  const Graph& g = inst.host.graph;
  InstanceResult r;
  r.params = {{"family", inst.host.family}, {"seed", inst.host.seed}, {"n", g.order()},  {"k", inst.k},
              {"x", inst.x},                {"s", to_json(inst.s)},   {"t", to_json(inst.t)}};
  try {
    auto ext = extend_fan(g, inst.x, inst.s, inst.t, inst.k);
    const auto ends = ext.fan.endpoints();
    bool ok = ends == inst.t.with(ext.added) && inst.s.minus(inst.t).contains(ext.added) &&
              static_cast<int>(ends.intersect(inst.t).size()) == inst.k - 1;
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    r.witness = json{{"added", ext.added}, {"method", method_name(ext.method)}, {"fan", fan_json(ext.fan)}};
    if (!ok) r.detail = "endpoint set is not T + {s}";
    if (ok && g.order() <= kCrossCheckMaxOrder) {
      json log = json::array();
      const std::vector<std::tuple<VertexSet, int>> queries{
          {inst.s, inst.k}, {inst.t, inst.k - 1}, {ends, inst.k}, {inst.s, inst.k + 1}};
      for (const auto& [target, k] : queries) {
        bool flow = is_k_linked_vertex(g, inst.x, target, k);
        bool brute = exhaustive::vertex_linked(g, inst.x, target, k);
        if (flow != brute) log.push_back(json{{"target", to_json(target)}, {"k", k}, {"flow", flow}, {"exhaustive", brute}});
      }
      r.params["cross_checked"] = true;
      if (!log.empty()) {
        r.verdict = Verdict::Fail;
        r.witness["mismatches"] = log;
        r.detail = "flow disagrees with exhaustive search";
      }
    }
  } catch (const HypothesisError& e) {
    r.verdict = Verdict::Fail;
    r.witness = r.params;
    r.detail = e.what();
  } catch (const NoExtension& e) {
    r.verdict = Verdict::Fail;
    r.witness = r.params;
    r.detail = e.what();
  }
  return r;
}

InstanceResult run_link_instance(const LinkInstance& inst) {
  const Graph& g = inst.host.graph;
  InstanceResult r;
  r.params = {{"family", inst.host.family}, {"seed", inst.host.seed}, {"n", g.order()},       {"k", inst.k},
              {"t", inst.t},                {"s1", to_json(inst.s1)}, {"s2", to_json(inst.s2)}, {"t1", to_json(inst.t1)},
              {"t2", to_json(inst.t2)}};
  try {
    VertexSet added_a, added_b;
    Link link;
    ExtensionMethod method;
    if (inst.t == 1) {
      auto ext = extend_link(g, inst.s1, inst.s2, inst.t1, inst.t2, inst.k);
      added_a = VertexSet{ext.added_a};
      added_b = VertexSet{ext.added_b};
      link = std::move(ext.link);
      method = ext.method;
    } else {
      auto ext = extend_link_by_t(g, inst.s1, inst.s2, inst.t1, inst.t2, inst.k, inst.t);
      added_a = ext.added_a;
      added_b = ext.added_b;
      link = std::move(ext.link);
      method = ext.method;
    }
    validate_link(g, link);
    bool ok = link.starts() == inst.t1.unite(added_a) && link.ends() == inst.t2.unite(added_b) &&
              added_a.is_subset_of(inst.s1.minus(inst.t1)) && added_b.is_subset_of(inst.s2.minus(inst.t2)) &&
              static_cast<int>(added_a.size()) == inst.t && static_cast<int>(added_b.size()) == inst.t &&
              static_cast<int>(link.paths.size()) == inst.k;
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    r.witness = json{{"added_a", to_json(added_a)},
                     {"added_b", to_json(added_b)},
                     {"method", method_name(method)},
                     {"link", link_json(link)}};
    if (!ok) r.detail = "endpoint sets are not Ti + Ti'";
    if (ok && g.order() <= kCrossCheckMaxOrder) {
      json log = json::array();
      cross_check_mismatches(g,
                             {{inst.s1, inst.s2, inst.k},
                              {inst.t1, inst.t2, inst.k - inst.t},
                              {link.starts(), link.ends(), inst.k},
                              {inst.s1, inst.s2, inst.k + 1}},
                             log);
      r.params["cross_checked"] = true;
      if (!log.empty()) {
        r.verdict = Verdict::Fail;
        r.witness["mismatches"] = log;
        r.detail = "flow disagrees with exhaustive search";
      }
    }
  } catch (const HypothesisError& e) {
    r.verdict = Verdict::Fail;
    r.witness = r.params;
    r.detail = e.what();
  } catch (const NoExtension& e) {
    r.verdict = Verdict::Fail;
    r.witness = r.params;
    r.detail = e.what();
  }
  return r;
}

InstanceResult claw_free_cycle_trial(std::uint64_t seed, int m) {
  Rng rng(seed);
  CorpusGraph host = rng.below(10) == 0 ? CorpusGraph{"petersen-inflated-3", 0, families::petersen_inflated(3)}
                                        : claw_free_sample(rng.next(), 14, 30);
  auto picked = rng.sample(all_vertices(host.graph), m + 1);
  CycleQuery q{VertexSet(std::vector<Vertex>(picked.begin(), picked.end() - 1)), VertexSet{picked.back()}};
  auto r = single_query("", host, q, Verdict::Pass);
  r.params["seed"] = host.seed;
  return r;
}

}  // namespace cyclab::harness
