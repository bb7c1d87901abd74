#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cyclab/analysis.hpp"
#include "cyclab/cycles.hpp"
#include "cyclab/families.hpp"
#include "cyclab/graph_io.hpp"
#include "cyclab/harness.hpp"
#include "cyclab/links.hpp"

namespace cyclab::cli {

namespace {

using harness::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 42;
  std::uint64_t budget = kDefaultOracleBudget;
  std::string format = "text";
  std::string input;
  unsigned threads = 1;
  std::string expect;  // "", "pass" or "fail"
};

Vertex resolve_vertex(const Graph& g, const std::string& token) {
  if (token.empty()) throw UsageError("empty vertex name");
  if (token[0] != '#') {
    if (auto v = g.find_label(token)) return *v;
  }
  const std::string digits = token[0] == '#' ? token.substr(1) : token;
  std::size_t used = 0;
  int id = -1;
  try {
    id = std::stoi(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != digits.size()) throw UsageError("unknown vertex '" + token + "'");
  if (!g.valid(id)) throw UsageError("vertex id " + digits + " out of range");
  return id;
}

VertexSet resolve_set(const Graph& g, const std::string& list) {
  std::vector<Vertex> ids;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) ids.push_back(resolve_vertex(g, token));
  try {
    return VertexSet(std::move(ids));
  } catch (const GraphError& e) {
    throw UsageError(std::string("bad vertex list '") + list + "': " + e.what());
  }
}

/// Labels where present; raw ids are marked '#' when the graph has labels.
std::string vname(const Graph& g, Vertex v) {
  if (auto l = g.label(v)) return *l;
  return (g.labels().empty() ? "" : "#") + std::to_string(v);
}

json set_json(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(vname(g, v));
  return out;
}

json seq_json(const Graph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(vname(g, v));
  return out;
}

std::string seq_text(const Graph& g, const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + vname(g, vs[i]);
  return out;
}

class Session {
 public:
  Session(const Globals& globals, std::istream& in, std::ostream& out) : g_(globals), in_(in), out_(out) {}

  const Graph& graph() {
    if (graph_) return *graph_;
    if (g_.input.empty()) throw UsageError("this command needs --input FILE or --input -");
    try {
      if (g_.input == "-") {
        graph_ = read_graph(in_);
      } else {
        std::ifstream file(g_.input);
        if (!file) throw UsageError("cannot open " + g_.input);
        graph_ = read_graph(file);
      }
    } catch (const ParseError& e) {
      throw UsageError(std::string("input: ") + e.what());
    } catch (const GraphError& e) {
      throw UsageError(std::string("input: ") + e.what());
    }
    return *graph_;
  }

  bool json_out() const { return g_.format == "json"; }
  const Globals& globals() const { return g_; }

  /// Prints the verdict object and maps it to an exit code.
  int finish(json result, const std::string& text, std::optional<bool> verdict) {
    if (verdict) result["verdict"] = *verdict ? "PASS" : "FAIL";
    if (json_out()) out_ << result.dump(2) << '\n';
    else out_ << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    if (!verdict || g_.expect.empty()) return kExpected;
    return (*verdict == (g_.expect == "pass")) ? kExpected : kUnexpected;
  }

  std::ostream& out() { return out_; }

 private:
  Globals g_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<Graph> graph_;
};

// ------------------------------------------------------------ gen

struct GenArgs {
  std::string family;
  int clique = 3;
  int stack = 0;
  int size = 0;
  std::string klass = "line-cubic-16";
};

int cmd_gen(Session& s, const GenArgs& a) {
  Graph g;
  const auto& f = a.family;
  auto need_size = [&](int min) {
    if (a.size < min) throw UsageError(f + " needs --size of at least " + std::to_string(min));
    return a.size;
  };
  if (f == "petersen") g = families::petersen();
  else if (f == "petersen-inflated") g = families::petersen_inflated(a.clique);
  else if (f == "fig1") g = families::fig1().graph;
  else if (f == "fig3") g = families::stack_apex(families::fig3_triangulation(), a.stack).graph;
  else if (f == "q3") g = families::q3();
  else if (f == "k-bipartite") g = families::k_bipartite(need_size(1));
  else if (f == "complete") g = families::complete(need_size(1));
  else if (f == "cycle") g = families::cycle(need_size(3));
  else if (f == "path") g = families::path(need_size(1));
  else if (f == "wheel") g = families::wheel(need_size(3));
  else if (f == "prism") g = families::prism(need_size(3));
  else if (f == "antiprism") g = families::antiprism(need_size(3));
  else if (f == "random") {
    families::FamilySpec spec;
    try {
      spec = families::FamilySpec::parse(a.klass);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    g = families::random_claw_free(s.globals().seed, spec);
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  // The edge list has no room for labels.
  if (s.json_out() || !g.labels().empty()) s.out() << to_json(g).dump() << '\n';
  else s.out() << to_edge_list(g);
  return kExpected;
}

// ------------------------------------------------------------ check

int cmd_check(Session& s, const std::string& what, int size, const std::string& cut) {
  const Graph& g = s.graph();
  if (what == "claw-free") {
    auto claw = find_claw(g);
    json r{{"check", "claw-free"}};
    std::string text = claw ? "claw at " + vname(g, claw->center) : "claw-free";
    if (claw) {
      r["witness"] = {{"center", vname(g, claw->center)},
                      {"leaves", seq_json(g, {claw->leaves.begin(), claw->leaves.end()})}};
      text += " leaves " + seq_text(g, {claw->leaves.begin(), claw->leaves.end()}, ",");
    }
    return s.finish(r, text, !claw);
  }
  if (what == "connectivity") {
    int k = vertex_connectivity(g);
    return s.finish(json{{"check", "connectivity"}, {"kappa", k}}, "kappa " + std::to_string(k), std::nullopt);
  }
  if (what == "cuts") {
    auto cuts = enumerate_cuts(g, size);
    json list = json::array();
    std::string text;
    for (const auto& c : cuts) {
      json comps = json::array();
      for (const auto& comp : c.components) comps.push_back(set_json(g, comp));
      list.push_back(json{{"cut", set_json(g, c.vertices)}, {"components", comps}});
      text += "{" + seq_text(g, c.vertices.ids(), ",") + "} -> " + std::to_string(c.components.size()) + " components\n";
    }
    text += std::to_string(cuts.size()) + " cuts of size " + std::to_string(size);
    return s.finish(json{{"check", "cuts"}, {"size", size}, {"count", cuts.size()}, {"cuts", list}}, text, std::nullopt);
  }
  if (what == "three-cut") {
    auto v = check_three_cut_structure(g, resolve_set(g, cut));
    json comps = json::array(), cvs = json::array();
    for (const auto& c : v.components) comps.push_back(set_json(g, c));
    for (const auto& c : v.cutvertices) cvs.push_back(set_json(g, c));
    std::string text = std::to_string(v.components.size()) + " components";
    for (std::size_t i = 0; i < v.components.size(); ++i)
      text += ", component " + std::to_string(i + 1) + " has " + std::to_string(v.cutvertices[i].size()) + " cutvertices";
    return s.finish(json{{"check", "three-cut"}, {"cut", set_json(g, v.cut)}, {"components", comps}, {"cutvertices", cvs}},
                    text, v.pass);
  }
  if (what == "blocks") {
    auto blocks = biconnected_components(g);
    json list = json::array();
    std::string text;
    for (const auto& b : blocks) {
      list.push_back(set_json(g, b));
      text += "{" + seq_text(g, b.ids(), ",") + "}\n";
    }
    text += std::to_string(blocks.size()) + " blocks";
    return s.finish(json{{"check", "blocks"}, {"blocks", list}}, text, std::nullopt);
  }
  throw UsageError("unknown check '" + what + "' (claw-free, connectivity, cuts, three-cut, blocks)");
}

// ------------------------------------------------------------ cycle / property / wheel

int cmd_cycle(Session& s, const std::string& include, const std::string& avoid) {
  const Graph& g = s.graph();
  CycleQuery q{resolve_set(g, include), resolve_set(g, avoid)};
  if (q.include.intersects(q.avoid)) throw UsageError("include and avoid overlap");
  if (q.include.empty() && q.avoid.empty()) throw UsageError("give --include and/or --avoid");
  CycleSearchStats stats;
  auto c = find_cycle(g, q, &stats);
  json r{{"include", set_json(g, q.include)}, {"avoid", set_json(g, q.avoid)}, {"nodes", stats.nodes}};
  std::string text;
  if (c) {
    r["cycle"] = seq_json(g, c->vertices());
    text = "cycle " + seq_text(g, c->vertices());
  } else {
    text = "no cycle through {" + seq_text(g, q.include.ids(), ",") + "} avoiding {" + seq_text(g, q.avoid.ids(), ",") + "}";
  }
  return s.finish(r, text, c.has_value());
}

int cmd_property(Session& s, int m, int n, const std::string& mode) {
  const Graph& g = s.graph();
  CmnOptions opts;
  opts.budget = s.globals().budget;
  opts.seed = s.globals().seed;
  opts.threads = s.globals().threads;
  if (mode == "exhaustive") {
    opts.mode = CmnOptions::Mode::Exhaustive;
  } else if (mode.starts_with("sample:")) {
    opts.mode = CmnOptions::Mode::Sample;
    auto rest = mode.substr(7);
    auto colon = rest.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("missing trials");
      opts.seed = std::stoull(rest.substr(0, colon));
      opts.trials = std::stoull(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("--mode sample:SEED:TRIALS expected, got '" + mode + "'");
    }
  } else {
    throw UsageError("--mode must be exhaustive or sample:SEED:TRIALS");
  }
  if (m < 0 || n < 0 || m + n > g.order()) throw UsageError("need 0 <= m, n and m + n <= |V|");
  auto res = has_property_cmn(g, m, n, opts);
  json r{{"m", m}, {"n", n}, {"mode", mode}, {"queries", res.queries}};
  std::string text = "C(" + std::to_string(m) + "," + std::to_string(n) + ") " + (res.pass ? "holds" : "fails") + " after " +
                     std::to_string(res.queries) + " queries";
  if (res.witness) {
    r["witness"] = {{"include", set_json(g, res.witness->include)}, {"avoid", set_json(g, res.witness->avoid)}};
    r["certificate"] = res.certificate;
    text += "\nwitness include {" + seq_text(g, res.witness->include.ids(), ",") + "} avoid {" +
            seq_text(g, res.witness->avoid.ids(), ",") + "}\n" + res.certificate;
  }
  return s.finish(r, text, res.pass);
}

int cmd_wheel(Session& s, const std::string& hub, int k, const std::string& through) {
  const Graph& g = s.graph();
  Vertex z = resolve_vertex(g, hub);
  std::optional<WheelSubdivision> w;
  try {
    w = through.empty() ? find_wheel_subdivision(g, z, k) : find_w3_through(g, z, resolve_set(g, through));
  } catch (const InsufficientDegree& e) {
    return s.finish(json{{"hub", vname(g, z)}, {"k", k}, {"error", e.what()}}, e.what(), false);
  }
  json r{{"hub", vname(g, z)}, {"k", through.empty() ? k : 3}};
  std::string text;
  if (w) {
    json spokes = json::array();
    for (const auto& p : w->spokes) spokes.push_back(seq_json(g, p.vertices()));
    r["rim"] = seq_json(g, w->rim.vertices());
    r["spokes"] = spokes;
    text = "rim " + seq_text(g, w->rim.vertices());
    for (const auto& p : w->spokes) text += "\nspoke " + seq_text(g, p.vertices());
  } else {
    text = "no wheel with hub " + vname(g, z);
  }
  return s.finish(r, text, w.has_value());
}

// ------------------------------------------------------------ link

struct LinkArgs {
  std::string action;
  std::string apex, target, s, t, s1, s2, t1, t2, a, b;
  int k = 0;
  int steps = 1;
};

json paths_json(const Graph& g, const std::vector<Path>& paths) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(seq_json(g, p.vertices()));
  return out;
}

std::string paths_text(const Graph& g, const std::vector<Path>& paths) {
  std::string out;
  for (const auto& p : paths) out += "path " + seq_text(g, p.vertices()) + "\n";
  return out;
}

const char* method_name(ExtensionMethod m) { return m == ExtensionMethod::Auxiliary ? "auxiliary" : "direct"; }

int cmd_link(Session& s, const LinkArgs& a) {
  if (a.action == "verify-fig1") {
    auto f = families::fig1_drawing();
    bool t_linked = is_k_linked_sets(f.graph, f.t1, f.t2, 2);
    bool s_linked = is_k_linked_sets(f.graph, f.s1, f.s2, 3);
    bool no_refine = verify_no_refining_link(f.graph, f.s1, f.s2, f.t1, f.t2, 3);
    auto ext = extend_link(f.graph, f.s1, f.s2, f.t1, f.t2, 3);
    json r{{"t1_t2_2_linked", t_linked},
           {"s1_s2_3_linked", s_linked},
           {"no_refining_link", no_refine},
           {"extension", {{"added_a", vname(f.graph, ext.added_a)}, {"added_b", vname(f.graph, ext.added_b)},
                          {"paths", paths_json(f.graph, ext.link.paths)}}}};
    std::string text = std::string("T1,T2 2-linked: ") + (t_linked ? "yes" : "no") +
                       "\nS1,S2 3-linked: " + (s_linked ? "yes" : "no") +
                       "\nno refining 3-link: " + (no_refine ? "yes" : "no") + "\nextension:\n" +
                       paths_text(f.graph, ext.link.paths);
    return s.finish(r, text, t_linked && s_linked && no_refine);
  }
  const Graph& g = s.graph();
  if (a.k < 1) throw UsageError("--k must be at least 1");
  if (a.action == "fan") {
    Vertex v = resolve_vertex(g, a.apex);
    auto fan = find_fan(g, v, resolve_set(g, a.target), a.k);
    json r{{"apex", vname(g, v)}, {"k", a.k}};
    if (fan) r["paths"] = paths_json(g, fan->paths);
    return s.finish(r, fan ? paths_text(g, fan->paths) : "not " + std::to_string(a.k) + "-linked", fan.has_value());
  }
  if (a.action == "paths") {
    auto link = disjoint_paths(g, resolve_set(g, a.a), resolve_set(g, a.b), a.k);
    json r{{"k", a.k}};
    if (link) r["paths"] = paths_json(g, link->paths);
    return s.finish(r, link ? paths_text(g, link->paths) : "not " + std::to_string(a.k) + "-linked", link.has_value());
  }
  if (a.action == "extend-fan") {
    Vertex x = resolve_vertex(g, a.apex);
    auto ext = extend_fan(g, x, resolve_set(g, a.s), resolve_set(g, a.t), a.k);
    json r{{"x", vname(g, x)}, {"added", vname(g, ext.added)}, {"method", method_name(ext.method)},
           {"paths", paths_json(g, ext.fan.paths)}};
    return s.finish(r, "added " + vname(g, ext.added) + "\n" + paths_text(g, ext.fan.paths), true);
  }
  if (a.action == "extend-link") {
    auto s1 = resolve_set(g, a.s1), s2 = resolve_set(g, a.s2), t1 = resolve_set(g, a.t1), t2 = resolve_set(g, a.t2);
    auto ext = extend_link_by_t(g, s1, s2, t1, t2, a.k, a.steps);
    json r{{"added_a", set_json(g, ext.added_a)}, {"added_b", set_json(g, ext.added_b)},
           {"method", method_name(ext.method)}, {"paths", paths_json(g, ext.link.paths)}};
    return s.finish(r,
                    "added {" + seq_text(g, ext.added_a.ids(), ",") + "} and {" + seq_text(g, ext.added_b.ids(), ",") +
                        "}\n" + paths_text(g, ext.link.paths),
                    true);
  }
  throw UsageError("unknown link action '" + a.action + "' (fan, paths, extend-fan, extend-link, verify-fig1)");
}

// ------------------------------------------------------------ verify

int cmd_verify(Session& s, const std::string& suite, int trials, bool timings) {
  std::vector<std::string> names = suite == "all" ? harness::suite_names() : std::vector<std::string>{suite};
  harness::SuiteConfig cfg;
  cfg.seed = s.globals().seed;
  cfg.budget = s.globals().budget;
  cfg.trials = trials;
  cfg.threads = s.globals().threads;
  int code = kExpected;
  json reports = json::array();
  for (const auto& name : names) {
    harness::PropertyReport rep;
    try {
      rep = harness::run_suite(name, cfg);
    } catch (const harness::UnknownSuite& e) {
      throw UsageError(e.what());
    }
    if (rep.errors() > 0) code = std::max<int>(code, kError);
    else if (!rep.all_expected()) code = std::max<int>(code, kUnexpected);
    if (s.json_out()) reports.push_back(timings ? rep.to_json() : rep.body());
    else s.out() << rep.to_text();
  }
  if (s.json_out()) s.out() << (names.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycles through and around vertex sets: generators, oracles and verification suites", "cyclab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for generators, sampling and suites")->capture_default_str();
  app.add_option("--budget", g.budget, "Cap on oracle calls for exhaustive checks")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--input", g.input, "Graph file (edge list or JSON), '-' for stdin");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--expect", g.expect, "Exit 1 unless the verdict matches")->check(CLI::IsMember({"pass", "fail"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->add_option("family", gen.family,
                      "petersen, petersen-inflated, fig1, fig3, q3, k-bipartite, complete, cycle, path, wheel, prism, "
                      "antiprism, random")
      ->required();
  gen_cmd->add_option("--clique", gen.clique, "Clique size for petersen-inflated")->capture_default_str();
  gen_cmd->add_option("--stack", gen.stack, "Apexes stacked on fig3")->capture_default_str();
  gen_cmd->add_option("--size", gen.size, "Size parameter");
  gen_cmd->add_option("--class", gen.klass, "line-cubic-N or inflate-cubic-N[-kC]")->capture_default_str();

  std::string check_what, check_cut;
  int check_size = 3;
  auto* check_cmd = app.add_subcommand("check", "Structural checks");
  check_cmd->add_option("what", check_what, "claw-free, connectivity, cuts, three-cut, blocks")->required();
  check_cmd->add_option("--size", check_size, "Cut size")->capture_default_str();
  check_cmd->add_option("--cut", check_cut, "Vertices of the 3-cut");

  std::string cycle_action, include, avoid;
  auto* cycle_cmd = app.add_subcommand("cycle", "Find a cycle through --include avoiding --avoid");
  cycle_cmd->add_option("action", cycle_action, "find")->check(CLI::IsMember({"find"}))->required();
  cycle_cmd->add_option("--include", include, "Comma list of labels or ids");
  cycle_cmd->add_option("--avoid", avoid, "Comma list of labels or ids");

  LinkArgs link;
  auto* link_cmd = app.add_subcommand("link", "Disjoint paths and link extension");
  link_cmd->add_option("action", link.action, "fan, paths, extend-fan, extend-link, verify-fig1")->required();
  link_cmd->add_option("--apex,--x", link.apex, "Fan apex");
  link_cmd->add_option("--target", link.target, "Fan target set");
  link_cmd->add_option("--a", link.a, "First side for paths");
  link_cmd->add_option("--b", link.b, "Second side for paths");
  link_cmd->add_option("--s", link.s, "S for extend-fan");
  link_cmd->add_option("--t", link.t, "T for extend-fan");
  link_cmd->add_option("--s1", link.s1);
  link_cmd->add_option("--s2", link.s2);
  link_cmd->add_option("--t1", link.t1);
  link_cmd->add_option("--t2", link.t2);
  link_cmd->add_option("--k", link.k, "Number of paths");
  link_cmd->add_option("--steps", link.steps, "Vertices added per side by extend-link")->capture_default_str();

  int m = 0, n = 0;
  std::string mode = "exhaustive";
  auto* prop_cmd = app.add_subcommand("property", "Check C(m,n)");
  prop_cmd->add_option("--m", m, "Vertices to include")->required();
  prop_cmd->add_option("--n", n, "Vertices to avoid")->required();
  prop_cmd->add_option("--mode", mode, "exhaustive or sample:SEED:TRIALS")->capture_default_str();

  std::string hub, through;
  int wheel_k = 3;
  auto* wheel_cmd = app.add_subcommand("wheel", "Find a subdivided wheel with a given hub");
  wheel_cmd->add_option("--hub", hub, "Hub vertex")->required();
  wheel_cmd->add_option("--k", wheel_k, "Spokes")->capture_default_str();
  wheel_cmd->add_option("--through", through, "Rim must pass these vertices (W3 only)");

  std::string suite = "all";
  int trials = -1;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->capture_default_str();
  verify_cmd->add_option("--trials", trials, "Override the suite's trial count");
  verify_cmd->add_flag("--timings", timings, "Include timings in JSON reports");
  verify_cmd->footer([] {
    std::string names;
    for (const auto& s : harness::suite_names()) names += " " + s;
    return "Suites:" + names;
  }());

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExpected : kUsage;
  }

  Session session(g, in, out);
  try {
    if (*gen_cmd) return cmd_gen(session, gen);
    if (*check_cmd) return cmd_check(session, check_what, check_size, check_cut);
    if (*cycle_cmd) return cmd_cycle(session, include, avoid);
    if (*link_cmd) return cmd_link(session, link);
    if (*prop_cmd) return cmd_property(session, m, n, mode);
    if (*wheel_cmd) return cmd_wheel(session, hub, wheel_k, through);
    if (*verify_cmd) return cmd_verify(session, suite, trials, timings);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kError;
  } catch (const std::invalid_argument& e) {
    // GraphError, PreconditionError and HypothesisError: the input does not qualify.
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kUsage;
}

}  // namespace cyclab::cli
