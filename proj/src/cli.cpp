#include "ftspan/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "ftspan/congest.hpp"
#include "ftspan/detkit.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/meta_spanner.hpp"
#include "ftspan/parallel_mis.hpp"
#include "ftspan/random.hpp"
#include "ftspan/result_io.hpp"
#include "ftspan/suite.hpp"
#include "ftspan/verifier.hpp"
#include "ftspan/warmup.hpp"

namespace ftspan {

namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string file;
  std::string gen;
  std::uint64_t gen_seed = 1;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  auto* file = cmd->add_option("--graph", src.file, "edge-list file (u v w per line)");
  auto* gen = cmd->add_option("--gen", src.gen, "generator descriptor, e.g. gnp:n=30,p=0.4,w=1-100");
  file->excludes(gen);
  cmd->add_option("--gen-seed", src.gen_seed, "generator seed")->capture_default_str();
}

bool has_graph(const GraphSource& src) { return !src.file.empty() || !src.gen.empty(); }

Graph load_source(const GraphSource& src) {
  if (!src.file.empty()) return load_graph(src.file);
  if (!src.gen.empty()) return generate(parse_gen_spec(src.gen, src.gen_seed));
  throw UsageError("give --graph FILE or --gen SPEC");
}

void record_source(SpannerResult& r, const GraphSource& src) {
  if (!src.file.empty()) {
    r.params["graph_file"] = src.file;
  } else {
    r.params["graph_gen"] = describe(parse_gen_spec(src.gen, src.gen_seed));
    r.params["graph_seed"] = static_cast<std::int64_t>(src.gen_seed);
  }
}

// Falls back to the provenance stored in a result file.
GraphSource source_from_result(const SpannerResult& r) {
  GraphSource src;
  if (auto it = r.params.find("graph_file"); it != r.params.end()) {
    src.file = std::get<std::string>(it->second);
  } else if (auto gen = r.params.find("graph_gen"); gen != r.params.end()) {
    src.gen = std::get<std::string>(gen->second);
    if (auto seed = r.params.find("graph_seed"); seed != r.params.end()) {
      src.gen_seed = static_cast<std::uint64_t>(std::get<std::int64_t>(seed->second));
    }
  } else {
    throw UsageError("result file does not name its graph; give --graph or --gen");
  }
  return src;
}

std::int64_t int_param(const SpannerResult& r, const std::string& name) {
  auto it = r.params.find(name);
  if (it == r.params.end() || !std::holds_alternative<std::int64_t>(it->second)) {
    throw UsageError("result file has no integer parameter '" + name + "'; pass it explicitly");
  }
  return std::get<std::int64_t>(it->second);
}

Variant parse_variant(const std::string& s) {
  if (s == "seq") return Variant::kSequential;
  if (s == "mod") return Variant::kModified;
  throw UsageError("--variant must be seq or mod");
}

MisMode parse_mis(const std::string& s) {
  if (s == "greedy") return MisMode::kGreedy;
  if (s == "parallel") return MisMode::kParallel;
  throw UsageError("--mis must be greedy or parallel");
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    save_text(path, text);
  }
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

// ---- build ---------------------------------------------------------------

struct BuildFlags {
  GraphSource src;
  std::string algo = "meta";
  std::size_t f = 1;
  std::size_t k = 2;
  std::uint64_t seed = 1;
  std::string variant = "seq";
  std::string mis = "greedy";
  double c_k = 20.0;
  double c_s = 4.0;
  double p = 0.0;
  double c_det = 1.0;
  std::string out;
  std::string edges_out;
  bool timings = false;
  bool check = false;
};

struct BuildOutcome {
  SpannerResult result;
  std::vector<std::string> diagnostics;
};

BuildOutcome run_build(const Graph& g, const BuildFlags& fl) {
  BuildOutcome out;
  auto on_phase = [&](const PhaseState& st) {
    for (auto& d : check_invariants(g, st).diagnostics) {
      out.diagnostics.push_back("phase " + std::to_string(st.phase) + ": " + d);
    }
  };
  if (fl.algo == "warmup") {
    if (fl.k != 2) throw UsageError("--algo warmup builds 3-spanners; use --k 2");
    WarmupOptions opt{fl.f, fl.seed, fl.c_s, fl.p};
    if (fl.f < 1 || fl.f >= std::max<std::size_t>(g.num_vertices(), 1)) {
      throw UsageError("f must satisfy 1 <= f < n");
    }
    out.result = build_3spanner(g, opt);
  } else if (fl.algo == "meta") {
    MetaOptions opt;
    opt.f = fl.f;
    opt.k = fl.k;
    opt.seed = fl.seed;
    opt.variant = parse_variant(fl.variant);
    opt.mis = parse_mis(fl.mis);
    opt.c_k = fl.c_k;
    opt.c_s = fl.c_s;
    opt.p = fl.p;
    if (fl.check) opt.on_phase = on_phase;
    out.result = build_ft_spanner(g, opt);
  } else if (fl.algo == "meta-det") {
    DetOptions opt;
    opt.f = fl.f;
    opt.k = fl.k;
    opt.c_k = fl.c_k;
    opt.c_det = fl.c_det;
    if (fl.check) opt.on_phase = on_phase;
    out.result = build_ft_spanner_det(g, opt);
  } else {
    throw UsageError("--algo must be warmup, meta or meta-det");
  }
  return out;
}

void add_build_flags(CLI::App* cmd, BuildFlags& fl) {
  cmd->add_option("--f", fl.f, "number of vertex faults tolerated")->capture_default_str();
  cmd->add_option("--k", fl.k, "stretch parameter; the spanner has stretch 2k-1")->capture_default_str();
  cmd->add_option("--seed", fl.seed, "random seed")->capture_default_str();
  cmd->add_option("--variant", fl.variant, "seq or mod")->capture_default_str();
  cmd->add_option("--mis", fl.mis, "greedy or parallel (with --variant mod)")->capture_default_str();
  cmd->add_option("--ck", fl.c_k, "cluster count constant")->capture_default_str();
  cmd->add_option("--cs", fl.c_s, "path sample constant")->capture_default_str();
  cmd->add_option("--p", fl.p, "center sampling rate; 0 picks the default")->capture_default_str();
  cmd->add_flag("--timings", fl.timings, "include wall times");
}

int cmd_build(const BuildFlags& fl, std::ostream& out, std::ostream& err) {
  Graph g = load_source(fl.src);
  auto built = run_build(g, fl);
  record_source(built.result, fl.src);
  Json j = to_json(built.result, fl.timings);
  if (fl.check) j["invariant_diagnostics"] = built.diagnostics;
  emit(out, fl.out, dump(j));
  if (!fl.edges_out.empty()) {
    std::ostringstream text;
    write_edge_list(text, g.subgraph(built.result.edges));
    save_text(fl.edges_out, text.str());
  }
  if (!built.diagnostics.empty()) {
    for (const auto& d : built.diagnostics) err << "invariant: " << d << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyFlags {
  GraphSource src;
  std::string result;
  std::string spanner;
  std::optional<std::size_t> f;
  std::optional<std::size_t> k;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultFaultCap;
  std::size_t threads = 0;
  std::size_t max_recorded = 1000;
  std::string out;
};

int cmd_verify(const VerifyFlags& fl, std::ostream& out, std::ostream& err) {
  if (fl.result.empty() == fl.spanner.empty()) throw UsageError("give exactly one of --result or --spanner");
  VerifyOptions opt;
  opt.seed = fl.seed;
  opt.cap = fl.cap;
  opt.threads = fl.threads ? fl.threads : default_threads();
  opt.max_recorded = fl.max_recorded;
  if (fl.mode == "exhaustive") {
    opt.exhaustive = true;
  } else if (fl.mode.rfind("sampled:", 0) == 0) {
    opt.exhaustive = false;
    try {
      opt.samples = std::stoul(fl.mode.substr(8));
    } catch (const std::logic_error&) {
      throw UsageError("--mode sampled:N needs a count");
    }
  } else {
    throw UsageError("--mode must be exhaustive or sampled:N");
  }

  Graph g, h;
  if (!fl.result.empty()) {
    SpannerResult r = load_result(fl.result);
    g = load_source(has_graph(fl.src) ? fl.src : source_from_result(r));
    if (r.n != g.num_vertices() || r.m != g.num_edges()) {
      throw UsageError("result was built on a graph with different n or m");
    }
    h = g.subgraph(r.edges);
    opt.f = fl.f ? *fl.f : static_cast<std::size_t>(int_param(r, "f"));
    opt.k = fl.k ? *fl.k : static_cast<std::size_t>(int_param(r, "k"));
  } else {
    g = load_source(fl.src);
    h = load_graph(fl.spanner);
    if (h.num_vertices() > g.num_vertices()) throw UsageError("spanner has more vertices than the graph");
    if (h.num_vertices() < g.num_vertices()) {
      std::vector<WeightedPair> pairs;
      for (const auto& e : h.edges()) pairs.push_back({e.u, e.v, e.w});
      h = Graph(g.num_vertices(), pairs);
    }
    if (!fl.f || !fl.k) throw UsageError("--f and --k are required with --spanner");
    opt.f = *fl.f;
    opt.k = *fl.k;
  }
  VerificationReport report;
  try {
    report = verify_spanner(g, h, opt);
  } catch (const BudgetExceeded& e) {
    err << e.what() << "; rerun with --mode sampled:N\n";
    return kExitUsage;
  }
  Json j = to_json(report);
  j["f"] = opt.f;
  j["k"] = opt.k;
  emit(out, fl.out, dump(j));
  return report.pass ? kExitOk : kExitFailed;
}

// ---- certificate ---------------------------------------------------------

struct CertificateFlags {
  GraphSource src;
  std::size_t lambda = 2;
  std::uint64_t seed = 1;
  double c_k = 20.0;
  double c_s = 4.0;
  bool check = false;
  std::uint64_t cap = kDefaultFaultCap;
  std::size_t samples = 2000;
  std::string out;
  bool timings = false;
};

int cmd_certificate(const CertificateFlags& fl, std::ostream& out, std::ostream& err) {
  Graph g = load_source(fl.src);
  const std::size_t n = g.num_vertices();
  if (fl.lambda < 1) throw UsageError("--lambda must be at least 1");
  if (fl.lambda > n) throw UsageError("--lambda exceeds the number of vertices");
  SpannerResult r;
  const std::size_t f = std::max<std::size_t>(1, fl.lambda - 1);
  const std::size_t k = std::max<std::size_t>(2, n > 1 ? static_cast<std::size_t>(std::ceil(std::log2(n))) : 2);
  if (n <= 1 || f >= n) {
    r.n = n;
    r.m = g.num_edges();
    for (EdgeId e = 0; e < g.num_edges(); ++e) r.edges.push_back(e);
    r.size = size_report(r.edges.size(), 0.0);
  } else {
    MetaOptions opt;
    opt.f = f;
    opt.k = k;
    opt.seed = fl.seed;
    opt.c_k = fl.c_k;
    opt.c_s = fl.c_s;
    r = build_ft_spanner(g, opt);
  }
  r.algo = "certificate";
  r.params["lambda"] = static_cast<std::int64_t>(fl.lambda);
  r.params["f"] = static_cast<std::int64_t>(f);
  r.params["k"] = static_cast<std::int64_t>(k);
  record_source(r, fl.src);
  Json j = to_json(r, fl.timings);
  int code = kExitOk;
  if (fl.check) {
    auto report = verify_certificate(g, g.subgraph(r.edges), fl.lambda, fl.cap, fl.samples, fl.seed);
    j["check"] = to_json(report);
    if (!report.pass) {
      err << "certificate check failed on " << report.failure_count << " fault sets\n";
      code = kExitFailed;
    }
  }
  emit(out, fl.out, dump(j));
  return code;
}

// ---- simulate ------------------------------------------------------------

struct SimulateFlags {
  BuildFlags build;
  double c_b = 4.0;
  std::string log;
  bool compare = false;
};

int cmd_simulate(const SimulateFlags& fl, std::ostream& out, std::ostream& err) {
  Graph g = load_source(fl.build.src);
  SimOptions opt;
  opt.meta.f = fl.build.f;
  opt.meta.k = fl.build.k;
  opt.meta.seed = fl.build.seed;
  opt.meta.variant = parse_variant(fl.build.variant);
  opt.meta.mis = parse_mis(fl.build.mis);
  opt.meta.c_k = fl.build.c_k;
  opt.meta.c_s = fl.build.c_s;
  opt.meta.p = fl.build.p;
  opt.c_b = fl.c_b;
  SimOutcome sim;
  try {
    sim = simulate_distributed_spanner(g, opt);
  } catch (const BandwidthError& e) {
    err << "bandwidth violation: " << e.what() << '\n';
    return kExitFailed;
  }
  record_source(sim.result, fl.build.src);
  Json j{{"result", to_json(sim.result, fl.build.timings)}, {"rounds", to_json(sim.report)}};
  int code = kExitOk;
  if (fl.compare) {
    auto seq = build_ft_spanner(g, opt.meta);
    bool same = seq.edges == sim.result.edges;
    j["matches_sequential"] = same;
    if (!same) {
      err << "distributed output differs from the sequential build\n";
      code = kExitFailed;
    }
  }
  if (!fl.log.empty()) {
    std::ofstream log(fl.log, std::ios::binary);
    if (!log) throw UsageError("cannot write " + fl.log);
    write_message_log(log, sim.log);
  }
  emit(out, fl.build.out, dump(j));
  return code;
}

// ---- mis-bench -----------------------------------------------------------

struct MisBenchFlags {
  std::size_t instances = 1000;
  std::size_t max_paths = 200;
  std::size_t max_vertices = 60;
  std::size_t max_len = 8;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_mis_bench(const MisBenchFlags& fl, std::ostream& out, std::ostream&) {
  if (fl.max_paths == 0 || fl.max_vertices == 0 || fl.max_len == 0) throw UsageError("sizes must be positive");
  std::ostringstream text;
  text << "instance\tpaths\tvertices\trounds\twork\tmis_size\tequal\n";
  std::size_t mismatches = 0;
  std::vector<double> ratios;
  for (std::size_t t = 0; t < fl.instances; ++t) {
    Rng rng = stream(fl.seed, t, 1, StreamTag::kGenerator);
    std::size_t paths = std::uniform_int_distribution<std::size_t>(1, fl.max_paths)(rng);
    auto inst = random_conflict_instance(paths, fl.max_vertices, fl.max_len, mix64(fl.seed) ^ t);
    MisRoundTrace trace;
    auto par = parallel_greedy_mis(inst, &trace);
    bool equal = par == lex_first_mis(inst);
    mismatches += !equal;
    double lg = std::max(1.0, std::log2(static_cast<double>(paths)));
    ratios.push_back(static_cast<double>(trace.rounds) / (lg * lg));
    text << t << '\t' << paths << '\t' << fl.max_vertices << '\t' << trace.rounds << '\t' << trace.work << '\t'
         << par.size() << '\t' << (equal ? 1 : 0) << '\n';
  }
  text << "# mismatches " << mismatches << ", median rounds/log2^2(paths) " << median(ratios) << '\n';
  emit(out, fl.out, text.str());
  return mismatches == 0 ? kExitOk : kExitFailed;
}

// ---- hitting-set ---------------------------------------------------------

struct HittingFlags {
  std::string instance;
  std::size_t beta = 0;
  std::string out;
};

int cmd_hitting_set(const HittingFlags& fl, std::ostream& out, std::ostream& err) {
  std::ifstream in(fl.instance);
  if (!in) throw UsageError("cannot open instance file: " + fl.instance);
  Json raw;
  try {
    in >> raw;
  } catch (const Json::exception& e) {
    throw UsageError("instance is not JSON: " + std::string(e.what()));
  }
  HittingInstance inst = hitting_instance_from_json(raw);
  if (fl.beta) inst.beta = fl.beta;
  std::vector<std::uint32_t> chosen;
  try {
    chosen = inst.beta == 1 ? hitting_set(inst) : beta_hitting_set(inst);
  } catch (const InadmissibleInstance& e) {
    throw UsageError(e.what());
  }
  std::set<std::uint32_t> picked(chosen.begin(), chosen.end());
  std::size_t min_hits = inst.sets.empty() ? 0 : std::numeric_limits<std::size_t>::max();
  for (const auto& s : inst.sets) {
    std::set<std::uint32_t> members(s.begin(), s.end());
    std::size_t hits = 0;
    for (auto x : members) hits += picked.count(x);
    min_hits = std::min(min_hits, hits);
  }
  double size_bound = static_cast<double>(inst.ground.size()) / inst.delta;
  bool ok = static_cast<double>(chosen.size()) <= size_bound && min_hits >= inst.beta;
  Json j{{"chosen", chosen},  {"size", chosen.size()}, {"size_bound", size_bound},
         {"min_hits", min_hits}, {"beta", inst.beta},  {"sets", inst.sets.size()},
         {"contract_holds", ok}};
  emit(out, fl.out, dump(j));
  if (!ok) err << "hitting-set contract violated\n";
  return ok ? kExitOk : kExitFailed;
}

// ---- bench ---------------------------------------------------------------

struct BenchFlags {
  std::string spec;
  std::vector<std::string> graphs;
  std::vector<std::string> algos{"meta"};
  std::vector<std::size_t> fs{1};
  std::vector<std::size_t> ks{3};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::uint64_t graph_seed = 1;
  double c_k = 20.0;
  std::string out;
};

int cmd_bench(BenchFlags fl, std::ostream& out, std::ostream&) {
  if (!fl.spec.empty()) {
    std::ifstream in(fl.spec);
    if (!in) throw UsageError("cannot open bench spec: " + fl.spec);
    Json j;
    try {
      in >> j;
      fl.graphs = j.at("graphs").get<std::vector<std::string>>();
      fl.algos = j.value("algos", fl.algos);
      fl.fs = j.value("f", fl.fs);
      fl.ks = j.value("k", fl.ks);
      fl.seeds = j.value("seeds", fl.seeds);
      fl.graph_seed = j.value("graph_seed", fl.graph_seed);
      fl.c_k = j.value("ck", fl.c_k);
    } catch (const Json::exception& e) {
      throw UsageError("malformed bench spec: " + std::string(e.what()));
    }
  }
  if (fl.graphs.empty()) throw UsageError("bench needs --graphs or --spec");
  std::ostringstream text;
  text << "graph\tn\tm\tf\tk\talgo\tedges\tseconds\trounds\n";
  for (const auto& desc : fl.graphs) {
    Graph g = generate(parse_gen_spec(desc, fl.graph_seed));
    for (std::size_t k : fl.ks) {
      for (std::size_t f : fl.fs) {
        for (const auto& algo : fl.algos) {
          std::vector<double> seconds, edges, rounds;
          for (auto seed : fl.seeds) {
            auto t0 = Clock::now();
            if (algo == "congest") {
              SimOptions opt;
              opt.meta.f = f;
              opt.meta.k = k;
              opt.meta.seed = seed;
              opt.meta.c_k = fl.c_k;
              auto sim = simulate_distributed_spanner(g, opt);
              rounds.push_back(static_cast<double>(sim.report.total_rounds));
              edges.push_back(static_cast<double>(sim.result.edges.size()));
            } else {
              BuildFlags b;
              b.algo = algo == "meta-mod" ? "meta" : algo;
              b.variant = algo == "meta-mod" ? "mod" : "seq";
              b.f = f;
              b.k = k;
              b.seed = seed;
              b.c_k = fl.c_k;
              edges.push_back(static_cast<double>(run_build(g, b).result.edges.size()));
            }
            seconds.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
          }
          text << desc << '\t' << g.num_vertices() << '\t' << g.num_edges() << '\t' << f << '\t' << k << '\t'
               << algo << '\t' << median(edges) << '\t' << std::setprecision(6) << median(seconds) << '\t';
          if (rounds.empty()) {
            text << '-';
          } else {
            text << median(rounds);
          }
          text << '\n';
        }
      }
    }
  }
  emit(out, fl.out, text.str());
  return kExitOk;
}

// ---- report --------------------------------------------------------------

struct ReportFlags {
  std::string result;
  bool tsv = false;
};

int cmd_report(const ReportFlags& fl, std::ostream& out, std::ostream&) {
  SpannerResult r = load_result(fl.result);
  std::set<std::string> columns;
  for (const auto& t : r.trace) {
    for (const auto& [name, value] : t.counts) columns.insert(name);
  }
  if (fl.tsv) {
    out << "step";
    for (const auto& c : columns) out << '\t' << c;
    out << '\n';
    for (const auto& t : r.trace) {
      out << t.name;
      for (const auto& c : columns) {
        auto it = t.counts.find(c);
        out << '\t';
        if (it != t.counts.end()) out << it->second;
      }
      out << '\n';
    }
    return kExitOk;
  }
  out << "algo " << r.algo << "\nn " << r.n << "\nm " << r.m << "\nedges " << r.edges.size() << '\n';
  out << "size bound " << r.size.bound << ", ratio " << r.size.ratio << '\n';
  out << "params";
  for (const auto& [name, value] : r.params) {
    out << ' ' << name << '=';
    std::visit([&](const auto& x) { out << x; }, value);
  }
  out << '\n';
  for (const auto& t : r.trace) {
    out << t.name << ':';
    for (const auto& [name, value] : t.counts) out << ' ' << name << '=' << value;
    out << '\n';
  }
  return kExitOk;
}

// ---- gen -----------------------------------------------------------------

struct GenFlags {
  std::string spec;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenFlags& fl, std::ostream& out, std::ostream&) {
  Graph g = generate(parse_gen_spec(fl.spec, fl.seed));
  std::ostringstream text;
  write_edge_list(text, g);
  emit(out, fl.out, text.str());
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex fault-tolerant spanners and connectivity certificates", "ftspanner"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every command");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen_cmd->add_option("spec", gen.spec, "descriptor, e.g. gnp:n=30,p=0.4 or grid:rows=6,cols=6,w=1-9")->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
  gen_cmd->add_option("-o,--out", gen.out, "output file (default stdout)");

  BuildFlags build;
  auto* build_cmd = app.add_subcommand("build", "build a fault-tolerant spanner and print its result JSON");
  add_graph_options(build_cmd, build.src);
  build_cmd->add_option("--algo", build.algo, "warmup, meta or meta-det")->capture_default_str();
  add_build_flags(build_cmd, build);
  build_cmd->add_option("--cdet", build.c_det, "qualifying-prefix constant of meta-det")->capture_default_str();
  build_cmd->add_option("-o,--out", build.out, "result file (default stdout)");
  build_cmd->add_option("--edges-out", build.edges_out, "also write the spanner as an edge list");
  build_cmd->add_flag("--check-invariants", build.check, "check the clustering invariants after every phase");

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "check the fault-tolerant stretch of a spanner");
  add_graph_options(verify_cmd, verify.src);
  verify_cmd->add_option("--result", verify.result, "result JSON written by build");
  verify_cmd->add_option("--spanner", verify.spanner, "spanner as an edge list over the same vertex ids");
  verify_cmd->add_option("--f", verify.f, "faults (default: from the result)");
  verify_cmd->add_option("--k", verify.k, "stretch parameter (default: from the result)");
  verify_cmd->add_option("--mode", verify.mode, "exhaustive or sampled:N")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "seed for sampled mode")->capture_default_str();
  verify_cmd->add_option("--cap", verify.cap, "largest number of fault sets enumerated")->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "worker threads (default: FTSPANNER_THREADS or 1)");
  verify_cmd->add_option("--max-recorded", verify.max_recorded, "violations listed in the report")
      ->capture_default_str();
  verify_cmd->add_option("-o,--out", verify.out, "report file (default stdout)");

  CertificateFlags cert;
  auto* cert_cmd = app.add_subcommand("certificate", "build a sparse vertex-connectivity certificate");
  add_graph_options(cert_cmd, cert.src);
  cert_cmd->add_option("--lambda", cert.lambda, "connectivity to preserve")->capture_default_str();
  cert_cmd->add_option("--seed", cert.seed, "random seed")->capture_default_str();
  cert_cmd->add_option("--ck", cert.c_k, "cluster count constant")->capture_default_str();
  cert_cmd->add_option("--cs", cert.c_s, "path sample constant")->capture_default_str();
  cert_cmd->add_flag("--check", cert.check, "verify the certificate over all small fault sets");
  cert_cmd->add_option("--cap", cert.cap, "largest number of fault sets enumerated")->capture_default_str();
  cert_cmd->add_option("--samples", cert.samples, "fault sets tried when the cap is exceeded")
      ->capture_default_str();
  cert_cmd->add_option("-o,--out", cert.out, "result file (default stdout)");
  cert_cmd->add_flag("--timings", cert.timings, "include wall times");

  SimulateFlags sim;
  auto* sim_cmd = app.add_subcommand("simulate", "run the distributed construction in a CONGEST simulator");
  add_graph_options(sim_cmd, sim.build.src);
  add_build_flags(sim_cmd, sim.build);
  sim_cmd->add_option("--cb", sim.c_b, "bandwidth constant: B = cb * ceil(log2 n) bits")->capture_default_str();
  sim_cmd->add_option("--log", sim.log, "write the binary message log here");
  sim_cmd->add_flag("--compare", sim.compare, "also run the sequential build and compare edge sets");
  sim_cmd->add_option("-o,--out", sim.build.out, "output file (default stdout)");

  MisBenchFlags misb;
  auto* mis_cmd = app.add_subcommand("mis-bench", "compare parallel and sequential MIS on random instances (TSV)");
  mis_cmd->add_option("--instances", misb.instances, "number of instances")->capture_default_str();
  mis_cmd->add_option("--max-paths", misb.max_paths, "paths per instance, drawn from 1..max")->capture_default_str();
  mis_cmd->add_option("--max-vertices", misb.max_vertices, "vertex universe size")->capture_default_str();
  mis_cmd->add_option("--max-len", misb.max_len, "longest path")->capture_default_str();
  mis_cmd->add_option("--seed", misb.seed, "random seed")->capture_default_str();
  mis_cmd->add_option("-o,--out", misb.out, "output file (default stdout)");

  HittingFlags hit;
  auto* hit_cmd = app.add_subcommand("hitting-set", "solve a hitting-set instance given as JSON");
  hit_cmd->add_option("instance", hit.instance, "instance file")->required();
  hit_cmd->add_option("--beta", hit.beta, "override the required hits per set");
  hit_cmd->add_option("-o,--out", hit.out, "output file (default stdout)");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "time builds over a parameter grid (TSV, medians over seeds)");
  bench_cmd->add_option("--spec", bench.spec, "JSON with graphs, algos, f, k, seeds");
  bench_cmd->add_option("--graphs", bench.graphs, "generator descriptors");
  bench_cmd->add_option("--algos", bench.algos, "warmup, meta, meta-mod, meta-det, congest");
  bench_cmd->add_option("--f", bench.fs, "fault counts");
  bench_cmd->add_option("--k", bench.ks, "stretch parameters");
  bench_cmd->add_option("--seeds", bench.seeds, "seeds");
  bench_cmd->add_option("--graph-seed", bench.graph_seed, "generator seed")->capture_default_str();
  bench_cmd->add_option("--ck", bench.c_k, "cluster count constant")->capture_default_str();
  bench_cmd->add_option("-o,--out", bench.out, "output file (default stdout)");

  ReportFlags rep;
  auto* rep_cmd = app.add_subcommand("report", "summarize a stored result");
  rep_cmd->add_option("result", rep.result, "result JSON")->required();
  rep_cmd->add_flag("--tsv", rep.tsv, "print the phase trace as TSV");

  std::vector<std::string> manifests;
  auto* suite_cmd = app.add_subcommand("suite", "run suite manifests and compare outcomes");
  suite_cmd->add_option("manifest", manifests, "manifest files")->required();

  std::vector<std::string> argv_store{"ftspanner"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*build_cmd) return cmd_build(build, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*cert_cmd) return cmd_certificate(cert, out, err);
    if (*sim_cmd) return cmd_simulate(sim, out, err);
    if (*mis_cmd) return cmd_mis_bench(misb, out, err);
    if (*hit_cmd) return cmd_hitting_set(hit, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
    if (*rep_cmd) return cmd_report(rep, out, err);
    if (*suite_cmd) {
      SuiteSummary total;
      for (const auto& m : manifests) {
        auto s = run_suite(m, out);
        total.runs += s.runs;
        total.mismatches += s.mismatches;
      }
      out << "suite: " << total.runs << " runs, " << total.mismatches << " mismatches\n";
      return total.mismatches == 0 ? kExitOk : kExitFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ftspan
