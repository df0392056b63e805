// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ftspan/cli.hpp"
#include "ftspan/congest.hpp"
#include "ftspan/detkit.hpp"
#include "ftspan/meta_spanner.hpp"
#include "ftspan/parallel_mis.hpp"
#include "ftspan/result_io.hpp"
#include "ftspan/verifier.hpp"
#include "ftspan/warmup.hpp"
#include "support.hpp"

using namespace ftspan;

namespace {

// Tolerances.
constexpr double kSizeConstant = 8.0;          // criterion 3
constexpr double kFlatTimeBand = 2.0;          // criterion 4, randomized
constexpr double kDetGrowth = 3.0;             // criterion 4, deterministic
constexpr double kDoublingRatio = 3.0;         // criterion 5
constexpr double kMisRoundConstant = 4.0;      // criterion 6
constexpr double kRoundRatio = 1.2;            // criterion 8
constexpr double kCertificateConstant = 8.0;   // criterion 9
constexpr std::size_t kSeeds = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  if (xs.empty()) return 0.0;
  std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

std::string fmt(double x, int precision = 3) {
  std::ostringstream s;
  s << std::setprecision(precision) << x;
  return s.str();
}

void info(const std::string& text) { std::cout << "    " << text << '\n'; }

// One configured builder: runs a build with an invariant hook attached.
struct Builder {
  std::string name;
  bool stretch_only_k2 = false;  // warmup is a 3-spanner
  std::function<SpannerResult(const Graph&, std::size_t f, std::size_t k, std::uint64_t seed,
                              std::function<void(const PhaseState&)> hook)>
      build;
};

std::vector<Builder> small_builders() {
  auto meta = [](Variant variant, MisMode mis, bool tight) {
    return [=](const Graph& g, std::size_t f, std::size_t k, std::uint64_t seed,
               std::function<void(const PhaseState&)> hook) {
      MetaOptions opt = tight ? support::clustering(f, k, seed) : support::plain(f, k, seed);
      opt.variant = variant;
      opt.mis = mis;
      opt.on_phase = std::move(hook);
      return build_ft_spanner(g, opt);
    };
  };
  auto det = [](bool tight) {
    return [=](const Graph& g, std::size_t f, std::size_t k, std::uint64_t,
               std::function<void(const PhaseState&)> hook) {
      DetOptions opt;
      opt.f = f;
      opt.k = k;
      if (tight) {
        opt.c_k = oracle::tight_ck(f, k);
        opt.c_det = 0.1;
      }
      opt.on_phase = std::move(hook);
      return build_ft_spanner_det(g, opt);
    };
  };
  auto warmup = [](double p, double c_s) {
    return [=](const Graph& g, std::size_t f, std::size_t, std::uint64_t seed, std::function<void(const PhaseState&)>) {
      return build_3spanner(g, {f, seed, c_s, p});
    };
  };
  return {
      {"warmup", true, warmup(0.0, 4.0)},
      {"warmup-dense", true, warmup(0.5, 2.0)},
      {"meta-seq", false, meta(Variant::kSequential, MisMode::kGreedy, false)},
      {"meta-seq-tight", false, meta(Variant::kSequential, MisMode::kGreedy, true)},
      {"meta-mod", false, meta(Variant::kModified, MisMode::kGreedy, false)},
      {"meta-mod-tight", false, meta(Variant::kModified, MisMode::kParallel, true)},
      {"meta-det", false, det(false)},
      {"meta-det-tight", false, det(true)},
  };
}

// Criterion 1 runs every build once; criterion 2 reuses its invariant log.
struct SmallSweep {
  bool done = false;
  std::size_t builds = 0;
  std::size_t failures = 0;
  std::size_t sparser = 0;
  std::size_t phases = 0;
  std::vector<std::string> failed;
  std::vector<std::string> diagnostics;
  double seconds = 0.0;
};

SmallSweep& small_sweep() {
  static SmallSweep sweep;
  if (sweep.done) return sweep;
  sweep.done = true;
  auto t0 = Clock::now();
  const std::vector<std::string> graphs = {"gnp:n=24,p=0.3",   "gnp:n=30,p=0.4", "gnp:n=40,p=0.25",
                                           "random-regular:n=30,d=6", "grid:rows=6,cols=6", "tree:n=30",
                                           "cycle:n=20",        "complete:n=15"};
  auto builders = small_builders();
  for (const auto& base : graphs) {
    for (const std::string weights : {"", ",w=1-50"}) {
      for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        Graph g = support::gen(base + weights, seed);
        for (std::size_t f : {1, 2}) {
          for (std::size_t k : {2, 3}) {
            for (const auto& b : builders) {
              if (b.stretch_only_k2 && k != 2) continue;
              support::InvariantLog log(g);
              auto r = b.build(g, f, k, seed, log.hook());
              sweep.phases += log.phases;
              ++sweep.builds;
              if (r.edges.size() < g.num_edges()) ++sweep.sparser;
              std::string label = b.name + " on " + base + weights + " seed " + std::to_string(seed) + " f " +
                                  std::to_string(f) + " k " + std::to_string(k);
              for (const auto& d : log.diagnostics) sweep.diagnostics.push_back(label + ": " + d);
              VerifyOptions vo;
              vo.f = f;
              vo.k = k;
              auto rep = verify_spanner(g, support::spanner_of(g, r), vo);
              if (!rep.pass || rep.violation_count != 0) {
                ++sweep.failures;
                sweep.failed.push_back(label + " worst stretch " + fmt(rep.worst_stretch));
              }
            }
          }
        }
      }
    }
  }
  sweep.seconds = seconds_since(t0);
  return sweep;
}

Outcome criterion1() {
  auto& s = small_sweep();
  for (std::size_t j = 0; j < s.failed.size() && j < 10; ++j) info("violation: " + s.failed[j]);
  return {s.failures == 0, std::to_string(s.builds) + " builds verified exhaustively, " + std::to_string(s.failures) +
                               " with violations, " + std::to_string(s.sparser) + " strictly sparser than G (" +
                               fmt(s.seconds) + " s)"};
}

Outcome criterion2() {
  auto& s = small_sweep();
  std::vector<std::string> diagnostics = s.diagnostics;
  std::size_t phases = s.phases, builds = 0;
  auto run = [&](const std::string& spec, std::uint64_t seed, std::size_t f, std::size_t k, const Builder& b) {
    Graph g = support::gen(spec, seed);
    support::InvariantLog log(g);
    b.build(g, f, k, seed, log.hook());
    phases += log.phases;
    ++builds;
    for (const auto& d : log.diagnostics) diagnostics.push_back(b.name + " on " + spec + ": " + d);
  };
  for (const auto& b : small_builders()) {
    if (b.stretch_only_k2) continue;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      for (std::size_t f : {1, 2}) {
        for (std::size_t k : {2, 3}) run("gnp:n=200,p=0.1,w=1-100", seed, f, k, b);
      }
    }
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      for (std::size_t f : {1, 2}) run("gnp:n=1000,p=0.02,w=1-1000", seed, f, 3, b);
    }
  }
  for (std::size_t j = 0; j < diagnostics.size() && j < 10; ++j) info("diagnostic: " + diagnostics[j]);
  return {diagnostics.empty(), std::to_string(phases) + " phases checked over " + std::to_string(s.builds + builds) +
                                   " builds (n = 200 and n = 1000 included), " + std::to_string(diagnostics.size()) +
                                   " diagnostics"};
}

Outcome criterion3() {
  Outcome out;
  double worst = 0.0;
  std::size_t runs = 0;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    Graph g = support::gen("gnp:n=2000,p=0.03", seed);
    for (std::size_t f : {2, 4}) {
      for (std::size_t k : {2, 3}) {
        auto r = build_ft_spanner(g, support::plain(f, k, seed));
        double bound = kSizeConstant * meta_size_bound(g.num_vertices(), f, k);
        double ratio = static_cast<double>(r.edges.size()) / bound;
        worst = std::max(worst, ratio);
        ++runs;
        if (r.edges.size() > bound || r.edges.size() > g.num_edges()) out.pass = false;
        if (seed == 1) {
          info("n 2000 m " + std::to_string(g.num_edges()) + " f " + std::to_string(f) + " k " + std::to_string(k) +
               ": edges " + std::to_string(r.edges.size()) + ", edges/(8 bound) " + fmt(ratio));
        }
      }
    }
  }
  out.detail = std::to_string(runs) + " builds, largest |E(H)| / (8 bound) = " + fmt(worst);
  return out;
}

// Median build time over seeds on gnp(n, p) with the graph seed equal to the build seed.
template <typename Build>
double median_seconds(std::size_t n, double p, Build build) {
  std::vector<double> times;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    Graph g = support::gen("gnp:n=" + std::to_string(n) + ",p=" + fmt(p, 10), seed);
    auto t0 = Clock::now();
    auto r = build(g, seed);
    times.push_back(seconds_since(t0));
    if (r.edges.size() > g.num_edges()) throw std::logic_error("spanner larger than its graph");
  }
  return median(times);
}

Outcome criterion4() {
  const std::size_t n = 5000;
  const double p = 1e5 / (n * (n - 1) / 2.0);
  std::map<std::size_t, double> randomized, det;
  for (std::size_t f : {1, 2, 4, 8}) {
    randomized[f] = median_seconds(n, p, [&](const Graph& g, std::uint64_t seed) {
      return build_ft_spanner(g, support::plain(f, 3, seed));
    });
    det[f] = median_seconds(n, p, [&](const Graph& g, std::uint64_t) {
      DetOptions opt;
      opt.f = f;
      opt.k = 3;
      return build_ft_spanner_det(g, opt);
    });
    info("f " + std::to_string(f) + ": randomized median " + fmt(randomized[f]) + " s, deterministic median " +
         fmt(det[f]) + " s");
  }
  double lo = 1e300, hi = 0.0;
  for (auto [f, t] : randomized) {
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  double band = hi / lo;
  double growth = det[8] / det[1];
  bool flat = band <= kFlatTimeBand;
  bool grows = growth >= kDetGrowth;
  return {flat && grows, "randomized max/min median time " + fmt(band) + " (needs <= " + fmt(kFlatTimeBand) +
                             ", " + (flat ? "ok" : "failed") + "); deterministic f=8 / f=1 time " + fmt(growth) +
                             " (needs >= " + fmt(kDetGrowth) + ", " + (grows ? "ok" : "failed") + ")"};
}

Outcome criterion5() {
  const std::size_t n = 5000;
  const double pairs = n * (n - 1) / 2.0;
  std::vector<double> times;
  for (double m : {25000.0, 50000.0, 100000.0}) {
    times.push_back(median_seconds(n, m / pairs, [](const Graph& g, std::uint64_t seed) {
      return build_ft_spanner(g, support::plain(2, 3, seed));
    }));
    info("m " + fmt(m, 6) + ": median " + fmt(times.back()) + " s");
  }
  double worst = 0.0;
  for (std::size_t j = 1; j < times.size(); ++j) worst = std::max(worst, times[j] / times[j - 1]);
  return {worst <= kDoublingRatio, "largest per-doubling time ratio " + fmt(worst) + " (needs <= " +
                                       fmt(kDoublingRatio) + ")"};
}

Outcome criterion6() {
  std::size_t mismatches = 0;
  std::vector<double> ratios;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    Rng rng = stream(6, t, 1, StreamTag::kGenerator);
    std::size_t paths = std::uniform_int_distribution<std::size_t>(2, 200)(rng);
    auto inst = random_conflict_instance(paths, 60, 8, mix64(6) ^ t);
    MisRoundTrace trace;
    auto par = parallel_greedy_mis(inst, &trace);
    mismatches += par != lex_first_mis(inst);
    double lg = std::log2(static_cast<double>(paths));
    ratios.push_back(static_cast<double>(trace.rounds) / (lg * lg));
  }
  double med = median(ratios);
  return {mismatches == 0 && med <= kMisRoundConstant,
          "10000 instances, " + std::to_string(mismatches) + " mismatches, median rounds/log2^2(paths) " + fmt(med) +
              " (needs <= " + fmt(kMisRoundConstant) + ")"};
}

Outcome criterion7() {
  std::size_t violations = 0, runs = 0;
  double worst_size = 0.0;
  for (std::size_t beta : {1, 2, 4, 8}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto inst = support::random_hitting_instance(1000 + seed, beta);
      auto chosen = beta == 1 ? hitting_set(inst) : beta_hitting_set(inst);
      double limit = static_cast<double>(inst.ground.size()) / inst.delta;
      worst_size = std::max(worst_size, static_cast<double>(chosen.size()) / limit);
      ++runs;
      if (static_cast<double>(chosen.size()) > limit || support::min_hits(inst, chosen) < beta) ++violations;
    }
  }
  return {violations == 0, std::to_string(runs) + " instances, " + std::to_string(violations) +
                               " contract violations, largest |R*| / (|R| / delta) = " + fmt(worst_size)};
}

Outcome criterion8() {
  Outcome out;
  std::size_t runs = 0, differ = 0, over = 0;
  std::map<std::pair<std::string, std::size_t>, std::vector<double>> rounds;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    Graph g = support::gen("gnp:n=500,p=0.05", seed);
    for (std::string config : {"default", "tight"}) {
      for (std::size_t f : {1, 4}) {
        SimOptions opt;
        opt.meta = config == "tight" ? support::clustering(f, 3, seed) : support::plain(f, 3, seed);
        auto sim = simulate_distributed_spanner(g, opt);
        auto seq = build_ft_spanner(g, opt.meta);
        ++runs;
        differ += sim.result.edges != seq.edges;
        over += sim.report.max_bits > sim.report.bandwidth;
        for (const auto& rec : sim.log) over += rec.bits > sim.report.bandwidth;
        rounds[{config, f}].push_back(static_cast<double>(sim.report.total_rounds));
      }
    }
  }
  double ratio = median(rounds[{"default", 4}]) / median(rounds[{"default", 1}]);
  double tight_ratio = median(rounds[{"tight", 4}]) / median(rounds[{"tight", 1}]);
  info("median rounds, default constants: f=1 " + fmt(median(rounds[{"default", 1}])) + ", f=4 " +
       fmt(median(rounds[{"default", 4}])));
  info("median rounds, K_f = f + 1 constants: f=1 " + fmt(median(rounds[{"tight", 1}])) + ", f=4 " +
       fmt(median(rounds[{"tight", 4}])) + " (ratio " + fmt(tight_ratio) + ", not gated)");
  out.pass = differ == 0 && over == 0 && ratio <= kRoundRatio;
  out.detail = std::to_string(runs) + " simulations: " + std::to_string(over) + " over-budget messages, " +
               std::to_string(differ) + " differ from the sequential build, rounds(f=4)/rounds(f=1) = " + fmt(ratio) +
               " (needs <= " + fmt(kRoundRatio) + ")";
  return out;
}

Outcome criterion9() {
  Outcome out;
  std::size_t runs = 0, failed = 0;
  double worst = 0.0;
  for (std::string spec : {"gnp:n=25,p=0.5", "complete:n=10"}) {
    for (std::size_t lambda : {2, 3}) {
      for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      for (bool tight : {false, true}) {
        std::vector<std::string> args = {"certificate", "--gen", spec, "--gen-seed", std::to_string(seed),
                                         "--lambda", std::to_string(lambda), "--seed", std::to_string(seed),
                                         "--check"};
        if (tight) {
          // Cluster constant giving lambda paths per clustered vertex at f = lambda - 1.
          const std::size_t n = spec[0] == 'g' ? 25 : 10;
          const std::size_t f = std::max<std::size_t>(1, lambda - 1);
          const auto k = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
          args.insert(args.end(), {"--ck", fmt(oracle::tight_ck(f, k), 10), "--cs", "2"});
        }
        std::ostringstream o, e;
        int code = run_cli(args, o, e);
        ++runs;
        Json j = Json::parse(o.str(), nullptr, false);
        if (code != kExitOk || !j.is_object() || j["check"]["mode"] != "exhaustive" || j["check"]["pass"] != true) {
          ++failed;
          info("certificate failed on " + spec + " lambda " + std::to_string(lambda) + ": " + e.str());
          continue;
        }
        double n = j["n"].get<double>();
        double bound = kCertificateConstant * lambda * n * std::log2(n) * std::log2(n);
        double edges = static_cast<double>(j["edges"].size());
        worst = std::max(worst, edges / bound);
        if (edges > bound) ++failed;
        if (seed == 1) {
          info(spec + " lambda " + std::to_string(lambda) + (tight ? " (K_f = lambda)" : " (default constants)") +
               ": " + fmt(edges, 6) + " of " + std::to_string(j["m"].get<std::size_t>()) + " edges kept");
        }
      }
      }
    }
  }
  Graph k4 = support::gen("complete:n=4");
  Graph star = oracle::make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  bool control = !verify_certificate(k4, star, 2).pass;
  out.pass = failed == 0 && control;
  out.detail = std::to_string(runs) + " certificates checked exhaustively, " + std::to_string(failed) +
               " failed, largest |E(H)| / (8 lambda n log2^2 n) = " + fmt(worst) + "; K_4 star control " +
               (control ? "rejected" : "NOT rejected");
  return out;
}

Outcome criterion10() {
  auto twice = [](const std::vector<std::string>& args) {
    std::ostringstream a, b, ea, eb;
    int ca = run_cli(args, a, ea);
    int cb = run_cli(args, b, eb);
    return ca == kExitOk && cb == kExitOk && !a.str().empty() && a.str() == b.str();
  };
  std::vector<std::vector<std::string>> commands;
  for (std::string graph : {"gnp:n=60,p=0.2,w=1-40", "random-regular:n=40,d=8"}) {
    commands.push_back({"build", "--gen", graph, "--algo", "meta-det", "--f", "2", "--k", "3"});
    commands.push_back({"build", "--gen", graph, "--algo", "meta-det", "--ck", "0.5", "--cdet", "0.1"});
    for (std::string seed : {"1", "2", "3"}) {
      commands.push_back({"build", "--gen", graph, "--algo", "warmup", "--seed", seed, "--p", "0.5"});
      commands.push_back({"build", "--gen", graph, "--algo", "meta", "--seed", seed, "--ck", "0.5", "--p", "0.6"});
      commands.push_back({"build", "--gen", graph, "--algo", "meta", "--variant", "mod", "--mis", "parallel", "--seed",
                          seed, "--ck", "0.5", "--p", "0.6"});
      commands.push_back({"simulate", "--gen", graph, "--k", "3", "--seed", seed, "--ck", "0.5", "--p", "0.6"});
      commands.push_back({"certificate", "--gen", graph, "--lambda", "3", "--seed", seed});
      commands.push_back({"gen", graph, "--seed", seed});
    }
  }
  std::size_t differ = 0;
  for (const auto& c : commands) {
    if (!twice(c)) {
      ++differ;
      std::string line;
      for (const auto& a : c) line += " " + a;
      info("not reproducible:" + line);
    }
  }
  return {differ == 0, std::to_string(commands.size()) + " commands run twice, " + std::to_string(differ) +
                           " with differing output"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"exhaustive stretch", criterion1},       {"clustering invariants", criterion2},
      {"size bound", criterion3},               {"runtime against f", criterion4},
      {"runtime against m", criterion5},        {"parallel MIS", criterion6},
      {"hitting-set contracts", criterion7},    {"CONGEST simulation", criterion8},
      {"connectivity certificates", criterion9}, {"determinism", criterion10},
  };
  std::set<std::size_t> selected;
  for (int a = 1; a < argc; ++a) selected.insert(std::stoul(argv[a]));
  std::size_t failed = 0;
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    if (!selected.empty() && !selected.count(j + 1)) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[j].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << std::setw(2) << j + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[j].first << ": " << o.detail << " [" << fmt(seconds_since(t0)) << " s]" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
