#include "ftspan/meta_spanner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ftspan/parallel_mis.hpp"

namespace ftspan {

ClusterPath trivial_path(Vertex v) { return {{v}, kNoEdge}; }

ClusterPath extend(const ClusterPath& p, Vertex next, EdgeId via) {
  ClusterPath out = p;
  out.vertices.push_back(next);
  out.last_edge = via;
  return out;
}

std::vector<EdgeId> cluster_path_edges(const Graph& g, const ClusterPath& p) {
  std::vector<EdgeId> ids;
  for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
    auto e = g.find_edge(p.vertices[j], p.vertices[j + 1]);
    if (!e) throw GraphError("cluster path uses a non-edge");
    ids.push_back(*e);
  }
  return ids;
}

bool earlier_last_edge(const Graph& g, const ClusterPath& a, const ClusterPath& b) {
  if (a.last_edge == kNoEdge) return b.last_edge != kNoEdge;
  if (b.last_edge == kNoEdge) return false;
  return g.lighter(a.last_edge, b.last_edge);
}

std::size_t cluster_count(double c_k, std::size_t k, std::size_t f) {
  double raw = std::ceil(c_k * static_cast<double>(k) * static_cast<double>(f) - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::max(0.0, raw)));
}

std::size_t sample_count(double c_s, std::size_t n) {
  double lg = n > 1 ? std::ceil(std::log2(static_cast<double>(n))) : 1.0;
  double raw = std::ceil(c_s * lg - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::max(0.0, raw)));
}

double center_rate(const MetaOptions& opt, std::size_t n) {
  if (opt.p > 0.0) return std::min(1.0, opt.p);
  return std::pow(static_cast<double>(opt.f) / static_cast<double>(n), 1.0 / static_cast<double>(opt.k));
}

std::vector<ClusterPath> sample_paths(const std::vector<ClusterPath>& pool, std::size_t draws, Rng& rng) {
  std::vector<ClusterPath> out;
  if (pool.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::uint8_t> seen(pool.size(), 0);
  for (std::size_t d = 0; d < draws; ++d) {
    std::size_t j = pick(rng);
    if (seen[j]) continue;
    seen[j] = 1;
    out.push_back(pool[j]);
  }
  return out;
}

PathFan disjoint_paths(const Graph& g, Vertex v, std::span<const EdgeId> incident,
                       const std::vector<ClusterPath>& previous, const SampleLookup& samples, Variant variant,
                       MisMode mis) {
  PathFan fan;
  fan.owner = v;
  fan.disjoint = previous;
  fan.num_previous = previous.size();
  std::unordered_set<Vertex> used;
  for (const auto& p : previous) used.insert(p.vertices.begin(), p.vertices.end());
  used.insert(v);
  auto intersects = [&](const ClusterPath& p) {
    return std::any_of(p.vertices.begin(), p.vertices.end(), [&](Vertex x) { return used.count(x) > 0; });
  };

  if (variant == Variant::kSequential) {
    for (EdgeId e : incident) {
      Vertex u = g.edge(e).other(v);
      const auto* pool = samples(u);
      if (!pool) continue;
      for (const auto& p : *pool) {
        if (intersects(p)) continue;
        used.insert(p.vertices.begin(), p.vertices.end());
        fan.disjoint.push_back(extend(p, v, e));
        break;
      }
    }
    return fan;
  }

  // All sampled paths in (edge, sample index) order, minus those touching the
  // previous cluster paths; then a lexicographically first independent set.
  std::vector<ClusterPath> candidates;
  PathConflictInstance inst;
  for (EdgeId e : incident) {
    Vertex u = g.edge(e).other(v);
    const auto* pool = samples(u);
    if (!pool) continue;
    for (const auto& p : *pool) {
      if (intersects(p)) continue;
      candidates.push_back(extend(p, v, e));
      inst.paths.push_back(p.vertices);
    }
  }
  inst.rank = identity_rank(inst.paths.size());
  std::vector<std::uint32_t> accepted;
  if (mis == MisMode::kParallel) {
    MisRoundTrace trace;
    accepted = parallel_greedy_mis(inst, &trace);
    fan.mis_rounds = trace.rounds;
    fan.mis_work = trace.work;
  } else {
    accepted = lex_first_mis(inst);
  }
  for (auto j : accepted) fan.disjoint.push_back(std::move(candidates[j]));
  return fan;
}

ClusterPath shortcut(const Graph& g, const ClusterPath& p, const EdgePredicate& remaining) {
  Vertex v = p.tail();
  std::size_t best_pos = p.vertices.size();
  EdgeId best = kNoEdge;
  for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
    auto e = g.find_edge(p.vertices[j], v);
    if (!e || !remaining(*e)) continue;
    if (best == kNoEdge || g.lighter(*e, best)) {
      best = *e;
      best_pos = j;
    }
  }
  if (best == kNoEdge) return p;
  ClusterPath out;
  out.vertices.assign(p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1);
  out.vertices.push_back(v);
  out.last_edge = best;
  return out;
}

void order_fan(const Graph& g, PathFan& fan, const EdgePredicate& remaining) {
  fan.ordered.clear();
  fan.source.clear();
  for (std::uint32_t j = 0; j < fan.disjoint.size(); ++j) {
    fan.ordered.push_back(j < fan.num_previous ? fan.disjoint[j] : shortcut(g, fan.disjoint[j], remaining));
    fan.source.push_back(j);
  }
  std::vector<std::uint32_t> idx(fan.ordered.size());
  for (std::uint32_t j = 0; j < idx.size(); ++j) idx[j] = j;
  std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    return earlier_last_edge(g, fan.ordered[a], fan.ordered[b]);
  });
  std::vector<ClusterPath> sorted;
  std::vector<std::uint32_t> src;
  sorted.reserve(idx.size());
  for (auto j : idx) {
    sorted.push_back(std::move(fan.ordered[j]));
    src.push_back(fan.source[j]);
  }
  fan.ordered = std::move(sorted);
  fan.source = std::move(src);
}

void select_clusters(PathFan& fan, const std::function<bool(Vertex)>& is_center, std::size_t count) {
  fan.taken.clear();
  for (std::uint32_t j = 0; j < fan.ordered.size() && fan.taken.size() < count; ++j) {
    if (is_center(fan.ordered[j].head())) fan.taken.push_back(j);
  }
  if (count == 0 || fan.taken.size() < count) {
    fan.taken.clear();
    fan.cutoff = fan.ordered.size() + 1;
  } else {
    fan.cutoff = fan.taken.back() + 1;
  }
}

std::vector<EdgeId> light_edges(const Graph& g, const PathFan& fan, const EdgePredicate& remaining) {
  std::vector<EdgeId> out;
  std::size_t limit = fan.cutoff == 0 ? 0 : fan.cutoff - 1;
  for (std::size_t j = 0; j < limit && j < fan.ordered.size(); ++j) {
    for (Vertex u : fan.disjoint[fan.source[j]].vertices) {
      if (u == fan.owner) continue;
      auto e = g.find_edge(u, fan.owner);
      if (e && remaining(*e)) out.push_back(*e);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<EdgeKey> heaviest_cluster_edge(const Graph& g, const std::vector<ClusterPath>& paths) {
  std::optional<EdgeKey> best;
  for (const auto& p : paths) {
    for (EdgeId e : cluster_path_edges(g, p)) {
      if (!best || *best < g.key(e)) best = g.key(e);
    }
  }
  return best;
}

std::vector<Vertex> sample_centers(const std::vector<Vertex>& previous, double p, std::uint64_t seed,
                                   std::size_t phase) {
  std::vector<Vertex> out;
  for (Vertex s : previous) {
    Rng rng = stream(seed, s, phase, StreamTag::kCenters);
    if (coin(rng, p)) out.push_back(s);
  }
  return out;
}

std::string to_string(Variant v) { return v == Variant::kSequential ? "seq" : "mod"; }
std::string to_string(MisMode m) { return m == MisMode::kGreedy ? "greedy" : "parallel"; }

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<EdgeId>> incident_remaining(const Graph& g, const std::vector<std::uint8_t>& remaining) {
  std::vector<std::vector<EdgeId>> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (const auto& inc : g.neighbors(v)) {
      if (remaining[inc.edge]) out[v].push_back(inc.edge);
    }
  }
  return out;
}

}  // namespace

SpannerResult build_ft_spanner(const Graph& g, const MetaOptions& opt) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (opt.k < 2) throw std::invalid_argument("k must be at least 2");
  if (opt.f < 1 || opt.f >= std::max<std::size_t>(n, 1)) throw std::invalid_argument("f must satisfy 1 <= f < n");

  const std::size_t kf = cluster_count(opt.c_k, opt.k, opt.f);
  const std::size_t draws = sample_count(opt.c_s, n);
  const double p = center_rate(opt, n);

  PhaseState st;
  st.k = opt.k;
  st.f = opt.f;
  st.cluster_count = kf;
  st.centers.resize(n);
  for (Vertex v = 0; v < n; ++v) st.centers[v] = v;
  st.clustered.assign(n, 1);
  st.paths.resize(n);
  for (Vertex v = 0; v < n; ++v) st.paths[v] = {trivial_path(v)};
  st.spanner.assign(m, 0);
  st.remaining.assign(m, 1);

  SpannerResult result;
  result.n = n;
  result.m = m;

  for (std::size_t i = 1; i <= opt.k; ++i) {
    auto t0 = Clock::now();
    st.phase = i;
    st.previous_centers = std::move(st.centers);
    st.previous_clustered = std::move(st.clustered);
    st.previous_paths = std::move(st.paths);
    st.previous_remaining = st.remaining;
    const auto& prev_r = st.previous_remaining;
    EdgePredicate in_prev_r = [&](EdgeId e) { return prev_r[e] != 0; };

    // Step 1: samples, disjoint collections and shortcuts.
    std::vector<std::vector<ClusterPath>> samples(n);
    for (Vertex u = 0; u < n; ++u) {
      if (!st.previous_clustered[u]) continue;
      if (i == 1 || opt.sample_all) {
        samples[u] = st.previous_paths[u];
      } else {
        Rng rng = stream(opt.seed, u, i, StreamTag::kPathSamples);
        samples[u] = sample_paths(st.previous_paths[u], draws, rng);
      }
    }
    SampleLookup lookup = [&](Vertex u) -> const std::vector<ClusterPath>* {
      return st.previous_clustered[u] ? &samples[u] : nullptr;
    };
    auto incident = incident_remaining(g, prev_r);
    st.fans.assign(n, PathFan{});
    std::size_t mis_rounds = 0, mis_work = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!st.previous_clustered[v]) continue;
      st.fans[v] = disjoint_paths(g, v, incident[v], st.previous_paths[v], lookup, opt.variant, opt.mis);
      order_fan(g, st.fans[v], in_prev_r);
      mis_rounds = std::max(mis_rounds, st.fans[v].mis_rounds);
      mis_work += st.fans[v].mis_work;
    }

    // Step 2: centers and clusters.
    if (i < opt.k) {
      st.centers = opt.select_centers ? opt.select_centers(i, st.previous_centers, st.fans, st.previous_clustered)
                                      : sample_centers(st.previous_centers, p, opt.seed, i);
      std::sort(st.centers.begin(), st.centers.end());
    } else {
      st.centers.clear();
    }
    std::vector<std::uint8_t> is_center(n, 0);
    for (Vertex s : st.centers) is_center[s] = 1;
    auto center_pred = [&](Vertex s) { return is_center[s] != 0; };
    st.clustered.assign(n, 0);
    st.paths.assign(n, {});
    std::size_t num_clustered = 0, max_cutoff = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!st.previous_clustered[v]) continue;
      auto& fan = st.fans[v];
      select_clusters(fan, center_pred, i < opt.k ? kf : 0);
      max_cutoff = std::max(max_cutoff, fan.cutoff);
      if (!fan.clustered()) continue;
      st.clustered[v] = 1;
      ++num_clustered;
      for (auto j : fan.taken) st.paths[v].push_back(fan.ordered[j]);
    }

    // Step 3: spanner edges and the remaining set.
    std::vector<std::uint8_t> tree_mark(m, 0), le_mark(m, 0);
    for (Vertex v = 0; v < n; ++v) {
      for (const auto& path : st.paths[v]) {
        for (EdgeId e : cluster_path_edges(g, path)) tree_mark[e] = 1;
      }
      if (!st.previous_clustered[v]) continue;
      for (EdgeId e : light_edges(g, st.fans[v], in_prev_r)) le_mark[e] = 1;
    }
    std::size_t tree_edges = 0, le_edges = 0, new_edges = 0;
    for (EdgeId e = 0; e < m; ++e) {
      tree_edges += tree_mark[e];
      le_edges += le_mark[e];
      if ((tree_mark[e] || le_mark[e]) && !st.spanner[e]) {
        st.spanner[e] = 1;
        ++new_edges;
      }
    }

    std::vector<std::optional<EdgeKey>> heaviest(n);
    for (Vertex v = 0; v < n; ++v) {
      if (st.clustered[v]) heaviest[v] = heaviest_cluster_edge(g, st.paths[v]);
    }
    std::size_t remaining_count = 0;
    for (EdgeId e = 0; e < m; ++e) {
      bool keep = false;
      if (prev_r[e] && !st.spanner[e]) {
        const auto& ed = g.edge(e);
        if (st.clustered[ed.u] && st.clustered[ed.v]) {
          EdgeKey key = g.key(e);
          keep = (!heaviest[ed.u] || *heaviest[ed.u] < key) && (!heaviest[ed.v] || *heaviest[ed.v] < key);
        }
      }
      st.remaining[e] = keep ? 1 : 0;
      remaining_count += keep;
    }

    TraceEntry entry;
    entry.name = "phase " + std::to_string(i);
    entry.counts["centers"] = static_cast<std::int64_t>(st.centers.size());
    entry.counts["clustered"] = static_cast<std::int64_t>(num_clustered);
    entry.counts["new_edges"] = static_cast<std::int64_t>(new_edges);
    entry.counts["tree_edges"] = static_cast<std::int64_t>(tree_edges);
    entry.counts["light_edges"] = static_cast<std::int64_t>(le_edges);
    entry.counts["remaining"] = static_cast<std::int64_t>(remaining_count);
    entry.counts["max_cutoff"] = static_cast<std::int64_t>(max_cutoff);
    if (opt.mis == MisMode::kParallel) {
      entry.counts["mis_rounds"] = static_cast<std::int64_t>(mis_rounds);
      entry.counts["mis_work"] = static_cast<std::int64_t>(mis_work);
    }
    if (i < opt.k) {
      double expected = std::pow(static_cast<double>(opt.f), static_cast<double>(i) / opt.k) *
                        std::pow(static_cast<double>(n), 1.0 - static_cast<double>(i) / opt.k);
      entry.metrics["center_ratio"] = static_cast<double>(st.centers.size()) / expected;
    }
    entry.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    result.trace.push_back(std::move(entry));

    if (opt.on_phase) opt.on_phase(st);
  }

  for (EdgeId e = 0; e < m; ++e) {
    if (st.spanner[e]) result.edges.push_back(e);
  }
  result.algo = opt.sample_all ? "meta-det" : "meta";
  result.params["f"] = static_cast<std::int64_t>(opt.f);
  result.params["k"] = static_cast<std::int64_t>(opt.k);
  result.params["ck"] = opt.c_k;
  result.params["cluster_count"] = static_cast<std::int64_t>(kf);
  if (!opt.sample_all) {
    result.params["seed"] = static_cast<std::int64_t>(opt.seed);
    result.params["variant"] = to_string(opt.variant);
    result.params["mis"] = to_string(opt.mis);
    result.params["cs"] = opt.c_s;
    result.params["samples"] = static_cast<std::int64_t>(draws);
    result.params["p"] = p;
  }
  result.size = size_report(result.edges.size(), meta_size_bound(n, opt.f, opt.k));
  return result;
}

namespace {

std::string path_text(const ClusterPath& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < p.vertices.size(); ++j) out << (j ? "," : "") << p.vertices[j];
  out << ']';
  return out.str();
}

bool contains_path(const std::vector<ClusterPath>& paths, const ClusterPath& p) {
  return std::any_of(paths.begin(), paths.end(),
                     [&](const ClusterPath& q) { return q.vertices == p.vertices; });
}

// Pairwise disjoint apart from the shared tail.
bool disjoint_except_tail(const std::vector<ClusterPath>& paths, Vertex tail) {
  std::unordered_set<Vertex> seen;
  for (const auto& p : paths) {
    for (Vertex x : p.vertices) {
      if (x == tail) continue;
      if (!seen.insert(x).second) return false;
    }
  }
  return true;
}

}  // namespace

InvariantReport check_invariants(const Graph& g, const PhaseState& st) {
  InvariantReport rep;
  auto& diag = rep.diagnostics;
  const std::size_t n = g.num_vertices();
  const std::size_t i = st.phase;
  auto report = [&](const std::string& tag, const std::string& msg) {
    diag.push_back("phase " + std::to_string(i) + " " + tag + ": " + msg);
  };
  if (i > 0 && st.k > 0 && i < st.k && n > 0) {
    double expected = std::pow(static_cast<double>(st.f), static_cast<double>(i) / st.k) *
                      std::pow(static_cast<double>(n), 1.0 - static_cast<double>(i) / st.k);
    rep.size_ratio = static_cast<double>(st.centers.size()) / expected;
  }
  if (i == 0) return rep;

  std::vector<std::uint8_t> is_center(n, 0), was_center(n, 0);
  for (Vertex s : st.centers) is_center[s] = 1;
  for (Vertex s : st.previous_centers) was_center[s] = 1;
  for (Vertex s : st.centers) {
    if (!was_center[s]) report("centers", "center " + std::to_string(s) + " was not a center before");
  }

  std::vector<std::optional<EdgeKey>> heaviest(n);
  // (child, tree root) -> parent, to check that each tree is a tree.
  std::map<std::pair<Vertex, Vertex>, Vertex> parent;
  std::unordered_map<EdgeId, std::set<Vertex>> trees_of_edge;

  for (Vertex v = 0; v < n; ++v) {
    const auto& paths = st.paths[v];
    if (!st.clustered[v]) {
      if (!paths.empty()) report("V", "unclustered vertex " + std::to_string(v) + " has cluster paths");
      continue;
    }
    if (!st.previous_clustered[v]) report("V", "vertex " + std::to_string(v) + " clustered without being clustered before");
    if (paths.size() != st.cluster_count) {
      report("V", "vertex " + std::to_string(v) + " has " + std::to_string(paths.size()) + " cluster paths, expected " +
                      std::to_string(st.cluster_count));
    }
    if (!disjoint_except_tail(paths, v)) report("III", "cluster paths of " + std::to_string(v) + " share a vertex");
    std::set<Vertex> heads;
    for (const auto& p : paths) {
      std::string where = "path " + path_text(p) + " of " + std::to_string(v);
      if (p.vertices.empty() || p.tail() != v) {
        report("II", where + " does not end at its owner");
        continue;
      }
      if (!is_center[p.head()]) report("II", where + " starts at a non-center");
      if (!heads.insert(p.head()).second) report("II", where + " repeats a center");
      if (p.hops() > i) report("II", where + " is longer than " + std::to_string(i) + " hops");
      std::vector<EdgeId> ids;
      try {
        ids = path_edges(g, Path{p.vertices});
      } catch (const GraphError& e) {
        report("II", where + ": " + e.what());
        continue;
      }
      if (!ids.empty() && ids.back() != p.last_edge) report("II", where + " has a stale last edge");
      for (std::size_t j = 1; j < ids.size(); ++j) {
        if (!g.lighter(ids[j - 1], ids[j])) report("IV", where + " is not increasing toward its tail");
      }
      for (std::size_t j = 0; j < ids.size(); ++j) {
        Vertex child = p.vertices[j + 1], par = p.vertices[j];
        auto [it, fresh] = parent.emplace(std::pair(child, p.head()), par);
        if (!fresh && it->second != par) {
          report("II", "vertex " + std::to_string(child) + " has two parents in the tree of " + std::to_string(p.head()));
        }
        trees_of_edge[ids[j]].insert(p.head());
        if (!heaviest[v] || *heaviest[v] < g.key(ids[j])) heaviest[v] = g.key(ids[j]);
      }
      if (parent.count({p.head(), p.head()})) report("II", "root " + std::to_string(p.head()) + " has a parent");
    }

    // Continuity: previous cluster paths to surviving centers are kept.
    for (const auto& q : st.previous_paths[v]) {
      if (!q.vertices.empty() && is_center[q.head()] && !contains_path(paths, q)) {
        report("continuity", "path " + path_text(q) + " of " + std::to_string(v) + " to a surviving center was dropped");
      }
    }
    // Prefix closure.
    for (const auto& p : paths) {
      for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
        Vertex u = p.vertices[j];
        if (!st.clustered[u]) continue;
        ClusterPath prefix{{p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(j) + 1}, kNoEdge};
        bool in_now = contains_path(st.paths[u], prefix);
        bool in_before = contains_path(st.previous_paths[u], prefix);
        if (!in_now || !in_before) {
          report("prefix", "prefix " + path_text(prefix) + " of a path of " + std::to_string(v) + " is missing at " +
                               std::to_string(u));
        }
      }
    }
  }
  for (const auto& [e, roots] : trees_of_edge) {
    if (roots.size() > 2) report("two-trees", "edge " + std::to_string(e) + " lies in " + std::to_string(roots.size()) + " trees");
  }

  // Fans: disjointness and the shortcut property.
  for (Vertex v = 0; v < n && v < st.fans.size(); ++v) {
    if (!st.previous_clustered[v]) continue;
    const auto& fan = st.fans[v];
    if (!disjoint_except_tail(fan.disjoint, v)) report("fan", "disjoint collection of " + std::to_string(v) + " overlaps");
    if (!disjoint_except_tail(fan.ordered, v)) report("fan", "shortcut collection of " + std::to_string(v) + " overlaps");
    for (std::size_t j = 1; j < fan.ordered.size(); ++j) {
      if (!earlier_last_edge(g, fan.ordered[j - 1], fan.ordered[j])) {
        report("fan", "shortcut collection of " + std::to_string(v) + " is not strictly ordered");
      }
    }
    for (std::size_t j = fan.num_previous; j < fan.disjoint.size(); ++j) {
      const auto& orig = fan.disjoint[j];
      auto pos = std::find(fan.source.begin(), fan.source.end(), j) - fan.source.begin();
      const auto& cut = fan.ordered[static_cast<std::size_t>(pos)];
      for (Vertex u : orig.vertices) {
        if (u == v) continue;
        auto e = g.find_edge(u, v);
        if (e && st.previous_remaining[*e] && g.lighter(*e, cut.last_edge)) {
          report("shortcut", "path " + path_text(cut) + " of " + std::to_string(v) + " is not cut at its lightest edge");
        }
      }
    }
  }

  // Remaining set: shrinks, stays inside the clustered level, lies above cluster paths.
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!st.remaining[e]) continue;
    const auto& ed = g.edge(e);
    if (!st.previous_remaining[e]) report("R", "edge " + std::to_string(e) + " re-entered the remaining set");
    if (!st.clustered[ed.u] || !st.clustered[ed.v]) report("R", "edge " + std::to_string(e) + " has an unclustered endpoint");
    if (st.spanner[e]) report("R", "edge " + std::to_string(e) + " is both in the spanner and remaining");
    for (Vertex x : {ed.u, ed.v}) {
      if (heaviest[x] && !(*heaviest[x] < g.key(e))) {
        report("R", "edge " + std::to_string(e) + " is not heavier than the cluster paths of " + std::to_string(x));
      }
    }
  }
  return rep;
}

}  // namespace ftspan
