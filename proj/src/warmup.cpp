#include "ftspan/warmup.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "ftspan/meta_spanner.hpp"
#include "ftspan/random.hpp"

namespace ftspan {

StarClustering warmup_clustering(const Graph& g, const WarmupOptions& opt) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  if (opt.f < 1 || opt.f >= n) throw std::invalid_argument("f must satisfy 1 <= f < n");
  const double p = opt.p > 0.0 ? std::min(1.0, opt.p) : std::sqrt(static_cast<double>(opt.f) / static_cast<double>(n));
  const std::size_t need = 4 * opt.f;
  const std::size_t draws = sample_count(opt.c_s, n);

  StarClustering c;
  c.is_center.assign(n, 0);
  c.unclustered.assign(n, 0);
  c.chosen.resize(n);
  c.samples.resize(n);
  c.observed.resize(n);
  c.scan_edges.resize(n);
  c.light.resize(n);
  c.base.assign(m, 0);
  for (Vertex v = 0; v < n; ++v) {
    Rng rng = stream(opt.seed, v, 0, StreamTag::kWarmupCenters);
    c.is_center[v] = coin(rng, p) ? 1 : 0;
  }

  // Step one: the 4f lightest edges into centers; LE(v) below the heaviest of them.
  for (Vertex v = 0; v < n; ++v) {
    EdgeId heaviest = kNoEdge;
    for (const auto& inc : g.neighbors(v)) {
      if (c.chosen[v].size() == need) break;
      if (!c.is_center[inc.neighbor]) continue;
      c.chosen[v].push_back(inc.neighbor);
      heaviest = inc.edge;
    }
    if (c.chosen[v].size() < need) {
      c.chosen[v].clear();
      c.unclustered[v] = 1;
      for (const auto& inc : g.neighbors(v)) c.light[v].push_back(inc.edge);
    } else {
      for (const auto& inc : g.neighbors(v)) {
        if (!g.lighter(inc.edge, heaviest)) break;
        c.light[v].push_back(inc.edge);
      }
      for (Vertex s : c.chosen[v]) c.base[*g.find_edge(s, v)] = 1;
    }
    for (EdgeId e : c.light[v]) c.base[e] = 1;
  }

  for (Vertex u = 0; u < n; ++u) {
    if (c.unclustered[u]) continue;
    Rng rng = stream(opt.seed, u, 0, StreamTag::kWarmupSamples);
    std::uniform_int_distribution<std::size_t> pick(0, c.chosen[u].size() - 1);
    for (std::size_t d = 0; d < draws; ++d) c.samples[u].push_back(c.chosen[u][pick(rng)]);
  }

  // Step two: scan the edges outside H' lightest first.
  for (Vertex v = 0; v < n; ++v) {
    if (c.unclustered[v]) continue;
    std::unordered_set<Vertex> seen;
    for (const auto& inc : g.neighbors(v)) {
      if (c.base[inc.edge]) continue;
      Vertex u = inc.neighbor;
      if (c.unclustered[u]) continue;
      std::optional<Vertex> fresh;
      for (Vertex s : c.samples[u]) {
        if (!seen.count(s) && (!fresh || s < *fresh)) fresh = s;
      }
      if (!fresh) continue;
      seen.insert(*fresh);
      c.observed[v].push_back(*fresh);
      c.scan_edges[v].push_back(inc.edge);
    }
  }
  return c;
}

SpannerResult build_3spanner(const Graph& g, const WarmupOptions& opt) {
  using Clock = std::chrono::steady_clock;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  auto t0 = Clock::now();
  StarClustering c = warmup_clustering(g, opt);
  auto t1 = Clock::now();

  std::vector<std::uint8_t> in_h = c.base;
  std::size_t base_edges = static_cast<std::size_t>(std::count(c.base.begin(), c.base.end(), 1));
  std::vector<std::uint8_t> scanned(m, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (EdgeId e : c.scan_edges[v]) scanned[e] = 1;
  }
  std::size_t scan_edges = 0, new_edges = 0;
  for (EdgeId e = 0; e < m; ++e) {
    scan_edges += scanned[e];
    if (scanned[e] && !in_h[e]) {
      in_h[e] = 1;
      ++new_edges;
    }
  }

  SpannerResult r;
  r.algo = "warmup";
  r.n = n;
  r.m = m;
  r.params["f"] = static_cast<std::int64_t>(opt.f);
  r.params["k"] = static_cast<std::int64_t>(2);
  r.params["seed"] = static_cast<std::int64_t>(opt.seed);
  r.params["cs"] = opt.c_s;
  r.params["samples"] = static_cast<std::int64_t>(sample_count(opt.c_s, n));
  r.params["p"] = opt.p > 0.0 ? std::min(1.0, opt.p) : std::sqrt(static_cast<double>(opt.f) / static_cast<double>(n));
  for (EdgeId e = 0; e < m; ++e) {
    if (in_h[e]) r.edges.push_back(e);
  }
  TraceEntry one;
  one.name = "step one";
  one.counts["centers"] = std::count(c.is_center.begin(), c.is_center.end(), 1);
  one.counts["unclustered"] = std::count(c.unclustered.begin(), c.unclustered.end(), 1);
  one.counts["base_edges"] = static_cast<std::int64_t>(base_edges);
  one.seconds = std::chrono::duration<double>(t1 - t0).count();
  TraceEntry two;
  two.name = "step two";
  two.counts["scan_edges"] = static_cast<std::int64_t>(scan_edges);
  two.counts["new_edges"] = static_cast<std::int64_t>(new_edges);
  two.seconds = std::chrono::duration<double>(Clock::now() - t1).count();
  r.trace = {one, two};
  r.size = size_report(r.edges.size(), warmup_size_bound(n, opt.f));
  return r;
}

WarmupSize warmup_size_report(const SpannerResult& result, double c) {
  std::size_t f = 1;
  if (auto it = result.params.find("f"); it != result.params.end()) {
    f = static_cast<std::size_t>(std::get<std::int64_t>(it->second));
  }
  return {result.edges.size(), c * warmup_size_bound(result.n, f)};
}

}  // namespace ftspan
