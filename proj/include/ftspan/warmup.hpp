#pragma once

#include <cstdint>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/spanner_result.hpp"

namespace ftspan {

struct WarmupOptions {
  std::size_t f = 1;
  std::uint64_t seed = 0;
  double c_s = 4.0;
  double p = 0.0;  // 0 selects sqrt(f/n)
};

/// Everything the two steps decide, kept for inspection by tests.
struct StarClustering {
  std::vector<std::uint8_t> is_center;
  std::vector<std::uint8_t> unclustered;
  std::vector<std::vector<Vertex>> chosen;      // S(v): 4f centers, by ascending edge key
  std::vector<std::vector<Vertex>> samples;     // S'(v): draws from S(v), with repeats
  std::vector<std::vector<Vertex>> observed;    // L(v) in insertion order
  std::vector<std::vector<EdgeId>> scan_edges;  // accepted edges of the scan, per v
  std::vector<std::vector<EdgeId>> light;       // LE(v)
  std::vector<std::uint8_t> base;               // H' by edge id
};

StarClustering warmup_clustering(const Graph& g, const WarmupOptions& opt);

SpannerResult build_3spanner(const Graph& g, const WarmupOptions& opt);

/// Edge count and the evaluated size bound scaled by `c`.
struct WarmupSize {
  std::size_t edges = 0;
  double bound = 0.0;
};
WarmupSize warmup_size_report(const SpannerResult& result, double c);

}  // namespace ftspan
