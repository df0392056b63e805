#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ftspan/graph.hpp"

namespace ftspan {

struct TraceEntry {
  std::string name;  // "phase 1", "step one", ...
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, double> metrics;
  double seconds = 0.0;
};

struct SizeReport {
  std::size_t edges = 0;
  double bound = 0.0;  // evaluated without the leading constant
  double ratio = 0.0;  // edges / bound
};

using ParamValue = std::variant<std::int64_t, double, std::string>;

struct SpannerResult {
  std::string algo;
  std::map<std::string, ParamValue> params;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<EdgeId> edges;  // ascending ids of the source graph
  std::vector<TraceEntry> trace;
  SizeReport size;
};

/// k^3 log2(n) f^(1-1/k) n^(1+1/k) + k^2 f n
double meta_size_bound(std::size_t n, std::size_t f, std::size_t k);
/// f n + sqrt(f) n^(3/2) log2(n)
double warmup_size_bound(std::size_t n, std::size_t f);

SizeReport size_report(std::size_t edges, double bound);

}  // namespace ftspan
