#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftspan/graph.hpp"

namespace ftspan {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultFaultCap = 10'000'000;
inline constexpr double kInfiniteStretch = std::numeric_limits<double>::infinity();

struct Violation {
  EdgeId edge = kNoEdge;  // kNoEdge for a sampled vertex pair
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> faults;
  Weight dist_h = 0;  // kUnreachable when disconnected
  Weight bound = 0;
};

struct VerificationReport {
  std::string mode;  // "exhaustive" or "sampled:N"
  bool pass = true;
  std::uint64_t fault_sets = 0;       // fault sets covered, per edge summed
  std::vector<double> edge_stretch;   // worst dist_{H-F}(u,v) / W(e) per source edge
  double worst_stretch = 0.0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // sorted; at most `max_recorded`
};

struct VerifyOptions {
  std::size_t f = 1;
  std::size_t k = 2;
  bool exhaustive = true;
  std::size_t samples = 0;  // sampled mode: fault sets per edge and random pairs
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultFaultCap;
  std::size_t threads = 1;
  std::size_t max_recorded = 1000;
};

/// sum_{j <= f} C(n - 2, j), saturating.
std::uint64_t fault_sets_per_edge(std::size_t n, std::size_t f);
/// sum_{j <= f} C(n, j), saturating.
std::uint64_t fault_sets_total(std::size_t n, std::size_t f);

/// Is (u, v) of weight w (f, i)-protected in h? Exact over every fault set of
/// size <= f avoiding u and v. Throws BudgetExceeded past `cap` fault sets.
bool is_protected(const Graph& h, Vertex u, Vertex v, Weight w, std::size_t f, std::size_t i,
                  std::uint64_t cap = kDefaultFaultCap);

/// Worst dist_{h-F}(u, v) over all |F| <= f avoiding u, v (kUnreachable if
/// some F disconnects them), found by branching on shortest-path vertices.
Weight worst_fault_distance(const Graph& h, Vertex u, Vertex v, std::size_t f);

VerificationReport verify_spanner(const Graph& g, const Graph& h, const VerifyOptions& opt);

struct CertificateFailure {
  std::vector<Vertex> faults;
  Vertex u = 0;  // connected in g - F but not in h - F
  Vertex v = 0;
};

struct CertificateReport {
  std::string mode;
  bool pass = true;
  std::uint64_t fault_sets = 0;
  std::uint64_t failure_count = 0;
  std::vector<CertificateFailure> failures;
};

/// Compares connectivity of g - F and h - F for every |F| <= lambda - 1, or
/// for `samples` random fault sets when the exhaustive count exceeds `cap`.
CertificateReport verify_certificate(const Graph& g, const Graph& h, std::size_t lambda,
                                     std::uint64_t cap = kDefaultFaultCap, std::size_t samples = 2000,
                                     std::uint64_t seed = 0);

/// Checks every edge of h exists in g with the same weight; throws GraphError otherwise.
void require_subgraph(const Graph& g, const Graph& h);

/// Thread count from FTSPANNER_THREADS, default 1.
std::size_t default_threads();

}  // namespace ftspan
