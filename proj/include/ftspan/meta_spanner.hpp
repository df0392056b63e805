#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/random.hpp"
#include "ftspan/spanner_result.hpp"

namespace ftspan {

enum class Variant { kSequential, kModified };
enum class MisMode { kGreedy, kParallel };

/// A path from a cluster center (head) to the vertex that owns it (tail).
struct ClusterPath {
  std::vector<Vertex> vertices;
  EdgeId last_edge = kNoEdge;  // kNoEdge only for the one-vertex path

  Vertex head() const { return vertices.front(); }
  Vertex tail() const { return vertices.back(); }
  std::size_t hops() const { return vertices.size() - 1; }
  bool trivial() const { return vertices.size() == 1; }

  friend bool operator==(const ClusterPath&, const ClusterPath&) = default;
};

ClusterPath trivial_path(Vertex v);
ClusterPath extend(const ClusterPath& p, Vertex next, EdgeId via);
std::vector<EdgeId> cluster_path_edges(const Graph& g, const ClusterPath& p);

/// Ascending by the key of the last edge; the one-vertex path comes first.
bool earlier_last_edge(const Graph& g, const ClusterPath& a, const ClusterPath& b);

/// Per-vertex state of one phase: the disjoint path collection, its
/// shortcut and ordered form, and the cluster choice made from it.
struct PathFan {
  Vertex owner = 0;
  std::vector<ClusterPath> disjoint;  // previous cluster paths first, then accepted in scan order
  std::size_t num_previous = 0;
  std::vector<ClusterPath> ordered;   // shortcut paths ascending by last edge
  std::vector<std::uint32_t> source;  // ordered[j] is the shortcut of disjoint[source[j]]
  std::vector<std::uint32_t> taken;   // indices into ordered forming the new cluster paths
  std::size_t cutoff = 0;             // 1-based index of the last taken path, or |ordered| + 1
  std::size_t mis_rounds = 0;
  std::size_t mis_work = 0;

  bool clustered() const { return !taken.empty(); }
};

struct PhaseState {
  std::size_t phase = 0;
  std::size_t k = 0;
  std::size_t f = 0;
  std::size_t cluster_count = 0;  // K_f
  std::vector<Vertex> centers;    // ascending
  std::vector<Vertex> previous_centers;
  std::vector<std::uint8_t> clustered;
  std::vector<std::uint8_t> previous_clustered;
  std::vector<std::vector<ClusterPath>> paths;
  std::vector<std::vector<ClusterPath>> previous_paths;
  std::vector<std::uint8_t> spanner;  // by edge id
  std::vector<std::uint8_t> remaining;
  std::vector<std::uint8_t> previous_remaining;
  std::vector<PathFan> fans;  // indexed by vertex; empty owner fans for vertices outside the previous level
};

using SampleLookup = std::function<const std::vector<ClusterPath>*(Vertex)>;
using EdgePredicate = std::function<bool(EdgeId)>;
using CenterSelector =
    std::function<std::vector<Vertex>(std::size_t phase, const std::vector<Vertex>& previous_centers,
                                      const std::vector<PathFan>& fans, const std::vector<std::uint8_t>& active)>;

struct MetaOptions {
  std::size_t f = 1;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  Variant variant = Variant::kSequential;
  MisMode mis = MisMode::kGreedy;
  double c_k = 20.0;
  double c_s = 4.0;
  double p = 0.0;  // center sampling rate; 0 selects (f/n)^(1/k)
  bool sample_all = false;   // use every cluster path instead of a random sample
  CenterSelector select_centers;  // empty selects the seeded coin flips
  std::function<void(const PhaseState&)> on_phase;
};

std::size_t cluster_count(double c_k, std::size_t k, std::size_t f);
std::size_t sample_count(double c_s, std::size_t n);
double center_rate(const MetaOptions& opt, std::size_t n);

/// Uniform draws with replacement, duplicates removed keeping first occurrence.
std::vector<ClusterPath> sample_paths(const std::vector<ClusterPath>& pool, std::size_t draws, Rng& rng);

/// Builds the disjoint collection for `v` from its remaining edges (ascending
/// by key) and the sampled paths of its neighbours.
PathFan disjoint_paths(const Graph& g, Vertex v, std::span<const EdgeId> incident,
                       const std::vector<ClusterPath>& previous, const SampleLookup& samples, Variant variant,
                       MisMode mis);

/// Cuts `p` at the endpoint of the lightest remaining edge into its tail.
ClusterPath shortcut(const Graph& g, const ClusterPath& p, const EdgePredicate& remaining);

/// Fills `ordered` and `source`.
void order_fan(const Graph& g, PathFan& fan, const EdgePredicate& remaining);

/// Takes the first `count` ordered paths whose head is a center.
void select_clusters(PathFan& fan, const std::function<bool(Vertex)>& is_center, std::size_t count);

/// Remaining edges from the owner into the pre-shortcut paths before the cutoff.
std::vector<EdgeId> light_edges(const Graph& g, const PathFan& fan, const EdgePredicate& remaining);

/// Heaviest edge over a vertex's cluster paths, if any path has an edge.
std::optional<EdgeKey> heaviest_cluster_edge(const Graph& g, const std::vector<ClusterPath>& paths);

std::vector<Vertex> sample_centers(const std::vector<Vertex>& previous, double p, std::uint64_t seed,
                                   std::size_t phase);

SpannerResult build_ft_spanner(const Graph& g, const MetaOptions& opt);

struct InvariantReport {
  std::vector<std::string> diagnostics;
  double size_ratio = 0.0;  // |Z_i| / (f^(i/k) n^(1-i/k)); monitored only
};

InvariantReport check_invariants(const Graph& g, const PhaseState& state);

std::string to_string(Variant v);
std::string to_string(MisMode m);

}  // namespace ftspan
