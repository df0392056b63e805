#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ftspan {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;
  EdgeId id = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
};

// Global strict total order on edges: weight first, input index breaks ties.
struct EdgeKey {
  Weight w = 0;
  EdgeId id = 0;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct Incidence {
  Vertex neighbor = 0;
  EdgeId edge = 0;
};

struct WeightedPair {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable weighted undirected simple graph.
///
/// Edge ids are input positions. Every adjacency list is sorted ascending by
/// (weight, id), so scanning a list visits incident edges lightest first.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on self-loops, parallel edges, zero weights or ids >= n.
  Graph(std::size_t n, std::span<const WeightedPair> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  EdgeKey key(EdgeId id) const { return {edges_[id].w, id}; }
  bool lighter(EdgeId a, EdgeId b) const { return key(a) < key(b); }

  std::span<const Incidence> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  bool unit_weights() const;
  Weight max_weight() const;

  /// Subgraph on the same vertex set keeping the listed edges. Edges are
  /// renumbered in ascending original-id order, so the tie order is preserved.
  Graph subgraph(std::span<const EdgeId> ids) const;

 private:
  static std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

/// Parses the "u v w" edge-list format. Lines starting with '#' are comments;
/// "# n <count>" fixes the vertex count (otherwise max id + 1).
Graph parse_edge_list(std::string_view text);
Graph load_graph(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Root-to-tail vertex sequence.
struct Path {
  std::vector<Vertex> vertices;

  Vertex head() const { return vertices.front(); }
  Vertex tail() const { return vertices.back(); }
  std::size_t hops() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Validates adjacency and simplicity; returns the edge ids along the path.
std::vector<EdgeId> path_edges(const Graph& g, const Path& p);
Weight path_length(const Graph& g, const Path& p);
EdgeId last_edge(const Graph& g, const Path& p);
Path concat(const Path& a, const Path& b);

class FaultSet {
 public:
  FaultSet() = default;
  explicit FaultSet(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(Vertex v) const;

 private:
  std::vector<Vertex> vertices_;
};

/// Dijkstra workspace reused across queries. Blocked vertices are skipped
/// during traversal; the graph itself is never copied.
class ShortestPaths {
 public:
  explicit ShortestPaths(const Graph& g);

  /// dist from s to t avoiding vertices with blocked[x] != 0; stops early once
  /// t is settled or the frontier exceeds `limit`.
  Weight distance(Vertex s, Vertex t, std::span<const std::uint8_t> blocked,
                  Weight limit = kUnreachable);

  /// Same query, also returning the vertex sequence s..t (empty if unreachable).
  Weight shortest_path(Vertex s, Vertex t, std::span<const std::uint8_t> blocked,
                       std::vector<Vertex>& path_out);

 private:
  Weight run(Vertex s, Vertex t, std::span<const std::uint8_t> blocked, Weight limit);

  const Graph* g_;
  std::vector<Weight> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> touched_;
};

/// dist_{G \ F}(u, v); kUnreachable if disconnected.
Weight dist(const Graph& g, Vertex u, Vertex v, const FaultSet& excluded = {});

}  // namespace ftspan
