#include "ftspan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <queue>
#include <sstream>

namespace ftspan {

Graph::Graph(std::size_t n, std::span<const WeightedPair> edges) : n_(n) {
  if (n > std::numeric_limits<Vertex>::max()) throw GraphError("too many vertices");
  edges_.reserve(edges.size());
  index_.reserve(edges.size() * 2);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge " + std::to_string(i) + ": vertex id out of range");
    }
    if (e.u == e.v) throw GraphError("edge " + std::to_string(i) + ": self-loop");
    if (e.w == 0) throw GraphError("edge " + std::to_string(i) + ": weight must be positive");
    auto id = static_cast<EdgeId>(i);
    if (!index_.emplace(pair_key(e.u, e.v), id).second) {
      throw GraphError("edge " + std::to_string(i) + ": duplicate edge");
    }
    edges_.push_back({e.u, e.v, e.w, id});
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = {e.v, e.id};
    adjacency_[fill[e.v]++] = {e.u, e.id};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
              [&](const Incidence& a, const Incidence& b) { return key(a.edge) < key(b.edge); });
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  auto it = index_.find(pair_key(a, b));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1; });
}

Weight Graph::max_weight() const {
  Weight m = 0;
  for (const auto& e : edges_) m = std::max(m, e.w);
  return m;
}

Graph Graph::subgraph(std::span<const EdgeId> ids) const {
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<WeightedPair> kept;
  kept.reserve(sorted.size());
  for (EdgeId id : sorted) {
    if (id >= edges_.size()) throw GraphError("subgraph: edge id " + std::to_string(id) + " out of range");
    const auto& e = edges_[id];
    kept.push_back({e.u, e.v, e.w});
  }
  return Graph(n_, kept);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view& s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<WeightedPair> edges;
  std::optional<std::size_t> declared_n;
  std::size_t max_id_plus_one = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.size() > 2 && body[0] == 'n' && (body[1] == ' ' || body[1] == '\t')) {
        body.remove_prefix(1);
        std::size_t n = 0;
        if (parse_number(body, n) && trim(body).empty()) declared_n = n;
      }
      continue;
    }
    std::int64_t u = 0, v = 0, w = 0;
    std::string_view rest = line;
    if (!parse_number(rest, u) || !parse_number(rest, v) || !parse_number(rest, w) || !trim(rest).empty()) {
      throw GraphError("line " + std::to_string(line_no) + ": expected \"u v w\"");
    }
    if (u < 0 || v < 0) throw GraphError("line " + std::to_string(line_no) + ": negative vertex id");
    if (w < 1) throw GraphError("line " + std::to_string(line_no) + ": weight must be >= 1");
    if (u == v) throw GraphError("line " + std::to_string(line_no) + ": self-loop");
    if (u > std::numeric_limits<Vertex>::max() - 1 || v > std::numeric_limits<Vertex>::max() - 1) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex id too large");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Weight>(w)});
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  std::size_t n = declared_n.value_or(max_id_plus_one);
  if (n < max_id_plus_one) throw GraphError("declared vertex count is smaller than the largest id");
  try {
    return Graph(n, edges);
  } catch (const GraphError& e) {
    // The constructor reports 0-based edge positions; callers think in records.
    std::string msg = e.what();
    if (msg.rfind("edge ", 0) == 0) {
      std::size_t idx = std::stoul(msg.substr(5));
      throw GraphError("edge record " + std::to_string(idx + 1) + msg.substr(msg.find(':')));
    }
    throw;
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

std::vector<EdgeId> path_edges(const Graph& g, const Path& p) {
  std::vector<EdgeId> ids;
  if (p.vertices.size() < 2) return ids;
  ids.reserve(p.vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
    if (!e) throw GraphError("path uses a non-edge");
    ids.push_back(*e);
  }
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("path repeats a vertex");
  }
  return ids;
}

Weight path_length(const Graph& g, const Path& p) {
  Weight total = 0;
  for (EdgeId id : path_edges(g, p)) total += g.edge(id).w;
  return total;
}

EdgeId last_edge(const Graph& g, const Path& p) {
  if (p.vertices.size() < 2) return kNoEdge;
  auto e = g.find_edge(p.vertices[p.vertices.size() - 2], p.vertices.back());
  if (!e) throw GraphError("path uses a non-edge");
  return *e;
}

Path concat(const Path& a, const Path& b) {
  if (a.vertices.empty()) return b;
  if (b.vertices.empty()) return a;
  if (a.tail() != b.head()) throw GraphError("concat: tail and head differ");
  Path out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  return out;
}

FaultSet::FaultSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool FaultSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

ShortestPaths::ShortestPaths(const Graph& g)
    : g_(&g), dist_(g.num_vertices(), kUnreachable), parent_(g.num_vertices(), 0) {}

Weight ShortestPaths::run(Vertex s, Vertex t, std::span<const std::uint8_t> blocked, Weight limit) {
  for (Vertex x : touched_) dist_[x] = kUnreachable;
  touched_.clear();
  auto is_blocked = [&](Vertex x) { return !blocked.empty() && blocked[x] != 0; };
  if (is_blocked(s) || is_blocked(t)) return kUnreachable;
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist_[s] = 0;
  parent_[s] = s;
  touched_.push_back(s);
  heap.push({0, s});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist_[x]) continue;
    if (x == t) return d;
    if (d > limit) return kUnreachable;
    for (const auto& inc : g_->neighbors(x)) {
      Vertex y = inc.neighbor;
      if (is_blocked(y)) continue;
      Weight nd = d + g_->edge(inc.edge).w;
      if (nd < dist_[y]) {
        if (dist_[y] == kUnreachable) touched_.push_back(y);
        dist_[y] = nd;
        parent_[y] = x;
        heap.push({nd, y});
      }
    }
  }
  return kUnreachable;
}

Weight ShortestPaths::distance(Vertex s, Vertex t, std::span<const std::uint8_t> blocked, Weight limit) {
  Weight d = run(s, t, blocked, limit);
  return d > limit ? kUnreachable : d;
}

Weight ShortestPaths::shortest_path(Vertex s, Vertex t, std::span<const std::uint8_t> blocked,
                                    std::vector<Vertex>& path_out) {
  path_out.clear();
  Weight d = run(s, t, blocked, kUnreachable);
  if (d == kUnreachable) return d;
  for (Vertex x = t;; x = parent_[x]) {
    path_out.push_back(x);
    if (x == s) break;
  }
  std::reverse(path_out.begin(), path_out.end());
  return d;
}

Weight dist(const Graph& g, Vertex u, Vertex v, const FaultSet& excluded) {
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw std::invalid_argument("dist: vertex out of range");
  if (excluded.contains(u) || excluded.contains(v)) {
    throw std::invalid_argument("dist: endpoint is in the excluded set");
  }
  if (u == v) return 0;
  std::vector<std::uint8_t> blocked(g.num_vertices(), 0);
  for (Vertex x : excluded.vertices()) {
    if (x < blocked.size()) blocked[x] = 1;
  }
  ShortestPaths sp(g);
  return sp.distance(u, v, blocked);
}

}  // namespace ftspan
