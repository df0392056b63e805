#pragma once

// Reference implementations written straight from the definitions. They are
// slow on purpose and share no code with the library beyond the Graph type.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/parallel_mis.hpp"

namespace oracle {

using ftspan::Graph;
using ftspan::Vertex;
using ftspan::Weight;

inline constexpr Weight kInf = ftspan::kUnreachable;

inline Graph make_graph(std::size_t n, std::vector<ftspan::WeightedPair> edges) {
  return Graph(n, edges);
}

/// All-pairs distances with the listed vertices deleted (Floyd-Warshall).
inline std::vector<std::vector<Weight>> all_pairs(const Graph& g, const std::vector<Vertex>& deleted) {
  std::size_t n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (Vertex x : deleted) gone[x] = 1;
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kInf));
  for (std::size_t x = 0; x < n; ++x) {
    if (!gone[x]) d[x][x] = 0;
  }
  for (const auto& e : g.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t a = 0; a < n; ++a) {
      if (d[a][m] == kInf) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (d[m][b] == kInf) continue;
        d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
      }
    }
  }
  return d;
}

inline Weight distance(const Graph& g, Vertex u, Vertex v, const std::vector<Vertex>& deleted = {}) {
  return all_pairs(g, deleted)[u][v];
}

/// Calls visit(F) for every subset F of `pool` with |F| <= max_size.
inline void for_each_subset(const std::vector<Vertex>& pool, std::size_t max_size,
                            const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> current;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    visit(current);
    if (current.size() == max_size) return;
    for (std::size_t j = from; j < pool.size(); ++j) {
      current.push_back(pool[j]);
      rec(j + 1);
      current.pop_back();
    }
  };
  rec(0);
}

inline std::vector<Vertex> all_but(std::size_t n, std::vector<Vertex> skip) {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n; ++x) {
    if (std::find(skip.begin(), skip.end(), x) == skip.end()) out.push_back(x);
  }
  return out;
}

/// dist_{h-F}(u, v) <= (2i-1) w for every F avoiding u, v with |F| <= f.
inline bool protected_edge(const Graph& h, Vertex u, Vertex v, Weight w, std::size_t f, std::size_t i) {
  bool ok = true;
  for_each_subset(all_but(h.num_vertices(), {u, v}), f, [&](const std::vector<Vertex>& faults) {
    if (!ok) return;
    Weight d = distance(h, u, v, faults);
    if (d == kInf || d > (2 * i - 1) * w) ok = false;
  });
  return ok;
}

/// Worst surviving distance over all fault sets, kInf if some set disconnects.
inline Weight worst_distance(const Graph& h, Vertex u, Vertex v, std::size_t f) {
  Weight worst = 0;
  for_each_subset(all_but(h.num_vertices(), {u, v}), f, [&](const std::vector<Vertex>& faults) {
    worst = std::max(worst, distance(h, u, v, faults));
  });
  return worst;
}

/// Every edge of g is (f, k)-protected in h.
inline bool is_ft_spanner(const Graph& g, const Graph& h, std::size_t f, std::size_t k) {
  for (const auto& e : g.edges()) {
    if (!protected_edge(h, e.u, e.v, e.w, f, k)) return false;
  }
  return true;
}

/// Component label per vertex of g minus the deleted set (deleted get -1).
inline std::vector<int> components(const Graph& g, const std::vector<Vertex>& deleted) {
  std::size_t n = g.num_vertices();
  std::vector<int> label(n, -2);
  for (Vertex x : deleted) label[x] = -1;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -2) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges()) {
        if (e.u != x && e.v != x) continue;
        Vertex y = e.other(x);
        if (label[y] == -2) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

/// For every |F| <= lambda - 1, g - F and h - F connect the same pairs.
inline bool is_certificate(const Graph& g, const Graph& h, std::size_t lambda) {
  bool ok = true;
  for_each_subset(all_but(g.num_vertices(), {}), lambda - 1, [&](const std::vector<Vertex>& faults) {
    if (!ok) return;
    auto cg = components(g, faults);
    auto ch = components(h, faults);
    for (std::size_t a = 0; a < cg.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < cg.size(); ++b) {
        if (cg[a] < 0 || cg[b] < 0) continue;
        if ((cg[a] == cg[b]) != (ch[a] == ch[b])) {
          ok = false;
          break;
        }
      }
    }
  });
  return ok;
}

inline bool paths_conflict(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

/// A set is the lexicographically first MIS under `rank` iff each path is in
/// the set exactly when no earlier-ranked conflicting path is in the set.
/// Checked against an explicit conflict matrix.
inline bool is_lex_first_mis(const ftspan::PathConflictInstance& inst, const std::vector<std::uint32_t>& chosen) {
  std::size_t n = inst.paths.size();
  std::vector<char> in(n, 0);
  for (auto p : chosen) {
    if (p >= n || in[p]) return false;
    in[p] = 1;
  }
  std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      conflict[a][b] = a != b && paths_conflict(inst.paths[a], inst.paths[b]);
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    bool blocked = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (conflict[p][q] && in[q] && inst.rank[q] < inst.rank[p]) blocked = true;
    }
    if (static_cast<bool>(in[p]) == blocked) return false;
  }
  return true;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t j = 1; j <= r; ++j) out = out * (n - r + j) / j;
  return out;
}

/// Cluster constant giving exactly f + 1 paths per clustered vertex.
inline double tight_ck(std::size_t f, std::size_t k) {
  return (static_cast<double>(f) + 0.5) / static_cast<double>(k * f);
}

}  // namespace oracle
