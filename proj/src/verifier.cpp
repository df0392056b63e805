#include "ftspan/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <tuple>

#include "ftspan/random.hpp"

namespace ftspan {

namespace {

std::uint64_t saturating_binomial_sum(std::size_t n, std::size_t f) {
  const std::uint64_t big = std::numeric_limits<std::uint64_t>::max() / 4;
  std::uint64_t total = 0, term = 1;  // term = C(n, j)
  for (std::size_t j = 0; j <= f && j <= n; ++j) {
    if (j > 0) {
      // C(n, j) = C(n, j-1) * (n - j + 1) / j; long double keeps it exact enough to saturate.
      long double next = static_cast<long double>(term) * static_cast<long double>(n - j + 1) / static_cast<long double>(j);
      term = next > static_cast<long double>(big) ? big : static_cast<std::uint64_t>(next + 0.5L);
    }
    total = std::min(big, total + term);
  }
  return total;
}

// Branching search over fault sets. Any fault set that stretches (u, v) past a
// distance d must hit every u-v path shorter than d, in particular the current
// shortest one, so branching on its interior vertices visits a subset of every
// such fault set.
class FaultSearch {
 public:
  explicit FaultSearch(const Graph& h) : sp_(h), blocked_(h.num_vertices(), 0) {}

  struct Outcome {
    Weight worst = 0;
    std::vector<std::pair<std::vector<Vertex>, Weight>> minimal_violations;
  };

  Outcome run(Vertex u, Vertex v, std::size_t f, Weight bound, bool stop_at_first) {
    u_ = u;
    v_ = v;
    f_ = f;
    bound_ = bound;
    stop_ = stop_at_first;
    visited_.clear();
    out_ = {};
    std::vector<Vertex> faults;
    recurse(faults, false);
    return std::move(out_);
  }

 private:
  void recurse(std::vector<Vertex>& faults, bool parent_violates) {
    if (stop_ && !out_.minimal_violations.empty()) return;
    std::vector<Vertex> key = faults;
    std::sort(key.begin(), key.end());
    if (!visited_.insert(key).second) return;
    std::vector<Vertex> path;
    Weight d = sp_.shortest_path(u_, v_, blocked_, path);
    out_.worst = std::max(out_.worst, d);
    bool violates = d > bound_;
    if (violates && !parent_violates) out_.minimal_violations.emplace_back(key, d);
    if (d == kUnreachable || faults.size() >= f_) return;
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      Vertex x = path[j];
      blocked_[x] = 1;
      faults.push_back(x);
      recurse(faults, violates);
      faults.pop_back();
      blocked_[x] = 0;
      if (stop_ && !out_.minimal_violations.empty()) return;
    }
  }

  ShortestPaths sp_;
  std::vector<std::uint8_t> blocked_;
  std::set<std::vector<Vertex>> visited_;
  Outcome out_;
  Vertex u_ = 0, v_ = 0;
  std::size_t f_ = 0;
  Weight bound_ = 0;
  bool stop_ = false;
};

Weight stretch_bound(Weight w, std::size_t i) {
  std::uint64_t factor = 2 * static_cast<std::uint64_t>(i) - 1;
  if (w > kUnreachable / std::max<std::uint64_t>(factor, 1)) return kUnreachable - 1;
  return w * factor;
}

double ratio(Weight d, Weight w) {
  return d == kUnreachable ? kInfiniteStretch : static_cast<double>(d) / static_cast<double>(w);
}

bool violation_less(const Violation& a, const Violation& b) {
  return std::tie(a.edge, a.u, a.v, a.faults) < std::tie(b.edge, b.u, b.v, b.faults);
}

std::vector<Vertex> random_faults(Rng& rng, std::size_t n, std::size_t f, Vertex u, Vertex v) {
  std::vector<Vertex> pool;
  pool.reserve(n);
  for (Vertex x = 0; x < n; ++x) {
    if (x != u && x != v) pool.push_back(x);
  }
  std::size_t take = std::min(f, pool.size());
  for (std::size_t j = 0; j < take; ++j) {
    std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
    std::swap(pool[j], pool[pick(rng)]);
  }
  pool.resize(take);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::uint64_t fault_sets_per_edge(std::size_t n, std::size_t f) {
  return saturating_binomial_sum(n >= 2 ? n - 2 : 0, f);
}

std::uint64_t fault_sets_total(std::size_t n, std::size_t f) { return saturating_binomial_sum(n, f); }

void require_subgraph(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices()) throw GraphError("subgraph has a different vertex count");
  for (const auto& e : h.edges()) {
    auto id = g.find_edge(e.u, e.v);
    if (!id || g.edge(*id).w != e.w) {
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the source graph");
    }
  }
}

std::size_t default_threads() {
  if (const char* env = std::getenv("FTSPANNER_THREADS")) {
    try {
      long t = std::stol(env);
      if (t >= 1) return static_cast<std::size_t>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Weight worst_fault_distance(const Graph& h, Vertex u, Vertex v, std::size_t f) {
  if (u == v) return 0;
  FaultSearch search(h);
  return search.run(u, v, f, kUnreachable, false).worst;
}

bool is_protected(const Graph& h, Vertex u, Vertex v, Weight w, std::size_t f, std::size_t i, std::uint64_t cap) {
  if (u == v) throw std::invalid_argument("is_protected: endpoints coincide");
  if (i < 1) throw std::invalid_argument("is_protected: i must be at least 1");
  if (fault_sets_per_edge(h.num_vertices(), f) > cap) {
    throw BudgetExceeded("fault-set enumeration exceeds the cap; use sampled mode");
  }
  FaultSearch search(h);
  return search.run(u, v, f, stretch_bound(w, i), true).minimal_violations.empty();
}

VerificationReport verify_spanner(const Graph& g, const Graph& h, const VerifyOptions& opt) {
  require_subgraph(g, h);
  if (opt.k < 1) throw std::invalid_argument("k must be at least 1");
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  VerificationReport rep;
  rep.edge_stretch.assign(m, 0.0);
  const std::size_t threads = std::max<std::size_t>(1, std::min(opt.threads, std::max<std::size_t>(m, 1)));

  if (opt.exhaustive) {
    rep.mode = "exhaustive";
    std::uint64_t per_edge = fault_sets_per_edge(n, opt.f);
    if (m > 0 && per_edge > opt.cap / m) {
      throw BudgetExceeded("exhaustive verification needs " + std::to_string(per_edge) + " fault sets per edge over " +
                           std::to_string(m) + " edges, above the cap of " + std::to_string(opt.cap));
    }
    rep.fault_sets = per_edge * m;
    std::vector<std::vector<Violation>> found(threads);
    auto worker = [&](std::size_t t) {
      FaultSearch search(h);
      for (EdgeId e = static_cast<EdgeId>(t); e < m; e += static_cast<EdgeId>(threads)) {
        const auto& ed = g.edge(e);
        Weight bound = stretch_bound(ed.w, opt.k);
        auto out = search.run(ed.u, ed.v, opt.f, bound, false);
        rep.edge_stretch[e] = ratio(out.worst, ed.w);
        for (auto& [faults, d] : out.minimal_violations) {
          found[t].push_back({e, ed.u, ed.v, std::move(faults), d, bound});
        }
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    for (auto& part : found) {
      for (auto& viol : part) rep.violations.push_back(std::move(viol));
    }
  } else {
    rep.mode = "sampled:" + std::to_string(opt.samples);
    ShortestPaths sp_h(h), sp_g(g);
    std::vector<std::uint8_t> blocked(n, 0);
    Rng rng = stream(opt.seed, 0, 0, StreamTag::kVerifier);
    auto check = [&](EdgeId e, Vertex u, Vertex v, Weight reference) {
      auto faults = random_faults(rng, n, opt.f, u, v);
      for (Vertex x : faults) blocked[x] = 1;
      Weight base = reference;
      if (e == kNoEdge) base = sp_g.distance(u, v, blocked);
      Weight dh = sp_h.distance(u, v, blocked);
      for (Vertex x : faults) blocked[x] = 0;
      ++rep.fault_sets;
      if (base == kUnreachable) return;
      Weight bound = stretch_bound(base, opt.k);
      if (e != kNoEdge) rep.edge_stretch[e] = std::max(rep.edge_stretch[e], ratio(dh, base));
      if (dh > bound) rep.violations.push_back({e, u, v, faults, dh, bound});
    };
    for (EdgeId e = 0; e < m; ++e) {
      const auto& ed = g.edge(e);
      for (std::size_t s = 0; s < opt.samples; ++s) check(e, ed.u, ed.v, ed.w);
    }
    if (n >= 2) {
      std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
      for (std::size_t s = 0; s < opt.samples; ++s) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v) continue;
        check(kNoEdge, std::min(u, v), std::max(u, v), 0);
      }
    }
  }
  for (double s : rep.edge_stretch) rep.worst_stretch = std::max(rep.worst_stretch, s);
  std::sort(rep.violations.begin(), rep.violations.end(), violation_less);
  rep.violation_count = rep.violations.size();
  if (rep.violations.size() > opt.max_recorded) rep.violations.resize(opt.max_recorded);
  rep.pass = rep.violation_count == 0;
  return rep;
}

namespace {

struct Components {
  std::vector<Vertex> parent;
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  Vertex find(Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(Vertex a, Vertex b) { parent[find(a)] = find(b); }
};

std::optional<std::pair<Vertex, Vertex>> connectivity_gap(const Graph& g, const Graph& h,
                                                          const std::vector<std::uint8_t>& blocked) {
  const std::size_t n = g.num_vertices();
  Components cg(n), ch(n);
  for (const auto& e : g.edges()) {
    if (!blocked[e.u] && !blocked[e.v]) cg.join(e.u, e.v);
  }
  for (const auto& e : h.edges()) {
    if (!blocked[e.u] && !blocked[e.v]) ch.join(e.u, e.v);
  }
  // h is a subgraph, so its components refine those of g; any vertex whose h
  // root differs from the h root of its g representative exposes a gap.
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> witness(n, kNone);
  for (Vertex x = 0; x < n; ++x) {
    if (blocked[x]) continue;
    Vertex r = cg.find(x);
    if (witness[r] == kNone) {
      witness[r] = x;
    } else if (ch.find(witness[r]) != ch.find(x)) {
      return std::pair(witness[r], x);
    }
  }
  return std::nullopt;
}

}  // namespace

CertificateReport verify_certificate(const Graph& g, const Graph& h, std::size_t lambda, std::uint64_t cap,
                                     std::size_t samples, std::uint64_t seed) {
  require_subgraph(g, h);
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  const std::size_t n = g.num_vertices();
  const std::size_t max_faults = std::min(lambda - 1, n);
  CertificateReport rep;
  std::vector<std::uint8_t> blocked(n, 0);
  auto test = [&](const std::vector<Vertex>& faults) {
    for (Vertex x : faults) blocked[x] = 1;
    auto gap = connectivity_gap(g, h, blocked);
    for (Vertex x : faults) blocked[x] = 0;
    ++rep.fault_sets;
    if (gap) {
      ++rep.failure_count;
      if (rep.failures.size() < 1000) rep.failures.push_back({faults, gap->first, gap->second});
    }
  };
  if (fault_sets_total(n, max_faults) <= cap) {
    rep.mode = "exhaustive";
    for (std::size_t size = 0; size <= max_faults; ++size) {
      std::vector<Vertex> combo(size);
      std::iota(combo.begin(), combo.end(), 0u);
      while (true) {
        test(combo);
        // Next combination in lexicographic order.
        std::size_t j = size;
        while (j > 0 && combo[j - 1] == n - size + j - 1) --j;
        if (j == 0) break;
        ++combo[j - 1];
        for (std::size_t t = j; t < size; ++t) combo[t] = combo[t - 1] + 1;
      }
    }
  } else {
    rep.mode = "sampled:" + std::to_string(samples);
    Rng rng = stream(seed, 0, 1, StreamTag::kVerifier);
    test({});
    for (std::size_t s = 0; s < samples; ++s) test(random_faults(rng, n, max_faults, static_cast<Vertex>(n), static_cast<Vertex>(n)));
  }
  rep.pass = rep.failure_count == 0;
  return rep;
}

}  // namespace ftspan
