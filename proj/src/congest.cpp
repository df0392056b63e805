#include "ftspan/congest.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ftspan {

std::uint32_t id_bits(std::size_t n) {
  if (n <= 2) return 1;
  return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

std::uint32_t weight_bits(Weight max_weight) {
  if (max_weight <= 2) return 1;
  return static_cast<std::uint32_t>(std::bit_width(max_weight - 1));
}

void Outbox::send(Vertex to, MessageTag tag, std::uint32_t bits, std::vector<std::uint64_t> payload) {
  net_.deliver(self_, to, tag, bits, std::move(payload));
}

Network::Network(const Graph& g, std::uint32_t bandwidth_bits)
    : g_(&g),
      bandwidth_(bandwidth_bits),
      inbox_(g.num_vertices()),
      next_(g.num_vertices()),
      used_stamp_(2 * g.num_edges(), 0) {}

void Network::deliver(Vertex from, Vertex to, MessageTag tag, std::uint32_t bits,
                      std::vector<std::uint64_t> payload) {
  auto where = [&] {
    return "round " + std::to_string(round_) + ", edge " + std::to_string(from) + "->" + std::to_string(to);
  };
  auto e = g_->find_edge(from, to);
  if (!e) throw BandwidthError(where() + ": not a graph edge");
  if (bits > bandwidth_) {
    throw BandwidthError(where() + ": message of " + std::to_string(bits) + " bits exceeds bandwidth " +
                         std::to_string(bandwidth_));
  }
  std::size_t slot = 2 * static_cast<std::size_t>(*e) + (from < to ? 0 : 1);
  if (used_stamp_[slot] == round_) throw BandwidthError(where() + ": second message in one round");
  used_stamp_[slot] = static_cast<std::uint32_t>(round_);
  log_.push_back({static_cast<std::uint32_t>(round_), from, to, bits, tag, payload});
  next_[to].push_back({from, to, tag, bits, std::move(payload)});
  max_bits_ = std::max(max_bits_, bits);
  ++messages_;
  ++pending_;
}

void Network::round(const NodeHandler& handler) {
  ++round_;
  const std::size_t round_start = log_.size();
  std::swap(inbox_, next_);
  pending_ = 0;
  const std::size_t n = g_->num_vertices();
  for (std::size_t j = 0; j < n; ++j) {
    auto v = static_cast<Vertex>(reverse_ ? n - 1 - j : j);
    Outbox out(*this, v);
    handler(v, inbox_[v], out);
  }
  for (auto& box : inbox_) box.clear();
  // Inboxes and the log are kept in sender order, so neither depends on the
  // order in which handlers ran.
  for (auto& box : next_) {
    std::stable_sort(box.begin(), box.end(), [](const Message& a, const Message& b) { return a.from < b.from; });
  }
  std::stable_sort(log_.begin() + static_cast<std::ptrdiff_t>(round_start), log_.end(),
                   [](const LogRecord& a, const LogRecord& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
}

std::uint64_t Network::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& r : log_) {
    mix(r.round);
    mix(r.from);
    mix(r.to);
    mix(r.bits);
    mix(static_cast<std::uint64_t>(r.tag));
    mix(r.payload.size());
    for (auto w : r.payload) mix(w);
  }
  return h;
}

namespace {

struct Outgoing {
  MessageTag tag;
  std::uint32_t bits;
  std::vector<std::uint64_t> payload;
};

// Per-vertex send queues drained one message per neighbour per round.
using Queues = std::vector<std::map<Vertex, std::deque<Outgoing>>>;

bool queues_empty(const Queues& q) {
  for (const auto& per : q) {
    for (const auto& [to, dq] : per) {
      if (!dq.empty()) return false;
    }
  }
  return true;
}

using ReceiveFn = std::function<void(Vertex self, const Message& msg)>;

// Runs rounds until every queue is drained and nothing is in flight.
std::size_t run_stage(Network& net, Queues& queues, const ReceiveFn& on_receive) {
  std::size_t start = net.rounds();
  while (net.in_flight() || !queues_empty(queues)) {
    net.round([&](Vertex v, std::span<const Message> inbox, Outbox& out) {
      for (const auto& msg : inbox) on_receive(v, msg);
      for (auto& [to, dq] : queues[v]) {
        if (dq.empty()) continue;
        auto& head = dq.front();
        out.send(to, head.tag, head.bits, std::move(head.payload));
        dq.pop_front();
      }
    });
  }
  return net.rounds() - start;
}

// Counts messages per directed edge within one broadcast or convergecast;
// more than two means an edge lies in more than two trees.
class TwoTreeGuard {
 public:
  void note(Vertex from, Vertex to, std::size_t round) {
    if (++count_[(static_cast<std::uint64_t>(from) << 32) | to] > 2) {
      throw BandwidthError("round " + std::to_string(round) + ", edge " + std::to_string(from) + "->" +
                           std::to_string(to) + ": edge carries more than two trees");
    }
  }

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> count_;
};

using Children = std::vector<std::map<Vertex, std::vector<Vertex>>>;  // vertex -> root -> children

// Roots push a value down their trees; `on_deliver(vertex, root, value)` fires
// at every non-root member.
std::size_t broadcast_stage(Network& net, const Children& children, const std::map<Vertex, std::uint64_t>& roots,
                            std::uint32_t payload_bits,
                            const std::function<void(Vertex, Vertex, std::uint64_t)>& on_deliver) {
  const std::uint32_t bits = id_bits(net.graph().num_vertices()) + payload_bits;
  Queues queues(net.graph().num_vertices());
  TwoTreeGuard guard;
  auto push_down = [&](Vertex v, Vertex root, std::uint64_t value) {
    auto it = children[v].find(root);
    if (it == children[v].end()) return;
    for (Vertex c : it->second) {
      guard.note(v, c, net.rounds());
      queues[v][c].push_back({MessageTag::kBroadcast, bits, {root, value}});
    }
  };
  for (const auto& [root, value] : roots) push_down(root, root, value);
  return run_stage(net, queues, [&](Vertex self, const Message& msg) {
    auto root = static_cast<Vertex>(msg.payload[0]);
    on_deliver(self, root, msg.payload[1]);
    push_down(self, root, msg.payload[1]);
  });
}

struct Node {
  bool clustered = true;
  bool center = true;
  std::vector<ClusterPath> paths;
  std::unordered_map<EdgeId, std::uint8_t> remaining;  // incident edges still in R
  std::unordered_set<EdgeId> added;                    // incident edges this vertex put into H
  std::unordered_map<Vertex, Vertex> parent_of;        // tree root -> parent, kept across phases
  std::map<Vertex, std::vector<Vertex>> children;      // tree root -> children in the current trees

  // Per-phase scratch.
  std::vector<ClusterPath> samples;
  std::map<Vertex, std::vector<ClusterPath>> received;
  std::map<Vertex, std::vector<Vertex>> partial;
  std::map<Vertex, std::vector<std::uint8_t>> received_bits;
  std::unordered_map<Vertex, std::uint8_t> center_bit;  // tree root -> sampled into the next level
  std::unordered_map<Vertex, std::uint8_t> head_sampled;
  std::unordered_set<Vertex> joined;
  std::map<Vertex, std::vector<Vertex>> next_children;
  PathFan fan;
  std::vector<ClusterPath> next_paths;
  std::optional<EdgeKey> heaviest;
};

std::vector<EdgeId> remaining_incident(const Graph& g, const Node& node, Vertex v) {
  std::vector<EdgeId> out;
  for (const auto& inc : g.neighbors(v)) {
    auto it = node.remaining.find(inc.edge);
    if (it != node.remaining.end() && it->second) out.push_back(inc.edge);
  }
  return out;
}

}  // namespace

Delivery tree_broadcast(Network& net, const std::vector<BroadcastTree>& trees,
                        const std::map<Vertex, std::uint64_t>& payload, std::uint32_t payload_bits) {
  Children children(net.graph().num_vertices());
  for (const auto& t : trees) {
    for (auto [parent, child] : t.edges) children[parent][t.root].push_back(child);
  }
  Delivery out;
  out.rounds = broadcast_stage(net, children, payload, payload_bits,
                               [&](Vertex v, Vertex root, std::uint64_t value) { out.received[v][root] = value; });
  return out;
}

SimOutcome simulate_distributed_spanner(const Graph& g, const SimOptions& sim) {
  using Clock = std::chrono::steady_clock;
  const auto& opt = sim.meta;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  if (opt.k < 2) throw std::invalid_argument("k must be at least 2");
  if (opt.f < 1 || opt.f >= std::max<std::size_t>(n, 1)) throw std::invalid_argument("f must satisfy 1 <= f < n");
  if (opt.select_centers) throw std::invalid_argument("the simulator samples centers locally");

  const std::size_t kf = cluster_count(opt.c_k, opt.k, opt.f);
  const std::size_t draws = sample_count(opt.c_s, n);
  const double p = center_rate(opt, n);
  const std::uint32_t idb = id_bits(n);
  const auto bandwidth =
      static_cast<std::uint32_t>(std::max(1.0, std::ceil(sim.c_b * static_cast<double>(idb) - 1e-9)));
  if (idb + 2 > bandwidth) throw std::invalid_argument("bandwidth too small for one vertex id");

  Network net(g, bandwidth);
  net.set_reverse_order(sim.reverse_order);
  std::vector<Node> nodes(n);
  for (Vertex v = 0; v < n; ++v) {
    nodes[v].paths = {trivial_path(v)};
    for (const auto& inc : g.neighbors(v)) nodes[v].remaining[inc.edge] = 1;
  }
  std::vector<std::uint8_t> in_spanner(m, 0);

  SimOutcome outcome;
  auto& report = outcome.report;
  auto& result = outcome.result;
  result.n = n;
  result.m = m;

  for (std::size_t i = 1; i <= opt.k; ++i) {
    auto t0 = Clock::now();
    const std::size_t phase_start = net.rounds();
    std::map<std::string, std::size_t> stages;
    const bool last = i == opt.k;

    for (Vertex v = 0; v < n; ++v) {
      auto& node = nodes[v];
      node.samples.clear();
      node.received.clear();
      node.partial.clear();
      node.received_bits.clear();
      node.center_bit.clear();
      node.head_sampled.clear();
      node.joined.clear();
      node.next_children.clear();
      node.fan = PathFan{};
      node.next_paths.clear();
      node.heaviest.reset();
      if (!node.clustered) continue;
      if (i == 1 || opt.sample_all) {
        node.samples = node.paths;
      } else {
        Rng rng = stream(opt.seed, v, i, StreamTag::kPathSamples);
        node.samples = sample_paths(node.paths, draws, rng);
      }
    }

    // Sampled paths travel to every neighbour across a remaining edge, one
    // vertex id per message. In the first phase every sample is the sender itself.
    if (i == 1) {
      for (Vertex v = 0; v < n; ++v) {
        for (const auto& inc : g.neighbors(v)) nodes[v].received[inc.neighbor] = {trivial_path(inc.neighbor)};
      }
      stages["paths"] = 0;
    } else {
      Queues queues(n);
      std::size_t longest = 0;
      for (Vertex u = 0; u < n; ++u) {
        const auto& node = nodes[u];
        if (!node.clustered) continue;
        longest = std::max(longest, node.samples.size());
        for (EdgeId e : remaining_incident(g, node, u)) {
          Vertex w = g.edge(e).other(u);
          auto& q = queues[u][w];
          for (std::size_t s = 0; s < node.samples.size(); ++s) {
            const auto& verts = node.samples[s].vertices;
            for (std::size_t j = 0; j < verts.size(); ++j) {
              std::uint64_t flags = (j + 1 == verts.size() ? 1 : 0) | (s + 1 == node.samples.size() ? 2 : 0);
              q.push_back({MessageTag::kPathVertex, idb + 2, {verts[j], flags}});
            }
          }
        }
      }
      stages["paths"] = run_stage(net, queues, [&](Vertex self, const Message& msg) {
        auto& node = nodes[self];
        auto& buf = node.partial[msg.from];
        buf.push_back(static_cast<Vertex>(msg.payload[0]));
        if (msg.payload[1] & 1) {
          ClusterPath path;
          path.vertices = std::move(buf);
          buf.clear();
          node.received[msg.from].push_back(std::move(path));
        }
      });
      if (stages["paths"] > longest * i + 1) throw std::logic_error("path exchange exceeded its round budget");
    }

    // Local: disjoint collections, shortcuts and ordering.
    for (Vertex v = 0; v < n; ++v) {
      auto& node = nodes[v];
      if (!node.clustered) continue;
      auto incident = remaining_incident(g, node, v);
      SampleLookup lookup = [&node](Vertex u) -> const std::vector<ClusterPath>* {
        auto it = node.received.find(u);
        return it == node.received.end() ? nullptr : &it->second;
      };
      EdgePredicate in_r = [&node](EdgeId e) {
        auto it = node.remaining.find(e);
        return it != node.remaining.end() && it->second != 0;
      };
      node.fan = disjoint_paths(g, v, incident, node.paths, lookup, opt.variant, opt.mis);
      order_fan(g, node.fan, in_r);
    }

    // Centers flip their coins and tell their trees; then every vertex tells
    // its neighbours which of its samples start at a new center.
    std::size_t num_centers = 0;
    if (!last) {
      std::map<Vertex, std::uint64_t> roots;
      for (Vertex s = 0; s < n; ++s) {
        auto& node = nodes[s];
        if (!node.center) continue;
        Rng rng = stream(opt.seed, s, i, StreamTag::kCenters);
        bool picked = coin(rng, p);
        node.center_bit[s] = picked ? 1 : 0;
        num_centers += picked;
        roots[s] = picked ? 1 : 0;
      }
      Children children(n);
      for (Vertex v = 0; v < n; ++v) children[v] = nodes[v].children;
      stages["centers"] = broadcast_stage(net, children, roots, 1, [&](Vertex v, Vertex root, std::uint64_t bit) {
        nodes[v].center_bit[root] = static_cast<std::uint8_t>(bit);
      });
      if (stages["centers"] > 2 * i) throw std::logic_error("center broadcast exceeded its round budget");

      Queues queues(n);
      const std::uint32_t chunk = bandwidth;
      for (Vertex u = 0; u < n; ++u) {
        const auto& node = nodes[u];
        if (!node.clustered) continue;
        std::vector<std::uint8_t> bits;
        for (const auto& s : node.samples) {
          auto it = node.center_bit.find(s.head());
          if (it == node.center_bit.end()) throw std::logic_error("a cluster head did not reach its member");
          bits.push_back(it->second);
        }
        for (EdgeId e : remaining_incident(g, node, u)) {
          Vertex w = g.edge(e).other(u);
          for (std::size_t at = 0; at < bits.size(); at += chunk) {
            std::size_t len = std::min<std::size_t>(chunk, bits.size() - at);
            std::vector<std::uint64_t> words((len + 63) / 64, 0);
            for (std::size_t b = 0; b < len; ++b) {
              if (bits[at + b]) words[b / 64] |= std::uint64_t{1} << (b % 64);
            }
            words.push_back(len);
            queues[u][w].push_back({MessageTag::kHeadBits, static_cast<std::uint32_t>(len), std::move(words)});
          }
        }
      }
      stages["heads"] = run_stage(net, queues, [&](Vertex self, const Message& msg) {
        auto len = msg.payload.back();
        auto& dst = nodes[self].received_bits[msg.from];
        for (std::size_t b = 0; b < len; ++b) dst.push_back((msg.payload[b / 64] >> (b % 64)) & 1);
      });
      for (Vertex v = 0; v < n; ++v) {
        auto& node = nodes[v];
        for (const auto& [u, paths] : node.received) {
          const auto& bits = node.received_bits[u];
          if (bits.size() != paths.size()) throw std::logic_error("head bits do not match samples");
          for (std::size_t j = 0; j < paths.size(); ++j) node.head_sampled[paths[j].head()] = bits[j];
        }
      }
    }

    // Local: clusters, spanner edges and the heaviest cluster edge.
    std::size_t num_clustered = 0;
    std::vector<std::uint8_t> added_now(m, 0);
    for (Vertex v = 0; v < n; ++v) {
      auto& node = nodes[v];
      if (!node.clustered) continue;
      auto is_center = [&node](Vertex h) {
        if (auto it = node.center_bit.find(h); it != node.center_bit.end()) return it->second != 0;
        if (auto it = node.head_sampled.find(h); it != node.head_sampled.end()) return it->second != 0;
        throw std::logic_error("center status of a head is unknown");
      };
      select_clusters(node.fan, is_center, last ? 0 : kf);
      EdgePredicate in_r = [&node](EdgeId e) {
        auto it = node.remaining.find(e);
        return it != node.remaining.end() && it->second != 0;
      };
      for (EdgeId e : light_edges(g, node.fan, in_r)) {
        node.added.insert(e);
        added_now[e] = 1;
      }
      for (auto j : node.fan.taken) {
        const auto& path = node.fan.ordered[j];
        node.next_paths.push_back(path);
        if (path.trivial()) continue;
        node.added.insert(path.last_edge);
        added_now[path.last_edge] = 1;
        node.parent_of[path.head()] = path.vertices[path.vertices.size() - 2];
        auto key = g.key(path.last_edge);
        if (!node.heaviest || *node.heaviest < key) node.heaviest = key;
      }
      num_clustered += node.fan.clustered();
    }
    std::size_t new_edges = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (added_now[e] && !in_spanner[e]) {
        in_spanner[e] = 1;
        ++new_edges;
      }
    }

    // Each endpoint of a remaining edge sends one bit saying whether it keeps
    // the edge; the edge stays only if both do.
    std::size_t remaining_count = 0;
    if (!last) {
      Queues queues(n);
      std::vector<std::unordered_map<EdgeId, std::uint8_t>> keep(n);
      for (Vertex v = 0; v < n; ++v) {
        auto& node = nodes[v];
        for (EdgeId e : remaining_incident(g, node, v)) {
          bool bit = node.fan.clustered() && !node.added.count(e) && (!node.heaviest || *node.heaviest < g.key(e));
          keep[v][e] = bit ? 1 : 0;
          queues[v][g.edge(e).other(v)].push_back({MessageTag::kRemainingFlag, 1, {bit ? 1u : 0u}});
        }
      }
      std::vector<std::unordered_map<EdgeId, std::uint8_t>> theirs(n);
      stages["remaining"] = run_stage(net, queues, [&](Vertex self, const Message& msg) {
        theirs[self][*g.find_edge(self, msg.from)] = static_cast<std::uint8_t>(msg.payload[0]);
      });
      for (Vertex v = 0; v < n; ++v) {
        for (auto& [e, flag] : nodes[v].remaining) {
          if (!flag) continue;
          flag = keep[v][e] && theirs[v][e];
          if (flag && v < g.edge(e).other(v)) ++remaining_count;
        }
      }
    } else {
      for (auto& node : nodes) {
        for (auto& [e, flag] : node.remaining) flag = 0;
      }
    }

    // Convergecast of join notices so every tree vertex learns its children.
    if (!last) {
      Queues queues(n);
      TwoTreeGuard guard;
      auto join_up = [&](Vertex v, Vertex root) {
        auto& node = nodes[v];
        if (v == root || !node.joined.insert(root).second) return;
        auto it = node.parent_of.find(root);
        if (it == node.parent_of.end()) throw std::logic_error("tree vertex has no parent toward its root");
        guard.note(v, it->second, net.rounds());
        queues[v][it->second].push_back({MessageTag::kJoin, idb, {root}});
      };
      for (Vertex v = 0; v < n; ++v) {
        for (const auto& path : nodes[v].next_paths) join_up(v, path.head());
      }
      stages["joins"] = run_stage(net, queues, [&](Vertex self, const Message& msg) {
        auto root = static_cast<Vertex>(msg.payload[0]);
        nodes[self].next_children[root].push_back(msg.from);
        join_up(self, root);
      });
      if (stages["joins"] > 2 * (i + 1)) throw std::logic_error("join convergecast exceeded its round budget");
    }

    for (Vertex v = 0; v < n; ++v) {
      auto& node = nodes[v];
      bool was = node.clustered;
      node.clustered = was && node.fan.clustered();
      node.center = node.center && !last && node.center_bit.count(v) && node.center_bit[v];
      node.paths = std::move(node.next_paths);
      node.children = std::move(node.next_children);
      for (auto& [root, kids] : node.children) std::sort(kids.begin(), kids.end());
    }

    std::size_t phase_rounds = net.rounds() - phase_start;
    report.phase_rounds.push_back(phase_rounds);
    report.stage_rounds.push_back(stages);
    TraceEntry entry;
    entry.name = "phase " + std::to_string(i);
    entry.counts["centers"] = static_cast<std::int64_t>(num_centers);
    entry.counts["clustered"] = static_cast<std::int64_t>(num_clustered);
    entry.counts["new_edges"] = static_cast<std::int64_t>(new_edges);
    entry.counts["remaining"] = static_cast<std::int64_t>(remaining_count);
    entry.counts["rounds"] = static_cast<std::int64_t>(phase_rounds);
    entry.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    result.trace.push_back(std::move(entry));
  }

  for (EdgeId e = 0; e < m; ++e) {
    if (in_spanner[e]) result.edges.push_back(e);
  }
  result.algo = "meta-congest";
  result.params["f"] = static_cast<std::int64_t>(opt.f);
  result.params["k"] = static_cast<std::int64_t>(opt.k);
  result.params["ck"] = opt.c_k;
  result.params["cluster_count"] = static_cast<std::int64_t>(kf);
  result.params["seed"] = static_cast<std::int64_t>(opt.seed);
  result.params["variant"] = to_string(opt.variant);
  result.params["mis"] = to_string(opt.mis);
  result.params["cs"] = opt.c_s;
  result.params["cb"] = sim.c_b;
  result.params["samples"] = static_cast<std::int64_t>(opt.sample_all ? 0 : draws);
  result.params["p"] = p;
  result.size = size_report(result.edges.size(), meta_size_bound(n, opt.f, opt.k));

  report.total_rounds = net.rounds();
  report.max_bits = net.max_bits();
  report.messages = net.messages();
  report.bandwidth = bandwidth;
  report.id_bits = idb;
  report.weight_bits = weight_bits(g.max_weight());
  report.log_digest = net.digest();
  outcome.log = net.log();
  return outcome;
}

namespace {

void put32(std::ostream& out, std::uint32_t x) {
  for (int b = 0; b < 4; ++b) out.put(static_cast<char>((x >> (8 * b)) & 0xff));
}
void put64(std::ostream& out, std::uint64_t x) {
  for (int b = 0; b < 8; ++b) out.put(static_cast<char>((x >> (8 * b)) & 0xff));
}
bool get_bytes(std::istream& in, std::uint64_t& x, int count) {
  x = 0;
  for (int b = 0; b < count; ++b) {
    int c = in.get();
    if (c == std::char_traits<char>::eof()) return false;
    x |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * b);
  }
  return true;
}

}  // namespace

void write_message_log(std::ostream& out, const std::vector<LogRecord>& log) {
  for (const auto& r : log) {
    put32(out, r.round);
    put32(out, r.from);
    put32(out, r.to);
    put32(out, r.bits);
    out.put(static_cast<char>(r.tag));
    put32(out, static_cast<std::uint32_t>(r.payload.size()));
    for (auto w : r.payload) put64(out, w);
  }
}

std::vector<LogRecord> read_message_log(std::istream& in) {
  std::vector<LogRecord> log;
  std::uint64_t x = 0;
  while (get_bytes(in, x, 4)) {
    LogRecord r;
    r.round = static_cast<std::uint32_t>(x);
    std::uint64_t from = 0, to = 0, bits = 0, tag = 0, len = 0;
    if (!get_bytes(in, from, 4) || !get_bytes(in, to, 4) || !get_bytes(in, bits, 4) || !get_bytes(in, tag, 1) ||
        !get_bytes(in, len, 4)) {
      throw std::runtime_error("truncated message log");
    }
    r.from = static_cast<Vertex>(from);
    r.to = static_cast<Vertex>(to);
    r.bits = static_cast<std::uint32_t>(bits);
    r.tag = static_cast<MessageTag>(tag);
    r.payload.resize(len);
    for (auto& w : r.payload) {
      if (!get_bytes(in, w, 8)) throw std::runtime_error("truncated message log");
    }
    log.push_back(std::move(r));
  }
  return log;
}

}  // namespace ftspan
