#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/meta_spanner.hpp"
#include "ftspan/spanner_result.hpp"

namespace ftspan {

class BandwidthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MessageTag : std::uint8_t {
  kPathVertex = 1,
  kBroadcast = 2,
  kHeadBits = 3,
  kRemainingFlag = 4,
  kJoin = 5,
};

struct Message {
  Vertex from = 0;
  Vertex to = 0;
  MessageTag tag = MessageTag::kPathVertex;
  std::uint32_t bits = 0;
  std::vector<std::uint64_t> payload;
};

struct LogRecord {
  std::uint32_t round = 0;
  Vertex from = 0;
  Vertex to = 0;
  std::uint32_t bits = 0;
  MessageTag tag = MessageTag::kPathVertex;
  std::vector<std::uint64_t> payload;

  friend bool operator==(const LogRecord&, const LogRecord&) = default;
};

class Network;

/// Handed to node handlers; enforces one message of at most B bits per
/// directed edge per round.
class Outbox {
 public:
  void send(Vertex to, MessageTag tag, std::uint32_t bits, std::vector<std::uint64_t> payload);

 private:
  friend class Network;
  Outbox(Network& net, Vertex self) : net_(net), self_(self) {}
  Network& net_;
  Vertex self_;
};

using NodeHandler = std::function<void(Vertex self, std::span<const Message> inbox, Outbox& out)>;

/// Synchronous message passing over the edges of a graph.
class Network {
 public:
  Network(const Graph& g, std::uint32_t bandwidth_bits);

  /// One round: every handler sees the messages sent to it last round.
  void round(const NodeHandler& handler);
  bool in_flight() const { return pending_ > 0; }

  const Graph& graph() const { return *g_; }
  std::uint32_t bandwidth() const { return bandwidth_; }
  std::size_t rounds() const { return round_; }
  std::size_t messages() const { return messages_; }
  std::uint32_t max_bits() const { return max_bits_; }
  const std::vector<LogRecord>& log() const { return log_; }
  std::uint64_t digest() const;

  /// Runs handlers in descending vertex order; results must not change.
  void set_reverse_order(bool reverse) { reverse_ = reverse; }

 private:
  friend class Outbox;
  void deliver(Vertex from, Vertex to, MessageTag tag, std::uint32_t bits, std::vector<std::uint64_t> payload);

  const Graph* g_;
  std::uint32_t bandwidth_;
  std::size_t round_ = 0;
  std::size_t messages_ = 0;
  std::uint32_t max_bits_ = 0;
  std::size_t pending_ = 0;
  bool reverse_ = false;
  std::vector<std::vector<Message>> inbox_;
  std::vector<std::vector<Message>> next_;
  std::vector<std::uint32_t> used_stamp_;  // per directed adjacency slot: last round it carried a message
  std::vector<LogRecord> log_;
};

/// ceil(log2 n), at least 1.
std::uint32_t id_bits(std::size_t n);
std::uint32_t weight_bits(Weight max_weight);

struct BroadcastTree {
  Vertex root = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (parent, child)
};

struct Delivery {
  std::map<Vertex, std::map<Vertex, std::uint64_t>> received;  // vertex -> root -> payload
  std::size_t rounds = 0;
};

/// Pushes one payload of `payload_bits` bits from every root down its tree.
/// Each logical step uses two rounds so an edge shared by two trees carries
/// both messages; a third message on a directed edge is a BandwidthError.
Delivery tree_broadcast(Network& net, const std::vector<BroadcastTree>& trees,
                        const std::map<Vertex, std::uint64_t>& payload, std::uint32_t payload_bits);

struct RoundReport {
  std::size_t total_rounds = 0;
  std::vector<std::size_t> phase_rounds;
  std::vector<std::map<std::string, std::size_t>> stage_rounds;  // per phase
  std::uint32_t max_bits = 0;
  std::size_t messages = 0;
  std::uint32_t bandwidth = 0;
  std::uint32_t id_bits = 0;
  std::uint32_t weight_bits = 0;
  std::uint64_t log_digest = 0;
};

struct SimOptions {
  MetaOptions meta;
  double c_b = 4.0;
  bool reverse_order = false;
};

struct SimOutcome {
  SpannerResult result;
  RoundReport report;
  std::vector<LogRecord> log;
};

SimOutcome simulate_distributed_spanner(const Graph& g, const SimOptions& opt);

/// Binary dump: per record round, from, to, bits (u32), tag (u8), payload
/// length (u32) and payload words (u64), little endian.
void write_message_log(std::ostream& out, const std::vector<LogRecord>& log);
std::vector<LogRecord> read_message_log(std::istream& in);

}  // namespace ftspan
