#pragma once

#include <cstdint>
#include <vector>

#include "ftspan/graph.hpp"

namespace ftspan {

/// Candidate paths plus a priority order. Two paths conflict iff they share a
/// vertex; the conflict graph itself is never built.
struct PathConflictInstance {
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::uint32_t> rank;  // rank[p] = position of path p in the order
};

struct MisRoundTrace {
  std::size_t rounds = 0;
  std::size_t work = 0;  // vertex touches across all rounds
  std::vector<std::vector<std::uint32_t>> accepted;  // per round, ascending path index
};

/// Identity order: rank[p] = p.
std::vector<std::uint32_t> identity_rank(std::size_t len);

/// rank[order[r]] = r for a permutation listing paths by priority.
std::vector<std::uint32_t> rank_from_order(const std::vector<std::uint32_t>& order);

/// `paths` paths of 1..max_len distinct vertices drawn from 0..vertices-1,
/// ordered by a uniformly random permutation.
PathConflictInstance random_conflict_instance(std::size_t paths, std::size_t vertices, std::size_t max_len,
                                              std::uint64_t seed);

/// Greedy scan in rank order; returns accepted path indices ascending.
std::vector<std::uint32_t> lex_first_mis(const PathConflictInstance& inst);

/// Round-synchronous version: each round accepts every remaining path that
/// holds the earliest rank on all of its vertices, then drops the accepted
/// paths and everything they touch.
std::vector<std::uint32_t> parallel_greedy_mis(const PathConflictInstance& inst, MisRoundTrace* trace = nullptr);

}  // namespace ftspan
