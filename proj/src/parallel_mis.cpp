#include "ftspan/parallel_mis.hpp"

#include "ftspan/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ftspan {

std::vector<std::uint32_t> identity_rank(std::size_t len) {
  std::vector<std::uint32_t> r(len);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

std::vector<std::uint32_t> rank_from_order(const std::vector<std::uint32_t>& order) {
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

PathConflictInstance random_conflict_instance(std::size_t paths, std::size_t vertices, std::size_t max_len,
                                              std::uint64_t seed) {
  if (vertices == 0 || max_len == 0) throw std::invalid_argument("need at least one vertex per path");
  PathConflictInstance inst;
  Rng rng = stream(seed, 0, 0, StreamTag::kGenerator);
  std::uniform_int_distribution<std::size_t> len_dist(1, std::min(max_len, vertices));
  std::vector<Vertex> pool(vertices);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  for (std::size_t p = 0; p < paths; ++p) {
    std::size_t len = len_dist(rng);
    for (std::size_t j = 0; j < len; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, vertices - 1);
      std::swap(pool[j], pool[pick(rng)]);
    }
    inst.paths.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(len));
  }
  inst.rank = rank_from_order(random_permutation(paths, seed));
  return inst;
}

namespace {

void check(const PathConflictInstance& inst) {
  if (inst.rank.size() != inst.paths.size()) throw std::invalid_argument("rank size differs from path count");
  std::vector<std::uint8_t> seen(inst.rank.size(), 0);
  for (auto r : inst.rank) {
    if (r >= seen.size() || seen[r]) throw std::invalid_argument("rank is not a permutation");
    seen[r] = 1;
  }
}

}  // namespace

std::vector<std::uint32_t> lex_first_mis(const PathConflictInstance& inst) {
  check(inst);
  std::vector<std::uint32_t> order(inst.paths.size());
  for (std::uint32_t p = 0; p < order.size(); ++p) order[inst.rank[p]] = p;
  std::unordered_set<Vertex> used;
  std::vector<std::uint32_t> out;
  for (auto p : order) {
    const auto& path = inst.paths[p];
    if (std::any_of(path.begin(), path.end(), [&](Vertex x) { return used.count(x) > 0; })) continue;
    used.insert(path.begin(), path.end());
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> parallel_greedy_mis(const PathConflictInstance& inst, MisRoundTrace* trace) {
  check(inst);
  MisRoundTrace local;
  MisRoundTrace& t = trace ? *trace : local;
  t = {};
  std::vector<std::uint32_t> remaining(inst.paths.size());
  std::iota(remaining.begin(), remaining.end(), 0u);
  std::vector<std::uint32_t> result;
  std::unordered_map<Vertex, std::uint32_t> earliest;
  std::unordered_set<Vertex> covered;
  std::vector<std::uint8_t> taken(inst.paths.size(), 0);
  while (!remaining.empty()) {
    ++t.rounds;
    earliest.clear();
    for (auto p : remaining) {
      for (Vertex w : inst.paths[p]) {
        auto [it, fresh] = earliest.emplace(w, inst.rank[p]);
        if (!fresh) it->second = std::min(it->second, inst.rank[p]);
      }
      t.work += inst.paths[p].size();
    }
    std::vector<std::uint32_t> batch;
    for (auto p : remaining) {
      const auto& path = inst.paths[p];
      bool wins = std::all_of(path.begin(), path.end(), [&](Vertex w) { return earliest[w] == inst.rank[p]; });
      t.work += path.size();
      if (wins) batch.push_back(p);
    }
    covered.clear();
    for (auto p : batch) {
      taken[p] = 1;
      covered.insert(inst.paths[p].begin(), inst.paths[p].end());
    }
    std::vector<std::uint32_t> next;
    for (auto p : remaining) {
      const auto& path = inst.paths[p];
      t.work += path.size();
      if (taken[p]) continue;
      if (std::none_of(path.begin(), path.end(), [&](Vertex w) { return covered.count(w) > 0; })) next.push_back(p);
    }
    remaining.swap(next);
    result.insert(result.end(), batch.begin(), batch.end());
    t.accepted.push_back(std::move(batch));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ftspan
