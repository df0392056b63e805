#include "ftspan/detkit.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace ftspan {

double admissible_size(const HittingInstance& inst) {
  double l = static_cast<double>(inst.sets.size());
  double log_term = std::max(1.0, std::ceil(std::log(std::max(1.0, l))));
  return inst.c * static_cast<double>(inst.beta) * inst.delta * log_term;
}

void check_admissible(const HittingInstance& inst) {
  if (inst.beta < 1) throw InadmissibleInstance("beta must be at least 1");
  if (!(inst.delta >= 1.0)) throw InadmissibleInstance("delta must be at least 1");
  std::unordered_set<std::uint32_t> ground(inst.ground.begin(), inst.ground.end());
  if (ground.size() != inst.ground.size()) throw InadmissibleInstance("ground set repeats an element");
  double need = admissible_size(inst);
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& s = inst.sets[i];
    std::unordered_set<std::uint32_t> members(s.begin(), s.end());
    if (members.size() != s.size()) throw InadmissibleInstance("set " + std::to_string(i) + " repeats an element");
    for (auto x : s) {
      if (!ground.count(x)) throw InadmissibleInstance("set " + std::to_string(i) + " leaves the ground set");
    }
    if (static_cast<double>(s.size()) < need * (1.0 - 1e-9)) {
      throw InadmissibleInstance("set " + std::to_string(i) + " has " + std::to_string(s.size()) +
                                 " elements, needs at least " + std::to_string(need));
    }
  }
}

namespace {

std::vector<std::uint32_t> greedy_cover(const std::vector<std::vector<std::uint32_t>>& sets) {
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> owners;
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    for (auto x : sets[i]) owners[x].push_back(i);
  }
  std::unordered_map<std::uint32_t, std::size_t> count;
  // Max coverage first, then smallest id.
  using Item = std::pair<std::size_t, std::int64_t>;
  std::priority_queue<Item> heap;
  for (const auto& [x, list] : owners) {
    count[x] = list.size();
    heap.push({list.size(), -static_cast<std::int64_t>(x)});
  }
  std::vector<std::uint8_t> hit(sets.size(), 0);
  std::vector<std::uint32_t> chosen;
  while (!heap.empty()) {
    auto [c, neg] = heap.top();
    heap.pop();
    auto x = static_cast<std::uint32_t>(-neg);
    if (c != count[x]) {
      if (count[x] > 0) heap.push({count[x], neg});
      continue;
    }
    if (c == 0) break;
    chosen.push_back(x);
    for (auto s : owners[x]) {
      if (hit[s]) continue;
      hit[s] = 1;
      for (auto y : sets[s]) --count[y];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::vector<std::uint32_t> hitting_set(const HittingInstance& inst) {
  HittingInstance plain = inst;
  plain.beta = 1;
  check_admissible(plain);
  return greedy_cover(inst.sets);
}

std::vector<std::uint32_t> beta_hitting_set(const HittingInstance& inst) {
  check_admissible(inst);
  std::vector<std::vector<std::uint32_t>> chunks;
  for (const auto& s : inst.sets) {
    std::size_t base = s.size() / inst.beta, extra = s.size() % inst.beta, at = 0;
    for (std::size_t part = 0; part < inst.beta; ++part) {
      std::size_t len = base + (part < extra ? 1 : 0);
      chunks.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(at), s.begin() + static_cast<std::ptrdiff_t>(at + len));
      at += len;
    }
  }
  return greedy_cover(chunks);
}

std::size_t det_threshold(std::size_t n, std::size_t f, std::size_t k, std::size_t cluster_count, double c_det) {
  double delta = std::pow(static_cast<double>(n) / static_cast<double>(f), 1.0 / static_cast<double>(k));
  double log_term = std::max(1.0, std::ceil(std::log(std::max(1.0, static_cast<double>(n)))));
  return static_cast<std::size_t>(std::ceil(c_det * static_cast<double>(cluster_count) * delta * log_term - 1e-9));
}

SpannerResult build_ft_spanner_det(const Graph& g, const DetOptions& opt) {
  const std::size_t n = g.num_vertices();
  MetaOptions meta;
  meta.f = opt.f;
  meta.k = opt.k;
  meta.c_k = opt.c_k;
  meta.sample_all = true;
  meta.on_phase = opt.on_phase;
  const std::size_t kf = cluster_count(opt.c_k, opt.k, opt.f);
  const std::size_t threshold = n > 0 ? det_threshold(n, opt.f, opt.k, kf, opt.c_det) : 0;
  const double delta = n > 0 ? std::pow(static_cast<double>(n) / static_cast<double>(opt.f), 1.0 / static_cast<double>(opt.k)) : 1.0;
  std::vector<std::size_t> family_sizes;
  meta.select_centers = [&](std::size_t, const std::vector<Vertex>& previous, const std::vector<PathFan>& fans,
                            const std::vector<std::uint8_t>& active) {
    HittingInstance inst;
    inst.ground.assign(previous.begin(), previous.end());
    inst.delta = std::max(1.0, delta);
    inst.beta = kf;
    inst.c = opt.c_det;
    for (Vertex v = 0; v < fans.size(); ++v) {
      if (!active[v] || fans[v].ordered.size() < threshold) continue;
      std::vector<std::uint32_t> heads;
      for (std::size_t j = 0; j < threshold; ++j) heads.push_back(fans[v].ordered[j].head());
      inst.sets.push_back(std::move(heads));
    }
    family_sizes.push_back(inst.sets.size());
    if (inst.sets.empty()) return std::vector<Vertex>{};
    auto chosen = beta_hitting_set(inst);
    return std::vector<Vertex>(chosen.begin(), chosen.end());
  };
  SpannerResult r = build_ft_spanner(g, meta);
  for (std::size_t i = 0; i < family_sizes.size() && i < r.trace.size(); ++i) {
    r.trace[i].counts["qualifying"] = static_cast<std::int64_t>(family_sizes[i]);
  }
  r.params["cdet"] = opt.c_det;
  r.params["threshold"] = static_cast<std::int64_t>(threshold);
  return r;
}

}  // namespace ftspan
