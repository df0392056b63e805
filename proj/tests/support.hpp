#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ftspan/detkit.hpp"
#include "ftspan/generators.hpp"
#include "ftspan/meta_spanner.hpp"
#include "ftspan/random.hpp"
#include "ftspan/verifier.hpp"
#include "oracles.hpp"

namespace support {

inline ftspan::Graph gen(const std::string& spec, std::uint64_t seed = 1) {
  return ftspan::generate(ftspan::parse_gen_spec(spec, seed));
}

inline ftspan::Graph spanner_of(const ftspan::Graph& g, const ftspan::SpannerResult& r) {
  return g.subgraph(r.edges);
}

inline ftspan::MetaOptions plain(std::size_t f, std::size_t k, std::uint64_t seed = 0) {
  ftspan::MetaOptions opt;
  opt.f = f;
  opt.k = k;
  opt.seed = seed;
  return opt;
}

/// Options under which desk-scale graphs actually form clusters.
inline ftspan::MetaOptions clustering(std::size_t f, std::size_t k, std::uint64_t seed) {
  ftspan::MetaOptions opt;
  opt.f = f;
  opt.k = k;
  opt.seed = seed;
  opt.c_k = oracle::tight_ck(f, k);
  opt.c_s = 2.0;
  opt.p = 0.6;
  return opt;
}

inline bool exhaustive_pass(const ftspan::Graph& g, const ftspan::SpannerResult& r, std::size_t f, std::size_t k) {
  ftspan::VerifyOptions vo;
  vo.f = f;
  vo.k = k;
  return ftspan::verify_spanner(g, spanner_of(g, r), vo).pass;
}

inline std::int64_t total_count(const ftspan::SpannerResult& r, const std::string& name) {
  std::int64_t sum = 0;
  for (const auto& t : r.trace) {
    if (auto it = t.counts.find(name); it != t.counts.end()) sum += it->second;
  }
  return sum;
}

/// Collects invariant diagnostics for every phase of a build.
struct InvariantLog {
  explicit InvariantLog(const ftspan::Graph& graph) : g(&graph) {}

  const ftspan::Graph* g;
  std::vector<std::string> diagnostics;
  std::size_t phases = 0;

  std::function<void(const ftspan::PhaseState&)> hook() {
    return [this](const ftspan::PhaseState& st) {
      ++phases;
      auto rep = ftspan::check_invariants(*g, st);
      diagnostics.insert(diagnostics.end(), rep.diagnostics.begin(), rep.diagnostics.end());
    };
  }
};

}  // namespace support

namespace support {

/// Random admissible hitting-set instance: every set has between the
/// admissible size and twice that many distinct ground elements.
inline ftspan::HittingInstance random_hitting_instance(std::uint64_t seed, std::size_t beta) {
  ftspan::Rng rng = ftspan::stream(seed, beta, 0, ftspan::StreamTag::kGenerator);
  ftspan::HittingInstance inst;
  inst.beta = beta;
  inst.delta = static_cast<double>(std::uniform_int_distribution<int>(2, 4)(rng));
  const std::size_t sets = std::uniform_int_distribution<std::size_t>(2, 30)(rng);
  inst.sets.resize(sets);
  const auto need = static_cast<std::size_t>(std::ceil(ftspan::admissible_size(inst)));
  const std::size_t ground = need * std::uniform_int_distribution<std::size_t>(2, 6)(rng);
  inst.ground.resize(ground);
  std::iota(inst.ground.begin(), inst.ground.end(), 0);
  for (auto& s : inst.sets) {
    std::size_t size = std::uniform_int_distribution<std::size_t>(need, std::min(ground, 2 * need))(rng);
    std::vector<std::uint32_t> pool = inst.ground;
    std::shuffle(pool.begin(), pool.end(), rng);
    s.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return inst;
}

inline std::size_t min_hits(const ftspan::HittingInstance& inst, const std::vector<std::uint32_t>& chosen) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& s : inst.sets) {
    std::size_t hits = 0;
    for (auto x : s) hits += std::binary_search(chosen.begin(), chosen.end(), x) ? 1 : 0;
    best = std::min(best, hits);
  }
  return best;
}

}  // namespace support
