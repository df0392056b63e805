#include "ftspan/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ftspan/random.hpp"

namespace ftspan {

namespace {

std::vector<WeightedPair> gnp(std::size_t n, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) throw GraphError("gnp: p must lie in [0, 1]");
  std::vector<WeightedPair> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, p)) out.push_back({u, v, 1});
    }
  }
  return out;
}

// Pairing model that only ever joins valid stub pairs; restarts when stuck.
std::vector<WeightedPair> random_regular(std::size_t n, std::size_t d, Rng& rng) {
  if (d >= n && n > 0) throw GraphError("random-regular: degree must be below n");
  if ((n * d) % 2 != 0) throw GraphError("random-regular: n*d must be even");
  auto key = [](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(n * d);
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    std::unordered_set<std::uint64_t> used;
    std::vector<WeightedPair> out;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      bool joined = false;
      for (int tries = 0; tries < 64 && !joined; ++tries) {
        std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        Vertex a = stubs[i], b = stubs[j];
        if (i == j || a == b || used.count(key(a, b))) continue;
        used.insert(key(a, b));
        out.push_back({std::min(a, b), std::max(a, b), 1});
        if (i < j) std::swap(i, j);
        stubs[i] = stubs.back();
        stubs.pop_back();
        stubs[j] = stubs.back();
        stubs.pop_back();
        joined = true;
      }
      if (joined) continue;
      // Random probing failed; look for any remaining valid pair.
      stuck = true;
      for (std::size_t i = 0; i < stubs.size() && stuck; ++i) {
        for (std::size_t j = i + 1; j < stubs.size(); ++j) {
          if (stubs[i] != stubs[j] && !used.count(key(stubs[i], stubs[j]))) {
            stuck = false;
            break;
          }
        }
      }
    }
    if (!stuck) {
      std::sort(out.begin(), out.end(), [](const WeightedPair& x, const WeightedPair& y) {
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
      });
      return out;
    }
  }
  throw GraphError("random-regular: failed to realise the degree sequence");
}

std::vector<WeightedPair> grid(std::size_t rows, std::size_t cols) {
  std::vector<WeightedPair> out;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) out.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) out.push_back({id(r, c), id(r + 1, c), 1});
    }
  }
  return out;
}

}  // namespace

Graph generate(const GenSpec& spec) {
  if (spec.weight_lo < 1 || spec.weight_hi < spec.weight_lo) throw GraphError("invalid weight range");
  Rng rng = stream(spec.seed, 0, 0, StreamTag::kGenerator);
  std::size_t n = spec.n;
  std::vector<WeightedPair> edges;
  const std::string& k = spec.kind;
  if (k == "gnp") {
    edges = gnp(n, spec.p, rng);
  } else if (k == "random-regular") {
    edges = random_regular(n, spec.degree, rng);
  } else if (k == "grid") {
    if (spec.rows == 0 || spec.cols == 0) throw GraphError("grid: rows and cols must be positive");
    n = spec.rows * spec.cols;
    edges = grid(spec.rows, spec.cols);
  } else if (k == "complete") {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    }
  } else if (k == "tree") {
    for (Vertex v = 1; v < n; ++v) {
      std::uniform_int_distribution<Vertex> parent(0, v - 1);
      edges.push_back({parent(rng), v, 1});
    }
  } else if (k == "cycle") {
    if (n < 3) throw GraphError("cycle: n must be at least 3");
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n), 1});
  } else if (k == "star") {
    for (Vertex v = 1; v < n; ++v) edges.push_back({0, v, 1});
  } else if (k == "path") {
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v, 1});
  } else {
    throw GraphError("unknown generator kind: " + k);
  }
  if (spec.weight_hi > 1) {
    std::uniform_int_distribution<Weight> w(spec.weight_lo, spec.weight_hi);
    for (auto& e : edges) e.w = w(rng);
  } else {
    for (auto& e : edges) e.w = spec.weight_lo;
  }
  return Graph(n, edges);
}

GenSpec parse_gen_spec(const std::string& text, std::uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  auto colon = text.find(':');
  spec.kind = text.substr(0, colon);
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw GraphError("generator parameter without value: " + item);
    std::string name = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      if (name == "n") spec.n = std::stoul(value);
      else if (name == "p") spec.p = std::stod(value);
      else if (name == "d") spec.degree = std::stoul(value);
      else if (name == "rows") spec.rows = std::stoul(value);
      else if (name == "cols") spec.cols = std::stoul(value);
      else if (name == "w") {
        auto dash = value.find('-');
        spec.weight_lo = std::stoull(value.substr(0, dash));
        spec.weight_hi = dash == std::string::npos ? spec.weight_lo : std::stoull(value.substr(dash + 1));
      } else {
        throw GraphError("unknown generator parameter: " + name);
      }
    } catch (const std::logic_error&) {
      throw GraphError("bad value for generator parameter " + name + ": " + value);
    }
  }
  return spec;
}

std::string describe(const GenSpec& spec) {
  std::ostringstream out;
  out << spec.kind;
  if (spec.kind == "grid") {
    out << ":rows=" << spec.rows << ",cols=" << spec.cols;
  } else {
    out << ":n=" << spec.n;
    if (spec.kind == "gnp") out << ",p=" << spec.p;
    if (spec.kind == "random-regular") out << ",d=" << spec.degree;
  }
  if (spec.weight_hi > 1 || spec.weight_lo > 1) out << ",w=" << spec.weight_lo << '-' << spec.weight_hi;
  return out.str();
}

}  // namespace ftspan
