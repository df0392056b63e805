#pragma once

#include <cstdint>
#include <string>

#include "ftspan/graph.hpp"

namespace ftspan {

struct GenSpec {
  std::string kind;  // gnp, random-regular, grid, complete, tree, cycle, star, path
  std::size_t n = 0;
  double p = 0.0;         // gnp edge probability
  std::size_t degree = 0; // random-regular
  std::size_t rows = 0;   // grid
  std::size_t cols = 0;
  Weight weight_lo = 1;   // weights drawn uniformly from [lo, hi]; lo == hi == 1 is unweighted
  Weight weight_hi = 1;
  std::uint64_t seed = 0;
};

/// Deterministic for a fixed spec. Throws GraphError on infeasible parameters.
Graph generate(const GenSpec& spec);

/// Parses "gnp:n=30,p=0.4" style descriptors; "w=lo-hi" selects weights.
GenSpec parse_gen_spec(const std::string& text, std::uint64_t seed);

std::string describe(const GenSpec& spec);

}  // namespace ftspan
