#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/meta_spanner.hpp"
#include "ftspan/spanner_result.hpp"

namespace ftspan {

struct HittingInstance {
  std::vector<std::uint32_t> ground;
  std::vector<std::vector<std::uint32_t>> sets;
  double delta = 1.0;      // reduction factor
  std::size_t beta = 1;    // required hits per set
  double c = 1.0;          // admissibility constant
};

class InadmissibleInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest size every set must reach: c * beta * delta * max(1, ceil(ln l)).
double admissible_size(const HittingInstance& inst);

/// Throws InadmissibleInstance naming the first set that is too small or
/// leaves the ground set.
void check_admissible(const HittingInstance& inst);

/// Greedy maximum coverage, smallest id on ties. Ignores beta.
std::vector<std::uint32_t> hitting_set(const HittingInstance& inst);

/// Splits every set into beta contiguous chunks and hits each chunk.
std::vector<std::uint32_t> beta_hitting_set(const HittingInstance& inst);

struct DetOptions {
  std::size_t f = 1;
  std::size_t k = 2;
  double c_k = 20.0;
  double c_det = 1.0;  // threshold constant for the qualifying prefix
  std::function<void(const PhaseState&)> on_phase;
};

/// Number of leading ordered paths a vertex needs for its heads to enter the
/// hitting-set family.
std::size_t det_threshold(std::size_t n, std::size_t f, std::size_t k, std::size_t cluster_count, double c_det);

SpannerResult build_ft_spanner_det(const Graph& g, const DetOptions& opt);

}  // namespace ftspan
