#include "ftspan/spanner_result.hpp"

#include <cmath>

namespace ftspan {

double meta_size_bound(std::size_t n, std::size_t f, std::size_t k) {
  if (n < 2) return 1.0;
  double dn = static_cast<double>(n), df = static_cast<double>(f), dk = static_cast<double>(k);
  return dk * dk * dk * std::log2(dn) * std::pow(df, 1.0 - 1.0 / dk) * std::pow(dn, 1.0 + 1.0 / dk) +
         dk * dk * df * dn;
}

double warmup_size_bound(std::size_t n, std::size_t f) {
  if (n < 2) return 1.0;
  double dn = static_cast<double>(n), df = static_cast<double>(f);
  return df * dn + std::sqrt(df) * std::pow(dn, 1.5) * std::log2(dn);
}

SizeReport size_report(std::size_t edges, double bound) {
  return {edges, bound, bound > 0 ? static_cast<double>(edges) / bound : 0.0};
}

}  // namespace ftspan
