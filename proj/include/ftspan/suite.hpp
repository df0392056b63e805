#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftspan {

class SuiteConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One manifest entry. Every run is a plain command line of the CLI.
struct SuiteCase {
  std::string name;
  std::string command = "build";  // build, certificate or verify
  std::string graph;              // generator descriptor
  std::string graph_file;         // or an edge-list file, relative to the manifest
  std::string spanner_file;       // verify: the subgraph to check
  std::string algo = "meta";
  std::size_t f = 1;
  std::size_t k = 2;
  std::size_t lambda = 2;
  std::string mode = "exhaustive";
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::string> extra;  // appended to the build or certificate command
  std::string expect_status = "pass";
  std::optional<std::size_t> expect_edges;
  std::optional<double> expect_worst_stretch;
  std::string basis;  // why the expected outcome holds
};

std::vector<SuiteCase> load_manifest(const std::string& path);

struct SuiteSummary {
  std::size_t runs = 0;
  std::size_t mismatches = 0;
};

/// Runs every case and seed, printing one line per run. Throws
/// SuiteConfigError on unreadable manifests or missing files.
SuiteSummary run_suite(const std::string& manifest, std::ostream& out);

}  // namespace ftspan
