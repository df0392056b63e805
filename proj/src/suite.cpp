#include "ftspan/suite.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ftspan/cli.hpp"
#include "ftspan/random.hpp"
#include "ftspan/result_io.hpp"

namespace ftspan {

namespace fs = std::filesystem;

namespace {

SuiteCase case_from_json(const Json& j) {
  SuiteCase c;
  c.name = j.at("name").get<std::string>();
  c.command = j.value("command", c.command);
  c.graph = j.value("graph", c.graph);
  c.graph_file = j.value("graph_file", c.graph_file);
  c.spanner_file = j.value("spanner_file", c.spanner_file);
  c.algo = j.value("algo", c.algo);
  c.f = j.value("f", c.f);
  c.k = j.value("k", c.k);
  c.lambda = j.value("lambda", c.lambda);
  c.mode = j.value("mode", c.mode);
  c.seeds = j.value("seeds", c.seeds);
  c.extra = j.value("extra", c.extra);
  c.basis = j.value("basis", c.basis);
  const auto& expect = j.at("expect");
  c.expect_status = expect.at("status").get<std::string>();
  if (expect.contains("edges")) c.expect_edges = expect.at("edges").get<std::size_t>();
  if (expect.contains("worst_stretch")) c.expect_worst_stretch = expect.at("worst_stretch").get<double>();
  if (c.command != "build" && c.command != "certificate" && c.command != "verify") {
    throw SuiteConfigError("case " + c.name + ": unknown command " + c.command);
  }
  if (c.expect_status != "pass" && c.expect_status != "fail") {
    throw SuiteConfigError("case " + c.name + ": expect.status must be pass or fail");
  }
  if (c.graph.empty() == c.graph_file.empty()) {
    throw SuiteConfigError("case " + c.name + ": give exactly one of graph or graph_file");
  }
  if (c.command == "verify" && c.spanner_file.empty()) {
    throw SuiteConfigError("case " + c.name + ": verify needs spanner_file");
  }
  return c;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "ftspanner";
  for (const auto& a : args) s += " " + a;
  return s;
}

struct Run {
  int code = 0;
  Json output;
  std::string errors;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.errors = err.str();
  if (!out.str().empty()) r.output = Json::parse(out.str(), nullptr, false);
  return r;
}

std::string format_number(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

}  // namespace

std::vector<SuiteCase> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SuiteConfigError("cannot open manifest: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw SuiteConfigError("manifest " + path + " is not JSON: " + e.what());
  }
  if (!j.is_array()) throw SuiteConfigError("manifest " + path + " must be a JSON list of cases");
  std::vector<SuiteCase> cases;
  const fs::path base = fs::path(path).parent_path();
  for (const auto& item : j) {
    SuiteCase c;
    try {
      c = case_from_json(item);
    } catch (const Json::exception& e) {
      throw SuiteConfigError("manifest " + path + ": " + e.what());
    }
    for (auto* file : {&c.graph_file, &c.spanner_file}) {
      if (file->empty()) continue;
      fs::path resolved = base / *file;
      if (!fs::exists(resolved)) throw SuiteConfigError("case " + c.name + ": missing file " + resolved.string());
      *file = resolved.string();
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

SuiteSummary run_suite(const std::string& manifest, std::ostream& out) {
  auto cases = load_manifest(manifest);
  SuiteSummary summary;
  const fs::path scratch =
      fs::temp_directory_path() / ("ftspanner-suite-" + std::to_string(mix64(std::hash<std::string>{}(manifest))));
  fs::create_directories(scratch);

  for (const auto& c : cases) {
    for (auto seed : c.seeds) {
      ++summary.runs;
      std::vector<std::string> graph_args;
      if (c.graph_file.empty()) {
        graph_args = {"--gen", c.graph, "--gen-seed", std::to_string(seed)};
      } else {
        graph_args = {"--graph", c.graph_file};
      }
      std::vector<std::string> command;
      std::string status;
      std::optional<std::size_t> edges;
      std::optional<double> worst;
      std::string errors;

      if (c.command == "build") {
        std::string result_path = (scratch / (c.name + "-" + std::to_string(seed) + ".json")).string();
        command = {"build"};
        command.insert(command.end(), graph_args.begin(), graph_args.end());
        for (const std::string& a : {std::string("--algo"), c.algo, std::string("--f"), std::to_string(c.f),
                                     std::string("--k"), std::to_string(c.k), std::string("--seed"),
                                     std::to_string(seed), std::string("--out"), result_path}) {
          command.push_back(a);
        }
        command.insert(command.end(), c.extra.begin(), c.extra.end());
        Run built = invoke(command);
        if (built.code != kExitOk) {
          status = "error";
          errors = built.errors;
        } else {
          edges = load_result(result_path).edges.size();
          std::vector<std::string> check = {"verify", "--result", result_path, "--mode", c.mode};
          Run verified = invoke(check);
          command.push_back("&&");
          command.insert(command.end(), check.begin(), check.end());
          status = verified.code == kExitOk ? "pass" : verified.code == kExitFailed ? "fail" : "error";
          errors = verified.errors;
          if (verified.output.is_object() && verified.output["worst_stretch"].is_number()) {
            worst = verified.output["worst_stretch"].get<double>();
          }
        }
      } else if (c.command == "certificate") {
        command = {"certificate"};
        command.insert(command.end(), graph_args.begin(), graph_args.end());
        for (const std::string& a : {std::string("--lambda"), std::to_string(c.lambda), std::string("--seed"),
                                     std::to_string(seed), std::string("--check")}) {
          command.push_back(a);
        }
        command.insert(command.end(), c.extra.begin(), c.extra.end());
        Run r = invoke(command);
        status = r.code == kExitOk ? "pass" : r.code == kExitFailed ? "fail" : "error";
        errors = r.errors;
        if (r.output.is_object() && r.output.contains("edges")) edges = r.output["edges"].size();
      } else {
        command = {"verify"};
        command.insert(command.end(), graph_args.begin(), graph_args.end());
        for (const std::string& a : {std::string("--spanner"), c.spanner_file, std::string("--f"),
                                     std::to_string(c.f), std::string("--k"), std::to_string(c.k),
                                     std::string("--mode"), c.mode}) {
          command.push_back(a);
        }
        Run r = invoke(command);
        status = r.code == kExitOk ? "pass" : r.code == kExitFailed ? "fail" : "error";
        errors = r.errors;
        if (r.output.is_object() && r.output["worst_stretch"].is_number()) {
          worst = r.output["worst_stretch"].get<double>();
        }
      }

      std::vector<std::string> problems;
      if (status != c.expect_status) problems.push_back("status " + status + ", expected " + c.expect_status);
      if (c.expect_edges && edges != c.expect_edges) {
        problems.push_back("edges " + (edges ? std::to_string(*edges) : std::string("?")) + ", expected " +
                           std::to_string(*c.expect_edges));
      }
      if (c.expect_worst_stretch && (!worst || std::abs(*worst - *c.expect_worst_stretch) > 1e-9)) {
        problems.push_back("worst stretch " + (worst ? format_number(*worst) : std::string("?")) + ", expected " +
                           format_number(*c.expect_worst_stretch));
      }

      if (problems.empty()) {
        out << "ok        " << c.name << " seed=" << seed;
        if (c.expect_status == "fail") out << " (expected failure observed)";
        if (edges) out << " edges=" << *edges;
        if (worst) out << " worst_stretch=" << format_number(*worst);
        out << '\n';
      } else {
        ++summary.mismatches;
        out << "MISMATCH  " << c.name << " seed=" << seed << ':';
        for (const auto& p : problems) out << ' ' << p << ';';
        out << "\n          " << join(command) << '\n';
        if (!errors.empty()) out << "          " << errors;
      }
    }
  }
  std::error_code ignored;
  fs::remove_all(scratch, ignored);
  return summary;
}

}  // namespace ftspan
