#include "ftspan/result_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftspan {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }
Json weight_or_null(Weight w) { return w == kUnreachable ? Json(nullptr) : Json(w); }

}  // namespace

Json to_json(const SpannerResult& r, bool timings) {
  Json params = Json::object();
  for (const auto& [name, value] : r.params) {
    std::visit([&](const auto& x) { params[name] = x; }, value);
  }
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    Json entry{{"name", t.name}, {"counts", t.counts}, {"metrics", Json::object()}};
    for (const auto& [name, value] : t.metrics) entry["metrics"][name] = number_or_null(value);
    if (timings) entry["seconds"] = t.seconds;
    trace.push_back(std::move(entry));
  }
  return Json{{"algo", r.algo},
              {"params", std::move(params)},
              {"n", r.n},
              {"m", r.m},
              {"edges", r.edges},
              {"trace", std::move(trace)},
              {"size", {{"edges", r.size.edges}, {"bound", r.size.bound}, {"ratio", r.size.ratio}}}};
}

SpannerResult spanner_result_from_json(const Json& j) {
  SpannerResult r;
  try {
    r.algo = j.at("algo").get<std::string>();
    for (const auto& [name, value] : j.at("params").items()) {
      if (value.is_number_integer()) {
        r.params[name] = value.get<std::int64_t>();
      } else if (value.is_number()) {
        r.params[name] = value.get<double>();
      } else {
        r.params[name] = value.get<std::string>();
      }
    }
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.edges = j.at("edges").get<std::vector<EdgeId>>();
    const Json trace = j.value("trace", Json::array());
    for (const auto& t : trace) {
      TraceEntry entry;
      entry.name = t.at("name").get<std::string>();
      entry.counts = t.value("counts", std::map<std::string, std::int64_t>{});
      const Json metrics = t.value("metrics", Json::object());
      for (const auto& [name, value] : metrics.items()) {
        entry.metrics[name] = value.is_null() ? std::nan("") : value.get<double>();
      }
      entry.seconds = t.value("seconds", 0.0);
      r.trace.push_back(std::move(entry));
    }
    if (j.contains("size")) {
      const auto& s = j.at("size");
      r.size = {s.at("edges").get<std::size_t>(), s.at("bound").get<double>(), s.at("ratio").get<double>()};
    }
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed result file: ") + e.what());
  }
  for (EdgeId e : r.edges) {
    if (e >= r.m) throw std::runtime_error("result lists edge id " + std::to_string(e) + " beyond m");
  }
  return r;
}

Json to_json(const VerificationReport& r) {
  Json stretch = Json::array();
  for (double s : r.edge_stretch) stretch.push_back(number_or_null(s));
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json entry{{"u", v.u}, {"v", v.v}, {"faults", v.faults}, {"dist_h", weight_or_null(v.dist_h)},
               {"bound", v.bound}};
    entry["edge"] = v.edge == kNoEdge ? Json(nullptr) : Json(v.edge);
    violations.push_back(std::move(entry));
  }
  return Json{{"mode", r.mode},
              {"pass", r.pass},
              {"fault_sets", r.fault_sets},
              {"edge_stretch", std::move(stretch)},
              {"worst_stretch", number_or_null(r.worst_stretch)},
              {"violation_count", r.violation_count},
              {"violations", std::move(violations)}};
}

Json to_json(const CertificateReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"faults", f.faults}, {"u", f.u}, {"v", f.v}});
  return Json{{"mode", r.mode},
              {"pass", r.pass},
              {"fault_sets", r.fault_sets},
              {"failure_count", r.failure_count},
              {"failures", std::move(failures)}};
}

Json to_json(const RoundReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stage_rounds) stages.push_back(s);
  std::ostringstream digest;
  digest << std::hex << r.log_digest;
  return Json{{"total_rounds", r.total_rounds},
              {"phase_rounds", r.phase_rounds},
              {"stage_rounds", std::move(stages)},
              {"max_bits", r.max_bits},
              {"messages", r.messages},
              {"bandwidth", r.bandwidth},
              {"id_bits", r.id_bits},
              {"weight_bits", r.weight_bits},
              {"log_digest", digest.str()}};
}

HittingInstance hitting_instance_from_json(const Json& j) {
  HittingInstance inst;
  try {
    inst.ground = j.at("ground").get<std::vector<std::uint32_t>>();
    inst.sets = j.at("sets").get<std::vector<std::vector<std::uint32_t>>>();
    inst.delta = j.value("delta", 1.0);
    inst.beta = j.value("beta", std::size_t{1});
    inst.c = j.value("c", 1.0);
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed hitting-set instance: ") + e.what());
  }
  return inst;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SpannerResult load_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open result file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::runtime_error("result file " + path + " is not JSON: " + e.what());
  }
  return spanner_result_from_json(j);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace ftspan
