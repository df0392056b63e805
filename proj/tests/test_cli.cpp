#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ftspan/cli.hpp"
#include "ftspan/result_io.hpp"
#include "ftspan/suite.hpp"
#include "support.hpp"

using namespace ftspan;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("ftspanner-cli-test-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ignored;
    fs::remove_all(dir_, ignored);
  }
  std::string file(const std::string& name, const std::string& text = {}) const {
    auto p = (dir_ / name).string();
    if (!text.empty()) save_text(p, text);
    return p;
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"build", "--gen", "cycle:n=6", "--algo", "nope"}).code == kExitUsage);
  CHECK(cli({"build"}).code == kExitUsage);
  auto missing = cli({"build", "--graph", "/nonexistent/graph.txt"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("error:") != std::string::npos);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("gen writes a parseable edge list") {
  auto r = cli({"gen", "cycle:n=6"});
  REQUIRE(r.code == kExitOk);
  Graph g = parse_edge_list(r.out);
  CHECK(g.num_edges() == 6);
}

TEST_CASE("build then verify round trip") {
  Scratch tmp;
  auto graph = tmp.file("g.txt", cli({"gen", "gnp:n=25,p=0.35,w=1-20", "--seed", "4"}).out);
  auto result = tmp.file("r.json");
  for (std::string algo : {"warmup", "meta", "meta-det"}) {
    REQUIRE(cli({"build", "--graph", graph, "--algo", algo, "--f", "1", "--k", "2", "--ck", "0.75", "--p", "0.6",
                 "--cs", "2", "-o", result})
                .code == kExitOk);
    auto v = cli({"verify", "--result", result});
    CHECK(v.code == kExitOk);
    auto j = Json::parse(v.out);
    CHECK(j["pass"] == true);
    CHECK(j["f"] == 1);
    CHECK(j["k"] == 2);
  }
}

TEST_CASE("verify reports a failing spanner with exit 1") {
  Scratch tmp;
  auto g = tmp.file("c6.txt", "0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 0 1\n");
  auto h = tmp.file("h.txt", "# n 6\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n");
  auto r = cli({"verify", "--graph", g, "--spanner", h, "--f", "0", "--k", "2"});
  CHECK(r.code == kExitFailed);
  auto j = Json::parse(r.out);
  CHECK(j["worst_stretch"] == 5.0);
  CHECK(cli({"verify", "--graph", g, "--spanner", h, "--f", "4", "--k", "2", "--cap", "10"}).code == kExitUsage);
}

TEST_CASE("builds are byte-identical per seed") {
  std::vector<std::string> meta = {"build", "--gen", "gnp:n=40,p=0.3,w=1-9", "--algo", "meta", "--seed", "5",
                                   "--ck", "0.5", "--p", "0.6", "--cs", "2"};
  auto a = cli(meta), b = cli(meta);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  meta[6] = "6";
  CHECK(cli(meta).out != a.out);
  std::vector<std::string> det = {"build", "--gen", "gnp:n=40,p=0.3", "--algo", "meta-det"};
  CHECK(cli(det).out == cli(det).out);
}

TEST_CASE("certificate examples") {
  Scratch tmp;
  auto c6 = tmp.file("c6.txt", "0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n5 0 1\n");
  auto r = cli({"certificate", "--graph", c6, "--lambda", "2", "--check"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["edges"].size() == 6);
  CHECK(j["check"]["pass"] == true);

  auto tree = cli({"certificate", "--gen", "tree:n=20", "--lambda", "1", "--check"});
  REQUIRE(tree.code == kExitOk);
  CHECK(Json::parse(tree.out)["edges"].size() == 19);

  CHECK(cli({"certificate", "--graph", c6, "--lambda", "7"}).code == kExitUsage);
}

TEST_CASE("report on stored results") {
  Scratch tmp;
  auto empty = tmp.file("empty.txt", "# n 5\n");
  auto result = tmp.file("empty.json");
  REQUIRE(cli({"build", "--graph", empty, "--algo", "meta", "-o", result}).code == kExitOk);
  auto rep = cli({"report", result});
  CHECK(rep.code == kExitOk);
  CHECK(rep.out.find("edges 0\n") != std::string::npos);
  CHECK(cli({"report", result}).out == rep.out);

  auto tree = tmp.file("tree.json");
  REQUIRE(cli({"build", "--gen", "tree:n=25", "--algo", "meta", "-o", tree}).code == kExitOk);
  CHECK(cli({"report", tree}).out.find("edges 24\n") != std::string::npos);
  CHECK(cli({"report", tree, "--tsv"}).code == kExitOk);
  CHECK(cli({"report", tmp.file("missing.json")}).code == kExitUsage);
}

TEST_CASE("invariant checking flag adds diagnostics") {
  auto r = cli({"build", "--gen", "gnp:n=40,p=0.3", "--algo", "meta", "--ck", "0.5", "--p", "0.6", "--cs", "2",
                "--check-invariants"});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["invariant_diagnostics"].empty());
}

TEST_CASE("simulate matches the sequential build") {
  Scratch tmp;
  auto log = tmp.file("log.bin");
  auto r = cli({"simulate", "--gen", "gnp:n=40,p=0.3,w=1-30", "--k", "3", "--ck", "0.5", "--p", "0.6", "--cs", "2",
                "--compare", "--log", log});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["matches_sequential"] == true);
  CHECK(j["rounds"]["max_bits"].get<int>() <= j["rounds"]["bandwidth"].get<int>());
  CHECK(fs::file_size(log) > 0);
}

TEST_CASE("mis-bench and hitting-set") {
  auto mis = cli({"mis-bench", "--instances", "50", "--max-paths", "40"});
  CHECK(mis.code == kExitOk);
  CHECK(mis.out.find("# mismatches 0") != std::string::npos);

  Scratch tmp;
  auto inst = support::random_hitting_instance(3, 2);
  Json j{{"ground", inst.ground}, {"sets", inst.sets}, {"delta", inst.delta}, {"beta", inst.beta}};
  auto path = tmp.file("inst.json", j.dump());
  auto r = cli({"hitting-set", path});
  REQUIRE(r.code == kExitOk);
  auto out = Json::parse(r.out);
  CHECK(out["contract_holds"] == true);
  CHECK(out["min_hits"].get<std::size_t>() >= 2);

  Json bad{{"ground", {0, 1, 2}}, {"sets", {{0}}}, {"delta", 2}};
  auto r2 = cli({"hitting-set", tmp.file("bad.json", bad.dump())});
  CHECK(r2.code == kExitUsage);
  CHECK(r2.err.find("set 0") != std::string::npos);
}

TEST_CASE("bench prints one row per cell") {
  auto r = cli({"bench", "--graphs", "gnp:n=30,p=0.3", "--algos", "meta", "meta-det", "--f", "1", "2", "--k", "2",
                "--seeds", "1", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
}

TEST_CASE("suite manifests") {
  auto r = cli({"suite", "suites/trees.json", "suites/c6_expected_fail.json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("(expected failure observed)") != std::string::npos);
  CHECK(r.out.find("0 mismatches") != std::string::npos);
  CHECK_THROWS_AS(load_manifest("suites/none.json"), SuiteConfigError);

  Scratch tmp;
  auto manifest = tmp.file("m.json", R"([{"name": "x", "graph_file": "absent.txt", "expect": {"status": "pass"}}])");
  CHECK_THROWS_WITH_AS(load_manifest(manifest), doctest::Contains("missing file"), SuiteConfigError);
  auto wrong = tmp.file("w.json", R"([{"name": "y", "graph": "tree:n=8", "expect": {"status": "fail"}}])");
  auto run = cli({"suite", wrong});
  CHECK(run.code == kExitFailed);
  CHECK(run.out.find("MISMATCH") != std::string::npos);
}
