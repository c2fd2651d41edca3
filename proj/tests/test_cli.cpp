// End-to-end runs of the command line binary. The binary path and the data
// directory come from the EQUIGAME_BIN / EQUIGAME_DATA environment variables
// set by the test harness.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

std::string bin() {
  const char* b = std::getenv("EQUIGAME_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string data(const std::string& name) {
  const char* d = std::getenv("EQUIGAME_DATA");
  REQUIRE(d != nullptr);
  return std::string(d) + "/" + name;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                          "/equigame_cli_out.txt";
  const std::string cmd = bin() + " " + args + " > " + tmp + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  res.output = ss.str();
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
  CHECK(run("frobnicate").exit_code == 64);
  CHECK(run("moran exact --N 10 --r 1").exit_code == 64);  // missing --i0
  CHECK(run("moran exact --N 10 --r 1 --i0 3 --unknown-flag 1").exit_code == 64);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("moran --help").exit_code == 0);
}

TEST_CASE("moran exact neutral drift") {
  const auto res = run("moran exact --N 10 --r 1 --i0 3");
  CHECK(res.exit_code == 0);
  const auto j = json::parse(res.output);
  CHECK(std::abs(j["exact"].get<double>() - 0.3) < 1e-12);
}

TEST_CASE("moran simulate reports the estimate bundle") {
  const auto res = run("moran simulate --N 8 --r 1.3 --i0 1 --replicas 20000 --seed 5");
  CHECK(res.exit_code == 0);
  const auto j = json::parse(res.output);
  for (const char* key : {"exact", "empirical", "stderr", "replicas", "seed"})
    CHECK(j.contains(key));
  CHECK(std::abs(j["empirical"].get<double>() - j["exact"].get<double>()) <=
        3.0 * j["stderr"].get<double>() + 1e-12);
}

TEST_CASE("netecon solve with the built-in fixture") {
  const auto res = run("netecon solve --paper-instance --algo extragradient --tol 1e-8");
  CHECK(res.exit_code == 0);
  const auto j = json::parse(res.output);
  CHECK(j["converged"] == true);
  const auto p = j["point"].get<std::vector<double>>();
  REQUIRE(p.size() == 6);
  CHECK(std::abs(p[0] - 20.9138) < 1e-3);
  CHECK(std::abs(p[1] - 29.7759) < 1e-3);
  CHECK(std::abs(p[4] - 10.4569) < 1e-3);
}

TEST_CASE("vi solve reads affine problems and writes traces") {
  const std::string trace = "/tmp/equigame_trace.csv";
  const auto res = run("vi solve --problem " + data("vi_affine.json") +
                       " --algo basic --alpha 0.2 --tol 1e-10 --trace " + trace);
  CHECK(res.exit_code == 0);
  const auto j = json::parse(res.output);
  CHECK(j["converged"] == true);
  const std::string csv = slurp(trace);
  CHECK(csv.rfind("k,residual\n", 0) == 0);
  CHECK(csv.find('.') != std::string::npos);
}

TEST_CASE("deterministic outputs for identical seeds") {
  const std::string out1 = "/tmp/equigame_det1.json";
  const std::string out2 = "/tmp/equigame_det2.json";
  const std::string base = "netecon evolve --paper-instance --rounds 5 --delta 0.05 --tol 1e-8 ";
  CHECK(run(base + "--seed 9 --out " + out1).exit_code == 0);
  CHECK(run(base + "--seed 9 --out " + out2).exit_code == 0);
  const std::string a = slurp(out1);
  CHECK(!a.empty());
  CHECK(a == slurp(out2));  // byte-identical
  CHECK(a.rfind("round,fitness1,fitness2,extinct,residual\n", 0) == 0);

  const auto diff = run(base + "--seed 10 --out -");
  CHECK(diff.output != a);
}

TEST_CASE("bisim subcommands") {
  const auto check = run("bisim check --lts1 " + data("lts_cycle.json") + " --lts2 " +
                         data("lts_loop.json") + " --rel " + data("rel_full.json"));
  CHECK(check.exit_code == 0);
  CHECK(json::parse(check.output)["bisimulation"] == true);

  const auto greatest = run("bisim greatest --lts1 " + data("lts_cycle.json") + " --lts2 " +
                            data("lts_loop.json"));
  CHECK(greatest.exit_code == 0);
  CHECK(json::parse(greatest.output)["pairs"].size() == 2);
}

TEST_CASE("diversity subcommands") {
  const auto build = run("diversity build --env register:3");
  CHECK(build.exit_code == 0);
  CHECK(json::parse(build.output)["diversity"] == 6);

  const auto sim = run("diversity simulate --env register:3 --state 101 --actions LRFLRF");
  CHECK(sim.exit_code == 0);
  const auto j = json::parse(sim.output);
  CHECK(j["matches_env"] == true);
  CHECK(j["steps"].size() == 6);
}

TEST_CASE("yoneda check passes valid spaces and flags broken ones") {
  const auto good = run("yoneda check --space " + data("space_prefix.json"));
  CHECK(good.exit_code == 0);
  CHECK(json::parse(good.output)["isometric"] == true);

  const auto bad = run("yoneda check --space " + data("space_broken.json"));
  CHECK(bad.exit_code == 1);
  const auto j = json::parse(bad.output);
  CHECK(j["valid"] == false);
  CHECK(!j["violations"].empty());
}

TEST_CASE("separoid check") {
  const auto from_joint = run("separoid check --joint " + data("joint_chain.json") + " --strong");
  CHECK(from_joint.exit_code == 0);
  const auto j = json::parse(from_joint.output);
  CHECK(j["separoid"] == true);
  CHECK(j["violations"].empty());

  const auto empty_rel = run("separoid check --separoid " + data("separoid_empty.json"));
  CHECK(empty_rel.exit_code == 0);
  const auto parsed = json::parse(empty_rel.output);
  CHECK(parsed["separoid"] == false);
  CHECK(parsed["violations"][0]["axiom"] == "P1");
}

TEST_CASE("poset discover on the pancreatic table") {
  const auto res = run("poset discover --csv " + data("pancreatic.csv") + " --epsilon 0");
  CHECK(res.exit_code == 0);
  const auto j = json::parse(res.output);
  bool kras_tp53 = false, tp53_smad4 = false, cdkn2a_any = false;
  for (const auto& pair : j["leq"]) {
    if (pair[0] == "KRAS" && pair[1] == "TP53") kras_tp53 = true;
    if (pair[0] == "TP53" && pair[1] == "SMAD4") tp53_smad4 = true;
    if (pair[0] == "CDKN2A" || pair[1] == "CDKN2A") cdkn2a_any = true;
  }
  CHECK(kras_tp53);
  CHECK(tp53_smad4);
  CHECK_FALSE(cdkn2a_any);

  const auto dot = run("poset discover --csv " + data("pancreatic.csv") + " --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("digraph") != std::string::npos);
  CHECK(dot.output.find("\"KRAS\" -> \"TP53\"") != std::string::npos);
}

TEST_CASE("malformed inputs exit with 1 and name the problem") {
  const std::string bad = "/tmp/equigame_bad_lts.json";
  std::ofstream(bad) << "{\"states\": [\"s\"], \"labels\": [\"a\"]}";
  const auto res = run("bisim greatest --lts1 " + bad + " --lts2 " + bad);
  CHECK(res.exit_code == 1);

  const std::string badcsv = "/tmp/equigame_bad.csv";
  std::ofstream(badcsv) << "a,b\n1,2\n";
  CHECK(run("poset discover --csv " + badcsv).exit_code == 1);
}

TEST_CASE("stochastic solve via the CLI") {
  const auto res = run("netecon solve --paper-instance --algo stochastic --sigma 1 "
                       "--steps 50000 --seed 3");
  CHECK(res.exit_code == 0);
  const auto j = json::parse(res.output);
  const auto p = j["point"].get<std::vector<double>>();
  REQUIRE(p.size() == 6);
  CHECK(std::abs(p[0] - 20.9138) < 0.5);
  SUBCASE("invalid schedule is rejected up front") {
    CHECK(run("netecon solve --paper-instance --algo stochastic --step-p 0.3").exit_code == 1);
    CHECK(run("netecon solve --paper-instance --algo stochastic --beta 2.0").exit_code == 1);
  }
}
