// End-to-end checks of the installed command-line surface: spawns the real
// binary and inspects stdout, stderr and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(POLITY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const char* name, const std::string& text) {
  std::string path = std::string("/tmp/polity_cli_") + name;
  std::ofstream f(path, std::ios::binary);
  f << text;
  return path;
}

const char* kCase1Csv =
    "0.5,0.0,0.4,0.1\n"
    "0.5,0.0,0.4,0.1\n"
    "0.0,0.0,1.0,0.0\n"
    "0.0,0.0,0.0,1.0\n";

}  // namespace

TEST_CASE("power emits a JSON report with a normalized omega") {
  std::string path = write_temp("society.csv", "0.6,0.4\n0.3,0.7\n");
  auto r = run("power " + path);
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  double sum = 0.0;
  for (const auto& w : doc["results"]["omega"]) sum += w.get<double>();
  CHECK(sum == doctest::Approx(1.0));
  CHECK(doc["inputs"]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("elect surfaces the worked case") {
  std::string path = write_temp("case1.csv", kCase1Csv);
  auto r = run("elect " + path + " --candidates 3,4");
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["support"][0][0].get<double>() == doctest::Approx(0.8));
  CHECK(doc["results"]["support"][1][1].get<double>() == doctest::Approx(0.2));
}

TEST_CASE("families and perturb run on a thresholded strict matrix") {
  std::string path = write_temp("blurred.csv",
                                "0.97,0.01,0.01,0.01\n"
                                "0.97,0.01,0.01,0.01\n"
                                "0.97,0.01,0.01,0.01\n"
                                "0.97,0.01,0.01,0.01\n");
  auto fam = run("families " + path + " --threshold 0.02");
  REQUIRE(fam.exit_code == 0);
  auto fam_doc = nlohmann::json::parse(fam.out);
  CHECK(fam_doc["results"]["upper_class"][0] == std::vector<int>{1});
  CHECK(fam_doc["results"]["connected"] == true);

  auto pert = run("perturb " + path + " --threshold 0.02 --candidates 3,4");
  REQUIRE(pert.exit_code == 0);
  auto pert_doc = nlohmann::json::parse(pert.out);
  CHECK(pert_doc["results"]["omega_hat"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(pert_doc["results"]["support_limit"].size() == 2);
}

TEST_CASE("simulate is byte-identical across reruns with one seed") {
  std::string path = write_temp("case1s.csv", kCase1Csv);
  std::string args = "simulate " + path + " --candidates 3,4 --trials 50000 --seed 42";
  auto r1 = run(args);
  auto r2 = run(args);
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == r2.out);

  auto doc = nlohmann::json::parse(r1.out);
  CHECK(doc["results"]["marginal"][0][0].get<double>() == doctest::Approx(0.8).epsilon(0.02));
}

TEST_CASE("validation problems exit 1 and numeric problems exit 2") {
  std::string bad = write_temp("bad.csv", "0.9,0.2\n0.5,0.5\n");
  CHECK(run("power " + bad).exit_code == 1);

  std::string tree = write_temp("tree.csv",
                                "1,0,0,0,0,0\n"
                                "1,0,0,0,0,0\n"
                                "1,0,0,0,0,0\n"
                                "0,1,0,0,0,0\n"
                                "0,1,0,0,0,0\n"
                                "0,0,1,0,0,0\n");
  CHECK(run("elect " + tree + " --candidates 2,3").exit_code == 2);
  CHECK(run("power missing_file.csv").exit_code == 1);
}

TEST_CASE("gen output feeds every other subcommand") {
  auto gen = run("gen tree --parents 1,1,1,2,2,3 --out /tmp/polity_cli_gen_tree.csv");
  REQUIRE(gen.exit_code == 0);

  CHECK(run("power /tmp/polity_cli_gen_tree.csv").exit_code == 0);
  CHECK(run("families /tmp/polity_cli_gen_tree.csv").exit_code == 0);
  CHECK(run("elect /tmp/polity_cli_gen_tree.csv --candidates 1").exit_code == 0);
  CHECK(run("perturb /tmp/polity_cli_gen_tree.csv --candidates 1").exit_code == 0);
  CHECK(run("simulate /tmp/polity_cli_gen_tree.csv --candidates 1 --trials 2000 --seed 1").exit_code == 0);

  auto near = run("gen near-identity --size 4 --eps 0.02 --seed 9 --format json --out /tmp/polity_cli_gen_garden.json");
  REQUIRE(near.exit_code == 0);
  CHECK(run("power /tmp/polity_cli_gen_garden.json").exit_code == 0);
  CHECK(run("families /tmp/polity_cli_gen_garden.json --threshold 0.01").exit_code == 0);
  CHECK(run("elect /tmp/polity_cli_gen_garden.json --candidates 2,4").exit_code == 0);
  CHECK(run("perturb /tmp/polity_cli_gen_garden.json --threshold 0.01 --candidates 2").exit_code == 0);
  CHECK(run("simulate /tmp/polity_cli_gen_garden.json --candidates 2 --trials 2000 --seed 1").exit_code == 0);

  CHECK(run("gen equality --size 4 --s 0.2 --out /tmp/polity_cli_gen_eq.csv").exit_code == 0);
  CHECK(run("power /tmp/polity_cli_gen_eq.csv").exit_code == 0);
}

TEST_CASE("effective parameter values are echoed in the report") {
  std::string path = write_temp("case1p.csv", kCase1Csv);
  auto r = run("simulate " + path + " --candidates 3,4 --trials 1234 --seed 7 --mode marginal");
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["params"]["trials"] == 1234);
  CHECK(doc["params"]["seed"] == 7);
  CHECK(doc["params"]["mode"] == "marginal");
  CHECK(doc["results"]["joint"].empty());
}

TEST_CASE("usage errors name the problem and exit 1") {
  std::string path = write_temp("case1u.csv", kCase1Csv);
  CHECK(run("elect " + path).exit_code != 0);             // missing --candidates
  CHECK(run("elect " + path + " --candidates 9").exit_code == 1);
  CHECK(run("gen nonsense --size 3").exit_code == 1);
}
