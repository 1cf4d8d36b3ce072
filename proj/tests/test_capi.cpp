// Exercises the shared-library surface exactly as an external consumer
// would: through polity.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "polity.h"

namespace {

const char* kCase1Csv =
    "0.5,0.0,0.4,0.1\n"
    "0.5,0.0,0.4,0.1\n"
    "0.0,0.0,1.0,0.0\n"
    "0.0,0.0,0.0,1.0\n";

std::string write_temp(const char* name, const std::string& text) {
  std::string path = std::string("/tmp/polity_capi_") + name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("load, inspect and free a society") {
  std::string path = write_temp("case1.csv", kCase1Csv);
  polity_society* s = nullptr;
  REQUIRE(polity_society_load(path.c_str(), nullptr, &s) == POLITY_OK);
  CHECK(polity_society_size(s) == 4);
  CHECK(polity_society_strict(s) == 0);
  polity_society_free(s);
}

TEST_CASE("validation failures come back as status 1 with a code and row") {
  std::string path = write_temp("bad.csv", "0.6,0.5\n0.5,0.5\n");
  polity_society* s = nullptr;
  CHECK(polity_society_load(path.c_str(), nullptr, &s) == POLITY_ERR_VALIDATION);
  CHECK(std::string(polity_last_error_code()) == "RowSumViolation");
  CHECK(std::string(polity_last_error()).find("row 1") != std::string::npos);
}

TEST_CASE("typed power and support calls") {
  double rows[] = {0.6, 0.4, 0.3, 0.7};
  polity_society* s = nullptr;
  REQUIRE(polity_society_from_rows(2, rows, &s) == POLITY_OK);
  CHECK(polity_society_strict(s) == 1);

  double omega[2] = {0, 0};
  REQUIRE(polity_power(s, 1e-12, omega) == POLITY_OK);
  CHECK(std::abs(omega[0] - 3.0 / 7.0) < 1e-10);
  CHECK(std::abs(omega[1] - 4.0 / 7.0) < 1e-10);

  int candidates[] = {2};
  double d[1] = {0};
  REQUIRE(polity_support(s, nullptr, 0, candidates, 1, d) == POLITY_OK);
  CHECK(std::abs(d[0] - 1.0) < 1e-12);
  polity_society_free(s);
}

TEST_CASE("support through the C API reproduces the worked case") {
  std::string path = write_temp("case1b.csv", kCase1Csv);
  polity_society* s = nullptr;
  REQUIRE(polity_society_load(path.c_str(), "csv", &s) == POLITY_OK);
  int candidates[] = {3, 4};
  double d[4] = {0, 0, 0, 0};
  REQUIRE(polity_support(s, nullptr, 0, candidates, 2, d) == POLITY_OK);
  CHECK(std::abs(d[0] - 0.8) < 1e-12);
  CHECK(std::abs(d[1] - 0.2) < 1e-12);
  CHECK(std::abs(d[2] - 0.8) < 1e-12);
  polity_society_free(s);
}

TEST_CASE("reports flow through as JSON strings") {
  std::string path = write_temp("case1c.csv", kCase1Csv);
  polity_society* s = nullptr;
  REQUIRE(polity_society_load(path.c_str(), nullptr, &s) == POLITY_OK);

  char* report = nullptr;
  REQUIRE(polity_report(s, "elect", "{\"candidates\":[3,4]}", &report) == POLITY_OK);
  std::string text = report;
  CHECK(text.find("\"support\"") != std::string::npos);
  CHECK(text.find("0.8") != std::string::npos);

  char* summary = nullptr;
  REQUIRE(polity_summary(report, &summary) == POLITY_OK);
  CHECK(std::string(summary).find("elect") != std::string::npos);
  polity_string_free(summary);
  polity_string_free(report);

  CHECK(polity_report(s, "bogus", "{}", &report) == POLITY_ERR_VALIDATION);
  polity_society_free(s);
}

TEST_CASE("numeric failures map to status 2") {
  // voters {1,4,5,6} of the six-person tree contain the family {1}
  const char* tree =
      "1,0,0,0,0,0\n"
      "1,0,0,0,0,0\n"
      "1,0,0,0,0,0\n"
      "0,1,0,0,0,0\n"
      "0,1,0,0,0,0\n"
      "0,0,1,0,0,0\n";
  std::string path = write_temp("tree.csv", tree);
  polity_society* s = nullptr;
  REQUIRE(polity_society_load(path.c_str(), nullptr, &s) == POLITY_OK);
  char* report = nullptr;
  CHECK(polity_report(s, "elect", "{\"candidates\":[2,3]}", &report) == POLITY_ERR_NUMERIC);
  CHECK(std::string(polity_last_error_code()) == "SingularVoterBlock");
  polity_society_free(s);
}

TEST_CASE("simulate reports are byte-identical for a fixed seed, threaded or not") {
  std::string path = write_temp("case1d.csv", kCase1Csv);
  polity_society* s = nullptr;
  REQUIRE(polity_society_load(path.c_str(), nullptr, &s) == POLITY_OK);
  const char* opts1 = "{\"candidates\":[3,4],\"trials\":30000,\"seed\":42,\"threads\":1}";
  const char* opts4 = "{\"candidates\":[3,4],\"trials\":30000,\"seed\":42,\"threads\":4}";
  char* r1 = nullptr;
  char* r2 = nullptr;
  char* r4 = nullptr;
  REQUIRE(polity_report(s, "simulate", opts1, &r1) == POLITY_OK);
  REQUIRE(polity_report(s, "simulate", opts1, &r2) == POLITY_OK);
  REQUIRE(polity_report(s, "simulate", opts4, &r4) == POLITY_OK);
  std::string s1 = r1, s2 = r2, s4 = r4;
  CHECK(s1 == s2);
  // thread count shows up in params but the results must match
  auto results_of = [](const std::string& text) {
    auto at = text.find("\"results\"");
    return text.substr(at);
  };
  CHECK(results_of(s1) == results_of(s4));
  polity_string_free(r1);
  polity_string_free(r2);
  polity_string_free(r4);
  polity_society_free(s);
}

TEST_CASE("generators emit parseable matrices") {
  char* text = nullptr;
  REQUIRE(polity_gen("{\"archetype\":\"equality\",\"size\":3,\"s\":0.25}", "csv", &text) == POLITY_OK);
  CHECK(std::string(text).find("0.5") != std::string::npos);
  polity_string_free(text);

  CHECK(polity_gen("{\"archetype\":\"equality\",\"size\":3,\"s\":0.9}", "csv", &text) ==
        POLITY_ERR_VALIDATION);
}

TEST_CASE("version string is present") {
  CHECK(std::string(polity_version()) == "0.1.0");
}
