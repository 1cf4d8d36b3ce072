// polity: matrix models of political influence from the command line.
// Thin shell over the C API in polity.h; all analysis lives in the library.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polity.h"

namespace {

struct Args {
  std::string matrix_path;
  std::string format;
  std::string out;
  std::string mode = "joint";
  double tol = 1e-10;
  double threshold = 0.01;
  long long trials = 100000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::vector<int> candidates;
  std::vector<int> voters;
  // gen
  std::string archetype;
  int size = 3;
  double s = 0.25;
  double eps = 0.01;
  std::vector<int> parents;
  std::vector<double> leader_row;
};

std::string json_int_array(const std::vector<int>& v) {
  std::ostringstream out;
  out << '[';
  for (size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
  out << ']';
  return out.str();
}

std::string json_double_array(const std::vector<double>& v) {
  std::ostringstream out;
  out << '[';
  for (size_t k = 0; k < v.size(); ++k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v[k]);
    out << (k ? "," : "") << buf;
  }
  out << ']';
  return out.str();
}

std::string options_json(const Args& a, int enum_limit) {
  std::ostringstream out;
  char num[64];
  out << '{';
  std::snprintf(num, sizeof(num), "%.17g", a.tol);
  out << "\"tol\":" << num;
  std::snprintf(num, sizeof(num), "%.17g", a.threshold);
  out << ",\"threshold\":" << num;
  out << ",\"trials\":" << a.trials;
  out << ",\"seed\":" << a.seed;
  out << ",\"threads\":" << a.threads;
  out << ",\"mode\":\"" << a.mode << "\"";
  out << ",\"enum_limit\":" << enum_limit;
  if (!a.candidates.empty()) out << ",\"candidates\":" << json_int_array(a.candidates);
  if (!a.voters.empty()) out << ",\"voters\":" << json_int_array(a.voters);
  out << '}';
  return out.str();
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 1;
  }
  out << text;
  return 0;
}

int report_error() {
  std::cerr << "error [" << polity_last_error_code() << "]: " << polity_last_error() << "\n";
  return 1;
}

int run_report(const Args& a, const std::string& command) {
  polity_society* society = nullptr;
  polity_status st =
      polity_society_load(a.matrix_path.c_str(), a.format.empty() ? nullptr : a.format.c_str(), &society);
  if (st != POLITY_OK) {
    report_error();
    return st;
  }

  int enum_limit = 20;
  if (const char* env = std::getenv("POLITY_MAX_N")) enum_limit = std::atoi(env);

  char* report = nullptr;
  st = polity_report(society, command.c_str(), options_json(a, enum_limit).c_str(), &report);
  if (st != POLITY_OK) {
    report_error();
    polity_society_free(society);
    return st;
  }

  char* summary = nullptr;
  if (polity_summary(report, &summary) == POLITY_OK) {
    std::cerr << summary << "\n";
    polity_string_free(summary);
  }
  int rc = emit(report, a.out);
  polity_string_free(report);
  polity_society_free(society);
  return rc;
}

int run_gen(const Args& a) {
  std::ostringstream opts;
  opts << "{\"archetype\":\"" << a.archetype << "\",\"size\":" << a.size;
  char num[64];
  std::snprintf(num, sizeof(num), "%.17g", a.s);
  opts << ",\"s\":" << num;
  std::snprintf(num, sizeof(num), "%.17g", a.eps);
  opts << ",\"eps\":" << num;
  opts << ",\"seed\":" << a.seed;
  if (!a.parents.empty()) opts << ",\"parents\":" << json_int_array(a.parents);
  if (!a.leader_row.empty()) opts << ",\"leader_row\":" << json_double_array(a.leader_row);
  opts << '}';

  char* text = nullptr;
  polity_status st =
      polity_gen(opts.str().c_str(), a.format.empty() ? "csv" : a.format.c_str(), &text);
  if (st != POLITY_OK) {
    report_error();
    return st;
  }
  std::cerr << "gen: " << a.archetype << ", n=" << a.size << "\n";
  int rc = emit(text, a.out);
  polity_string_free(text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polity: power, elections, families and perturbation limits of influence matrices"};
  app.require_subcommand(1);
  Args a;

  auto add_matrix_arg = [&](CLI::App* cmd) {
    cmd->add_option("matrix", a.matrix_path, "matrix file (CSV or JSON)")->required();
    cmd->add_option("--format", a.format, "matrix format: csv or json (default: by extension)");
    cmd->add_option("--out", a.out, "write the report here instead of stdout");
  };

  auto* power = app.add_subcommand("power", "power vector of the society");
  add_matrix_arg(power);
  power->add_option("--tol", a.tol, "iteration tolerance");

  auto* elect = app.add_subcommand("elect", "support matrix for a candidate set");
  add_matrix_arg(elect);
  elect->add_option("--candidates", a.candidates, "candidate indices, 1-based")
      ->required()
      ->delimiter(',');
  elect->add_option("--voters", a.voters, "voter indices (default: complement)")->delimiter(',');

  auto* families = app.add_subcommand("families", "family topology of the dominated structure");
  add_matrix_arg(families);
  families->add_option("--threshold", a.threshold, "entries at or below this are structural zeros");

  auto* perturb = app.add_subcommand("perturb", "dominated power, expansion terms, limit support");
  add_matrix_arg(perturb);
  perturb->add_option("--threshold", a.threshold, "entries at or below this are structural zeros");
  perturb->add_option("--candidates", a.candidates, "candidate indices, 1-based")->delimiter(',');
  perturb->add_option("--voters", a.voters, "voter indices (default: complement)")->delimiter(',');
  perturb->add_option("--tol", a.tol, "iteration tolerance");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo support frequencies");
  add_matrix_arg(simulate);
  simulate->add_option("--candidates", a.candidates, "candidate indices, 1-based")
      ->required()
      ->delimiter(',');
  simulate->add_option("--voters", a.voters, "voter indices (default: complement)")->delimiter(',');
  simulate->add_option("--trials", a.trials, "number of trials");
  simulate->add_option("--seed", a.seed, "RNG seed");
  simulate->add_option("--threads", a.threads, "worker threads (result is thread-count independent)");
  simulate->add_option("--mode", a.mode, "joint or marginal");

  auto* gen = app.add_subcommand("gen", "generate an archetype society matrix");
  gen->add_option("archetype", a.archetype, "father | tree | equality | near-identity")->required();
  gen->add_option("--size", a.size, "number of persons");
  gen->add_option("--s", a.s, "off-diagonal weight (equality)");
  gen->add_option("--eps", a.eps, "interaction strength (near-identity)");
  gen->add_option("--seed", a.seed, "RNG seed (near-identity)");
  gen->add_option("--parents", a.parents, "parent of each person, 1-based (tree)")->delimiter(',');
  gen->add_option("--leader-row", a.leader_row, "listening row for person 1 (father)")->delimiter(',');
  gen->add_option("--format", a.format, "output format: csv or json");
  gen->add_option("--out", a.out, "write the matrix here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (gen->parsed()) return run_gen(a);
  if (power->parsed()) return run_report(a, "power");
  if (elect->parsed()) return run_report(a, "elect");
  if (families->parsed()) return run_report(a, "families");
  if (perturb->parsed()) return run_report(a, "perturb");
  if (simulate->parsed()) return run_report(a, "simulate");
  return 1;
}
