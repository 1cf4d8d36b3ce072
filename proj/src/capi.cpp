#include "polity.h"

#include <cstring>
#include <string>

#include "polity/election.hpp"
#include "polity/error.hpp"
#include "polity/power.hpp"
#include "polity/report.hpp"

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_code;

polity_status fail(const polity::Error& e) {
  g_last_error = e.what();
  g_last_code = polity::to_string(e.code());
  return e.kind() == polity::ErrorKind::Numeric ? POLITY_ERR_NUMERIC : POLITY_ERR_VALIDATION;
}

polity_status fail_generic(const std::exception& e) {
  g_last_error = e.what();
  g_last_code = "InternalError";
  return POLITY_ERR_NUMERIC;
}

template <typename Fn>
polity_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    g_last_code.clear();
    return POLITY_OK;
  } catch (const polity::Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    return fail_generic(e);
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

}  // namespace

struct polity_society {
  polity::Society society;
};

extern "C" {

const char* polity_last_error(void) { return g_last_error.c_str(); }
const char* polity_last_error_code(void) { return g_last_code.c_str(); }

polity_status polity_society_load(const char* path, const char* format, polity_society** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    g_last_code = "UsageError";
    return POLITY_ERR_VALIDATION;
  }
  return guarded([&] {
    auto s = new polity_society{polity::load_society(path, format ? format : "")};
    *out = s;
  });
}

polity_status polity_society_from_rows(int n, const double* rows, polity_society** out) {
  if (!rows || !out || n < 1) {
    g_last_error = "null argument or non-positive size";
    g_last_code = "UsageError";
    return POLITY_ERR_VALIDATION;
  }
  return guarded([&] {
    polity::Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rows[i * n + j];
    *out = new polity_society{polity::society_from_matrix(std::move(m))};
  });
}

void polity_society_free(polity_society* s) { delete s; }

int polity_society_size(const polity_society* s) { return s ? s->society.size() : 0; }

int polity_society_strict(const polity_society* s) {
  return s && s->society.strict.has_value() ? 1 : 0;
}

polity_status polity_power(const polity_society* s, double tol, double* omega_out) {
  if (!s || !omega_out) {
    g_last_error = "null argument";
    g_last_code = "UsageError";
    return POLITY_ERR_VALIDATION;
  }
  return guarded([&] {
    if (!s->society.strict)
      throw polity::Error(polity::ErrorCode::NonPositiveEntry,
                          "power is defined for strictly positive societies");
    polity::PowerVector w = polity::power_iterative(*s->society.strict, tol > 0 ? tol : 1e-12);
    for (int i = 0; i < s->society.size(); ++i) omega_out[i] = w.weights[i];
  });
}

polity_status polity_support(const polity_society* s, const int* voters, int n_voters,
                             const int* candidates, int n_candidates, double* d_out) {
  if (!s || !candidates || n_candidates < 1 || !d_out || (n_voters > 0 && !voters)) {
    g_last_error = "null argument or empty candidate set";
    g_last_code = "UsageError";
    return POLITY_ERR_VALIDATION;
  }
  return guarded([&] {
    const int n = s->society.size();
    polity::IndexSet cand =
        polity::from_one_based(std::vector<int>(candidates, candidates + n_candidates), n);
    polity::IndexPartition p =
        n_voters > 0
            ? polity::IndexPartition::of(
                  n, polity::from_one_based(std::vector<int>(voters, voters + n_voters), n), cand)
            : polity::IndexPartition::against_complement(n, cand);
    polity::SupportMatrix d = s->society.strict
                                  ? polity::support_matrix(*s->society.strict, p)
                                  : polity::support_matrix(s->society.dominated(), p);
    for (Eigen::Index i = 0; i < d.entries.rows(); ++i)
      for (Eigen::Index j = 0; j < d.entries.cols(); ++j)
        d_out[i * d.entries.cols() + j] = d.entries(i, j);
  });
}

polity_status polity_report(const polity_society* s, const char* command, const char* options_json,
                            char** report_json_out) {
  if (!s || !command || !report_json_out) {
    g_last_error = "null argument";
    g_last_code = "UsageError";
    return POLITY_ERR_VALIDATION;
  }
  return guarded([&] {
    polity::ReportOptions o = polity::options_from_json(options_json ? options_json : "{}");
    std::string cmd = command;
    nlohmann::json report;
    if (cmd == "power")
      report = polity::power_report(s->society, o);
    else if (cmd == "elect")
      report = polity::elect_report(s->society, o);
    else if (cmd == "families")
      report = polity::families_report(s->society, o);
    else if (cmd == "perturb")
      report = polity::perturb_report(s->society, o);
    else if (cmd == "simulate")
      report = polity::simulate_report(s->society, o);
    else
      throw polity::Error(polity::ErrorCode::UsageError, "unknown command '" + cmd + "'");
    *report_json_out = copy_string(report.dump(2) + "\n");
  });
}

polity_status polity_summary(const char* report_json, char** summary_out) {
  if (!report_json || !summary_out) {
    g_last_error = "null argument";
    g_last_code = "UsageError";
    return POLITY_ERR_VALIDATION;
  }
  return guarded([&] {
    nlohmann::json report = nlohmann::json::parse(report_json);
    *summary_out = copy_string(polity::human_summary(report));
  });
}

polity_status polity_gen(const char* options_json, const char* format, char** matrix_text_out) {
  if (!matrix_text_out) {
    g_last_error = "null argument";
    g_last_code = "UsageError";
    return POLITY_ERR_VALIDATION;
  }
  return guarded([&] {
    polity::GenOptions o = polity::gen_options_from_json(options_json ? options_json : "{}");
    *matrix_text_out = copy_string(polity::gen_matrix_text(o, format ? format : "csv"));
  });
}

void polity_string_free(char* s) { delete[] s; }

const char* polity_version(void) { return "0.1.0"; }

}  // extern "C"
