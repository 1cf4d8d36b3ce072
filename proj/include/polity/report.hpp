#ifndef POLITY_REPORT_HPP
#define POLITY_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polity/constants.hpp"
#include "polity/types.hpp"

namespace polity {

// A validated society: strictly positive matrices carry both views, matrices
// with zeros only the relaxed one.
struct Society {
  Matrix raw;
  std::optional<PoliticsMatrix> strict;
  std::optional<DominatedMatrix> relaxed;
  std::string path;    // empty for in-memory societies
  std::string format;  // "csv" / "json" / "inline"
  std::string sha256;

  int size() const { return static_cast<int>(raw.rows()); }
  const DominatedMatrix& dominated() const { return *relaxed; }
};

Society society_from_matrix(Matrix raw, std::string path = "", std::string format = "inline",
                            std::string digest = "");
Society load_society(const std::string& path, const std::string& format = "");

struct ReportOptions {
  double tol = kCliTol;
  double threshold = 0.01;
  std::vector<int> candidates;  // 1-based
  std::vector<int> voters;      // 1-based; empty means complement
  long long trials = 100000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string mode = "joint";   // simulate: "joint" or "marginal"
  int enum_limit = kEnumLimit;
};

ReportOptions options_from_json(const std::string& text);

nlohmann::json power_report(const Society& s, const ReportOptions& o);
nlohmann::json elect_report(const Society& s, const ReportOptions& o);
nlohmann::json families_report(const Society& s, const ReportOptions& o);
nlohmann::json perturb_report(const Society& s, const ReportOptions& o);
nlohmann::json simulate_report(const Society& s, const ReportOptions& o);

struct GenOptions {
  std::string archetype;  // "father", "tree", "equality", "near-identity"
  int size = 3;
  double s = 0.25;
  double eps = 0.01;
  std::uint64_t seed = 0;
  std::vector<int> parents;         // 1-based, for "tree"
  std::vector<double> leader_row;   // optional, for "father"
};

GenOptions gen_options_from_json(const std::string& text);

// Matrix text in the shared CSV/JSON formats.
std::string gen_matrix_text(const GenOptions& o, const std::string& format);

// One-paragraph stderr summary of a report.
std::string human_summary(const nlohmann::json& report);

}  // namespace polity

#endif
