#include "polity/report.hpp"

#include <cmath>
#include <sstream>

#include "polity/election.hpp"
#include "polity/error.hpp"
#include "polity/families.hpp"
#include "polity/io.hpp"
#include "polity/linalg.hpp"
#include "polity/perturb.hpp"
#include "polity/power.hpp"
#include "polity/simulate.hpp"
#include "polity/structures.hpp"

namespace polity {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kSchema = 1;

nlohmann::json vec_json(const RowVector& v) {
  auto out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

nlohmann::json mat_json(const Matrix& m) {
  auto out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

void ensure_finite(const nlohmann::json& node) {
  if (node.is_number_float() && !std::isfinite(node.get<double>()))
    throw Error(ErrorCode::NumericFailure, "report contains a non-finite value");
  if (node.is_array() || node.is_object())
    for (const auto& child : node) ensure_finite(child);
}

nlohmann::json envelope(const std::string& command, const Society& s, nlohmann::json params,
                        nlohmann::json results, std::vector<std::string> diagnostics) {
  nlohmann::json report;
  report["version"] = kVersion;
  report["schema"] = kSchema;
  report["command"] = command;
  report["inputs"] = {{"path", s.path.empty() ? "inline" : s.path},
                      {"format", s.format},
                      {"sha256", s.sha256},
                      {"n", s.size()}};
  report["params"] = std::move(params);
  report["results"] = std::move(results);
  report["diagnostics"] = std::move(diagnostics);
  ensure_finite(report);
  return report;
}

IndexPartition partition_from_options(const Society& s, const ReportOptions& o) {
  if (o.candidates.empty())
    throw Error(ErrorCode::UsageError, "no candidates given (use --candidates i,j,...)");
  IndexSet candidates = from_one_based(o.candidates, s.size());
  if (o.voters.empty()) return IndexPartition::against_complement(s.size(), std::move(candidates));
  return IndexPartition::of(s.size(), from_one_based(o.voters, s.size()), std::move(candidates));
}

// A_hat, eps, B for any input: strict matrices get thresholded, matrices
// that already carry zeros are their own dominated structure with B = 0.
struct Structure {
  DominatedMatrix a_hat;
  double eps;
  Matrix correction;
  bool thresholded;
};

Structure dominated_structure(const Society& s, const ReportOptions& o) {
  if (s.strict) {
    Decomposition d = decompose(*s.strict, o.threshold);
    return Structure{std::move(d.dominated), d.scale, std::move(d.correction), true};
  }
  return Structure{s.dominated(), 0.0, Matrix::Zero(s.size(), s.size()), false};
}

}  // namespace

Society society_from_matrix(Matrix raw, std::string path, std::string format, std::string digest) {
  Society s;
  s.raw = std::move(raw);
  s.path = std::move(path);
  s.format = std::move(format);
  s.sha256 = std::move(digest);
  if (s.raw.size() > 0 && s.raw.minCoeff() > 0.0) {
    s.strict = PoliticsMatrix::validate(s.raw);
    s.relaxed = DominatedMatrix::from(*s.strict);
  } else {
    s.relaxed = DominatedMatrix::validate(s.raw);
  }
  return s;
}

Society load_society(const std::string& path, const std::string& format) {
  LoadedMatrix loaded = load_matrix_file(path, format);
  return society_from_matrix(std::move(loaded.entries), loaded.path, loaded.format, loaded.sha256);
}

nlohmann::json power_report(const Society& s, const ReportOptions& o) {
  nlohmann::json params{{"tol", o.tol}};
  nlohmann::json results;
  std::vector<std::string> diagnostics;

  if (s.strict) {
    PowerVector iterative = power_iterative(*s.strict, o.tol);
    PowerVector explicit_solve = power_explicit(*s.strict);
    double agreement = (iterative.weights - explicit_solve.weights).cwiseAbs().maxCoeff();
    ContractionBound bound = contraction_bound(*s.strict);
    results["omega"] = vec_json(explicit_solve.weights);
    results["omega_iterative"] = vec_json(iterative.weights);
    results["method_agreement"] = agreement;
    results["iterations"] = iterative.iterations;
    results["residual"] = iterative.residual;
    results["contraction"] = {{"eps_min", bound.eps_min}, {"factor", bound.factor}};
    results["dominated"] = false;
    if (agreement > 100 * o.tol) diagnostics.push_back("power methods disagree beyond tolerance");
  } else {
    // zeros in the matrix: report the stationary structure instead
    auto upper = upper_class_families(s.dominated());
    results["dominated"] = true;
    results["family_count"] = upper.size();
    auto stationary = nlohmann::json::array();
    for (const auto& family : upper) {
      RowVector local = stationary_row(slice(s.raw, family.members, family.members));
      RowVector full = RowVector::Zero(s.size());
      for (size_t t = 0; t < family.members.size(); ++t) full[family.members[t]] = local[t];
      stationary.push_back({{"family", to_one_based(family.members)}, {"weights", vec_json(full)}});
    }
    results["stationary"] = std::move(stationary);
    if (upper.size() == 1) {
      results["omega"] = results["stationary"][0]["weights"];
      diagnostics.push_back("matrix has zero entries; omega is the dominated power");
    } else {
      results["omega"] = nullptr;
      diagnostics.push_back("power is not unique: " + std::to_string(upper.size()) +
                            " upper-class families; the limit depends on the vanishing term "
                            "(see the perturb command)");
    }
  }
  return envelope("power", s, std::move(params), std::move(results), std::move(diagnostics));
}

nlohmann::json elect_report(const Society& s, const ReportOptions& o) {
  IndexPartition p = partition_from_options(s, o);
  SupportMatrix d = s.strict ? support_matrix(*s.strict, p) : support_matrix(s.dominated(), p);

  std::vector<std::string> diagnostics;
  if (d.near_singular) diagnostics.push_back("voter block is near-singular (condition above 1e12)");

  nlohmann::json results;
  results["voters"] = to_one_based(p.voters());
  results["candidates"] = to_one_based(p.candidates());
  results["support"] = mat_json(d.entries);
  results["near_singular"] = d.near_singular;
  auto row_sums = nlohmann::json::array();
  for (Eigen::Index i = 0; i < d.entries.rows(); ++i) row_sums.push_back(d.entries.row(i).sum());
  results["row_sums"] = std::move(row_sums);

  nlohmann::json params{{"candidates", to_one_based(p.candidates())}};
  return envelope("elect", s, std::move(params), std::move(results), std::move(diagnostics));
}

nlohmann::json families_report(const Society& s, const ReportOptions& o) {
  Structure st = dominated_structure(s, o);
  FamilyTopology topology = enumerate_families(st.a_hat, o.enum_limit, /*allow_partial=*/true);

  std::vector<std::string> diagnostics;
  if (!topology.exhaustive)
    diagnostics.push_back("family listing skipped (n exceeds the enumeration limit); "
                          "upper class and connectivity only");

  int zeroed = 0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      if (st.a_hat.entries()(i, j) == 0.0 && s.raw(i, j) != 0.0) ++zeroed;

  nlohmann::json results = topology_to_json(topology);
  results["decomposition"] = {{"thresholded", st.thresholded},
                              {"epsilon", st.eps},
                              {"entries_zeroed", zeroed}};
  nlohmann::json params{{"threshold", o.threshold}, {"enum_limit", o.enum_limit}};
  return envelope("families", s, std::move(params), std::move(results), std::move(diagnostics));
}

nlohmann::json perturb_report(const Society& s, const ReportOptions& o) {
  Structure st = dominated_structure(s, o);
  DominatedPower dp = dominated_power(st.a_hat, st.correction);

  nlohmann::json results;
  results["epsilon"] = st.eps;
  results["omega_hat"] = vec_json(dp.omega_hat);
  results["sigma"] = vec_json(dp.sigma);
  results["family_count"] = dp.family_count;
  results["sigma_kernel_dim"] = dp.kernel_dim;

  std::vector<std::string> diagnostics;
  if (dp.kernel_dim > 1)
    diagnostics.push_back("sigma is the minimum-norm representative (kernel dimension " +
                          std::to_string(dp.kernel_dim) + ")");

  if (st.thresholded) {
    // expansion residuals at shrinking fractions of the extracted scale
    std::vector<double> eps_list{st.eps, st.eps / 3.0, st.eps / 10.0};
    auto table = nlohmann::json::array();
    for (double eps : eps_list) {
      Matrix at_eps = st.a_hat.entries() + eps * st.correction;
      RowVector omega_eps = power_explicit(PoliticsMatrix::validate(std::move(at_eps))).weights;
      double residual = (omega_eps - dp.omega_hat - eps * dp.sigma).cwiseAbs().maxCoeff();
      table.push_back({{"eps", eps}, {"residual", residual}});
    }
    results["residuals"] = std::move(table);
    RowVector oracle = power_limit_oracle(st.a_hat, st.correction,
                                          {st.eps / 10.0, st.eps / 100.0, st.eps / 1000.0});
    results["oracle_max_dev"] = (oracle - dp.omega_hat).cwiseAbs().maxCoeff();
  } else {
    results["residuals"] = nlohmann::json::array();
    diagnostics.push_back("input already dominated; no perturbation residuals");
  }

  if (!o.candidates.empty()) {
    IndexPartition p = partition_from_options(s, o);
    SupportMatrix d_hat = limit_support(st.a_hat, st.correction, p);
    results["support_limit"] = mat_json(d_hat.entries);
    auto consensus_list = nlohmann::json::array();
    for (const auto& family : upper_class_families(st.a_hat)) {
      if (!is_subset(family.members, p.voters())) continue;
      Consensus c = consensus(st.a_hat, st.correction, family, p);
      consensus_list.push_back({{"family", to_one_based(family.members)},
                                {"raw", vec_json(c.raw)},
                                {"normalized", vec_json(c.normalized)}});
    }
    results["consensus"] = std::move(consensus_list);
  }

  nlohmann::json params{{"threshold", o.threshold}, {"candidates", o.candidates}};
  return envelope("perturb", s, std::move(params), std::move(results), std::move(diagnostics));
}

nlohmann::json simulate_report(const Society& s, const ReportOptions& o) {
  IndexPartition p = partition_from_options(s, o);
  if (o.mode != "joint" && o.mode != "marginal")
    throw Error(ErrorCode::UsageError, "mode must be 'joint' or 'marginal'");
  bool joint = o.mode == "joint";
  if (joint && p.voters().size() > 16)
    throw Error(ErrorCode::TooLarge, "joint profiles over more than 16 voters; use mode=marginal");

  SimulationResult r = joint ? simulate_joint(s.dominated(), p, o.trials, o.seed, o.threads)
                             : simulate_marginals(s.dominated(), p, o.trials, o.seed, o.threads);

  nlohmann::json results;
  results["trials"] = r.trials;
  results["seed"] = r.seed;
  results["mode"] = o.mode;
  results["marginal"] = mat_json(r.marginal);
  auto joint_json = nlohmann::json::array();
  for (const auto& [profile, count] : r.joint_counts) {
    std::vector<int> one_based(profile.size());
    for (size_t k = 0; k < profile.size(); ++k) one_based[k] = profile[k] + 1;
    joint_json.push_back(
        {{"profile", one_based}, {"freq", static_cast<double>(count) / static_cast<double>(r.trials)}});
  }
  results["joint"] = std::move(joint_json);
  results["unresolved"] = r.unresolved;

  std::vector<std::string> diagnostics;
  if (r.unresolved > 0)
    diagnostics.push_back(std::to_string(r.unresolved) + " delegation cycles resolved by resampling");

  // compare against the analytic support matrix when the voter block allows
  try {
    SupportMatrix d = support_matrix(s.dominated(), p);
    double dev = (r.marginal - d.entries).cwiseAbs().maxCoeff();
    results["analytic_max_dev"] = dev;
  } catch (const Error&) {
    diagnostics.push_back("no analytic support matrix for comparison (singular voter block)");
  }

  nlohmann::json params{{"trials", o.trials}, {"seed", o.seed},      {"mode", o.mode},
                        {"threads", o.threads}, {"candidates", o.candidates}};
  return envelope("simulate", s, std::move(params), std::move(results), std::move(diagnostics));
}

GenOptions gen_options_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.empty() ? "{}" : text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::UsageError, std::string("bad generator options: ") + e.what());
  }
  GenOptions o;
  o.archetype = doc.value("archetype", "");
  o.size = doc.value("size", 3);
  o.s = doc.value("s", 0.25);
  o.eps = doc.value("eps", 0.01);
  o.seed = doc.value("seed", 0ULL);
  if (doc.contains("parents")) o.parents = doc.at("parents").get<std::vector<int>>();
  if (doc.contains("leader_row")) o.leader_row = doc.at("leader_row").get<std::vector<double>>();
  return o;
}

std::string gen_matrix_text(const GenOptions& o, const std::string& format) {
  Matrix m;
  if (o.archetype == "father") {
    std::optional<RowVector> leader;
    if (!o.leader_row.empty()) {
      RowVector row(o.leader_row.size());
      for (size_t k = 0; k < o.leader_row.size(); ++k) row[k] = o.leader_row[k];
      leader = std::move(row);
    }
    m = gen_father_and_sons(o.size, leader).entries();
  } else if (o.archetype == "tree") {
    if (o.parents.empty()) throw Error(ErrorCode::UsageError, "tree needs --parents p1,p2,...");
    std::vector<int> parent(o.parents.size());
    for (size_t k = 0; k < o.parents.size(); ++k) parent[k] = o.parents[k] - 1;
    m = gen_family_tree(TreeSpec::of(std::move(parent))).entries();
  } else if (o.archetype == "equality") {
    m = gen_equality(o.size, o.s).entries();
  } else if (o.archetype == "near-identity") {
    m = gen_near_identity(random_interaction(o.size, o.seed), o.eps).entries();
  } else {
    throw Error(ErrorCode::UsageError,
                "unknown archetype '" + o.archetype + "' (father, tree, equality, near-identity)");
  }
  if (format == "json") return write_matrix_json(m);
  if (format.empty() || format == "csv") return write_matrix_csv(m);
  throw Error(ErrorCode::UsageError, "unknown matrix format '" + format + "'");
}

ReportOptions options_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.empty() ? "{}" : text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::UsageError, std::string("bad options: ") + e.what());
  }
  ReportOptions o;
  o.tol = doc.value("tol", kCliTol);
  o.threshold = doc.value("threshold", 0.01);
  o.trials = doc.value("trials", 100000LL);
  o.seed = doc.value("seed", 0ULL);
  o.threads = doc.value("threads", 1);
  o.mode = doc.value("mode", "joint");
  o.enum_limit = doc.value("enum_limit", kEnumLimit);
  if (doc.contains("candidates")) o.candidates = doc.at("candidates").get<std::vector<int>>();
  if (doc.contains("voters")) o.voters = doc.at("voters").get<std::vector<int>>();
  if (o.tol <= 0.0) throw Error(ErrorCode::UsageError, "tol must be positive");
  if (o.trials < 1) throw Error(ErrorCode::UsageError, "trials must be at least 1");
  if (o.threads < 1) throw Error(ErrorCode::UsageError, "threads must be at least 1");
  return o;
}

std::string human_summary(const nlohmann::json& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "?");
  const auto& results = report.at("results");
  out << command << ": n=" << report.at("inputs").value("n", 0);
  if (command == "power") {
    out << ", omega=" << results.at("omega").dump();
    if (results.value("dominated", false)) out << " (dominated)";
  } else if (command == "elect") {
    out << ", support=" << results.at("support").dump();
  } else if (command == "families") {
    out << ", upper_class=" << results.at("upper_class").dump()
        << ", connected=" << (results.value("connected", false) ? "yes" : "no");
  } else if (command == "perturb") {
    out << ", omega_hat=" << results.at("omega_hat").dump()
        << ", families=" << results.value("family_count", 0);
  } else if (command == "simulate") {
    out << ", trials=" << results.value("trials", 0LL) << ", marginal=" << results.at("marginal").dump();
  }
  for (const auto& d : report.value("diagnostics", nlohmann::json::array()))
    out << "\n  note: " << d.get<std::string>();
  return out.str();
}

}  // namespace polity
