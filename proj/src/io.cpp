#include "polity/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polity/error.hpp"

namespace polity {

namespace {

double parse_entry(const std::string& token, int row, int col) {
  size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError,
                "row " + std::to_string(row) + ", entry " + std::to_string(col) + ": cannot parse '" + token + "'");
  }
  while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
  if (pos != token.size())
    throw Error(ErrorCode::ParseError,
                "row " + std::to_string(row) + ", entry " + std::to_string(col) + ": trailing junk in '" + token + "'");
  if (!std::isfinite(value))
    throw Error(ErrorCode::ParseError,
                "row " + std::to_string(row) + ", entry " + std::to_string(col) + ": non-finite value");
  return value;
}

}  // namespace

Matrix parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string token;
    int col = 0;
    while (std::getline(cells, token, ',')) {
      ++col;
      row.push_back(parse_entry(token, lineno, col));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "no matrix rows found");
  size_t n = rows.size();
  Matrix m(n, rows[0].size());
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != rows[0].size())
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                             " entries, expected " + std::to_string(rows[0].size()));
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
    throw Error(ErrorCode::ParseError, "expected an object with \"n\" and \"rows\"");
  int n = 0;
  try {
    n = doc.at("n").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::ParseError, "\"n\" must be an integer");
  }
  const auto& rows = doc.at("rows");
  if (n <= 0 || !rows.is_array() || static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::ParseError, "\"rows\" must hold exactly n arrays");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " must hold exactly n numbers");
    for (int j = 0; j < n; ++j) {
      const auto& cell = row.at(j);
      if (!cell.is_number())
        throw Error(ErrorCode::ParseError,
                    "row " + std::to_string(i + 1) + ", entry " + std::to_string(j + 1) + " is not a number");
      double v = cell.get<double>();
      if (!std::isfinite(v))
        throw Error(ErrorCode::ParseError,
                    "row " + std::to_string(i + 1) + ", entry " + std::to_string(j + 1) + " is not finite");
      m(i, j) = v;
    }
  }
  return m;
}

namespace {

std::string format_entry(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string write_matrix_csv(const Matrix& m) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_entry(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::string write_matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  nlohmann::json doc{{"n", m.rows()}, {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error(ErrorCode::IoError, "digest computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

LoadedMatrix load_matrix_file(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    fmt = (ext == "json") ? "json" : "csv";
  }
  if (fmt != "csv" && fmt != "json")
    throw Error(ErrorCode::UsageError, "unknown matrix format '" + fmt + "'");
  std::string bytes = read_file(path);
  Matrix entries = fmt == "json" ? parse_matrix_json(bytes) : parse_matrix_csv(bytes);
  return LoadedMatrix{std::move(entries), path, fmt, sha256_hex(bytes)};
}

}  // namespace polity
