#ifndef POLITY_IO_HPP
#define POLITY_IO_HPP

#include <string>

#include "polity/matrix.hpp"

namespace polity {

// CSV: n lines of n comma-separated decimal floats.
// JSON: {"n": int, "rows": [[float, ...], ...]}.
// Both parsers reject NaN/Inf entries.
Matrix parse_matrix_csv(const std::string& text);
Matrix parse_matrix_json(const std::string& text);

std::string write_matrix_csv(const Matrix& m);
std::string write_matrix_json(const Matrix& m);

struct LoadedMatrix {
  Matrix entries;
  std::string path;
  std::string format;  // "csv" or "json"
  std::string sha256;  // hex digest of the raw file bytes
};

// format may be "csv", "json" or "" (derive from the extension, default csv).
LoadedMatrix load_matrix_file(const std::string& path, const std::string& format = "");

std::string read_file(const std::string& path);
std::string sha256_hex(const std::string& bytes);

}  // namespace polity

#endif
