#include "polity/matrix.hpp"

#include <algorithm>
#include <string>

#include "polity/error.hpp"

namespace polity {

IndexSet make_index_set(std::vector<int> raw, int n) {
  std::sort(raw.begin(), raw.end());
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] < 0 || raw[k] >= n) {
      throw Error(ErrorCode::BadIndexSet,
                  "person index " + std::to_string(raw[k] + 1) + " out of range 1.." + std::to_string(n));
    }
    if (k > 0 && raw[k] == raw[k - 1]) {
      throw Error(ErrorCode::BadIndexSet, "duplicate person index " + std::to_string(raw[k] + 1));
    }
  }
  return raw;
}

IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  out.reserve(n - s.size());
  size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

bool contains(const IndexSet& s, int i) { return std::binary_search(s.begin(), s.end(), i); }

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Matrix slice(const Matrix& m, const IndexSet& rows, const IndexSet& cols) {
  Matrix out(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
  return out;
}

Vector slice(const Vector& v, const IndexSet& s) {
  Vector out(s.size());
  for (size_t k = 0; k < s.size(); ++k) out[k] = v[s[k]];
  return out;
}

std::vector<int> to_one_based(const IndexSet& s) {
  std::vector<int> out(s.size());
  for (size_t k = 0; k < s.size(); ++k) out[k] = s[k] + 1;
  return out;
}

IndexSet from_one_based(const std::vector<int>& s, int n) {
  std::vector<int> shifted(s.size());
  for (size_t k = 0; k < s.size(); ++k) shifted[k] = s[k] - 1;
  return make_index_set(std::move(shifted), n);
}

}  // namespace polity
