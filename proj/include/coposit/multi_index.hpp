#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coposit {

/// Index tuple of a symmetric tensor entry, 1-based coordinate labels.
/// Canonical form is non-decreasing.
using MultiIndex = std::vector<int>;

inline void check_index_labels(const MultiIndex& idx, int dim) {
  for (int label : idx) {
    if (label < 1 || label > dim)
      throw std::out_of_range("index label " + std::to_string(label) + " outside 1.." +
                              std::to_string(dim));
  }
}

inline bool is_canonical(const MultiIndex& idx) { return std::is_sorted(idx.begin(), idx.end()); }

inline MultiIndex canonicalized(MultiIndex idx, int dim) {
  check_index_labels(idx, dim);
  std::sort(idx.begin(), idx.end());
  return idx;
}

namespace detail {
constexpr std::array<std::uint64_t, 21> kFactorial = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();
}  // namespace detail

/// Number of distinct permutations of a canonical index tuple,
/// m! / prod(count of each repeated label)!.
inline std::uint64_t multiplicity(const MultiIndex& idx) {
  if (!is_canonical(idx))
    throw std::invalid_argument("multiplicity requires a canonical (sorted) index tuple");
  const std::size_t m = idx.size();
  if (m >= detail::kFactorial.size())
    throw std::invalid_argument("tensor order too large for 64-bit multiplicity");
  std::uint64_t denom = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    if (i < m && idx[i] == idx[i - 1]) {
      ++run;
    } else {
      denom *= detail::kFactorial[run];
      run = 1;
    }
  }
  return detail::kFactorial[m] / denom;
}

/// Concatenated-digit key for the file format, e.g. (1,1,2,3) -> "1123".
/// Only labels 1..9 are representable.
inline std::string index_key(const MultiIndex& idx) {
  std::string key;
  key.reserve(idx.size());
  for (int label : idx) {
    if (label < 1 || label > 9)
      throw std::out_of_range("index label " + std::to_string(label) +
                              " not representable as a single digit");
    key.push_back(static_cast<char>('0' + label));
  }
  return key;
}

/// All canonical index tuples of the given order/dimension, ascending lex order.
inline std::vector<MultiIndex> canonical_indices(int order, int dim) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(order), 1);
  while (true) {
    out.push_back(cur);
    int pos = order - 1;
    while (pos >= 0 && cur[pos] == dim) --pos;
    if (pos < 0) break;
    const int next = cur[pos] + 1;
    for (int i = pos; i < order; ++i) cur[i] = next;
  }
  return out;
}

}  // namespace coposit
