#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polysel {

/// Ordered tuple of grid indices i_0 < i_1 < ... < i_{k-1}.
using TupleIndices = std::vector<int>;

namespace detail {

/// Advances `idx` to the next k-combination of {0..m-1} in lexicographic
/// order. Returns false when `idx` was the last combination.
inline bool next_combination(std::span<int> idx, int m) {
  const int k = static_cast<int>(idx.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    if (idx[pos] < m - (k - pos)) {
      ++idx[pos];
      for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

}  // namespace polysel
