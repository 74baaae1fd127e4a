#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace mintrans {

/// C(n, k), saturating at SIZE_MAX.
[[nodiscard]] inline std::size_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    // result * num / i is exact at every step; guard the multiplication
    const std::size_t g = std::gcd(result, i);
    const std::size_t r = result / g;
    const std::size_t d = i / g;
    const std::size_t m = num / d;
    if (m != 0 && r > std::numeric_limits<std::size_t>::max() / m) return std::numeric_limits<std::size_t>::max();
    result = r * m;
  }
  return result;
}

/// Σ_{i<k} C(n, i), saturating.
[[nodiscard]] inline std::size_t sauer_bound(std::size_t n, std::size_t k) noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t c = binomial(n, i);
    if (total > std::numeric_limits<std::size_t>::max() - c) return std::numeric_limits<std::size_t>::max();
    total += c;
  }
  return total;
}

/**
 * Visits every k-subset of `pool` in lexicographic order of the index
 * tuples (so sorted pools give lexicographically sorted vertex lists).
 * The visitor returns false to stop early; the function returns false iff
 * it was stopped.
 */
template <typename T, typename Fn>
bool for_each_combination(std::span<const T> pool, std::size_t k, Fn&& visit) {
  const std::size_t n = pool.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<T> current(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) current[j] = pool[idx[j]];
    if (!visit(std::span<const T>(current))) return false;
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return true;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace mintrans
