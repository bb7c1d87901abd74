#pragma once

#include <numeric>
#include <span>
#include <vector>

namespace cyclab {

/// Calls fn(span of k chosen items) for every k-subset of `items` in
/// lexicographic order of positions. Stops early when fn returns false;
/// returns false in that case.
template <typename T, typename Fn>
bool for_each_combination(std::span<const T> items, std::size_t k, Fn&& fn) {
  const std::size_t n = items.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<T> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = items[idx[i]];
    if (!fn(std::span<const T>(chosen))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace cyclab
