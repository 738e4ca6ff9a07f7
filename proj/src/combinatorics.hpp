#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

namespace cmpoly::detail {

// C(n, k), or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact; divide out gcd(r, i) first so the
    // remaining divisor goes into the new factor.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(r / g, factor, &r)) return std::nullopt;
  }
  return r;
}

}  // namespace cmpoly::detail
