#include "fractal/bits.hpp"

#include <numeric>

namespace fractal {

std::vector<Mask> all_subsets_of_size(int n, int r) {
  std::vector<Mask> out;
  if (r < 0 || r > n) return out;
  if (r == 0) return {0};
  const Mask limit = Mask{1} << n;
  for (Mask v = full_mask(r); v < limit; v = next_same_popcount(v)) {
    out.push_back(v);
    if (v == (full_mask(r) << (n - r))) break;
  }
  return out;
}

Mask compact(Mask m, Mask removed) {
  Mask out = 0;
  int pos = 0;
  for (int e = 0; e < 32 && (m >> e) != 0; ++e) {
    if (contains(removed, e)) continue;
    if (contains(m, e)) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

Mask expand(Mask m, Mask removed, int n) {
  Mask out = 0;
  int pos = 0;
  for (int e = 0; e < n; ++e) {
    if (contains(removed, e)) continue;
    if (contains(m, pos)) out |= Mask{1} << e;
    ++pos;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) / i, reduced first so the product stays in range
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    result = (result / g) * (num / (static_cast<std::uint64_t>(i) / g));
  }
  return result;
}

}  // namespace fractal
