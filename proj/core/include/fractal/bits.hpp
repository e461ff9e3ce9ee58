#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fractal {

/// Subsets of a ground set {0, ..., n-1} with n <= 24 live in 32-bit masks.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 24;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

inline bool contains(Mask m, int e) { return (m >> e) & 1U; }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Elements of a mask in ascending order.
inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= Mask{1} << e;
  return m;
}

/// Next mask with the same popcount (Gosper's hack). Caller bounds the range.
inline Mask next_same_popcount(Mask v) {
  Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

/// All r-subsets of {0..n-1}, ascending by mask value.
std::vector<Mask> all_subsets_of_size(int n, int r);

/// Removes the bits listed in `removed` and shifts the survivors down so the
/// remaining elements keep their relative order.
Mask compact(Mask m, Mask removed);

/// Inverse of `compact`: spreads the low bits of `m` over the positions not in `removed`.
Mask expand(Mask m, Mask removed, int n);

std::uint64_t binomial(int n, int k);

}  // namespace fractal
