#pragma once

// Reorderings of m sets acting on agreement patterns relative to the last set.
// A pattern is a mask over the first m-1 sets: bit i is set when set i agrees
// with the last one (both contain the element, or both miss it).

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "fractal/bits.hpp"

namespace fractal::detail {

inline constexpr int kMaxTrunSets = 7;

struct TrunTable {
  int m = 0;
  // old_of_new[p][J]: pattern that becomes J under reordering p
  std::vector<std::vector<Mask>> old_of_new;
};

inline TrunTable build_trun_table(int m) {
  TrunTable table;
  table.m = m;
  if (m < 1) return table;
  const Mask cells = Mask{1} << (m - 1);
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<Mask> map(cells);
    for (Mask old = 0; old < cells; ++old) {
      // agreement with the old last set, including the last set itself
      const Mask agree = old | (Mask{1} << (m - 1));
      const bool base = contains(agree, p[m - 1]);
      Mask fresh = 0;
      for (int j = 0; j + 1 < m; ++j) {
        if (contains(agree, p[j]) == base) fresh |= Mask{1} << j;
      }
      map[fresh] = old;
    }
    table.old_of_new.push_back(std::move(map));
  } while (std::next_permutation(p.begin(), p.end()));
  return table;
}

inline const TrunTable& trun_table(int m) {
  static const std::array<TrunTable, kMaxTrunSets + 1> tables = [] {
    std::array<TrunTable, kMaxTrunSets + 1> t;
    for (int i = 0; i <= kMaxTrunSets; ++i) t[i] = build_trun_table(i);
    return t;
  }();
  return tables.at(m);
}

inline std::vector<int> least_trun(const std::vector<int>& cells, int m) {
  std::vector<int> best = cells;
  std::vector<int> candidate(cells.size());
  for (const auto& map : trun_table(m).old_of_new) {
    for (std::size_t j = 0; j < cells.size(); ++j) candidate[j] = cells[map[j]];
    if (candidate < best) best = candidate;
  }
  return best;
}

inline bool is_least_trun(const std::vector<int>& cells, int m) {
  for (const auto& map : trun_table(m).old_of_new) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const int v = cells[map[j]];
      if (v < cells[j]) return false;
      if (v > cells[j]) break;
    }
  }
  return true;
}

}  // namespace fractal::detail
