#pragma once

// Reindexing tables for cell vectors over subsets of {1..k}.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "fractal/bits.hpp"

namespace fractal::detail {

inline constexpr int kMaxIndexCount = 7;

/// For every permutation p of {0..k-1} (lexicographic order), old_of_new[J]
/// is the cell of the original ordering that lands on cell J once index j of
/// the new ordering is taken to be old index p[j].
struct PermutationTable {
  int k = 0;
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<Mask>> old_of_new;
};

inline PermutationTable build_permutation_table(int k) {
  PermutationTable table;
  table.k = k;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<Mask> map(std::size_t{1} << k);
    for (Mask j = 0; j < (Mask{1} << k); ++j) {
      Mask old = 0;
      for (int b = 0; b < k; ++b) {
        if (contains(j, b)) old |= Mask{1} << p[b];
      }
      map[j] = old;
    }
    table.perms.push_back(p);
    table.old_of_new.push_back(std::move(map));
  } while (std::next_permutation(p.begin(), p.end()));
  return table;
}

inline const PermutationTable& permutation_table(int k) {
  static const std::array<PermutationTable, kMaxIndexCount + 1> tables = [] {
    std::array<PermutationTable, kMaxIndexCount + 1> t;
    for (int i = 0; i <= kMaxIndexCount; ++i) t[i] = build_permutation_table(i);
    return t;
  }();
  return tables.at(k);
}

/// Lexicographically least reindexing of `cells` (size 2^k).
inline std::vector<int> least_reindexing(const std::vector<int>& cells, int k) {
  const auto& table = permutation_table(k);
  std::vector<int> best = cells;
  std::vector<int> candidate(cells.size());
  for (const auto& map : table.old_of_new) {
    for (std::size_t j = 0; j < cells.size(); ++j) candidate[j] = cells[map[j]];
    if (candidate < best) best = candidate;
  }
  return best;
}

/// True iff no reindexing of `cells` is lexicographically smaller.
inline bool is_least_reindexing(const std::vector<int>& cells, int k) {
  const auto& table = permutation_table(k);
  for (const auto& map : table.old_of_new) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const int v = cells[map[j]];
      if (v < cells[j]) return false;
      if (v > cells[j]) break;
    }
  }
  return true;
}

}  // namespace fractal::detail
