#include "fractal/sparse_paving.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "fractal/error.hpp"
#include "fractal/parallel.hpp"
#include "index_permutations.hpp"

namespace fractal {

namespace {

void check_element(int e, int n) {
  if (e < 0 || e >= n) fail(ErrorCode::OutOfRange, "element " + std::to_string(e) + " outside ground set");
}

bool pairwise_far(const std::vector<int>& cells, int k) {
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      int one_sided = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (contains(static_cast<Mask>(c), i) && !contains(static_cast<Mask>(c), j)) one_sided += cells[c];
      }
      if (one_sided < 2) return false;
    }
  }
  return true;
}

// Cell vectors with m indices, total n, every index sum equal to r, support
// restricted to `cells` (ascending masks).
void for_each_equicardinal(int m, int n, int r, const std::vector<Mask>& cells,
                           const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t count = cells.size();
  // covered_after[p]: indices reachable by cells at positions >= p.
  std::vector<Mask> covered_after(count + 1, 0);
  std::vector<int> widest_after(count + 1, 0);
  for (std::size_t p = count; p-- > 0;) {
    covered_after[p] = covered_after[p + 1] | cells[p];
    widest_after[p] = std::max(widest_after[p + 1], popcount(cells[p]));
  }
  std::vector<int> vec(std::size_t{1} << m, 0);
  std::vector<int> sums(m, 0);
  const std::function<void(std::size_t, int)> step = [&](std::size_t pos, int remaining) {
    int deficit_total = 0;
    for (int i = 0; i < m; ++i) {
      const int deficit = r - sums[i];
      if (deficit < 0) return;
      if (deficit > 0 && !contains(covered_after[pos], i)) return;
      if (deficit > remaining) return;
      deficit_total += deficit;
    }
    if (deficit_total > remaining * widest_after[pos]) return;
    if (pos == count) {
      if (remaining == 0) visit(vec);
      return;
    }
    const Mask cell = cells[pos];
    const auto idx = elements_of(cell);
    int added = 0;
    for (int v = 0; v <= remaining; ++v) {
      vec[cell] = v;
      step(pos + 1, remaining - v);
      if (v == remaining) break;
      bool over = false;
      for (int i : idx) over |= sums[i] + 1 > r;
      if (over) break;
      for (int i : idx) ++sums[i];
      ++added;
    }
    for (int i : idx) sums[i] -= added;
    vec[cell] = 0;
  };
  step(0, n);
}

}  // namespace

int VennSignature::total() const { return std::accumulate(cells.begin(), cells.end(), 0); }

int CompositionSolution::value_of(Mask index_set) const {
  const auto it = std::lower_bound(index_sets.begin(), index_sets.end(), index_set);
  if (it == index_sets.end() || *it != index_set) return 0;
  return values[static_cast<std::size_t>(it - index_sets.begin())];
}

CHFamily validate_chfamily(const CHFamily& f) {
  if (f.n < 0 || f.n > kMaxGroundSize) fail(ErrorCode::SizeOverflow, "ground size outside [0, 24]");
  if (f.r < 0 || f.r > f.n || (f.k() >= 1 && (f.r < 1 || f.r > f.n - 1))) {
    fail(ErrorCode::RankOutOfRange, "rank " + std::to_string(f.r) + " not allowed for a family of " +
                                        std::to_string(f.k()) + " circuit-hyperplanes on " + std::to_string(f.n) +
                                        " elements");
  }
  for (int i = 0; i < f.k(); ++i) {
    const Mask c = f.chs[i];
    if (popcount(c) != f.r || (c & ~full_mask(f.n)) != 0) {
      fail(ErrorCode::WrongCardinality,
           "C" + std::to_string(i + 1) + " is not an r-subset of the ground set (r=" + std::to_string(f.r) + ")");
    }
  }
  for (int i = 0; i < f.k(); ++i) {
    for (int j = i + 1; j < f.k(); ++j) {
      if (popcount(f.chs[i] & ~f.chs[j]) <= 1) {
        fail(ErrorCode::DifferenceOne,
             "|C" + std::to_string(i + 1) + " - C" + std::to_string(j + 1) + "| <= 1 (DifferenceOne(" +
                 std::to_string(i + 1) + "," + std::to_string(j + 1) + "))");
      }
    }
  }
  return f;
}

Matroid ch_to_matroid(const CHFamily& f) {
  validate_chfamily(f);
  if (static_cast<std::uint64_t>(f.k()) >= binomial(f.n, f.r)) {
    fail(ErrorCode::NoBasesLeft, "the family uses every r-subset");
  }
  std::vector<Mask> chs = f.chs;
  std::sort(chs.begin(), chs.end());
  std::vector<Mask> bases;
  for (Mask x : all_subsets_of_size(f.n, f.r)) {
    if (!std::binary_search(chs.begin(), chs.end(), x)) bases.push_back(x);
  }
  return Matroid::from_trusted_bases(f.n, std::move(bases));
}

CHFamily chfamily_of(const Matroid& m) {
  if (!is_sparse_paving(m)) fail(ErrorCode::PremiseViolated, "matroid is not sparse paving");
  CHFamily f{m.size(), m.rank(), {}};
  if (m.rank() == 0 || m.rank() == m.size()) return f;
  for (Mask x : all_subsets_of_size(m.size(), m.rank())) {
    if (!m.is_basis(x)) f.chs.push_back(x);
  }
  return f;
}

CHFamily ch_delete(const CHFamily& f, int e) {
  validate_chfamily(f);
  check_element(e, f.n);
  const Mask bit = Mask{1} << e;
  const bool coloop = f.r == f.n - 1 && std::find(f.chs.begin(), f.chs.end(), full_mask(f.n) & ~bit) != f.chs.end();
  if (coloop) {
    // e is a coloop, so M\e = M/e is uniform of rank r-1.
    return CHFamily{f.n - 1, f.r - 1, {}};
  }
  CHFamily out{f.n - 1, f.r, {}};
  for (Mask c : f.chs) {
    if (!contains(c, e)) out.chs.push_back(compact(c, bit));
  }
  return out;
}

CHFamily ch_contract(const CHFamily& f, int e) {
  validate_chfamily(f);
  check_element(e, f.n);
  const Mask bit = Mask{1} << e;
  const bool loop = f.r == 1 && std::find(f.chs.begin(), f.chs.end(), bit) != f.chs.end();
  if (loop) {
    CHFamily out{f.n - 1, f.r, {}};
    for (Mask c : f.chs) {
      if (!contains(c, e)) out.chs.push_back(compact(c, bit));
    }
    return out;
  }
  CHFamily out{f.n - 1, f.r - 1, {}};
  for (Mask c : f.chs) {
    if (contains(c, e)) out.chs.push_back(compact(c & ~bit, bit));
  }
  return out;
}

VennSignature venn_signature(const CHFamily& f) {
  VennSignature psi{f.k(), std::vector<int>(std::size_t{1} << f.k(), 0)};
  for (int e = 0; e < f.n; ++e) {
    Mask cell = 0;
    for (int i = 0; i < f.k(); ++i) {
      if (contains(f.chs[i], e)) cell |= Mask{1} << i;
    }
    ++psi.cells[cell];
  }
  return psi;
}

VennSignature canonical_form(const VennSignature& psi) {
  if (psi.k > detail::kMaxIndexCount) fail(ErrorCode::BoundTooLarge, "signature has too many indices");
  return VennSignature{psi.k, detail::least_reindexing(psi.cells, psi.k)};
}

VennSignature canonical_signature(const CHFamily& f) { return canonical_form(venn_signature(f)); }

bool ch_isomorphic(const CHFamily& a, const CHFamily& b) {
  if (a.n != b.n) fail(ErrorCode::GroundSizeMismatch, "families live on ground sets of different size");
  if (a.k() != b.k()) return false;
  if (a.k() == 0) return a.r == b.r;
  return canonical_signature(a) == canonical_signature(b);
}

std::optional<Realization> signature_realizable(const VennSignature& psi) {
  if (psi.k < 1 || psi.cells.size() != (std::size_t{1} << psi.k)) return std::nullopt;
  const int n = psi.total();
  int r = -1;
  for (int i = 0; i < psi.k; ++i) {
    int sum = 0;
    for (std::size_t c = 0; c < psi.cells.size(); ++c) {
      if (psi.cells[c] < 0) return std::nullopt;
      if (contains(static_cast<Mask>(c), i)) sum += psi.cells[c];
    }
    if (r < 0) r = sum;
    if (sum != r) return std::nullopt;
  }
  if (r < 1 || r > n - 1) return std::nullopt;
  if (!pairwise_far(psi.cells, psi.k)) return std::nullopt;
  return Realization{n, r};
}

CHFamily realize_signature(const VennSignature& psi) {
  const auto real = signature_realizable(psi);
  if (!real) fail(ErrorCode::PremiseViolated, "signature is not realizable");
  CHFamily f{real->n, real->r, std::vector<Mask>(psi.k, 0)};
  int next = 0;
  for (std::size_t c = 0; c < psi.cells.size(); ++c) {
    for (int v = 0; v < psi.cells[c]; ++v, ++next) {
      for (int i = 0; i < psi.k; ++i) {
        if (contains(static_cast<Mask>(c), i)) f.chs[i] |= Mask{1} << next;
      }
    }
  }
  return f;
}

void for_each_signature(int m, int n, const std::function<bool(Mask)>& allowed,
                        const std::function<void(const VennSignature&)>& visit) {
  std::vector<Mask> cells;
  for (Mask c = 0; c < (Mask{1} << m); ++c) {
    if (allowed(c)) cells.push_back(c);
  }
  VennSignature psi{m, std::vector<int>(std::size_t{1} << m, 0)};
  const std::function<void(std::size_t, int)> step = [&](std::size_t pos, int remaining) {
    if (pos + 1 == cells.size()) {
      psi.cells[cells[pos]] = remaining;
      visit(psi);
      psi.cells[cells[pos]] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      psi.cells[cells[pos]] = v;
      step(pos + 1, remaining - v);
    }
    psi.cells[cells[pos]] = 0;
  };
  if (cells.empty()) {
    if (n == 0) visit(psi);
    return;
  }
  step(0, n);
}

std::vector<CensusRow> census_pk(int n, int k) {
  if (k < 0 || k > 6) fail(ErrorCode::BoundTooLarge, "census_pk supports k <= 6");
  if (n < 0) fail(ErrorCode::OutOfRange, "negative ground size");
  std::vector<CensusRow> rows;
  rows.push_back({n, k, 0, static_cast<std::uint64_t>(n + 1)});
  for (int m = 1; m <= k; ++m) {
    std::vector<Mask> cells(std::size_t{1} << m);
    std::iota(cells.begin(), cells.end(), Mask{0});
    const int ranks = std::max(0, n - 1);
    std::vector<std::uint64_t> per_rank(ranks, 0);
    parallel_for(per_rank.size(), [&](std::size_t slot) {
      const int r = static_cast<int>(slot) + 1;
      std::uint64_t count = 0;
      for_each_equicardinal(m, n, r, cells, [&](const std::vector<int>& vec) {
        if (pairwise_far(vec, m) && detail::is_least_reindexing(vec, m)) ++count;
      });
      per_rank[slot] = count;
    });
    rows.push_back({n, k, m, std::accumulate(per_rank.begin(), per_rank.end(), std::uint64_t{0})});
  }
  return rows;
}

std::uint64_t census_total(const std::vector<CensusRow>& rows) {
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.count;
  return total;
}

std::vector<Mask> collar_variables(int k) {
  std::vector<Mask> vars;
  for (Mask s = 0; s < (Mask{1} << (k + 1)); ++s) {
    if (popcount(s) >= 2 && popcount(s) <= k) vars.push_back(s);
  }
  return vars;
}

int collar_weight(Mask index_set, int k) { return k + 2 - popcount(index_set); }

void for_each_collar_solution(int n, int k, const std::function<void(const CompositionSolution&)>& visit) {
  if (k < 1 || k > 5) fail(ErrorCode::BoundTooLarge, "collar equation supports 1 <= k <= 5");
  if (n < 2 * (k + 1)) fail(ErrorCode::TooSmall, "need n >= 2(k+1)");
  CompositionSolution sol{collar_variables(k), {}};
  sol.values.assign(sol.index_sets.size(), 0);
  std::vector<int> weights;
  for (Mask s : sol.index_sets) weights.push_back(collar_weight(s, k));
  const std::function<void(std::size_t, int)> step = [&](std::size_t pos, int remaining) {
    if (pos == weights.size()) {
      if (remaining == 0) visit(sol);
      return;
    }
    for (int v = 0; v * weights[pos] <= remaining; ++v) {
      sol.values[pos] = v;
      step(pos + 1, remaining - v * weights[pos]);
    }
    sol.values[pos] = 0;
  };
  step(0, n - 2 * (k + 1));
}

std::vector<CompositionSolution> collar_solutions(int n, int k) {
  std::vector<CompositionSolution> out;
  for_each_collar_solution(n, k, [&](const CompositionSolution& s) { out.push_back(s); });
  return out;
}

long double count_collar_solutions(int n, int k) {
  if (n < 2 * (k + 1)) fail(ErrorCode::TooSmall, "need n >= 2(k+1)");
  const int target = n - 2 * (k + 1);
  std::vector<long double> ways(target + 1, 0.0L);
  ways[0] = 1.0L;
  for (Mask s : collar_variables(k)) {
    const int w = collar_weight(s, k);
    for (int v = w; v <= target; ++v) ways[v] += ways[v - w];
  }
  return ways[target];
}

CHFamily collar_construct(const CompositionSolution& phi, int n, int k) {
  const auto vars = collar_variables(k);
  if (phi.index_sets != vars || phi.values.size() != vars.size()) {
    fail(ErrorCode::NotASolution, "assignment does not range over the collar variables");
  }
  int weighted = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (phi.values[i] < 0) fail(ErrorCode::NotASolution, "negative value");
    weighted += collar_weight(vars[i], k) * phi.values[i];
  }
  if (weighted != n - 2 * (k + 1)) fail(ErrorCode::NotASolution, "weighted sum differs from n - 2(k+1)");
  if (n > kMaxGroundSize) fail(ErrorCode::SizeOverflow, "ground size exceeds 24");

  const int sets = k + 1;
  CHFamily f{n, 0, std::vector<Mask>(sets, 0)};
  int next = 0;
  const auto allocate = [&](Mask cell, int count) {
    for (int v = 0; v < count; ++v, ++next) {
      for (int i = 0; i < sets; ++i) {
        if (contains(cell, i)) f.chs[i] |= Mask{1} << next;
      }
    }
  };
  for (int i = 0; i < sets; ++i) allocate(Mask{1} << i, 2);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    allocate(vars[v], phi.values[v]);
    for (int i = 0; i < sets; ++i) {
      if (!contains(vars[v], i)) allocate(Mask{1} << i, phi.values[v]);
    }
  }
  f.r = popcount(f.chs.front());
  return validate_chfamily(f);
}

bool in_pk(const Matroid& m, int k) {
  if (!is_sparse_paving(m)) return false;
  if (m.rank() == 0 || m.rank() == m.size()) return true;
  const std::uint64_t chs = binomial(m.size(), m.rank()) - m.bases().size();
  return chs <= static_cast<std::uint64_t>(k);
}

MembershipPredicate pk_member(int k) {
  return [k](const Matroid& m) { return in_pk(m, k); };
}

std::vector<CHFamily> sp_excluded_minors(int n, int k) {
  if (k < 1 || k > 5) fail(ErrorCode::BoundTooLarge, "sp_excluded_minors supports 1 <= k <= 5");
  if (n < 0 || n > 16) fail(ErrorCode::BoundTooLarge, "sp_excluded_minors supports n <= 16");

  struct Stratum {
    int m;
    int r;
  };
  std::vector<Stratum> strata;
  for (int m = k + 1; m <= 2 * k; ++m) {
    for (int r = 2; r <= n - 2; ++r) strata.push_back({m, r});
  }
  // Degree band: deletion leaves the circuit-hyperplanes avoiding e, so each
  // element lies in >= m-k of them; contraction keeps those through e, so <= k.
  std::vector<std::vector<CHFamily>> found(strata.size());
  parallel_for(strata.size(), [&](std::size_t slot) {
    const auto [m, r] = strata[slot];
    std::vector<Mask> cells;
    for (Mask c = 0; c < (Mask{1} << m); ++c) {
      if (popcount(c) >= m - k && popcount(c) <= k) cells.push_back(c);
    }
    std::vector<std::vector<int>> canon;
    for_each_equicardinal(m, n, r, cells, [&](const std::vector<int>& vec) {
      if (pairwise_far(vec, m) && detail::is_least_reindexing(vec, m)) canon.push_back(vec);
    });
    std::sort(canon.begin(), canon.end());
    const auto member = pk_member(k);
    for (const auto& vec : canon) {
      CHFamily f = realize_signature(VennSignature{m, vec});
      if (is_excluded_minor(ch_to_matroid(f), member)) found[slot].push_back(std::move(f));
    }
  });
  std::vector<CHFamily> out;
  for (auto& group : found) {
    for (auto& f : group) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Matroid> all_matroids(int n) {
  if (n < 0 || n > 6) fail(ErrorCode::BoundTooLarge, "all_matroids supports n <= 6");
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    const auto subsets = all_subsets_of_size(n, r);
    const std::size_t s = subsets.size();
    std::vector<int> index_of(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < s; ++i) index_of[subsets[i]] = static_cast<int>(i);
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << s); ++family) {
      const auto in_family = [&](Mask x) { return (family >> index_of[x]) & 1U; };
      bool ok = true;
      for (std::size_t i = 0; i < s && ok; ++i) {
        if (!((family >> i) & 1U)) continue;
        const Mask b1 = subsets[i];
        for (std::size_t j = 0; j < s && ok; ++j) {
          if (i == j || !((family >> j) & 1U)) continue;
          const Mask b2 = subsets[j];
          for (int x : elements_of(b1 & ~b2)) {
            bool exchanged = false;
            for (int y : elements_of(b2 & ~b1)) {
              if (in_family((b1 & ~(Mask{1} << x)) | (Mask{1} << y))) {
                exchanged = true;
                break;
              }
            }
            if (!exchanged) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok) continue;
      std::vector<Mask> bases;
      for (std::size_t i = 0; i < s; ++i) {
        if ((family >> i) & 1U) bases.push_back(subsets[i]);
      }
      out.push_back(Matroid::from_trusted_bases(n, std::move(bases)));
    }
  }
  return out;
}

std::vector<Matroid> uniform_excluded_minors(int n) {
  const auto is_uniform = [](const Matroid& m) { return m.bases().size() == binomial(m.size(), m.rank()); };
  std::vector<Matroid> classes;
  for (const Matroid& m : all_matroids(n)) {
    if (!is_excluded_minor(m, is_uniform)) continue;
    const bool seen = std::any_of(classes.begin(), classes.end(),
                                  [&](const Matroid& rep) { return is_isomorphic(rep, m); });
    if (!seen) classes.push_back(m);
  }
  return classes;
}

}  // namespace fractal
