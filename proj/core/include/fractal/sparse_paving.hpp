#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fractal/bits.hpp"
#include "fractal/matroid.hpp"

namespace fractal {

/// An ordered family of circuit-hyperplanes (C_1, ..., C_k) of a rank-r sparse
/// paving matroid on {0..n-1}.
struct CHFamily {
  int n = 0;
  int r = 0;
  std::vector<Mask> chs;

  int k() const { return static_cast<int>(chs.size()); }
  friend bool operator==(const CHFamily&, const CHFamily&) = default;
};

/// Venn-cell sizes of an ordered k-tuple of sets. `cells[I]` is the number of
/// elements lying in exactly the sets indexed by the bits of I (bit i-1 for
/// index i).
struct VennSignature {
  int k = 0;
  std::vector<int> cells;

  int total() const;
  friend auto operator<=>(const VennSignature&, const VennSignature&) = default;
};

/// A non-negative assignment to variables indexed by subsets of {1..K}
/// (encoded as masks, listed in ascending mask order).
struct CompositionSolution {
  std::vector<Mask> index_sets;
  std::vector<int> values;

  int value_of(Mask index_set) const;
  friend bool operator==(const CompositionSolution&, const CompositionSolution&) = default;
};

struct CensusRow {
  int n = 0;
  int k = 0;
  int m = 0;
  std::uint64_t count = 0;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CHFamily validate_chfamily(const CHFamily& f);
Matroid ch_to_matroid(const CHFamily& f);

/// Circuit-hyperplanes of a sparse paving matroid, ascending; empty when r is
/// 0 or n. Throws PremiseViolated for matroids that are not sparse paving.
CHFamily chfamily_of(const Matroid& m);

/// Single-element minors on the family. A coloop (r = n-1, E-e a member) or a
/// loop (r = 1, {e} a member) is handled directly instead of being rejected.
CHFamily ch_delete(const CHFamily& f, int e);
CHFamily ch_contract(const CHFamily& f, int e);

VennSignature venn_signature(const CHFamily& f);
/// Least cell vector over all reorderings of the index set.
VennSignature canonical_form(const VennSignature& psi);
VennSignature canonical_signature(const CHFamily& f);
bool ch_isomorphic(const CHFamily& a, const CHFamily& b);

struct Realization {
  int n = 0;
  int r = 0;
  friend bool operator==(const Realization&, const Realization&) = default;
};

std::optional<Realization> signature_realizable(const VennSignature& psi);
/// Explicit family with the given signature, elements allocated to cells in
/// ascending cell order. Requires a realizable signature.
CHFamily realize_signature(const VennSignature& psi);

/// Visits every cell vector with `m` indices, total `n`, supported on the
/// cells for which `allowed(I)` holds.
void for_each_signature(int m, int n, const std::function<bool(Mask)>& allowed,
                        const std::function<void(const VennSignature&)>& visit);

/// Member counts per stratum m = 0..k (isomorphism classes of n-element
/// sparse paving matroids with exactly m circuit-hyperplanes).
std::vector<CensusRow> census_pk(int n, int k);
std::uint64_t census_total(const std::vector<CensusRow>& rows);

/// Variables of the collar equation for bound k: subsets I of {1..k+1} with
/// 2 <= |I| <= k, ascending by mask.
std::vector<Mask> collar_variables(int k);
int collar_weight(Mask index_set, int k);

/// Visits every non-negative solution of sum (k+2-|I|) x_I = n - 2(k+1) in
/// lexicographic order of the value vector.
void for_each_collar_solution(int n, int k, const std::function<void(const CompositionSolution&)>& visit);
std::vector<CompositionSolution> collar_solutions(int n, int k);
/// Number of collar solutions by coin-change counting (no enumeration).
long double count_collar_solutions(int n, int k);

CHFamily collar_construct(const CompositionSolution& phi, int n, int k);

/// P_k membership: sparse paving with at most k circuit-hyperplanes.
bool in_pk(const Matroid& m, int k);
MembershipPredicate pk_member(int k);

/// One representative family per isomorphism class of sparse paving excluded
/// minors for P_k on n elements, in canonical-signature order.
std::vector<CHFamily> sp_excluded_minors(int n, int k);

/// Excluded minors for the uniform class (P_0) on n <= 6 elements, found by
/// exhaustive kernel search over all matroids.
std::vector<Matroid> uniform_excluded_minors(int n);

/// Every labelled matroid on n <= 6 elements.
std::vector<Matroid> all_matroids(int n);

}  // namespace fractal
