#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "fractal/bits.hpp"

namespace fractal {

/// A family of subsets of {0..n-1}, members sorted ascending and deduplicated.
struct SetFamily {
  int n = 0;
  std::vector<Mask> members;

  std::size_t size() const { return members.size(); }
  bool has(Mask m) const;
  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

/// Normalizes (sorts, dedupes) and range-checks a list of masks.
SetFamily make_set_family(int n, std::vector<Mask> members);

struct RankedFlat {
  Mask flat = 0;
  int rank = 0;
  friend auto operator<=>(const RankedFlat&, const RankedFlat&) = default;
};

/// A matroid on {0..n-1} given by its bases. Values are immutable; the only
/// ways to obtain one are the validating `make_matroid` and the constructions
/// in this header, which preserve the basis axioms by construction.
class Matroid {
 public:
  int size() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Mask>& bases() const { return bases_; }
  Mask ground() const { return full_mask(n_); }

  bool is_basis(Mask b) const;

  /// Skips the exchange-axiom check. For constructions whose output is a
  /// matroid by theorem (minors, duals, sums, sparse paving families).
  static Matroid from_trusted_bases(int n, std::vector<Mask> bases);

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int r, std::vector<Mask> bases) : n_(n), r_(r), bases_(std::move(bases)) {}

  int n_ = 0;
  int r_ = 0;
  std::vector<Mask> bases_;
};

/// Rank of every subset of the ground set, computed once. Backs the
/// structural queries below; memory is 2^n bytes.
class RankTable {
 public:
  explicit RankTable(const Matroid& m);

  int size() const { return n_; }
  int rank() const { return r_; }
  int operator()(Mask x) const { return rank_[x]; }
  bool independent(Mask x) const { return rank_[x] == popcount(x); }
  Mask closure(Mask x) const;
  bool is_flat(Mask x) const { return closure(x) == x; }

 private:
  int n_;
  int r_;
  std::vector<std::uint8_t> rank_;
};

Matroid make_matroid(int n, const SetFamily& bases);
Matroid uniform(int r, int n);
Matroid direct_sum(const Matroid& m, const Matroid& n);

int rank_of(const Matroid& m, Mask x);

SetFamily circuits(const Matroid& m);
SetFamily circuits(const RankTable& rt);
SetFamily hyperplanes(const Matroid& m);
SetFamily cocircuits(const Matroid& m);
std::vector<RankedFlat> cyclic_flats(const Matroid& m);

/// Circuits of rank < r that are also hyperplanes.
SetFamily circuit_hyperplanes(const Matroid& m);

Matroid minor(const Matroid& m, Mask delete_set, Mask contract_set);
Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
Matroid dual(const Matroid& m);

/// Connected components, each as a mask; blocks ordered by smallest element.
std::vector<Mask> components(const Matroid& m);

/// Cheap isomorphism invariants used to reject before searching.
struct IsoInvariant {
  int n = 0;
  int r = 0;
  std::size_t basis_count = 0;
  std::vector<std::uint32_t> degree_multiset;  // sorted basis degrees
  std::size_t non_spanning_circuits = 0;
  friend bool operator==(const IsoInvariant&, const IsoInvariant&) = default;
};

IsoInvariant iso_invariant(const Matroid& m);
std::size_t hash_value(const IsoInvariant& inv);

/// Returns a bijection p (p[e] = image of e) mapping bases of `a` onto bases
/// of `b`, or an empty vector when none exists.
std::vector<int> find_isomorphism(const Matroid& a, const Matroid& b);
bool is_isomorphic(const Matroid& a, const Matroid& b);

bool is_sparse_paving(const Matroid& m);

using MembershipPredicate = std::function<bool(const Matroid&)>;

/// True iff `member` rejects `m` but accepts every single-element deletion and
/// contraction. The predicate's class is assumed minor-closed.
bool is_excluded_minor(const Matroid& m, const MembershipPredicate& member);

/// Applies a ground-set permutation (perm[e] is the new label of e).
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

}  // namespace fractal
