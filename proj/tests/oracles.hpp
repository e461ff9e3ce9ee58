#pragma once

// Brute-force reference implementations used only by tests. Each works
// straight from the basis family and shares no code with the library beyond
// the Matroid value type and mask helpers.

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "fractal/bits.hpp"
#include "fractal/matroid.hpp"
#include "fractal/sparse_paving.hpp"

namespace oracle {

using fractal::Mask;
using fractal::Matroid;

inline int rank(const Matroid& m, Mask x) {
  int best = 0;
  for (Mask b : m.bases()) best = std::max(best, std::popcount(b & x));
  return best;
}

inline bool exchange_ok(const std::vector<Mask>& bases) {
  const std::set<Mask> lookup(bases.begin(), bases.end());
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (Mask rest = b1 & ~b2; rest != 0; rest &= rest - 1) {
        const Mask x = rest & -rest;
        bool found = false;
        for (Mask cand = b2 & ~b1; cand != 0 && !found; cand &= cand - 1) {
          const Mask y = cand & -cand;
          found = lookup.count((b1 & ~x) | y) > 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline std::vector<int> all_ranks(const Matroid& m) {
  std::vector<int> r(std::size_t{1} << m.size());
  for (Mask x = 0; x < r.size(); ++x) r[x] = oracle::rank(m, x);
  return r;
}

inline std::vector<Mask> circuits(const Matroid& m) {
  const auto r = oracle::all_ranks(m);
  std::vector<Mask> out;
  for (Mask x = 1; x < r.size(); ++x) {
    if (r[x] == std::popcount(x)) continue;
    bool minimal = true;
    for (Mask rest = x; rest != 0 && minimal; rest &= rest - 1) {
      const Mask y = x & ~(rest & -rest);
      minimal = r[y] == std::popcount(y);
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

inline bool is_flat(const std::vector<int>& r, int n, Mask f) {
  for (int e = 0; e < n; ++e) {
    if (!fractal::contains(f, e) && r[f | (Mask{1} << e)] == r[f]) return false;
  }
  return true;
}

inline std::vector<Mask> hyperplanes(const Matroid& m) {
  const auto r = oracle::all_ranks(m);
  std::vector<Mask> out;
  for (Mask x = 0; x < r.size(); ++x) {
    if (r[x] == m.rank() - 1 && oracle::is_flat(r, m.size(), x)) out.push_back(x);
  }
  return out;
}

inline std::vector<fractal::RankedFlat> cyclic_flats(const Matroid& m) {
  const auto r = oracle::all_ranks(m);
  std::vector<fractal::RankedFlat> out;
  for (Mask x = 0; x < r.size(); ++x) {
    if (!oracle::is_flat(r, m.size(), x)) continue;
    bool cyclic = true;
    for (Mask rest = x; rest != 0 && cyclic; rest &= rest - 1) {
      cyclic = r[x & ~(rest & -rest)] == r[x];
    }
    if (cyclic) out.push_back({x, r[x]});
  }
  return out;
}

inline std::vector<Mask> apply_perm(const std::vector<Mask>& sets, const std::vector<int>& perm) {
  std::vector<Mask> out;
  for (Mask s : sets) {
    Mask t = 0;
    for (int e : fractal::elements_of(s)) t |= Mask{1} << perm[e];
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Unpruned scan over all n! bijections.
inline bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (oracle::apply_perm(a.bases(), perm) == b.bases()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every non-spanning circuit is a hyperplane.
inline bool sparse_paving(const Matroid& m) {
  const auto r = oracle::all_ranks(m);
  for (Mask c : oracle::circuits(m)) {
    if (r[c] < m.rank() && !(r[c] == m.rank() - 1 && oracle::is_flat(r, m.size(), c))) return false;
  }
  return true;
}

/// Minor by the rank formula: X spans a basis of M/C\D iff
/// |X| = r(E-D) - r(C) and r(X u C) = |X| + r(C). Labels are then compacted.
inline Matroid minor(const Matroid& m, Mask del, Mask con) {
  const Mask rest = m.ground() & ~(del | con);
  const int rc = oracle::rank(m, con);
  const int target = oracle::rank(m, m.ground() & ~del) - rc;
  std::vector<Mask> out;
  for (Mask x = rest;; x = (x - 1) & rest) {
    if (std::popcount(x) == target && oracle::rank(m, x | con) == target + rc) {
      out.push_back(fractal::compact(x, del | con));
    }
    if (x == 0) break;
  }
  std::sort(out.begin(), out.end());
  return Matroid::from_trusted_bases(m.size() - std::popcount(del | con), out);
}

inline bool excluded_minor(const Matroid& m, const fractal::MembershipPredicate& member) {
  if (member(m)) return false;
  for (int e = 0; e < m.size(); ++e) {
    const Mask bit = Mask{1} << e;
    if (!member(oracle::minor(m, bit, 0)) || !member(oracle::minor(m, 0, bit))) return false;
  }
  return true;
}

/// Member of P_k by definition: sparse paving with at most k non-bases of size r.
inline bool in_pk(const Matroid& m, int k) {
  if (!oracle::sparse_paving(m)) return false;
  const auto total = fractal::binomial(m.size(), m.rank());
  return total - m.bases().size() <= static_cast<std::uint64_t>(k);
}

/// Labelled CH families of r-sets on n elements with exactly k members, as
/// sorted mask vectors. Uses only the pairwise difference rule.
inline std::vector<std::vector<Mask>> labelled_families(int n, int r, int k) {
  std::vector<Mask> rsets;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (std::popcount(x) == r) rsets.push_back(x);
  }
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> cur;
  const auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < rsets.size(); ++i) {
      bool ok = true;
      for (Mask c : cur) ok = ok && std::popcount(c & ~rsets[i]) >= 2;
      if (!ok) continue;
      cur.push_back(rsets[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline Matroid from_family(int n, int r, const std::vector<Mask>& chs) {
  std::vector<Mask> bases;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (std::popcount(x) == r && std::find(chs.begin(), chs.end(), x) == chs.end()) bases.push_back(x);
  }
  return Matroid::from_trusted_bases(n, bases);
}

}  // namespace oracle

namespace oracle {

/// Every labelled family of pairwise-far r-sets with at most `max_k` members
/// (the empty family included), visited in lexicographic order.
template <typename Visit>
void for_each_family(int n, int r, int max_k, Visit&& visit) {
  std::vector<Mask> rsets;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (std::popcount(x) == r) rsets.push_back(x);
  }
  std::vector<Mask> cur;
  const auto rec = [&](auto&& self, std::size_t from) -> void {
    visit(static_cast<const std::vector<Mask>&>(cur));
    if (static_cast<int>(cur.size()) == max_k) return;
    for (std::size_t i = from; i < rsets.size(); ++i) {
      bool ok = true;
      for (Mask c : cur) ok = ok && std::popcount(c & ~rsets[i]) >= 2;
      if (!ok) continue;
      cur.push_back(rsets[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

/// Isomorphism classes by kernel search, bucketed by cheap invariants.
class ClassSet {
 public:
  /// Returns true when `m` starts a new class.
  bool insert(const Matroid& m) {
    auto& bucket = buckets_[fractal::iso_invariant(m)];
    for (const auto& rep : bucket) {
      if (fractal::is_isomorphic(rep, m)) return false;
    }
    bucket.push_back(m);
    ++count_;
    return true;
  }
  std::size_t size() const { return count_; }
  std::vector<Matroid> representatives() const {
    std::vector<Matroid> out;
    for (const auto& [key, bucket] : buckets_) out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
  }

 private:
  struct Hash {
    std::size_t operator()(const fractal::IsoInvariant& inv) const { return fractal::hash_value(inv); }
  };
  std::unordered_map<fractal::IsoInvariant, std::vector<Matroid>, Hash> buckets_;
  std::size_t count_ = 0;
};

/// Isomorphism classes of n-element sparse paving matroids per number of
/// circuit-hyperplanes m = 0..k, by labelled enumeration and kernel dedupe.
inline std::vector<std::uint64_t> labelled_census(int n, int k) {
  std::vector<ClassSet> strata(k + 1);
  for (int r = 0; r <= n; ++r) {
    const int cap = (r == 0 || r == n) ? 0 : k;
    for_each_family(n, r, cap, [&](const std::vector<Mask>& chs) {
      strata[chs.size()].insert(from_family(n, r, chs));
    });
  }
  std::vector<std::uint64_t> out;
  for (const auto& s : strata) out.push_back(s.size());
  return out;
}

}  // namespace oracle
