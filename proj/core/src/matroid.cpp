#include "fractal/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "fractal/error.hpp"

namespace fractal {

namespace {

std::string mask_str(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

void sort_unique(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_ground(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    fail(ErrorCode::SizeOverflow, "ground size " + std::to_string(n) + " outside [0, 24]");
  }
}

void check_within(Mask x, int n) {
  if ((x & ~full_mask(n)) != 0) {
    fail(ErrorCode::OutOfRange, "set " + mask_str(x) + " leaves ground set of size " + std::to_string(n));
  }
}

}  // namespace

bool SetFamily::has(Mask m) const { return std::binary_search(members.begin(), members.end(), m); }

SetFamily make_set_family(int n, std::vector<Mask> members) {
  check_ground(n);
  for (Mask m : members) check_within(m, n);
  sort_unique(members);
  return SetFamily{n, std::move(members)};
}

bool Matroid::is_basis(Mask b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }

Matroid Matroid::from_trusted_bases(int n, std::vector<Mask> bases) {
  sort_unique(bases);
  const int r = bases.empty() ? 0 : popcount(bases.front());
  return Matroid(n, r, std::move(bases));
}

Matroid make_matroid(int n, const SetFamily& family) {
  check_ground(n);
  std::vector<Mask> bases = family.members;
  for (Mask b : bases) check_within(b, n);
  sort_unique(bases);
  if (bases.empty()) fail(ErrorCode::EmptyBases, "basis family is empty");
  const int r = popcount(bases.front());
  for (Mask b : bases) {
    if (popcount(b) != r) {
      fail(ErrorCode::NonEquicardinal,
           "basis " + mask_str(b) + " has size " + std::to_string(popcount(b)) + ", expected " + std::to_string(r));
    }
  }

  const auto is_basis = [&](Mask m) { return std::binary_search(bases.begin(), bases.end(), m); };
  // swaps[i*n + x]: elements y such that B_i - x + y is a basis.
  std::vector<Mask> swaps(bases.size() * static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Mask b = bases[i];
    for (int x : elements_of(b)) {
      Mask ys = 0;
      for (int y : elements_of(full_mask(n) & ~b)) {
        if (is_basis((b & ~(Mask{1} << x)) | (Mask{1} << y))) ys |= Mask{1} << y;
      }
      swaps[i * n + x] = ys;
    }
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Mask b1 = bases[i];
    for (Mask b2 : bases) {
      if (b1 == b2) continue;
      const Mask only2 = b2 & ~b1;
      for (int x : elements_of(b1 & ~b2)) {
        if ((swaps[i * n + x] & only2) == 0) {
          fail(ErrorCode::ExchangeViolation, "exchange fails for B1=" + mask_str(b1) + " B2=" + mask_str(b2) +
                                                 " x=" + std::to_string(x));
        }
      }
    }
  }
  return Matroid::from_trusted_bases(n, std::move(bases));
}

Matroid uniform(int r, int n) {
  check_ground(n);
  if (r < 0 || r > n) fail(ErrorCode::RankOutOfRange, "rank " + std::to_string(r) + " outside [0, n]");
  return Matroid::from_trusted_bases(n, all_subsets_of_size(n, r));
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  const int total = m.size() + n.size();
  if (total > kMaxGroundSize) fail(ErrorCode::SizeOverflow, "direct sum exceeds 24 elements");
  std::vector<Mask> bases;
  bases.reserve(m.bases().size() * n.bases().size());
  for (Mask a : m.bases()) {
    for (Mask b : n.bases()) bases.push_back(a | (b << m.size()));
  }
  return Matroid::from_trusted_bases(total, std::move(bases));
}

int rank_of(const Matroid& m, Mask x) {
  check_within(x, m.size());
  int best = 0;
  for (Mask b : m.bases()) {
    best = std::max(best, popcount(b & x));
    if (best == m.rank()) break;
  }
  return best;
}

RankTable::RankTable(const Matroid& m) : n_(m.size()), r_(m.rank()) {
  const std::size_t total = std::size_t{1} << n_;
  std::vector<std::uint8_t> indep(total, 0);
  for (Mask b : m.bases()) indep[b] = 1;
  for (std::size_t x = total; x-- > 0;) {
    if (!indep[x]) continue;
    for (Mask rest = static_cast<Mask>(x); rest != 0; rest &= rest - 1) {
      indep[x & ~(rest & -rest)] = 1;
    }
  }
  rank_.assign(total, 0);
  for (std::size_t x = 1; x < total; ++x) {
    const Mask xm = static_cast<Mask>(x);
    if (indep[x]) {
      rank_[x] = static_cast<std::uint8_t>(popcount(xm));
      continue;
    }
    std::uint8_t best = 0;
    for (Mask rest = xm; rest != 0; rest &= rest - 1) {
      best = std::max(best, rank_[xm & ~(rest & -rest)]);
    }
    rank_[x] = best;
  }
}

Mask RankTable::closure(Mask x) const {
  const int base = rank_[x];
  Mask cl = x;
  for (int e = 0; e < n_; ++e) {
    if (!contains(x, e) && rank_[x | (Mask{1} << e)] == base) cl |= Mask{1} << e;
  }
  return cl;
}

SetFamily circuits(const RankTable& rt) {
  std::vector<Mask> out;
  const std::size_t total = std::size_t{1} << rt.size();
  for (std::size_t x = 1; x < total; ++x) {
    const Mask xm = static_cast<Mask>(x);
    const int size = popcount(xm);
    if (rt(xm) != size - 1) continue;
    bool minimal = true;
    for (Mask rest = xm; rest != 0; rest &= rest - 1) {
      if (!rt.independent(xm & ~(rest & -rest))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(xm);
  }
  return SetFamily{rt.size(), std::move(out)};
}

SetFamily circuits(const Matroid& m) { return circuits(RankTable(m)); }

SetFamily hyperplanes(const Matroid& m) {
  if (m.rank() == 0) fail(ErrorCode::RankZero, "a rank-0 matroid has no hyperplanes");
  const RankTable rt(m);
  std::vector<Mask> out;
  const std::size_t total = std::size_t{1} << m.size();
  for (std::size_t x = 0; x < total; ++x) {
    const Mask xm = static_cast<Mask>(x);
    if (rt(xm) == m.rank() - 1 && rt.is_flat(xm)) out.push_back(xm);
  }
  return SetFamily{m.size(), std::move(out)};
}

SetFamily cocircuits(const Matroid& m) {
  if (m.rank() == 0) return SetFamily{m.size(), {}};
  const SetFamily hs = hyperplanes(m);
  std::vector<Mask> out;
  out.reserve(hs.size());
  for (Mask h : hs.members) out.push_back(m.ground() & ~h);
  sort_unique(out);
  return SetFamily{m.size(), std::move(out)};
}

std::vector<RankedFlat> cyclic_flats(const Matroid& m) {
  const RankTable rt(m);
  const SetFamily cs = circuits(rt);
  // Every cyclic flat is the closure of a union of circuits, so joining
  // circuit closures onto cl(empty) reaches all of them.
  std::vector<Mask> found{rt.closure(0)};
  std::unordered_set<Mask> seen{found.front()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Mask f = found[i];
    for (Mask c : cs.members) {
      if (is_subset(c, f)) continue;
      const Mask g = rt.closure(f | c);
      if (seen.insert(g).second) found.push_back(g);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<RankedFlat> out;
  out.reserve(found.size());
  for (Mask f : found) out.push_back({f, rt(f)});
  return out;
}

SetFamily circuit_hyperplanes(const Matroid& m) {
  if (m.rank() == 0) return SetFamily{m.size(), {}};
  const RankTable rt(m);
  const SetFamily cs = circuits(rt);
  std::vector<Mask> out;
  for (Mask c : cs.members) {
    if (popcount(c) == m.rank() && rt.is_flat(c)) out.push_back(c);
  }
  return SetFamily{m.size(), std::move(out)};
}

Matroid minor(const Matroid& m, Mask delete_set, Mask contract_set) {
  check_within(delete_set | contract_set, m.size());
  if ((delete_set & contract_set) != 0) {
    fail(ErrorCode::OverlappingSets, "delete and contract sets share " + mask_str(delete_set & contract_set));
  }
  // Deletion keeps the bases meeting D least; contraction then keeps the
  // survivors meeting C most.
  int least = m.size() + 1;
  for (Mask b : m.bases()) least = std::min(least, popcount(b & delete_set));
  std::vector<Mask> kept;
  for (Mask b : m.bases()) {
    if (popcount(b & delete_set) == least) kept.push_back(b & ~delete_set);
  }
  int most = -1;
  for (Mask b : kept) most = std::max(most, popcount(b & contract_set));
  const Mask removed = delete_set | contract_set;
  std::vector<Mask> out;
  for (Mask b : kept) {
    if (popcount(b & contract_set) == most) out.push_back(compact(b & ~contract_set, removed));
  }
  return Matroid::from_trusted_bases(m.size() - popcount(removed), std::move(out));
}

Matroid delete_element(const Matroid& m, int e) { return minor(m, Mask{1} << e, 0); }

Matroid contract_element(const Matroid& m, int e) { return minor(m, 0, Mask{1} << e); }

Matroid dual(const Matroid& m) {
  std::vector<Mask> out;
  out.reserve(m.bases().size());
  for (Mask b : m.bases()) out.push_back(m.ground() & ~b);
  return Matroid::from_trusted_bases(m.size(), std::move(out));
}

std::vector<Mask> components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask c : circuits(m).members) {
    const auto es = elements_of(c);
    for (std::size_t i = 1; i < es.size(); ++i) {
      const int a = find(es[0]);
      const int b = find(es[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, Mask> blocks;
  for (int e = 0; e < n; ++e) blocks[find(e)] |= Mask{1} << e;
  std::vector<Mask> out;
  for (const auto& [root, block] : blocks) out.push_back(block);
  return out;
}

namespace {

std::vector<std::uint32_t> basis_degrees(const Matroid& m) {
  std::vector<std::uint32_t> deg(m.size(), 0);
  for (Mask b : m.bases()) {
    for (Mask rest = b; rest != 0; rest &= rest - 1) ++deg[std::countr_zero(rest)];
  }
  return deg;
}

std::size_t count_non_spanning_circuits(const SetFamily& cs, int r) {
  return static_cast<std::size_t>(
      std::count_if(cs.members.begin(), cs.members.end(), [r](Mask c) { return popcount(c) <= r; }));
}

// Colour refinement over the circuit hypergraph. Both matroids share one
// palette so colours are comparable across them.
struct Colouring {
  std::vector<int> a;
  std::vector<int> b;
};

Colouring refine_colours(const Matroid& ma, const SetFamily& ca, const Matroid& mb, const SetFamily& cb) {
  const int n = ma.size();
  const auto deg_a = basis_degrees(ma);
  const auto deg_b = basis_degrees(mb);
  Colouring col{std::vector<int>(n), std::vector<int>(n)};
  {
    std::map<std::uint32_t, int> palette;
    for (auto d : deg_a) palette.emplace(d, 0);
    for (auto d : deg_b) palette.emplace(d, 0);
    int id = 0;
    for (auto& [d, v] : palette) v = id++;
    for (int e = 0; e < n; ++e) {
      col.a[e] = palette[deg_a[e]];
      col.b[e] = palette[deg_b[e]];
    }
  }
  using Signature = std::pair<int, std::vector<std::vector<int>>>;
  const auto signatures = [n](const std::vector<int>& colour, const SetFamily& cs) {
    std::vector<Signature> sig(n);
    for (int e = 0; e < n; ++e) sig[e].first = colour[e];
    for (Mask c : cs.members) {
      std::vector<int> cell;
      for (int x : elements_of(c)) cell.push_back(colour[x]);
      std::sort(cell.begin(), cell.end());
      for (int x : elements_of(c)) sig[x].second.push_back(cell);
    }
    for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
    return sig;
  };
  int classes = 0;
  for (int round = 0; round < n; ++round) {
    const auto sa = signatures(col.a, ca);
    const auto sb = signatures(col.b, cb);
    std::map<Signature, int> palette;
    for (const auto& s : sa) palette.emplace(s, 0);
    for (const auto& s : sb) palette.emplace(s, 0);
    int id = 0;
    for (auto& [s, v] : palette) v = id++;
    for (int e = 0; e < n; ++e) {
      col.a[e] = palette[sa[e]];
      col.b[e] = palette[sb[e]];
    }
    if (id == classes) break;
    classes = id;
  }
  return col;
}

}  // namespace

IsoInvariant iso_invariant(const Matroid& m) {
  IsoInvariant inv;
  inv.n = m.size();
  inv.r = m.rank();
  inv.basis_count = m.bases().size();
  inv.degree_multiset = basis_degrees(m);
  std::sort(inv.degree_multiset.begin(), inv.degree_multiset.end());
  inv.non_spanning_circuits = count_non_spanning_circuits(circuits(m), m.rank());
  return inv;
}

std::size_t hash_value(const IsoInvariant& inv) {
  std::size_t h = std::hash<int>{}(inv.n) * 31 + std::hash<int>{}(inv.r);
  h = h * 1000003 + inv.basis_count;
  for (auto d : inv.degree_multiset) h = h * 131 + d;
  return h * 7 + inv.non_spanning_circuits;
}

std::vector<int> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.bases().size() != b.bases().size()) return {};
  {
    auto da = basis_degrees(a);
    auto db = basis_degrees(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return {};
  }
  const int n = a.size();
  const SetFamily ca = circuits(a);
  const SetFamily cb = circuits(b);
  if (ca.size() != cb.size() ||
      count_non_spanning_circuits(ca, a.rank()) != count_non_spanning_circuits(cb, b.rank())) {
    return {};
  }
  const Colouring col = refine_colours(a, ca, b, cb);
  {
    auto sa = col.a;
    auto sb = col.b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return {};
  }

  // Assign rare colours first; circuits are checked as soon as their last
  // element (in assignment order) is placed.
  std::map<int, int> class_size;
  for (int c : col.a) ++class_size[c];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(class_size[col.a[x]], col.a[x]) < std::pair(class_size[col.a[y]], col.a[y]);
  });
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<Mask>> closing(n);
  for (Mask c : ca.members) {
    int last = 0;
    for (int e : elements_of(c)) last = std::max(last, position[e]);
    closing[last].push_back(c);
  }

  std::vector<int> image(n, -1);
  Mask used = 0;
  const auto consistent = [&](int depth) {
    for (Mask c : closing[depth]) {
      Mask img = 0;
      for (int e : elements_of(c)) img |= Mask{1} << image[e];
      if (!cb.has(img)) return false;
    }
    return true;
  };
  const std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int e = order[depth];
    for (int f = 0; f < n; ++f) {
      if (contains(used, f) || col.b[f] != col.a[e]) continue;
      image[e] = f;
      used |= Mask{1} << f;
      if (consistent(depth) && extend(depth + 1)) return true;
      used &= ~(Mask{1} << f);
    }
    image[e] = -1;
    return false;
  };
  if (!extend(0)) return {};
  return image;
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() == 0 && b.size() == 0) return a.rank() == b.rank();
  return !find_isomorphism(a, b).empty();
}

bool is_sparse_paving(const Matroid& m) {
  // Sparse paving iff the r-sets that are not bases pairwise differ in more
  // than one element (they are then exactly the circuit-hyperplanes).
  const int n = m.size();
  const int r = m.rank();
  if (r == 0 || r == n) return true;
  std::vector<Mask> non_bases;
  for (Mask x : all_subsets_of_size(n, r)) {
    if (!m.is_basis(x)) non_bases.push_back(x);
  }
  for (std::size_t i = 0; i < non_bases.size(); ++i) {
    for (std::size_t j = i + 1; j < non_bases.size(); ++j) {
      if (popcount(non_bases[i] & ~non_bases[j]) <= 1) return false;
    }
  }
  return true;
}

bool is_excluded_minor(const Matroid& m, const MembershipPredicate& member) {
  if (member(m)) return false;
  for (int e = 0; e < m.size(); ++e) {
    if (!member(delete_element(m, e)) || !member(contract_element(m, e))) return false;
  }
  return true;
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(m.bases().size());
  for (Mask b : m.bases()) {
    Mask img = 0;
    for (int e : elements_of(b)) img |= Mask{1} << perm[e];
    out.push_back(img);
  }
  return Matroid::from_trusted_bases(m.size(), std::move(out));
}

}  // namespace fractal
