#include <doctest.h>

#include <random>

#include "fractal/error.hpp"
#include "fractal/matroid.hpp"
#include "fractal/sparse_paving.hpp"
#include "oracles.hpp"

using namespace fractal;

namespace {

Matroid from_lists(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<Mask> masks;
  for (const auto& b : bases) masks.push_back(mask_of(b));
  return make_matroid(n, make_set_family(n, masks));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

// Every labelled matroid on up to 6 elements plus a batch of larger sparse
// paving ones: enough variety for the structural properties.
const std::vector<Matroid>& labelled(int n) {
  static std::vector<std::vector<Matroid>> cache(7);
  if (cache[n].empty()) cache[n] = all_matroids(n);
  return cache[n];
}

std::vector<Matroid> corpus(int max_n) {
  std::vector<Matroid> out;
  for (int n = 0; n <= std::min(max_n, 6); ++n) {
    for (const auto& m : labelled(n)) out.push_back(m);
  }
  for (int n = 6; n <= max_n; ++n) {
    for (int r = 2; r <= n - 2; ++r) {
      for (int k = 1; k <= 2; ++k) {
        auto fams = oracle::labelled_families(n, r, k);
        for (std::size_t i = 0; i < fams.size(); i += 97) out.push_back(oracle::from_family(n, r, fams[i]));
      }
    }
  }
  out.push_back(direct_sum(uniform(1, 2), uniform(2, 3)));
  out.push_back(direct_sum(uniform(0, 1), direct_sum(uniform(1, 1), uniform(1, 3))));
  return out;
}

}  // namespace

TEST_CASE("make_matroid validates the basis axioms") {
  CHECK(from_lists(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) == uniform(2, 4));
  CHECK(code_of([] { from_lists(4, {{0, 1}, {2, 3}}); }) == ErrorCode::ExchangeViolation);
  const auto m = from_lists(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(m.rank() == 2);
  CHECK(oracle::exchange_ok(m.bases()));
  CHECK(code_of([] { make_matroid(3, make_set_family(3, {})); }) == ErrorCode::EmptyBases);
  CHECK(code_of([] { from_lists(3, {{0}, {1, 2}}); }) == ErrorCode::NonEquicardinal);
  CHECK(code_of([] { make_matroid(25, make_set_family(3, {1})); }) == ErrorCode::SizeOverflow);
}

TEST_CASE("exchange check agrees with the brute-force check on all small families") {
  // every family of 2-subsets of a 4-set
  const auto pairs = all_subsets_of_size(4, 2);
  for (Mask pick = 1; pick < (Mask{1} << pairs.size()); ++pick) {
    std::vector<Mask> fam;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (contains(pick, static_cast<int>(i))) fam.push_back(pairs[i]);
    }
    bool accepted = true;
    try {
      make_matroid(4, make_set_family(4, fam));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ExchangeViolation);
      accepted = false;
    }
    CHECK(accepted == oracle::exchange_ok(fam));
  }
}

TEST_CASE("uniform matroids") {
  CHECK(uniform(0, 3).bases() == std::vector<Mask>{0});
  CHECK(uniform(2, 4).bases().size() == 6);
  CHECK(uniform(3, 3).bases() == std::vector<Mask>{7});
  CHECK(code_of([] { uniform(4, 3); }) == ErrorCode::RankOutOfRange);
  CHECK(code_of([] { uniform(-1, 3); }) == ErrorCode::RankOutOfRange);
}

TEST_CASE("direct sums") {
  const auto a = direct_sum(uniform(1, 1), uniform(0, 1));
  CHECK(a.size() == 2);
  CHECK(a.rank() == 1);
  CHECK(a.bases().size() == 1);
  CHECK(direct_sum(uniform(1, 2), uniform(1, 2)).bases().size() == 4);
  const auto b = direct_sum(uniform(0, 1), uniform(2, 4));
  CHECK(b.size() == 5);
  CHECK(b.rank() == 2);
  CHECK(b.bases().size() == 6);
  CHECK(oracle::exchange_ok(b.bases()));
  CHECK(code_of([] { direct_sum(uniform(1, 12), uniform(1, 13)); }) == ErrorCode::SizeOverflow);
}

TEST_CASE("rank_of") {
  CHECK(rank_of(uniform(2, 4), 0b1) == 1);
  CHECK(rank_of(uniform(2, 4), 0) == 0);
  CHECK(code_of([] { rank_of(uniform(2, 4), 0b10000); }) == ErrorCode::OutOfRange);
  for (const auto& m : corpus(6)) {
    const RankTable rt(m);
    for (Mask x = 0; x <= m.ground(); ++x) REQUIRE(rt(x) == oracle::rank(m, x));
  }
}

TEST_CASE("circuits") {
  CHECK(circuits(uniform(2, 4)).members == all_subsets_of_size(4, 3));
  CHECK(circuits(direct_sum(uniform(1, 2), uniform(1, 2))).members == std::vector<Mask>{0b0011, 0b1100});
  CHECK(circuits(uniform(3, 3)).members.empty());
  for (const auto& m : corpus(7)) REQUIRE(circuits(m).members == oracle::circuits(m));
}

TEST_CASE("hyperplanes") {
  CHECK(hyperplanes(uniform(2, 4)).members == std::vector<Mask>{1, 2, 4, 8});
  const auto h = hyperplanes(direct_sum(uniform(1, 2), uniform(1, 2)));
  CHECK(h.has(0b0011));
  CHECK(h.has(0b1100));
  CHECK(hyperplanes(uniform(1, 2)).members == std::vector<Mask>{0});
  CHECK(code_of([] { hyperplanes(uniform(0, 2)); }) == ErrorCode::RankZero);
  for (const auto& m : corpus(7)) {
    if (m.rank() > 0) REQUIRE(hyperplanes(m).members == oracle::hyperplanes(m));
  }
}

TEST_CASE("cyclic flats") {
  CHECK(cyclic_flats(uniform(2, 4)) == std::vector<RankedFlat>{{0, 0}, {0b1111, 2}});
  CHECK(cyclic_flats(direct_sum(uniform(1, 2), uniform(1, 2))) ==
        std::vector<RankedFlat>{{0, 0}, {0b0011, 1}, {0b1100, 1}, {0b1111, 2}});
  for (const auto& m : corpus(8)) {
    const auto flats = cyclic_flats(m);
    REQUIRE(flats == oracle::cyclic_flats(m));
    // the flats with their ranks determine the dependent sets
    for (Mask x = 0; x <= m.ground(); ++x) {
      bool dependent = false;
      for (const auto& z : flats) dependent = dependent || popcount(x & z.flat) > z.rank;
      REQUIRE(dependent == (oracle::rank(m, x) < popcount(x)));
    }
  }
}

TEST_CASE("minors") {
  CHECK(minor(uniform(2, 4), 0b1000, 0) == uniform(2, 3));
  CHECK(minor(uniform(2, 4), 0, 0b1000) == uniform(1, 3));
  CHECK(code_of([] { minor(uniform(2, 4), 0b11, 0b10); }) == ErrorCode::OverlappingSets);
  // contracting a coloop keeps the rank at r - r(C) computed on the minor
  const auto coloop = direct_sum(uniform(1, 1), uniform(1, 2));
  CHECK(minor(coloop, 0b001, 0) == uniform(1, 2));
  CHECK(minor(coloop, 0b001, 0b010) == uniform(0, 1));

  std::mt19937 rng(7);
  for (const auto& m : corpus(7)) {
    const Mask g = m.ground();
    for (int trial = 0; trial < 4; ++trial) {
      const Mask d = rng() & g;
      const Mask c = rng() & g & ~d;
      const auto got = minor(m, d, c);
      REQUIRE(got == oracle::minor(m, d, c));
      // two-step minors compose: split both sets by a random mask
      const Mask split = rng() & g;
      const Mask d1 = d & split;
      const Mask c1 = c & split;
      const auto first = minor(m, d1, c1);
      const Mask removed = d1 | c1;
      const auto second = minor(first, compact(d & ~d1, removed), compact(c & ~c1, removed));
      REQUIRE(second == got);
    }
    for (int e = 0; e < m.size(); ++e) {
      REQUIRE(delete_element(m, e) == minor(m, Mask{1} << e, 0));
      REQUIRE(contract_element(m, e) == minor(m, 0, Mask{1} << e));
    }
  }
}

TEST_CASE("duality") {
  CHECK(dual(uniform(2, 4)) == uniform(2, 4));
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(dual(uniform(r, n)) == uniform(n - r, n));
  }
  for (const auto& m : corpus(7)) {
    const auto d = dual(m);
    REQUIRE(dual(d) == m);
    REQUIRE(m.rank() + d.rank() == m.size());
    // circuits of the dual are the complements of hyperplanes
    REQUIRE(circuits(d) == cocircuits(m));
    if (m.rank() > 0) {
      std::vector<Mask> comp;
      for (Mask h : oracle::hyperplanes(m)) comp.push_back(m.ground() & ~h);
      std::sort(comp.begin(), comp.end());
      REQUIRE(circuits(d).members == comp);
    }
  }
}

TEST_CASE("components") {
  CHECK(components(direct_sum(uniform(1, 2), uniform(1, 2))) == std::vector<Mask>{0b0011, 0b1100});
  CHECK(components(uniform(2, 4)) == std::vector<Mask>{0b1111});
  const auto m = direct_sum(uniform(0, 1), direct_sum(uniform(1, 1), uniform(1, 3)));
  CHECK(components(m) == std::vector<Mask>{0b1, 0b10, 0b11100});
  for (const auto& mm : corpus(7)) {
    // transitive closure of "share a circuit"
    const int n = mm.size();
    std::vector<Mask> reach(n);
    for (int e = 0; e < n; ++e) reach[e] = Mask{1} << e;
    for (Mask c : oracle::circuits(mm)) {
      for (int e : elements_of(c)) reach[e] |= c;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int e = 0; e < n; ++e) {
        Mask next = reach[e];
        for (int f : elements_of(reach[e])) next |= reach[f];
        if (next != reach[e]) {
          reach[e] = next;
          changed = true;
        }
      }
    }
    std::vector<Mask> blocks(reach.begin(), reach.end());
    std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    REQUIRE(components(mm) == blocks);
  }
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(uniform(2, 4), dual(uniform(2, 4))));
  CHECK_FALSE(is_isomorphic(uniform(2, 3), uniform(1, 3)));
  const auto a = oracle::from_family(6, 3, {0b000111, 0b111000});
  const auto b = oracle::from_family(6, 3, {0b001011, 0b110100});
  CHECK(is_isomorphic(a, b));
  CHECK(oracle::isomorphic(a, b));
  const auto perm = find_isomorphism(a, b);
  REQUIRE(perm.size() == 6);
  CHECK(relabel(a, perm) == b);
}

TEST_CASE("isomorphism agrees with the unpruned permutation scan") {
  // random pairs from the labelled corpus, n <= 6
  for (int n = 0; n <= 6; ++n) {
    const auto& all = labelled(n);
    std::mt19937 rng(11 + n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (int trial = 0; trial < 6; ++trial) {
        const auto& x = all[i];
        const auto& y = all[rng() % all.size()];
        REQUIRE(is_isomorphic(x, y) == oracle::isomorphic(x, y));
      }
    }
  }
  // n = 6, 7: sparse paving families and relabellings, many near misses
  for (int n = 6; n <= 7; ++n) {
    std::vector<Matroid> pool;
    for (int r = 2; r <= n - 2; ++r) {
      for (int k = 1; k <= 3; ++k) {
        auto fams = oracle::labelled_families(n, r, k);
        for (std::size_t i = 0; i < fams.size(); i += 211) pool.push_back(oracle::from_family(n, r, fams[i]));
      }
    }
    pool.push_back(direct_sum(uniform(1, 2), uniform(2, n - 2)));
    pool.push_back(direct_sum(uniform(2, 3), uniform(1, n - 3)));
    std::mt19937 rng(n);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); j += 1 + rng() % 5) {
        REQUIRE(is_isomorphic(pool[i], pool[j]) == oracle::isomorphic(pool[i], pool[j]));
      }
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      REQUIRE(is_isomorphic(pool[i], relabel(pool[i], p)));
    }
  }
}

TEST_CASE("sparse paving predicate") {
  CHECK(is_sparse_paving(uniform(2, 4)));
  CHECK(is_sparse_paving(direct_sum(uniform(1, 2), uniform(1, 2))));
  CHECK_FALSE(is_sparse_paving(direct_sum(uniform(1, 2), uniform(2, 3))));
  CHECK(is_sparse_paving(uniform(0, 3)));
  CHECK(is_sparse_paving(uniform(3, 3)));
  for (const auto& m : corpus(7)) REQUIRE(is_sparse_paving(m) == oracle::sparse_paving(m));
}

TEST_CASE("excluded minor predicate") {
  const auto m = oracle::from_family(6, 3, {0b000111, 0b111000});
  CHECK(is_excluded_minor(m, pk_member(1)));
  CHECK(oracle::excluded_minor(m, [](const Matroid& x) { return oracle::in_pk(x, 1); }));
  CHECK_FALSE(is_excluded_minor(uniform(2, 4), pk_member(0)));
  CHECK_FALSE(is_excluded_minor(uniform(2, 5), [](const Matroid&) { return true; }));
  for (const auto& x : corpus(6)) {
    for (int k = 0; k <= 2; ++k) {
      REQUIRE(is_excluded_minor(x, pk_member(k)) ==
              oracle::excluded_minor(x, [k](const Matroid& y) { return oracle::in_pk(y, k); }));
    }
  }
}
