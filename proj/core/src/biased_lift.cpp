#include "fractal/biased_lift.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "fractal/error.hpp"
#include "trun_orbits.hpp"

namespace fractal {

namespace {

void sort_unique(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Thetas as (union, cycle, cycle, cycle).
struct Theta {
  Mask edges;
  std::array<Mask, 3> cycles;
};

std::vector<Theta> thetas(const GGraph& g) {
  std::vector<Theta> out;
  if (g.kind == GraphKind::Cycle) {
    // a Hamiltonian cycle plus the other edge of one of its pairs
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << g.t); ++pick) {
      for (int i = 0; i < g.t; ++i) {
        if ((pick >> i) & 1U) continue;
        const Mask h1 = hamiltonian(g, pick);
        const Mask h2 = hamiltonian(g, pick | (std::uint32_t{1} << i));
        out.push_back({h1 | h2, {h1, h2, g.pair(i)}});
      }
    }
  } else if (g.kind == GraphKind::TwoVertex) {
    const auto edges = elements_of(g.non_loops());
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        for (std::size_t c = b + 1; c < edges.size(); ++c) {
          const Mask ea = Mask{1} << edges[a];
          const Mask eb = Mask{1} << edges[b];
          const Mask ec = Mask{1} << edges[c];
          out.push_back({ea | eb | ec, {ea | eb, ea | ec, eb | ec}});
        }
      }
    }
  }
  return out;
}

bool balanced_in(const LinearClass& b, Mask cycle) {
  return std::binary_search(b.cycles.begin(), b.cycles.end(), cycle);
}

int distance(std::uint32_t x, std::uint32_t y) { return std::popcount(x ^ y); }

bool pick_less(std::uint32_t x, std::uint32_t y, int t) {
  // lexicographic on the 0/1 string, character i = bit i
  for (int i = 0; i < t; ++i) {
    const unsigned bx = (x >> i) & 1U;
    const unsigned by = (y >> i) & 1U;
    if (bx != by) return bx < by;
  }
  return false;
}

// Pairwise distances >= 2 for the m picks described by agreement-pattern
// counts (pattern bit i: pick i agrees with the last pick).
bool trun_cells_far(const std::vector<int>& cells, int m) {
  for (int i = 0; i + 1 < m; ++i) {
    int d = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!contains(static_cast<Mask>(c), i)) d += cells[c];
    }
    if (d < 2) return false;
    for (int j = i + 1; j + 1 < m; ++j) {
      int dij = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (contains(static_cast<Mask>(c), i) != contains(static_cast<Mask>(c), j)) dij += cells[c];
      }
      if (dij < 2) return false;
    }
  }
  return true;
}

void for_each_composition(int parts, int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(parts, 0);
  if (parts == 0) {
    if (total == 0) visit(v);
    return;
  }
  const std::function<void(int, int)> step = [&](int pos, int remaining) {
    if (pos + 1 == parts) {
      v[pos] = remaining;
      visit(v);
      v[pos] = 0;
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      v[pos] = x;
      step(pos + 1, remaining - x);
    }
    v[pos] = 0;
  };
  step(0, total);
}

void for_each_canonical_cells(int t, int m, const std::function<void(const std::vector<int>&)>& visit) {
  if (m < 2 || m > detail::kMaxTrunSets) fail(ErrorCode::BoundTooLarge, "pick families need 2 <= m <= 7");
  for_each_composition(1 << (m - 1), t, [&](const std::vector<int>& cells) {
    if (trun_cells_far(cells, m) && detail::is_least_trun(cells, m)) visit(cells);
  });
}

std::vector<std::uint32_t> picks_from_cells(const std::vector<int>& cells, int m) {
  std::vector<std::uint32_t> picks(m, 0);
  int column = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int v = 0; v < cells[c]; ++v, ++column) {
      for (int i = 0; i + 1 < m; ++i) {
        if (!contains(static_cast<Mask>(c), i)) picks[i] |= std::uint32_t{1} << column;
      }
    }
  }
  return picks;
}

std::vector<GGraph> cycle_shapes(int n) {
  std::vector<GGraph> out;
  for (int t = 0; 2 * t <= n; ++t) {
    for (int s = 0; 2 * t + s <= n; ++s) {
      if (t + s >= 3) out.push_back({GraphKind::Cycle, t, s, n - 2 * t - s});
    }
  }
  return out;
}

std::string describe(const GGraph& g) {
  return to_string(g.kind) + "(t=" + std::to_string(g.t) + ",s=" + std::to_string(g.s) + ",p=" + std::to_string(g.p) +
         ")";
}

}  // namespace

int GGraph::vertex_count() const {
  switch (kind) {
    case GraphKind::SingleVertex: return 1;
    case GraphKind::TwoVertex: return 2;
    case GraphKind::Cycle: return t + s;
  }
  return 0;
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::SingleVertex: return "single";
    case GraphKind::TwoVertex: return "two";
    case GraphKind::Cycle: return "cycle";
  }
  return "?";
}

GGraph validate_ggraph(const GGraph& g) {
  if (g.t < 0 || g.s < 0 || g.p < 0) fail(ErrorCode::InvalidGraph, "negative edge count");
  if (g.edge_count() > kMaxGroundSize) fail(ErrorCode::TooLarge, "graph has more than 24 edges");
  switch (g.kind) {
    case GraphKind::SingleVertex:
      if (g.t != 0 || g.s != 0) fail(ErrorCode::InvalidGraph, "a single-vertex graph has only loops");
      break;
    case GraphKind::TwoVertex:
      if (2 * g.t + g.s < 1 || 2 * g.t + g.s > 4) {
        fail(ErrorCode::InvalidGraph, "a two-vertex graph needs 1..4 edges between its vertices");
      }
      break;
    case GraphKind::Cycle:
      if (g.t + g.s < 3) fail(ErrorCode::InvalidGraph, "a cycle graph needs at least three vertices");
      break;
  }
  return g;
}

Mask hamiltonian(const GGraph& g, std::uint32_t pick) {
  Mask edges = g.thins();
  for (int i = 0; i < g.t; ++i) edges |= Mask{1} << (2 * i + ((pick >> i) & 1U));
  return edges;
}

std::vector<GraphCycle> graph_cycles(const GGraph& g) {
  validate_ggraph(g);
  std::vector<GraphCycle> out;
  for (int e : elements_of(g.loops())) out.push_back({Mask{1} << e, 1});
  if (g.kind == GraphKind::Cycle) {
    const int v = g.vertex_count();
    for (int i = 0; i < g.t; ++i) out.push_back({g.pair(i), (Mask{1} << i) | (Mask{1} << ((i + 1) % v))});
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << g.t); ++pick) {
      out.push_back({hamiltonian(g, pick), full_mask(v)});
    }
  } else if (g.kind == GraphKind::TwoVertex) {
    const auto edges = elements_of(g.non_loops());
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        out.push_back({(Mask{1} << edges[a]) | (Mask{1} << edges[b]), 0b11});
      }
    }
  }
  return out;
}

LinearClass validate_linear_class(const GGraph& g, LinearClass b) {
  sort_unique(b.cycles);
  std::vector<Mask> all;
  for (const auto& c : graph_cycles(g)) all.push_back(c.edges);
  sort_unique(all);
  for (Mask c : b.cycles) {
    if (!std::binary_search(all.begin(), all.end(), c)) {
      fail(ErrorCode::InvalidLinearClass, "balanced set is not a cycle of the graph");
    }
  }
  for (const auto& th : thetas(g)) {
    int count = 0;
    for (Mask c : th.cycles) count += balanced_in(b, c);
    if (count == 2) fail(ErrorCode::InvalidLinearClass, "a theta-subgraph holds exactly two balanced cycles");
  }
  return b;
}

LinearClass hamiltonian_class(const GGraph& g, const std::vector<std::uint32_t>& picks) {
  if (g.kind != GraphKind::Cycle) fail(ErrorCode::InvalidGraph, "pick vectors need a cycle-kind graph");
  LinearClass b;
  for (std::uint32_t pick : picks) {
    if (g.t < 32 && (pick >> g.t) != 0) fail(ErrorCode::InvalidLinearClass, "pick has bits beyond the pair count");
    b.cycles.push_back(hamiltonian(g, pick));
  }
  sort_unique(b.cycles);
  return b;
}

SetFamily lift_circuits(const GGraph& g, const LinearClass& b) {
  std::vector<Mask> out(b.cycles.begin(), b.cycles.end());
  for (const auto& th : thetas(g)) {
    bool any = false;
    for (Mask c : th.cycles) any = any || balanced_in(b, c);
    if (!any) out.push_back(th.edges);
  }
  std::vector<GraphCycle> unbalanced;
  for (const auto& c : graph_cycles(g)) {
    if (!balanced_in(b, c.edges)) unbalanced.push_back(c);
  }
  for (std::size_t i = 0; i < unbalanced.size(); ++i) {
    for (std::size_t j = i + 1; j < unbalanced.size(); ++j) {
      if ((unbalanced[i].edges & unbalanced[j].edges) != 0) continue;
      if (popcount(unbalanced[i].vertices & unbalanced[j].vertices) > 1) continue;
      out.push_back(unbalanced[i].edges | unbalanced[j].edges);
    }
  }
  sort_unique(out);
  return SetFamily{g.edge_count(), std::move(out)};
}

Matroid lift_matroid(const GGraph& g, const LinearClass& b) {
  validate_ggraph(g);
  const LinearClass bc = validate_linear_class(g, b);
  const int n = g.edge_count();
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> dependent(total, 0);
  for (Mask c : lift_circuits(g, bc).members) dependent[c] = 1;
  for (int e = 0; e < n; ++e) {
    const std::size_t bit = std::size_t{1} << e;
    for (std::size_t x = 0; x < total; ++x) {
      if ((x & bit) && dependent[x ^ bit]) dependent[x] = 1;
    }
  }
  int rank = 0;
  for (std::size_t x = 0; x < total; ++x) {
    if (!dependent[x]) rank = std::max(rank, popcount(static_cast<Mask>(x)));
  }
  std::vector<Mask> bases;
  for (std::size_t x = 0; x < total; ++x) {
    if (!dependent[x] && popcount(static_cast<Mask>(x)) == rank) bases.push_back(static_cast<Mask>(x));
  }
  return Matroid::from_trusted_bases(n, std::move(bases));
}

int lift_rank_formula(const GGraph& g, const LinearClass& b) {
  bool balanced = true;
  for (const auto& c : graph_cycles(g)) balanced = balanced && balanced_in(b, c.edges);
  return g.vertex_count() - (balanced ? 1 : 0);
}

Matroid cycle_matroid(const GGraph& g) {
  LinearClass all;
  for (const auto& c : graph_cycles(g)) all.cycles.push_back(c.edges);
  sort_unique(all.cycles);
  return lift_matroid(g, all);
}

bool picks_valid(int t, const std::vector<std::uint32_t>& picks) {
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (t < 32 && (picks[i] >> t) != 0) return false;
    for (std::size_t j = i + 1; j < picks.size(); ++j) {
      if (distance(picks[i], picks[j]) < 2) return false;
    }
  }
  return true;
}

std::string pick_string(std::uint32_t pick, int t) {
  std::string out(static_cast<std::size_t>(t), '0');
  for (int i = 0; i < t; ++i) {
    if ((pick >> i) & 1U) out[i] = '1';
  }
  return out;
}

std::uint32_t parse_pick(const std::string& text) {
  if (text.empty() || text.size() > 32) fail(ErrorCode::ParseError, "pick string must have 1..32 characters");
  std::uint32_t pick = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      pick |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      fail(ErrorCode::ParseError, "pick string may only hold 0 and 1");
    }
  }
  return pick;
}

SpikeSpec make_spike_spec(int t, std::vector<std::uint32_t> picks) {
  if (t < 3) fail(ErrorCode::InvalidGraph, "spikes need t >= 3");
  if (t > 31) fail(ErrorCode::TooLarge, "spikes support t <= 31");
  if (!picks_valid(t, picks)) fail(ErrorCode::InvalidLinearClass, "picks must be pairwise at distance >= 2");
  std::sort(picks.begin(), picks.end(), [t](std::uint32_t x, std::uint32_t y) { return pick_less(x, y, t); });
  return SpikeSpec{t, std::move(picks)};
}

GGraph spike_graph(int t) { return GGraph{GraphKind::Cycle, t, 0, 0}; }

Matroid spike(int t, const std::vector<std::uint32_t>& picks) { return spike(make_spike_spec(t, picks)); }

Matroid spike(const SpikeSpec& spec) {
  const GGraph g = spike_graph(spec.t);
  validate_ggraph(g);
  return lift_matroid(g, hamiltonian_class(g, spec.picks));
}

std::vector<std::uint32_t> dual_picks(const std::vector<std::uint32_t>& picks, int t) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t pick : picks) out.push_back(~pick & static_cast<std::uint32_t>(full_mask(t)));
  std::sort(out.begin(), out.end(), [t](std::uint32_t x, std::uint32_t y) { return pick_less(x, y, t); });
  return out;
}

bool duality_check(const SpikeSpec& spec) {
  return dual(spike(spec)) == spike(spec.t, dual_picks(spec.picks, spec.t));
}

std::vector<RankedFlat> spike_cyclic_flats(const SpikeSpec& spec) {
  const SpikeSpec valid = make_spike_spec(spec.t, spec.picks);
  const int t = valid.t;
  const GGraph g = spike_graph(t);
  std::vector<RankedFlat> out{{0, 0}, {full_mask(2 * t), t}};
  for (std::uint32_t pick : valid.picks) out.push_back({hamiltonian(g, pick), t - 1});
  for (Mask chosen = 0; chosen < (Mask{1} << t); ++chosen) {
    const int p = popcount(chosen);
    if (p < 2 || p > t - 2) continue;
    Mask flat = 0;
    for (int i : elements_of(chosen)) flat |= g.pair(i);
    out.push_back({flat, p + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ContractionLift lift_from_contraction(const Matroid& m, int e, const GGraph& g) {
  validate_ggraph(g);
  const int n = m.size();
  if (e < 0 || e >= n) fail(ErrorCode::OutOfRange, "element outside the ground set");
  if (g.edge_count() != n - 1) fail(ErrorCode::PremiseViolated, "graph does not have n-1 edges");
  if (contract_element(m, e) != cycle_matroid(g)) {
    fail(ErrorCode::PremiseViolated, "M/e is not the cycle matroid of the graph");
  }
  ContractionLift out;
  out.graph = GGraph{g.kind, g.t, g.s, g.p + 1};
  out.labels.resize(n);
  for (int x = 0; x < n; ++x) out.labels[x] = x < e ? x : (x == e ? n - 1 : x - 1);
  const SetFamily circ = circuits(m);
  const Mask removed = Mask{1} << e;
  for (const auto& c : graph_cycles(g)) {
    if (circ.has(expand(c.edges, removed, n))) out.balanced.cycles.push_back(c.edges);
  }
  sort_unique(out.balanced.cycles);
  out.balanced = validate_linear_class(out.graph, out.balanced);
  return out;
}

char category_letter(Category c) { return static_cast<char>('A' + static_cast<int>(c)); }

PickFamily as_pick_family(const SpikeSpec& spec) { return PickFamily{spike_graph(spec.t), spec.picks}; }

std::vector<std::vector<std::uint32_t>> canonical_pick_families(int t, int m) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_canonical_cells(t, m, [&](const std::vector<int>& cells) { out.push_back(picks_from_cells(cells, m)); });
  return out;
}

std::uint64_t count_canonical_pick_families(int t, int m) {
  std::uint64_t count = 0;
  for_each_canonical_cells(t, m, [&](const std::vector<int>&) { ++count; });
  return count;
}

GlanceKey glance_signature(const PickFamily& f) {
  const GGraph& g = f.graph;
  if (g.kind != GraphKind::Cycle) fail(ErrorCode::HypothesisViolated, "glance keys need a cycle-kind graph");
  // no matroid is built here, so only the shape is checked, not the 24-edge cap
  if (g.t < 0 || g.s < 0 || g.p < 0 || g.t > 31) fail(ErrorCode::InvalidGraph, "bad cycle-kind graph");
  const int m = static_cast<int>(f.picks.size());
  if (g.t + g.s < 5 || m < 2) fail(ErrorCode::HypothesisViolated, "glance keys need rank >= 5 and >= 2 picks");
  if (m > detail::kMaxTrunSets) fail(ErrorCode::BoundTooLarge, "glance keys support at most 7 picks");
  if (!picks_valid(g.t, f.picks)) fail(ErrorCode::InvalidLinearClass, "picks must be pairwise at distance >= 2");
  std::vector<int> cells(std::size_t{1} << (m - 1), 0);
  const std::uint32_t base = f.picks.back();
  for (int j = 0; j < g.t; ++j) {
    Mask pattern = 0;
    for (int i = 0; i + 1 < m; ++i) {
      if (((f.picks[i] ^ base) >> j & 1U) == 0) pattern |= Mask{1} << i;
    }
    ++cells[pattern];
  }
  cells.back() += g.s;
  return GlanceKey{g.p, g.s, VennSignature{m - 1, detail::least_trun(cells, m)}};
}

GlanceKey glance_signature(const SpikeSpec& spec) { return glance_signature(as_pick_family(spec)); }

bool glance_isomorphic(const PickFamily& a, const PickFamily& b) {
  if (a.graph.edge_count() != b.graph.edge_count()) {
    fail(ErrorCode::GroundSizeMismatch, "descriptions have different edge counts");
  }
  return glance_signature(a) == glance_signature(b);
}

SkCatalog::SkCatalog(int n, int k) : n_(n), k_(k) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative size");
  if (n > kMaxCatalogSize) fail(ErrorCode::TooLargeForExact, "exact S_k catalogs support n <= 14");
  if (k < 0) fail(ErrorCode::OutOfRange, "negative bound");

  // A: cycle graphs with at most k balanced Hamiltonian cycles
  for (const auto& g : cycle_shapes(n)) {
    add(lift_matroid(g, {}), Category::A, 0, describe(g) + " picks=0");
    if (k >= 1) add(lift_matroid(g, hamiltonian_class(g, {0})), Category::A, 1, describe(g) + " picks=1");
    for (int m = 2; m <= std::min(k, detail::kMaxTrunSets) && g.t >= 2; ++m) {
      for (const auto& picks : canonical_pick_families(g.t, m)) {
        add(lift_matroid(g, hamiltonian_class(g, picks)), Category::A, m, describe(g) + " picks=" + std::to_string(m));
      }
    }
  }
  // B: two vertices, edge-disjoint balanced 2-cycles
  for (int links = 1; links <= std::min(4, n); ++links) {
    const GGraph g{GraphKind::TwoVertex, 0, links, n - links};
    for (int b = 0; b <= std::min(k, links / 2); ++b) {
      LinearClass cls;
      for (int i = 0; i < b; ++i) cls.cycles.push_back(Mask{3} << (2 * i));
      add(lift_matroid(g, cls), Category::B, b, describe(g) + " balanced=" + std::to_string(b));
    }
  }
  // C: one vertex, at most min(k, 1) balanced loops
  {
    const GGraph g{GraphKind::SingleVertex, 0, 0, n};
    for (int j = 0; j <= std::min({k, 1, n}); ++j) {
      LinearClass cls;
      if (j == 1) cls.cycles.push_back(1);
      add(lift_matroid(g, cls), Category::C, j, describe(g) + " balanced=" + std::to_string(j));
    }
  }
  // D and E: graphic and cographic
  std::vector<GGraph> graphs{{GraphKind::SingleVertex, 0, 0, n}};
  for (int links = 1; links <= std::min(4, n); ++links) graphs.push_back({GraphKind::TwoVertex, 0, links, n - links});
  for (const auto& g : cycle_shapes(n)) graphs.push_back(g);
  for (const auto& g : graphs) {
    const Matroid mg = cycle_matroid(g);
    add(mg, Category::D, 0, "M" + describe(g));
    add(dual(mg), Category::E, 0, "M*" + describe(g));
  }
  // F: loops, coloops and parallel pairs
  for (int q = 0; 2 * q <= n; ++q) {
    for (int c = 0; 2 * q + c <= n; ++c) {
      const int l = n - 2 * q - c;
      Matroid m = direct_sum(uniform(0, l), uniform(c, c));
      for (int i = 0; i < q; ++i) m = direct_sum(m, uniform(1, 2));
      add(m, Category::F, 0,
          "F(l=" + std::to_string(l) + ",c=" + std::to_string(c) + ",q=" + std::to_string(q) + ")");
    }
  }
}

void SkCatalog::add(const Matroid& m, Category c, int balanced, std::string description) {
  IsoInvariant inv = iso_invariant(m);
  const std::size_t h = hash_value(inv);
  const auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    if (invariants_[it->second] == inv && is_isomorphic(classes_[it->second].matroid, m)) {
      classes_[it->second].categories |= 1U << static_cast<int>(c);
      return;
    }
  }
  index_.emplace(h, classes_.size());
  invariants_.push_back(std::move(inv));
  classes_.push_back(Entry{m, 1U << static_cast<int>(c), balanced, std::move(description)});
}

std::optional<Category> SkCatalog::find(const Matroid& m) const {
  if (m.size() != n_) fail(ErrorCode::GroundSizeMismatch, "matroid size differs from the catalog size");
  const IsoInvariant inv = iso_invariant(m);
  const auto [lo, hi] = index_.equal_range(hash_value(inv));
  for (auto it = lo; it != hi; ++it) {
    if (invariants_[it->second] == inv && is_isomorphic(classes_[it->second].matroid, m)) {
      return static_cast<Category>(std::countr_zero(classes_[it->second].categories));
    }
  }
  return std::nullopt;
}

std::optional<Category> categorize(const Matroid& m, int k) { return SkCatalog(m.size(), k).find(m); }

MembershipPredicate sk_member(int k) {
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<SkCatalog>> catalogs;
  };
  auto cache = std::make_shared<Cache>();
  return [k, cache](const Matroid& m) {
    const SkCatalog* catalog = nullptr;
    {
      std::lock_guard lock(cache->mutex);
      auto& slot = cache->catalogs[m.size()];
      if (!slot) slot = std::make_unique<SkCatalog>(m.size(), k);
      catalog = slot.get();
    }
    return catalog->find(m).has_value();
  };
}

std::vector<Matroid> camera_fixtures() {
  const Matroid loop = uniform(0, 1);
  const Matroid coloop = uniform(1, 1);
  const Matroid triangle_with_double = cycle_matroid(GGraph{GraphKind::Cycle, 1, 2, 0});
  return {
      direct_sum(loop, direct_sum(coloop, uniform(1, 3))),
      direct_sum(loop, direct_sum(coloop, uniform(2, 3))),
      direct_sum(loop, uniform(2, 4)),
      direct_sum(coloop, uniform(2, 4)),
      direct_sum(uniform(1, 2), triangle_with_double),
  };
}

std::vector<Mask> bottom_variables(int k) {
  std::vector<Mask> vars;
  for (Mask s = 0; s < (Mask{1} << k); ++s) {
    if (popcount(s) >= 1 && popcount(s) <= k - 2) vars.push_back(s);
  }
  return vars;
}

namespace {

void check_bottom_args(int t, int k) {
  if (k < 2 || k > 6) fail(ErrorCode::BoundTooLarge, "bottom equation supports 2 <= k <= 6");
  if (t < 2 * (k + 1)) fail(ErrorCode::TooSmall, "need t >= 2(k+1)");
}

}  // namespace

void for_each_bottom_solution(int t, int k, const std::function<void(const CompositionSolution&)>& visit) {
  check_bottom_args(t, k);
  CompositionSolution sol{bottom_variables(k), {}};
  for_each_composition(static_cast<int>(sol.index_sets.size()), t - 2 * (k + 1), [&](const std::vector<int>& v) {
    sol.values = v;
    visit(sol);
  });
}

std::vector<CompositionSolution> bottom_solutions(int t, int k) {
  std::vector<CompositionSolution> out;
  for_each_bottom_solution(t, k, [&](const CompositionSolution& s) { out.push_back(s); });
  return out;
}

long double count_bottom_solutions(int t, int k) {
  check_bottom_args(t, k);
  const int target = t - 2 * (k + 1);
  std::vector<long double> ways(target + 1, 0.0L);
  ways[0] = 1.0L;
  for (std::size_t v = 0; v < bottom_variables(k).size(); ++v) {
    for (int x = 1; x <= target; ++x) ways[x] += ways[x - 1];
  }
  return ways[target];
}

SpikeSpec bottom_construct(const CompositionSolution& phi, int t, int k) {
  check_bottom_args(t, k);
  const auto vars = bottom_variables(k);
  if (phi.index_sets != vars || phi.values.size() != vars.size()) {
    fail(ErrorCode::NotASolution, "assignment does not range over the bottom variables");
  }
  int sum = 0;
  for (int v : phi.values) {
    if (v < 0) fail(ErrorCode::NotASolution, "negative value");
    sum += v;
  }
  if (sum != t - 2 * (k + 1)) fail(ErrorCode::NotASolution, "values do not sum to t - 2(k+1)");
  if (t > 31) fail(ErrorCode::TooLarge, "spikes support t <= 31");

  // d[i]: pair indices whose a-edge lies in D_{i+1}
  std::vector<std::uint32_t> d(k, 0);
  int next = 0;
  const auto allocate = [&](Mask cell, int count) {
    for (int v = 0; v < count; ++v, ++next) {
      for (int i = 0; i < k; ++i) {
        if (contains(cell, i)) d[i] |= std::uint32_t{1} << next;
      }
    }
  };
  const Mask all = full_mask(k);
  allocate(0, 2);
  for (int i = 0; i < k; ++i) allocate(all & ~(Mask{1} << i), 2);
  for (std::size_t v = 0; v < vars.size(); ++v) allocate(vars[v], phi.values[v]);

  const std::uint32_t everything = static_cast<std::uint32_t>(full_mask(t));
  std::vector<std::uint32_t> picks;
  for (int i = 0; i < k; ++i) picks.push_back(~d[i] & everything);  // b_j exactly when a_j is not in D_i
  picks.push_back(0);
  return make_spike_spec(t, std::move(picks));
}

bool verify_sk_excluded_minor(const SpikeSpec& spec, int k, VerifyMode mode) {
  if (mode == VerifyMode::Full) {
    if (2 * spec.t > kMaxCatalogSize) fail(ErrorCode::TooLargeForFull, "full verification supports 2t <= 14");
    return is_excluded_minor(spike(spec), sk_member(k));
  }
  if (spec.t < 5 || spec.t > 31 || !picks_valid(spec.t, spec.picks)) return false;
  const int m = static_cast<int>(spec.picks.size());
  if (m <= k) return false;
  for (int j = 0; j < spec.t; ++j) {
    int with_b = 0;
    for (std::uint32_t pick : spec.picks) with_b += (pick >> j) & 1U;
    const int with_a = m - with_b;
    if (with_a < 1 || with_a > k || with_b < 1 || with_b > k) return false;
  }
  return true;
}

std::uint64_t census_sk_exact(int n, int k) {
  if (n > 12) fail(ErrorCode::TooLarge, "exact S_k census supports n <= 12");
  return SkCatalog(n, k).classes().size();
}

std::vector<StrataRow> census_sk_strata(int n, int k) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative size");
  if (n % 2 != 0) fail(ErrorCode::OddSize, "strata counts are defined for even sizes");
  if (k < 0 || k > 6) fail(ErrorCode::BoundTooLarge, "strata counts support k <= 6");

  std::map<std::tuple<int, int, int>, std::uint64_t> tally;
  const auto bump = [&](Category c, int r, int m, std::uint64_t count) {
    if (count > 0) tally[{static_cast<int>(c), r, m}] += count;
  };

  for (int q = 0; 2 * q <= n; ++q) {
    for (int c = 0; 2 * q + c <= n; ++c) bump(Category::F, c + q, 0, 1);
  }
  std::vector<GGraph> graphs{{GraphKind::SingleVertex, 0, 0, n}};
  for (int links = 1; links <= std::min(4, n); ++links) graphs.push_back({GraphKind::TwoVertex, 0, links, n - links});
  for (const auto& g : cycle_shapes(n)) graphs.push_back(g);
  for (const auto& g : graphs) {
    const int r = g.vertex_count() - 1;
    bump(Category::D, r, 0, 1);
    bump(Category::E, n - r, 0, 1);
  }
  {
    const GGraph g{GraphKind::SingleVertex, 0, 0, n};
    for (int j = 0; j <= std::min({k, 1, n}); ++j) {
      LinearClass cls;
      if (j == 1) cls.cycles.push_back(1);
      bump(Category::C, lift_rank_formula(g, cls), j, 1);
    }
  }
  for (int links = 1; links <= std::min(4, n); ++links) {
    const GGraph g{GraphKind::TwoVertex, 0, links, n - links};
    for (int b = 0; b <= std::min(k, links / 2); ++b) {
      LinearClass cls;
      for (int i = 0; i < b; ++i) cls.cycles.push_back(Mask{3} << (2 * i));
      bump(Category::B, lift_rank_formula(g, cls), b, 1);
    }
  }
  for (const auto& g : cycle_shapes(n)) {
    bump(Category::A, lift_rank_formula(g, {}), 0, 1);
    if (k >= 1) bump(Category::A, lift_rank_formula(g, LinearClass{{hamiltonian(g, 0)}}), 1, 1);
    if (g.t < 2) continue;
    for (int m = 2; m <= std::min(k, detail::kMaxTrunSets); ++m) {
      bump(Category::A, g.t + g.s, m, count_canonical_pick_families(g.t, m));
    }
  }

  std::vector<StrataRow> rows;
  for (const auto& [key, count] : tally) {
    const auto [c, r, m] = key;
    const auto cat = static_cast<Category>(c);
    rows.push_back(StrataRow{n, k, cat, r, m, count, cat == Category::F});
  }
  return rows;
}

std::vector<StrataRow> census_sk_exact_rows(int n, int k) {
  if (n > 12) fail(ErrorCode::TooLarge, "exact S_k census supports n <= 12");
  std::map<std::tuple<int, int, int>, std::uint64_t> tally;
  for (const auto& entry : SkCatalog(n, k).classes()) {
    ++tally[{std::countr_zero(entry.categories), entry.matroid.rank(), entry.balanced}];
  }
  std::vector<StrataRow> rows;
  for (const auto& [key, count] : tally) {
    const auto [c, r, m] = key;
    rows.push_back(StrataRow{n, k, static_cast<Category>(c), r, m, count, true});
  }
  return rows;
}

std::uint64_t strata_total(const std::vector<StrataRow>& rows) {
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.count;
  return total;
}

}  // namespace fractal
