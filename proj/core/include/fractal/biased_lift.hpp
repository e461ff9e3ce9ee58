#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fractal/bits.hpp"
#include "fractal/matroid.hpp"
#include "fractal/sparse_paving.hpp"

namespace fractal {

enum class GraphKind { SingleVertex, TwoVertex, Cycle };

/// A graph from the small class used here: one vertex with loops, two vertices
/// joined by 1..4 edges, or a cycle of t+s >= 3 vertices whose edges are t
/// parallel pairs and s thin edges. Loops may be added to any of them.
///
/// Edge labels: pair i is (a_i, b_i) = (2i, 2i+1), thin edge j is 2t+j, loop
/// j is 2t+s+j. In the two-vertex kind the first 2t+s labels are the
/// non-loop edges. Loops sit on vertex 0; their position does not affect the
/// lift matroid.
struct GGraph {
  GraphKind kind = GraphKind::SingleVertex;
  int t = 0;
  int s = 0;
  int p = 0;

  int edge_count() const { return 2 * t + s + p; }
  int vertex_count() const;
  Mask pair(int i) const { return Mask{3} << (2 * i); }
  Mask pairs() const { return full_mask(2 * t); }
  Mask thins() const { return full_mask(2 * t + s) & ~pairs(); }
  Mask loops() const { return full_mask(edge_count()) & ~full_mask(2 * t + s); }
  Mask non_loops() const { return full_mask(2 * t + s); }

  friend bool operator==(const GGraph&, const GGraph&) = default;
};

GGraph validate_ggraph(const GGraph& g);
std::string to_string(GraphKind kind);

/// A cycle of the graph with its vertex set (bit v for vertex v).
struct GraphCycle {
  Mask edges = 0;
  Mask vertices = 0;
};

/// Every cycle: loops, then 2-cycles, then (cycle kind) Hamiltonian cycles.
std::vector<GraphCycle> graph_cycles(const GGraph& g);

/// Edge sets of the balanced cycles, ascending.
struct LinearClass {
  std::vector<Mask> cycles;
  friend bool operator==(const LinearClass&, const LinearClass&) = default;
};

/// Checks that every member is a cycle of g and that no theta-subgraph holds
/// exactly two members. Returns the sorted, deduplicated class.
LinearClass validate_linear_class(const GGraph& g, LinearClass b);

/// Hamiltonian cycle of a cycle-kind graph. Bit i of `pick` chooses b_i over
/// a_i; every thin edge is included.
Mask hamiltonian(const GGraph& g, std::uint32_t pick);
LinearClass hamiltonian_class(const GGraph& g, const std::vector<std::uint32_t>& picks);

/// Circuits of the lift matroid straight from the three clause types:
/// balanced cycles, thetas with no balanced cycle, and pairs of unbalanced
/// edge-disjoint cycles meeting in at most one vertex.
SetFamily lift_circuits(const GGraph& g, const LinearClass& b);

/// The lift matroid, assembled from the sets that contain none of
/// `lift_circuits`. Throws InvalidLinearClass or TooLarge (n > 24).
Matroid lift_matroid(const GGraph& g, const LinearClass& b);

/// |V| minus the number of balanced components (the graphs are connected).
int lift_rank_formula(const GGraph& g, const LinearClass& b);

/// Graphic matroid: the lift in which every cycle is balanced.
Matroid cycle_matroid(const GGraph& g);

/// Pick vectors must be pairwise at Hamming distance >= 2.
bool picks_valid(int t, const std::vector<std::uint32_t>& picks);

/// A spike on the doubled t-cycle. Picks are stored sorted by their 0/1
/// string (character i is pick bit i).
struct SpikeSpec {
  int t = 0;
  std::vector<std::uint32_t> picks;
  friend bool operator==(const SpikeSpec&, const SpikeSpec&) = default;
};

std::string pick_string(std::uint32_t pick, int t);
std::uint32_t parse_pick(const std::string& text);
SpikeSpec make_spike_spec(int t, std::vector<std::uint32_t> picks);
GGraph spike_graph(int t);

Matroid spike(int t, const std::vector<std::uint32_t>& picks);
Matroid spike(const SpikeSpec& spec);

std::vector<std::uint32_t> dual_picks(const std::vector<std::uint32_t>& picks, int t);
/// dual(spike(t, B)) == spike(t, B*) with labels unchanged.
bool duality_check(const SpikeSpec& spec);

/// Cyclic flats of a spike from the closed-form list, sorted by flat mask.
std::vector<RankedFlat> spike_cyclic_flats(const SpikeSpec& spec);

struct ContractionLift {
  GGraph graph;          // input graph plus one loop
  LinearClass balanced;  // cycles whose edge set is a circuit of M
  std::vector<int> labels;  // labels[x]: edge of `graph` carrying element x of M
};

/// Given M with M/e equal to the cycle matroid of g (labels of M/e in order),
/// rebuilds M as a lift of g plus the loop e: lift_matroid(graph, balanced)
/// equals relabel(M, labels). Throws PremiseViolated otherwise.
ContractionLift lift_from_contraction(const Matroid& m, int e, const GGraph& g);

enum class Category { A, B, C, D, E, F };
char category_letter(Category c);

/// A cycle-kind graph with a family of balanced Hamiltonian picks.
struct PickFamily {
  GGraph graph;
  std::vector<std::uint32_t> picks;
};

PickFamily as_pick_family(const SpikeSpec& spec);

/// Canonical families of m >= 2 picks on t pairs, pairwise distance >= 2, one
/// per orbit of the pair permutations and a/b swaps. Each is described by the
/// counts of pair columns per agreement pattern with the last pick.
std::vector<std::vector<std::uint32_t>> canonical_pick_families(int t, int m);
std::uint64_t count_canonical_pick_families(int t, int m);

/// Isomorphism key for category-A lifts with at least two balanced cycles and
/// rank t+s >= 5.
struct GlanceKey {
  int p = 0;
  int s = 0;
  VennSignature sig;
  friend auto operator<=>(const GlanceKey&, const GlanceKey&) = default;
};

GlanceKey glance_signature(const PickFamily& f);
GlanceKey glance_signature(const SpikeSpec& spec);
bool glance_isomorphic(const PickFamily& a, const PickFamily& b);

/// Isomorphism classes of n-element members of S_k, generated per category
/// and deduplicated with the kernel. A class carries every category that
/// produced it.
class SkCatalog {
 public:
  struct Entry {
    Matroid matroid;
    unsigned categories = 0;  // bit c for Category c
    int balanced = 0;         // balanced cycles in the first description
    std::string description;
  };

  SkCatalog(int n, int k);

  int size() const { return n_; }
  int bound() const { return k_; }
  const std::vector<Entry>& classes() const { return classes_; }
  /// Alphabetically first category of the class containing m, if any.
  std::optional<Category> find(const Matroid& m) const;

 private:
  void add(const Matroid& m, Category c, int balanced, std::string description);

  int n_;
  int k_;
  std::vector<Entry> classes_;
  std::multimap<std::size_t, std::size_t> index_;  // invariant hash -> class
  std::vector<IsoInvariant> invariants_;
};

inline constexpr int kMaxCatalogSize = 14;

/// Category of the class containing m in S_k, or empty when m is not a member.
/// Requires n <= 14 (TooLargeForExact).
std::optional<Category> categorize(const Matroid& m, int k);

/// Membership in S_k backed by catalogs built on first use for each size.
MembershipPredicate sk_member(int k);

/// The five matroids outside every S_k, items (i)..(v).
std::vector<Matroid> camera_fixtures();

/// Variables of the bottom equation: subsets I of {1..k} with 1 <= |I| <= k-2.
std::vector<Mask> bottom_variables(int k);
void for_each_bottom_solution(int t, int k, const std::function<void(const CompositionSolution&)>& visit);
std::vector<CompositionSolution> bottom_solutions(int t, int k);
/// Solution count by dynamic programming over the variables.
long double count_bottom_solutions(int t, int k);
SpikeSpec bottom_construct(const CompositionSolution& phi, int t, int k);

enum class VerifyMode { Full, Structural };
/// Full: kernel excluded-minor check against S_k membership (2t <= 14).
/// Structural: t >= 5, more than k picks, pairwise distance >= 2, and every
/// element lies in between 1 and k of the picked cycles.
bool verify_sk_excluded_minor(const SpikeSpec& spec, int k, VerifyMode mode);

std::uint64_t census_sk_exact(int n, int k);

struct StrataRow {
  int n = 0;
  int k = 0;
  Category category = Category::A;
  int r = 0;
  int m = 0;
  std::uint64_t count = 0;
  bool exact = false;
  friend bool operator==(const StrataRow&, const StrataRow&) = default;
};

/// Parameter-tuple counts per (category, rank, balanced cycles). The total is
/// an upper bound for the number of classes: overlaps between categories and
/// coinciding tuples are not subtracted. Even sizes only (OddSize).
std::vector<StrataRow> census_sk_strata(int n, int k);
/// Exact class counts per (first category, rank, balanced cycles), n <= 12.
std::vector<StrataRow> census_sk_exact_rows(int n, int k);
std::uint64_t strata_total(const std::vector<StrataRow>& rows);

}  // namespace fractal
