// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "fractal/biased_lift.hpp"
#include "fractal/gamma.hpp"
#include "fractal/parallel.hpp"
#include "fractal/sparse_paving.hpp"
#include "oracles.hpp"

using namespace fractal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("criterion %2d %s: %s; %s; %.1fs (limit %.0fs)\n", id, pass ? "PASS" : "FAIL", title, o.detail.c_str(),
              secs, limit_s);
  std::fflush(stdout);
}

std::vector<std::vector<std::uint32_t>> spike_families(int t) {
  std::vector<std::vector<std::uint32_t>> out{{}, {0}};
  for (int w = 2; w <= t; ++w) out.push_back({0, static_cast<std::uint32_t>(full_mask(w))});
  return out;
}

bool circuit_axioms(const std::vector<Mask>& circuits) {
  for (Mask a : circuits) {
    if (a == 0) return false;
    for (Mask b : circuits) {
      if (a == b) continue;
      if ((a & ~b) == 0) return false;
      for (int e : elements_of(a & b)) {
        const Mask u = (a | b) & ~(Mask{1} << e);
        bool found = false;
        for (Mask c : circuits) found = found || (c & ~u) == 0;
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<Mask> ch_scan(const Matroid& m) {
  const auto hyp = oracle::hyperplanes(m);
  std::vector<Mask> out;
  for (Mask c : oracle::circuits(m)) {
    if (std::binary_search(hyp.begin(), hyp.end(), c)) out.push_back(c);
  }
  return out;
}

std::string gamma_tables() {
  std::ostringstream out;
  write_gamma_csv(out, gamma_pk_table(3, 8, 14));
  write_gamma_csv(out, gamma_sk_table(2, 6, 10));
  return out.str();
}

}  // namespace

int main() {
  report(1, "circuit-hyperplane signatures match kernel isomorphism, n <= 8, k <= 3", 180, [] {
    std::uint64_t families = 0;
    std::uint64_t disagreements = 0;
    for (int n = 1; n <= 8; ++n) {
      for (int r = 0; r <= n; ++r) {
        const int cap = (r == 0 || r == n) ? 0 : 3;
        std::map<std::pair<int, std::vector<int>>, CHFamily> reps;
        std::map<std::pair<int, std::vector<int>>, Matroid> rep_matroids;
        oracle::for_each_family(n, r, cap, [&](const std::vector<Mask>& chs) {
          ++families;
          const CHFamily f{n, r, chs};
          const auto key = std::make_pair(f.k(), canonical_signature(f).cells);
          const Matroid m = ch_to_matroid(f);
          const auto it = reps.find(key);
          if (it == reps.end()) {
            reps.emplace(key, f);
            rep_matroids.emplace(key, m);
            return;
          }
          if (ch_isomorphic(f, it->second) != is_isomorphic(m, rep_matroids.at(key))) ++disagreements;
        });
        std::vector<std::pair<CHFamily, Matroid>> list;
        for (const auto& [key, f] : reps) list.emplace_back(f, rep_matroids.at(key));
        for (std::size_t i = 0; i < list.size(); ++i) {
          for (std::size_t j = i + 1; j < list.size(); ++j) {
            if (ch_isomorphic(list[i].first, list[j].first) != is_isomorphic(list[i].second, list[j].second)) {
              ++disagreements;
            }
          }
        }
      }
    }
    return Outcome{disagreements == 0, std::to_string(families) + " labelled families, " +
                                           std::to_string(disagreements) + " disagreements"};
  });

  report(2, "signature counts equal C(n+2^m-1, 2^m-1) for m <= 3, n <= 20", 1, [] {
    int mismatches = 0;
    int checked = 0;
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 20; ++n) {
        std::uint64_t count = 0;
        for_each_signature(m, n, [](Mask) { return true; }, [&](const VennSignature&) { ++count; });
        if (count != binomial(n + (1 << m) - 1, (1 << m) - 1)) ++mismatches;
        ++checked;
      }
    }
    return Outcome{mismatches == 0, std::to_string(checked) + " (m, n) pairs, " + std::to_string(mismatches) +
                                        " mismatches"};
  });

  report(3, "collar constructions are excluded minors for P_3, n in [8, 16]", 120, [] {
    const int k = 3;
    const auto member = pk_member(k);
    bool ok = collar_variables(k).size() == 10;
    std::uint64_t total = 0;
    std::uint64_t failed = 0;
    std::string counts;
    for (int n = 8; n <= 16; ++n) {
      const auto sols = collar_solutions(n, k);
      std::set<std::vector<int>> classes;
      std::vector<CHFamily> outputs(sols.size());
      std::vector<char> good(sols.size(), 0);
      parallel_for(sols.size(), [&](std::size_t i) {
        outputs[i] = collar_construct(sols[i], n, k);
        good[i] = is_excluded_minor(ch_to_matroid(outputs[i]), member) ? 1 : 0;
      });
      for (std::size_t i = 0; i < sols.size(); ++i) {
        failed += good[i] ? 0 : 1;
        classes.insert(canonical_signature(outputs[i]).cells);
      }
      total += sols.size();
      const std::uint64_t need = (sols.size() + 23) / 24;
      ok = ok && classes.size() >= need;
      counts += (counts.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(sols.size()) + "/" +
                std::to_string(classes.size());
    }
    return Outcome{ok && failed == 0, std::to_string(total) + " constructions, " + std::to_string(failed) +
                                          " failed, 10 variables, solutions/classes " + counts};
  });

  report(4, "census_pk equals the labelled census, n <= 8, k <= 3", 300, [] {
    int mismatches = 0;
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= 3; ++k) {
        const auto rows = census_pk(n, k);
        const auto want = oracle::labelled_census(n, k);
        for (int m = 0; m <= k; ++m) {
          if (rows.at(m).count != want.at(m)) ++mismatches;
        }
      }
    }
    return Outcome{mismatches == 0, "36 (n, k) pairs, " + std::to_string(mismatches) + " stratum mismatches"};
  });

  report(5, "spike structure for t in [3, 6], |B| <= 2", 180, [] {
    int checked = 0;
    int bad = 0;
    for (int t = 3; t <= 6; ++t) {
      for (const auto& picks : spike_families(t)) {
        const SpikeSpec spec = make_spike_spec(t, picks);
        const Matroid m = spike(spec);
        bool ok = circuit_axioms(oracle::circuits(m));
        ok = ok && make_matroid(m.size(), make_set_family(m.size(), m.bases())) == m;
        ok = ok && spike_cyclic_flats(spec) == oracle::cyclic_flats(m);
        ok = ok && duality_check(spec);
        if (t >= 5) {
          std::vector<Mask> want;
          for (std::uint32_t p : spec.picks) want.push_back(hamiltonian(spike_graph(t), p));
          std::sort(want.begin(), want.end());
          ok = ok && ch_scan(m) == want;
        }
        ++checked;
        bad += ok ? 0 : 1;
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " spikes, " + std::to_string(bad) + " failures"};
  });

  report(6, "camera fixtures are not members for k in [0, 5]", 60, [] {
    int members = 0;
    for (int k = 0; k <= 5; ++k) {
      for (const auto& m : camera_fixtures()) members += categorize(m, k).has_value() ? 1 : 0;
    }
    return Outcome{members == 0, "30 queries, " + std::to_string(members) + " reported as members"};
  });

  report(7, "glance keys match kernel isomorphism, r in {5, 6}, m in {2, 3}", 300, [] {
    std::uint64_t families = 0;
    std::uint64_t disagreements = 0;
    for (int t = 5; t <= 6; ++t) {
      for (int m = 2; m <= 3; ++m) {
        std::vector<std::vector<std::uint32_t>> all;
        std::vector<std::uint32_t> cur;
        const auto rec = [&](auto&& self, std::uint32_t from) -> void {
          if (static_cast<int>(cur.size()) == m) {
            all.push_back(cur);
            return;
          }
          for (std::uint32_t p = from; p < (1U << t); ++p) {
            bool ok = true;
            for (std::uint32_t q : cur) ok = ok && std::popcount(p ^ q) >= 2;
            if (!ok) continue;
            cur.push_back(p);
            self(self, p + 1);
            cur.pop_back();
          }
        };
        rec(rec, 0);
        families += all.size();
        std::map<GlanceKey, std::size_t> first;
        for (std::size_t i = 0; i < all.size(); ++i) first.emplace(glance_signature(make_spike_spec(t, all[i])), i);
        std::vector<char> agree(all.size(), 1);
        parallel_for(all.size(), [&](std::size_t i) {
          const PickFamily f{spike_graph(t), all[i]};
          const std::size_t j = first.at(glance_signature(f));
          if (i == j) return;
          const PickFamily g{spike_graph(t), all[j]};
          agree[i] = glance_isomorphic(f, g) == is_isomorphic(spike(t, all[i]), spike(t, all[j]));
        });
        for (char a : agree) disagreements += a ? 0 : 1;
        std::vector<std::size_t> reps;
        for (const auto& [key, i] : first) reps.push_back(i);
        for (std::size_t a = 0; a < reps.size(); ++a) {
          for (std::size_t b = a + 1; b < reps.size(); ++b) {
            const PickFamily f{spike_graph(t), all[reps[a]]};
            const PickFamily g{spike_graph(t), all[reps[b]]};
            if (glance_isomorphic(f, g) != is_isomorphic(spike(t, f.picks), spike(t, g.picks))) ++disagreements;
          }
        }
      }
    }
    return Outcome{disagreements == 0, std::to_string(families) + " labelled families, " +
                                           std::to_string(disagreements) + " disagreements"};
  });

  report(8, "bottom constructions are excluded minors for S_2; k = 5, t = 12 has one solution", 600, [] {
    bool ok = true;
    std::string detail;
    for (int t = 6; t <= 8; ++t) {
      const VerifyMode mode = t <= 7 ? VerifyMode::Full : VerifyMode::Structural;
      int count = 0;
      int passed = 0;
      for_each_bottom_solution(t, 2, [&](const CompositionSolution& phi) {
        const SpikeSpec spec = bottom_construct(phi, t, 2);
        ++count;
        const bool good = verify_sk_excluded_minor(spec, 2, mode) && spike(spec).size() % 2 == 0;
        passed += good ? 1 : 0;
      });
      ok = ok && passed == count;
      detail += "k=2 t=" + std::to_string(t) + (mode == VerifyMode::Full ? " full " : " structural ") +
                std::to_string(passed) + "/" + std::to_string(count) + "; ";
    }
    const auto sols = bottom_solutions(12, 5);
    const bool one = sols.size() == 1 && binomial(24, 24) == 1;
    const SpikeSpec witness = bottom_construct(sols.front(), 12, 5);
    const bool structural = verify_sk_excluded_minor(witness, 5, VerifyMode::Structural) && 2 * witness.t % 2 == 0;
    detail += "k=5 t=12 solutions " + std::to_string(sols.size()) + ", witness " + (structural ? "passes" : "fails");
    return Outcome{ok && one && structural, detail};
  });

  report(9, "log-log slopes of the composition counts", 10, [] {
    std::vector<std::pair<double, long double>> collar;
    for (int n = 60; n <= 300; ++n) collar.emplace_back(n, count_collar_solutions(n, 3));
    std::vector<std::pair<double, long double>> bottom;
    for (int t = 50; t <= 200; ++t) bottom.emplace_back(t, count_bottom_solutions(t, 5));
    const double s1 = slope_fit(collar, 60, 300).exponent;
    const double s2 = slope_fit(bottom, 50, 200).exponent;
    char buf[128];
    std::snprintf(buf, sizeof buf, "collar k=3 slope %.3f (target 9), bottom k=5 slope %.3f (target 24)", s1, s2);
    return Outcome{std::abs(s1 - 9) <= 1.0 && std::abs(s2 - 24) <= 1.0, buf};
  });

  report(10, "gamma tables are exact, flagged and thread-independent", 600, [] {
    const auto pk = gamma_pk_table(3, 8, 14);
    const auto sk = gamma_sk_table(2, 6, 10);
    bool ok = pk.size() == 7 && sk.size() == 5;
    for (const auto* rows : {&pk, &sk}) {
      for (const auto& r : *rows) {
        ok = ok && (r.m_mode == "exact" || r.m_mode == "upper") && (r.x_mode == "exact" || r.x_mode == "lower");
        ok = ok && r.gamma_num * (r.m_count + r.x_count) == r.x_count * r.gamma_den && r.gamma() < 1.0;
      }
    }
    setenv("FRACTAL_THREADS", "1", 1);
    const std::string single = gamma_tables();
    setenv("FRACTAL_THREADS", "4", 1);
    const std::string multi = gamma_tables();
    unsetenv("FRACTAL_THREADS");
    const bool same = single == multi;
    return Outcome{ok && same, std::to_string(pk.size() + sk.size()) + " rows, identity " + (ok ? "holds" : "broken") +
                                   ", 1-thread vs 4-thread output " + (same ? "identical" : "differs")};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
