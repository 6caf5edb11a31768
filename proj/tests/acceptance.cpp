// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Thresholds (lengths, certificate inequalities, time limits) are pinned
// here; a FAIL means the library broke a guarantee it is supposed to prove.

#include "rainbow/exact.hpp"
#include "rainbow/latin.hpp"
#include "rainbow/rng.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <string>
#include <vector>

using namespace rainbow;

namespace {

struct Outcome {
  bool pass = true;
  long failures = 0;
  std::string detail;

  void check(bool ok) {
    if (!ok) {
      pass = false;
      ++failures;
    }
  }
  void note(const std::string& s) { detail = s; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// criterion-3 instance sweep: 200 random (n in 4..200), mm m in 2..7,
// round robin even n in 4..200. A deque keeps element addresses stable, so
// reports that reference these graphs stay valid across criteria.
std::deque<ColoredGraph> make_c3_instances() {
  std::deque<ColoredGraph> out;
  for (int i = 0; i < 200; ++i) {
    int n = 4 + (i % 197);
    out.push_back(random_proper_coloring(n, 2000 + static_cast<std::uint64_t>(i)));
  }
  for (int m = 2; m <= 7; ++m) out.push_back(mm_coloring(m));
  for (int n = 4; n <= 200; n += 2) out.push_back(round_robin_coloring(n));
  return out;
}

Outcome criterion1() {
  Outcome out;
  auto t0 = Clock::now();
  out.check(has_hamiltonian_rainbow_path(mm_coloring(2)).outcome == HamOutcome::not_exists);
  double t_m2 = seconds_since(t0);
  out.check(t_m2 < 1.0);

  auto t1 = Clock::now();
  out.check(has_hamiltonian_rainbow_path(mm_coloring(3)).outcome == HamOutcome::not_exists);
  double t_m3 = seconds_since(t1);
  out.check(t_m3 < 300.0);

  SolveReport r = max_k_rainbow_path_exact(mm_coloring(2), 1);
  out.check(r.exhaustive);
  out.check(r.path.size() == 3);

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "XOR colorings have no Hamiltonian rainbow path (m=2 %.3fs, m=3 %.3fs); "
                "exact optimum on n=4 is 3 vertices",
                t_m2, t_m3);
  out.note(buf);
  return out;
}

Outcome criterion2() {
  Outcome out;
  auto t0 = Clock::now();
  for (int i = 0; i < 100; ++i) {
    int n = 10 + (i % 51);
    ColoredGraph g = random_proper_coloring(n, 1000 + static_cast<std::uint64_t>(i));
    long long need = Rational(n + 1, 2).ceil_val();
    for (int s = 0; s < n; ++s)
      out.check(greedy_extend(g, s, 1).path.size() >= need);
  }
  double secs = seconds_since(t0);
  out.check(secs < 10.0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "greedy from every start reaches ceil((n+1)/2) on 100 instances (%.2fs)", secs);
  out.note(buf);
  return out;
}

Outcome criterion3(const std::deque<ColoredGraph>& instances,
                   std::vector<SolveReport>& paths_out) {
  Outcome out;
  auto t0 = Clock::now();
  for (const ColoredGraph& g : instances) {
    SolveReport r = maximalize(g, Path(g, {0}), 1);
    out.check(r.path.size() >= Rational(2 * g.n() + 1, 3).ceil_val());
    paths_out.push_back(std::move(r));
  }
  double secs = seconds_since(t0);
  out.check(secs < 60.0);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "maximalize reaches ceil((2n+1)/3) on %zu instances (%.2fs)",
                instances.size(), secs);
  out.note(buf);
  return out;
}

Outcome criterion4_and_5(const std::deque<ColoredGraph>& instances,
                         const std::vector<SolveReport>& c3_paths, Outcome& lemma2_out) {
  // criterion 4: |C_k(P_k)| <= t_k - t_{k-1} on every ladder step k >= 2
  // criterion 5: |C_k(P)| >= (k+1)(n - t) on every maximalize output
  Outcome out;
  for (const SolveReport& r : c3_paths) {
    int n = r.path.graph().n();
    lemma2_out.check(r.c_k_size >= (r.k + 1) * (n - r.path.size()));
  }
  long steps = 0;
  for (const ColoredGraph& g : instances) {
    auto reports = ladder(g, 3);
    for (std::size_t k = 1; k < reports.size(); ++k) {
      int tk = reports[k].path.size();
      int tk1 = reports[k - 1].path.size();
      out.check(reports[k].c_k_size <= tk - tk1);
      lemma2_out.check(reports[k].c_k_size >=
                       (reports[k].k + 1) * (g.n() - reports[k].path.size()));
      ++steps;
    }
  }
  out.note("|C_k| <= t_k - t_{k-1} on " + std::to_string(steps) + " ladder steps");
  lemma2_out.note("|C_k| >= (k+1)(n-t) on every maximalize output");
  return out;
}

Outcome criterion6() {
  Outcome out;
  auto t0 = Clock::now();
  for (int n : {24, 120, 360}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ColoredGraph g = random_proper_coloring(n, seed);
      auto reports = ladder(g, 4);
      for (int k = 1; k <= 4; ++k) {
        long long fact = checked_factorial(k + 2);
        Rational bound = Rational(fact - 2, fact) * Rational(n);
        out.check(Rational(reports[static_cast<std::size_t>(k) - 1].path.size()) >= bound);
      }
    }
  }
  double secs = seconds_since(t0);
  out.check(secs < 120.0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "ladder t_k >= (1 - 2/(k+2)!)n for k=1..4, n in {24,120,360} x 10 seeds (%.2fs)",
                secs);
  out.note(buf);
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::vector<ColoredGraph> instances;
  instances.push_back(mm_coloring(4));
  instances.push_back(mm_coloring(6));
  instances.push_back(mm_coloring(8));
  for (int n : {16, 64, 256})
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      instances.push_back(random_proper_coloring(n, seed));
  for (const ColoredGraph& g : instances) {
    for (int k = 1; k <= 4; ++k) {
      SolveReport r = naive_recursive(g, k, 0);
      long long pow2 = 1LL << k;
      out.check(Rational(r.path.size()) >=
                Rational(static_cast<long long>(g.n()) * (pow2 - 1), pow2));
      out.check(is_k_rainbow(r.path, k));
    }
  }
  out.note("level-greedy paths reach n - n/2^k for k=1..4 on n in {16,64,256}");
  return out;
}

Outcome criterion8(const std::vector<SolveReport>& c3_paths) {
  Outcome out;
  for (const SolveReport& r : c3_paths) {
    CycleCompletion c = complete_to_hamiltonian_cycle(r.path.graph(), r.path);
    out.check(c.distinct_colors >= r.path.edge_count());
  }
  out.note("cycle completion keeps >= path-edge-count colors on every criterion-3 path");
  return out;
}

Outcome criterion9(double& min_ratio, int& min_ratio_n) {
  Outcome out;
  auto t0 = Clock::now();
  long solved = 0;
  auto run = [&](const ColoredGraph& g) {
    SolveReport exact = max_k_rainbow_path_exact(g, 1);
    SolveReport heur = maximalize(g, Path(g, {0}), 1);
    out.check(exact.exhaustive);
    out.check(exact.path.size() >= heur.path.size());
    out.check(exact.path.size() >= Rational(2 * g.n() + 1, 3).ceil_val());
    double ratio = static_cast<double>(exact.path.size()) / g.n();
    if (ratio < min_ratio) {
      min_ratio = ratio;
      min_ratio_n = g.n();
    }
    ++solved;
  };
  for (int n = 4; n <= 9; ++n)
    for (std::uint64_t seed = 1; seed <= 10; ++seed) run(random_proper_coloring(n, seed));
  for (int n = 4; n <= 9; n += 2) run(round_robin_coloring(n));
  run(mm_coloring(2));
  run(mm_coloring(3));
  double secs = seconds_since(t0);
  out.check(secs < 180.0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "exact optimum dominates the heuristic and ceil((2n+1)/3) on %ld instances "
                "(%.2fs)",
                solved, secs);
  out.note(buf);
  return out;
}

Outcome criterion10() {
  Outcome out;
  auto t0 = Clock::now();
  Rng rng(5150);
  for (int trial = 0; trial < 1000; ++trial) {
    int t = 1 + static_cast<int>(rng.below(100));
    int k = 1 + static_cast<int>(rng.below(6));
    std::vector<int> subset;
    for (int i = 1; i <= t; ++i)
      if (rng.coin()) subset.push_back(i);
    long long count = count_without_k_successor(subset, k, t);
    out.check(count * k <= k + t);  // count <= 1 + t/k
  }
  double secs = seconds_since(t0);
  out.check(secs < 1.0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "positions without a k-successor never exceed 1 + t/k on 1000 subsets (%.3fs)",
                secs);
  out.note(buf);
  return out;
}

Outcome criterion11() {
  Outcome out;
  auto t0 = Clock::now();
  for (int n = 2; n <= 20; n += 2) {
    ColoredGraph g = round_robin_coloring(n);
    LatinSquare sq = coloring_to_latin(g);
    out.check(!validate_latin(sq).has_value());
    out.check(latin_to_coloring(sq) == g);
  }
  int mapped = 0;
  for (int n : {4, 6, 8}) {
    LatinSquare sq = coloring_to_latin(round_robin_coloring(n));
    TransversalResult res = find_transversal(sq);
    out.check(res.status != SearchStatus::budget_exhausted);
    if (res.status != SearchStatus::found) continue;
    // the mapping throws on any broken invariant (rainbow, 2-regular, coverage)
    try {
      RainbowSubgraph sub = transversal_to_rainbow_subgraph(sq, *res.transversal);
      out.check(static_cast<int>(sub.edges.size()) >= n - 1);
      ++mapped;
    } catch (const std::exception&) {
      out.check(false);
    }
  }
  out.check(find_transversal(cyclic_latin(5)).status == SearchStatus::found);
  out.check(find_transversal(cyclic_latin(2)).status == SearchStatus::none);
  double secs = seconds_since(t0);
  out.check(secs < 30.0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "Latin bridge: squares validate, round-trip, %d transversal(s) mapped to "
                "rainbow 2-regular subgraphs (%.2fs)",
                mapped, secs);
  out.note(buf);
  return out;
}

Outcome criterion12(double min_ratio, int min_ratio_n) {
  // The (3/4 - o(1))n guarantee is asymptotic with an unspecified onset and a
  // non-constructive argument behind it; desk-scale runs only record ratios,
  // no 3/4 inequality is asserted.
  Outcome out;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "asymptotic 3/4 bound recorded, not asserted: smallest exact optimum ratio "
                "seen at n<=9 is %.3f (n=%d); large-n ratios land in experiment datasets",
                min_ratio, min_ratio_n);
  out.note(buf);
  return out;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int idx, const char* name, const Outcome& o) {
    std::printf("[%s] C%-2d %s: %s\n", o.pass ? "PASS" : "FAIL", idx, name, o.detail.c_str());
    if (!o.pass) {
      std::printf("       %ld check(s) failed\n", o.failures);
      ++failed;
    }
  };

  try {
    report(1, "no-hamiltonian-rainbow-path", criterion1());
    report(2, "greedy-half-bound", criterion2());

    std::deque<ColoredGraph> c3_instances = make_c3_instances();
    std::vector<SolveReport> c3_paths;
    report(3, "maximalize-two-thirds-bound", criterion3(c3_instances, c3_paths));

    Outcome lemma2;
    Outcome lemma1 = criterion4_and_5(c3_instances, c3_paths, lemma2);
    report(4, "ladder-step-certificate", lemma1);
    report(5, "saturated-class-certificate", lemma2);

    report(6, "k-factorial-ladder-bound", criterion6());
    report(7, "level-greedy-bound", criterion7());
    report(8, "cycle-completion-colors", criterion8(c3_paths));

    double min_ratio = 2.0;
    int min_ratio_n = 0;
    report(9, "exact-oracle-dominance", criterion9(min_ratio, min_ratio_n));
    report(10, "k-successor-counting", criterion10());
    report(11, "latin-transversal-bridge", criterion11());
    report(12, "asymptotic-ratio-recorded", criterion12(min_ratio, min_ratio_n));
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }

  std::printf("acceptance: %d/12 criteria passed\n", 12 - failed);
  return failed == 0 ? 0 : 1;
}
