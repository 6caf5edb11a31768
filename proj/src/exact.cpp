#include "rainbow/exact.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>
#include <thread>

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  long long nodes_left = std::numeric_limits<long long>::max();
  bool timed = false;
  Clock::time_point deadline;
  bool exhausted = false;
  int tick = 0;

  static Budget from(const SearchLimits& limits) {
    Budget b;
    if (limits.node_budget) b.nodes_left = *limits.node_budget;
    if (limits.time_budget_ms) {
      b.timed = true;
      b.deadline = Clock::now() + std::chrono::milliseconds(*limits.time_budget_ms);
    }
    return b;
  }

  // true while the search may continue
  bool spend() {
    if (exhausted) return false;
    if (--nodes_left < 0) {
      exhausted = true;
      return false;
    }
    if (timed && (++tick & 0xfff) == 0 && Clock::now() >= deadline) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

void check_size(const ColoredGraph& g, const SearchLimits& limits) {
  bool has_budget = limits.node_budget.has_value() || limits.time_budget_ms.has_value();
  if (g.n() > limits.max_n && !has_budget)
    throw std::invalid_argument("n exceeds exhaustive search cap; set a budget to override");
}

struct PathSearch {
  const ColoredGraph& g;
  int k;
  Budget budget;
  std::vector<int> cur;
  std::vector<char> on;
  std::vector<int> cnt;
  int off;  // vertices not on cur
  std::vector<int> best;

  PathSearch(const ColoredGraph& graph, int kk, Budget b)
      : g(graph),
        k(kk),
        budget(b),
        on(static_cast<std::size_t>(graph.n()), 0),
        cnt(static_cast<std::size_t>(graph.palette_size()), 0),
        off(graph.n()) {}

  void dfs() {
    if (!budget.spend()) return;
    if (cur.size() > best.size() && cur.front() <= cur.back()) best = cur;
    // even taking every off-path vertex cannot beat the incumbent
    if (cur.size() + static_cast<std::size_t>(off) <= best.size()) return;
    int end = cur.back();
    for (int u = 0; u < g.n(); ++u) {
      if (on[static_cast<std::size_t>(u)]) continue;
      int idx = g.color_index(end, u);
      if (cnt[idx] >= k) continue;
      on[static_cast<std::size_t>(u)] = 1;
      ++cnt[idx];
      --off;
      cur.push_back(u);
      dfs();
      cur.pop_back();
      ++off;
      --cnt[idx];
      on[static_cast<std::size_t>(u)] = 0;
      if (budget.exhausted) return;
    }
  }

  void run_from(int s) {
    cur.assign(1, s);
    on.assign(static_cast<std::size_t>(g.n()), 0);
    on[static_cast<std::size_t>(s)] = 1;
    std::fill(cnt.begin(), cnt.end(), 0);
    off = g.n() - 1;
    dfs();
  }
};

SolveReport make_exact_report(const ColoredGraph& g, int k, std::vector<int> best,
                              bool exhaustive) {
  SolveReport rep{Path(g, std::move(best)), Method::exact, k};
  rep.certificate = maximality_certificate(rep.path, k);
  {
    auto stats = color_stats(rep.path, k);
    rep.c_k_size = static_cast<int>(stats.classes[static_cast<std::size_t>(k)].size());
  }
  rep.exhaustive = exhaustive;
  if (!exhaustive) {
    rep.guaranteed_bound = Rational(1);
    return rep;
  }
  long long n = g.n();
  Rational bound(2 * n + 1, 3);
  if (k >= 2) {
    // (1 - 2/(k+2)!) n is the stronger guarantee for k >= 2 when it fits
    try {
      long long fact = checked_factorial(k + 2);
      Rational kfact = Rational(fact - 2, fact) * Rational(n);
      if (kfact > bound) bound = kfact;
    } catch (const std::overflow_error&) {
    }
  }
  rep.guaranteed_bound = bound;
  return rep;
}

}  // namespace

SolveReport max_k_rainbow_path_exact(const ColoredGraph& g, int k, const SearchLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > kMaxMultiplicityBound) throw std::invalid_argument("k exceeds the multiplicity cap");
  check_size(g, limits);
  int n = g.n();
  bool has_budget = limits.node_budget.has_value() || limits.time_budget_ms.has_value();

  if (limits.parallel && !has_budget && n > 1) {
    // Contiguous chunks of start vertices, one task each. Within a task the
    // incumbent carries over between starts, and tasks merge in chunk order
    // with strict improvement, which reproduces the sequential result.
    int tasks = static_cast<int>(std::thread::hardware_concurrency());
    tasks = std::clamp(tasks, 1, n);
    std::vector<std::future<std::vector<int>>> futs;
    futs.reserve(static_cast<std::size_t>(tasks));
    for (int chunk = 0; chunk < tasks; ++chunk) {
      int lo = static_cast<int>(static_cast<long long>(n) * chunk / tasks);
      int hi = static_cast<int>(static_cast<long long>(n) * (chunk + 1) / tasks);
      futs.push_back(std::async(std::launch::async, [&g, k, lo, hi] {
        PathSearch ps(g, k, Budget{});
        std::vector<int> chunk_best;
        for (int s = lo; s < hi; ++s) {
          ps.best = chunk_best;
          ps.run_from(s);
          if (ps.best.size() > chunk_best.size()) chunk_best = ps.best;
        }
        return chunk_best;
      }));
    }
    std::vector<int> best{0};
    for (auto& f : futs) {
      std::vector<int> cand = f.get();
      if (cand.size() > best.size()) best = std::move(cand);
    }
    return make_exact_report(g, k, std::move(best), true);
  }

  PathSearch ps(g, k, Budget::from(limits));
  std::vector<int> best{0};
  for (int s = 0; s < n && !ps.budget.exhausted; ++s) {
    ps.best = best;
    ps.run_from(s);
    if (ps.best.size() > best.size()) best = ps.best;
  }
  return make_exact_report(g, k, std::move(best), !ps.budget.exhausted);
}

namespace {

struct HamSearch {
  const ColoredGraph& g;
  Budget budget;
  std::vector<int> cur;
  std::vector<char> on;
  std::vector<char> used;
  bool found = false;

  HamSearch(const ColoredGraph& graph, Budget b)
      : g(graph),
        budget(b),
        on(static_cast<std::size_t>(graph.n()), 0),
        used(static_cast<std::size_t>(graph.palette_size()), 0) {}

  void dfs() {
    if (found || !budget.spend()) return;
    if (static_cast<int>(cur.size()) == g.n()) {
      found = true;
      return;
    }
    int end = cur.back();
    for (int u = 0; u < g.n() && !found; ++u) {
      if (on[static_cast<std::size_t>(u)]) continue;
      int idx = g.color_index(end, u);
      if (used[idx]) continue;
      on[static_cast<std::size_t>(u)] = 1;
      used[idx] = 1;
      cur.push_back(u);
      dfs();
      if (found) return;  // keep the witness on cur
      cur.pop_back();
      used[idx] = 0;
      on[static_cast<std::size_t>(u)] = 0;
      if (budget.exhausted) return;
    }
  }
};

}  // namespace

HamiltonianRainbowResult has_hamiltonian_rainbow_path(const ColoredGraph& g,
                                                      const SearchLimits& limits) {
  check_size(g, limits);
  HamSearch hs(g, Budget::from(limits));
  for (int s = 0; s < g.n() && !hs.found && !hs.budget.exhausted; ++s) {
    hs.cur.assign(1, s);
    std::fill(hs.on.begin(), hs.on.end(), 0);
    hs.on[static_cast<std::size_t>(s)] = 1;
    std::fill(hs.used.begin(), hs.used.end(), 0);
    hs.dfs();
  }
  if (hs.found) return {HamOutcome::exists, Path(g, hs.cur)};
  if (hs.budget.exhausted) return {HamOutcome::budget_exhausted, std::nullopt};
  return {HamOutcome::not_exists, std::nullopt};
}

namespace {

struct CycleSearch {
  const ColoredGraph& g;
  Budget budget;
  std::vector<int> cur;
  std::vector<char> on;
  std::vector<char> used;
  int avail;  // unused vertices above the anchor
  std::vector<int> best;

  CycleSearch(const ColoredGraph& graph, Budget b)
      : g(graph),
        budget(b),
        on(static_cast<std::size_t>(graph.n()), 0),
        used(static_cast<std::size_t>(graph.palette_size()), 0),
        avail(0) {}

  // anchor = cur.front() is the smallest cycle vertex; only larger vertices
  // may join, and cur[1] < cur.back() when closing kills the mirror copy.
  void dfs() {
    if (!budget.spend()) return;
    int anchor = cur.front();
    int end = cur.back();
    if (cur.size() >= 3 && cur[1] < end) {
      int close = g.color_index(end, anchor);
      if (!used[close] && cur.size() > best.size()) best = cur;
    }
    if (cur.size() + static_cast<std::size_t>(avail) <= best.size()) return;
    for (int u = anchor + 1; u < g.n(); ++u) {
      if (on[static_cast<std::size_t>(u)]) continue;
      int idx = g.color_index(end, u);
      if (used[idx]) continue;
      on[static_cast<std::size_t>(u)] = 1;
      used[idx] = 1;
      --avail;
      cur.push_back(u);
      dfs();
      cur.pop_back();
      ++avail;
      used[idx] = 0;
      on[static_cast<std::size_t>(u)] = 0;
      if (budget.exhausted) return;
    }
  }
};

}  // namespace

CycleSearchResult max_rainbow_cycle_exact(const ColoredGraph& g, const SearchLimits& limits) {
  if (g.n() < 3) throw std::invalid_argument("cycles need n >= 3");
  check_size(g, limits);
  CycleSearch cs(g, Budget::from(limits));
  std::vector<int> best;
  for (int s = 0; s + 2 < g.n() && !cs.budget.exhausted; ++s) {
    cs.cur.assign(1, s);
    std::fill(cs.on.begin(), cs.on.end(), 0);
    cs.on[static_cast<std::size_t>(s)] = 1;
    std::fill(cs.used.begin(), cs.used.end(), 0);
    cs.avail = g.n() - 1 - s;
    cs.best = best;
    cs.dfs();
    if (cs.best.size() > best.size()) best = cs.best;
  }
  return {std::move(best), !cs.budget.exhausted};
}

}  // namespace rainbow
