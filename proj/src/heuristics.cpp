#include "rainbow/heuristics.hpp"

#include "rainbow/rng.hpp"

#include <algorithm>
#include <deque>

namespace rainbow {

const char* method_name(Method m) {
  switch (m) {
    case Method::greedy: return "greedy";
    case Method::maximalize: return "maximalize";
    case Method::ladder: return "ladder";
    case Method::naive: return "naive";
    case Method::exact: return "exact";
  }
  return "?";
}

Path replay_trace(const ColoredGraph& g, const std::vector<int>& initial,
                  const std::vector<Move>& trace) {
  std::deque<int> v(initial.begin(), initial.end());
  for (const Move& m : trace) {
    switch (m.kind) {
      case Move::Kind::extend_start:
        v.push_front(m.value);
        break;
      case Move::Kind::extend_end:
        v.push_back(m.value);
        break;
      case Move::Kind::rotate: {
        if (m.value < 1 || static_cast<std::size_t>(m.value) > v.size())
          throw std::invalid_argument("trace rotation out of range");
        std::reverse(v.begin(), v.begin() + m.value);
        break;
      }
    }
  }
  return Path(g, std::vector<int>(v.begin(), v.end()));
}

namespace {

int count_saturated(const std::vector<int>& cnt, int k) {
  int s = 0;
  for (int c : cnt)
    if (c == k) ++s;
  return s;
}

void check_vertex(const ColoredGraph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("start vertex out of range");
}

}  // namespace

SolveReport greedy_extend(const ColoredGraph& g, int start, int k) {
  check_vertex(g, start);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > kMaxMultiplicityBound) throw std::invalid_argument("k exceeds the multiplicity cap");
  int n = g.n();

  std::vector<int> verts{start};
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  on[static_cast<std::size_t>(start)] = 1;
  std::vector<int> cnt(static_cast<std::size_t>(g.palette_size()), 0);
  std::vector<Move> trace;

  for (;;) {
    int end = verts.back();
    int pick = -1;
    for (int r = 0; r < n; ++r) {
      if (on[static_cast<std::size_t>(r)]) continue;
      if (cnt[g.color_index(end, r)] < k) {
        pick = r;
        break;
      }
    }
    if (pick < 0) break;
    ++cnt[g.color_index(end, pick)];
    verts.push_back(pick);
    on[static_cast<std::size_t>(pick)] = 1;
    trace.push_back(Move::extend_end(pick));
  }

  SolveReport rep{Path(g, verts), Method::greedy, k};
  rep.certificate = maximality_certificate(rep.path, k);
  rep.c_k_size = count_saturated(cnt, k);
  rep.trace = std::move(trace);
  rep.guaranteed_bound = (k == 1) ? Rational(n + 1, 2) : Rational(1);
  rep.initial_vertices = {start};
  if (Rational(rep.path.size()) < rep.guaranteed_bound)
    throw std::logic_error("greedy_extend fell below its guarantee");
  return rep;
}

SolveReport maximalize(const ColoredGraph& g, const Path& p0, int k) {
  if (&p0.graph() != &g) throw std::invalid_argument("path belongs to another graph");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > kMaxMultiplicityBound) throw std::invalid_argument("k exceeds the multiplicity cap");
  if (!is_k_rainbow(p0, k)) throw std::invalid_argument("initial path is not k-rainbow");
  bool lemma1_applies = is_k_rainbow(p0, k - 1);

  int n = g.n();
  int palette = g.palette_size();
  std::vector<int> verts = p0.vertices();
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  for (int v : verts) on[static_cast<std::size_t>(v)] = 1;
  std::vector<int> cnt(static_cast<std::size_t>(palette), 0);
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) ++cnt[g.color_index(verts[i], verts[i + 1])];
  std::vector<Move> trace;

  // end_with[idx] = lowest off-path r with c(p_t, r) of that color, else -1;
  // rebuilt each iteration.
  std::vector<int> end_with(static_cast<std::size_t>(palette), -1);

  for (;;) {
    int t = static_cast<int>(verts.size());
    int p1 = verts.front();
    int pt = verts.back();

    // Case 1: extend at the start with an unsaturated color.
    int pick = -1;
    for (int r = 0; r < n; ++r) {
      if (on[static_cast<std::size_t>(r)]) continue;
      if (cnt[g.color_index(p1, r)] < k) {
        pick = r;
        break;
      }
    }
    if (pick >= 0) {
      ++cnt[g.color_index(p1, pick)];
      verts.insert(verts.begin(), pick);
      on[static_cast<std::size_t>(pick)] = 1;
      trace.push_back(Move::extend_start(pick));
      continue;
    }

    // Case 2: extend at the end with an unsaturated color.
    for (int r = 0; r < n; ++r) {
      if (on[static_cast<std::size_t>(r)]) continue;
      if (cnt[g.color_index(pt, r)] < k) {
        pick = r;
        break;
      }
    }
    if (pick >= 0) {
      ++cnt[g.color_index(pt, pick)];
      verts.push_back(pick);
      on[static_cast<std::size_t>(pick)] = 1;
      trace.push_back(Move::extend_end(pick));
      continue;
    }

    // Case 3: some end edge color is saturated but rotation-releasable:
    // find the lowest position i with c(p_i, p_{i+1}) saturated, equal to
    // some end edge color c(p_t, r), and with c(p_1, p_{i+1}) unsaturated.
    std::fill(end_with.begin(), end_with.end(), -1);
    for (int r = n - 1; r >= 0; --r) {
      if (on[static_cast<std::size_t>(r)]) continue;
      end_with[g.color_index(pt, r)] = r;  // descending loop leaves the lowest r
    }
    int rot_pos = -1;
    int ext = -1;
    for (int i = 1; i < t; ++i) {
      int edge_idx = g.color_index(verts[i - 1], verts[i]);
      if (cnt[edge_idx] != k) continue;
      if (cnt[g.color_index(p1, verts[i])] == k) continue;
      if (end_with[edge_idx] < 0) continue;
      rot_pos = i;
      ext = end_with[edge_idx];
      break;
    }
    if (rot_pos < 0) break;  // maximal

    // rotate: drop edge (p_i, p_{i+1}), add (p_1, p_{i+1})
    --cnt[g.color_index(verts[rot_pos - 1], verts[rot_pos])];
    ++cnt[g.color_index(p1, verts[rot_pos])];
    std::reverse(verts.begin(), verts.begin() + rot_pos);
    trace.push_back(Move::rotate(rot_pos));
    // extend at the (unchanged) end
    ++cnt[g.color_index(verts.back(), ext)];
    verts.push_back(ext);
    on[static_cast<std::size_t>(ext)] = 1;
    trace.push_back(Move::extend_end(ext));
  }

  SolveReport rep{Path(g, verts), Method::maximalize, k};
  rep.certificate = maximality_certificate(rep.path, k);
  rep.c_k_size = count_saturated(cnt, k);
  rep.trace = std::move(trace);
  rep.initial_vertices = p0.vertices();

  int t = rep.path.size();
  if (!rep.certificate.start_condition || !rep.certificate.end_condition)
    throw std::logic_error("maximalize terminated on a non-maximal path");
  if (rep.c_k_size < (static_cast<long long>(k) + 1) * (n - t))
    throw std::logic_error("maximalize violated |C_k| >= (k+1)(n-t)");
  if (lemma1_applies && rep.c_k_size > t - p0.size())
    throw std::logic_error("maximalize violated |C_k| <= t - t0");
  if (k == 1 && Rational(t) < Rational(2 * n + 1, 3))
    throw std::logic_error("maximalize fell below (2n+1)/3");

  if (k == 1)
    rep.guaranteed_bound = Rational(2 * n + 1, 3);
  else if (lemma1_applies)
    rep.guaranteed_bound =
        Rational(p0.size() + (static_cast<long long>(k) + 1) * n, k + 2);
  else
    rep.guaranteed_bound = Rational(1);
  if (Rational(t) < rep.guaranteed_bound)
    throw std::logic_error("maximalize fell below its guarantee");
  return rep;
}

SolveReport maximalize_restarts(const ColoredGraph& g, int k, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  Rng rng(seed);
  std::optional<SolveReport> best;
  for (int i = 0; i < restarts; ++i) {
    int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
    SolveReport rep = maximalize(g, Path(g, {start}), k);
    if (!best || rep.path.size() > best->path.size()) best = std::move(rep);
  }
  return *best;
}

std::vector<SolveReport> ladder(const ColoredGraph& g, int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  checked_factorial(k_max + 2);  // reject up front what the bound check cannot represent
  int n = g.n();

  SolveReport seed = greedy_extend(g, 0, 1);
  for (int s = 1; s < n; ++s) {
    SolveReport cand = greedy_extend(g, s, 1);
    if (cand.path.size() > seed.path.size()) seed = std::move(cand);
  }

  std::vector<SolveReport> reports;
  reports.push_back(maximalize(g, seed.path, 1));
  reports.back().method = Method::ladder;
  for (int k = 2; k <= k_max; ++k) {
    reports.push_back(maximalize(g, reports.back().path, k));
    reports.back().method = Method::ladder;
  }

  for (int k = 1; k <= k_max; ++k) {
    long long t_k = reports[static_cast<std::size_t>(k) - 1].path.size();
    long long fact = checked_factorial(k + 2);
    // t_k >= (1 - 2/(k+2)!) n, compared exactly in 128 bits
    if (static_cast<__int128>(t_k) * fact < static_cast<__int128>(n) * (fact - 2))
      throw std::logic_error("ladder violated t_k >= (1 - 2/(k+2)!) n");
    if (k >= 2 && t_k < reports[static_cast<std::size_t>(k) - 2].path.size())
      throw std::logic_error("ladder lost monotonicity");
  }
  return reports;
}

SolveReport naive_recursive(const ColoredGraph& g, int k, int start) {
  check_vertex(g, start);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > 30) throw std::invalid_argument("k too large for naive_recursive");
  int n = g.n();

  std::vector<int> verts{start};
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  on[static_cast<std::size_t>(start)] = 1;
  std::vector<Move> trace;

  // seg_stamp marks colors used by the current level.
  std::vector<int> seg_stamp(static_cast<std::size_t>(g.palette_size()), -1);
  for (int level = 0; level < k; ++level) {
    for (;;) {
      int end = verts.back();
      int pick = -1;
      for (int r = 0; r < n; ++r) {
        if (on[static_cast<std::size_t>(r)]) continue;
        if (seg_stamp[g.color_index(end, r)] != level) {
          pick = r;
          break;
        }
      }
      if (pick < 0) break;
      seg_stamp[g.color_index(end, pick)] = level;
      verts.push_back(pick);
      on[static_cast<std::size_t>(pick)] = 1;
      trace.push_back(Move::extend_end(pick));
    }
    if (static_cast<int>(verts.size()) == n) break;
  }

  SolveReport rep{Path(g, verts), Method::naive, k};
  if (!is_k_rainbow(rep.path, k)) throw std::logic_error("naive_recursive built a non-k-rainbow path");
  rep.certificate = maximality_certificate(rep.path, k);
  {
    auto stats = color_stats(rep.path, k);
    rep.c_k_size = static_cast<int>(stats.classes[static_cast<std::size_t>(k)].size());
  }
  rep.trace = std::move(trace);
  rep.initial_vertices = {start};
  long long pow2 = 1LL << k;
  rep.guaranteed_bound = Rational(static_cast<long long>(n) * (pow2 - 1), pow2);
  if (Rational(rep.path.size()) < rep.guaranteed_bound)
    throw std::logic_error("naive_recursive fell below n - n/2^k");
  return rep;
}

CycleCompletion complete_to_hamiltonian_cycle(const ColoredGraph& g, const Path& p) {
  if (&p.graph() != &g) throw std::invalid_argument("path belongs to another graph");
  if (!is_k_rainbow(p, 1))
    throw std::invalid_argument("complete_to_hamiltonian_cycle requires a rainbow path");
  int n = g.n();

  CycleCompletion out;
  out.cycle = p.vertices();
  for (int v = 0; v < n; ++v)
    if (!p.contains(v)) out.cycle.push_back(v);

  std::vector<char> seen(static_cast<std::size_t>(g.palette_size()), 0);
  int distinct = 0;
  if (n >= 2) {
    for (int i = 0; i < n; ++i) {
      int u = out.cycle[static_cast<std::size_t>(i)];
      int v = out.cycle[static_cast<std::size_t>((i + 1) % n)];
      if (u == v) continue;  // n == 1 has no edges
      int idx = g.color_index(u, v);
      if (!seen[idx]) {
        seen[idx] = 1;
        ++distinct;
      }
    }
  }
  out.distinct_colors = distinct;
  if (distinct < p.edge_count())
    throw std::logic_error("cycle completion lost path colors");
  return out;
}

}  // namespace rainbow
