#pragma once

#include "rainbow/path.hpp"

#include <cstdint>
#include <vector>

namespace rainbow {

enum class Method { greedy, maximalize, ladder, naive, exact };
const char* method_name(Method m);

// One solver step. value is a vertex for the extend moves and a 1-based
// position for rotate.
struct Move {
  enum class Kind { extend_start, extend_end, rotate };
  Kind kind;
  int value;

  static Move extend_start(int v) { return {Kind::extend_start, v}; }
  static Move extend_end(int v) { return {Kind::extend_end, v}; }
  static Move rotate(int i) { return {Kind::rotate, i}; }
};

struct SolveReport {
  SolveReport(Path p, Method m, int kk) : path(std::move(p)), method(m), k(kk) {}

  Path path;
  Method method;
  int k = 1;
  MaximalityCertificate certificate;
  int c_k_size = 0;
  std::vector<Move> trace;
  Rational guaranteed_bound{1};
  bool exhaustive = true;            // meaningful for Method::exact only
  std::vector<int> initial_vertices; // trace replay base
};

// Applies a trace to an initial vertex sequence; each report satisfies
// replay_trace(g, initial_vertices, trace) == path.
Path replay_trace(const ColoredGraph& g, const std::vector<int>& initial,
                  const std::vector<Move>& trace);

// One-end greedy: repeatedly append, at the far end, the lowest-index
// off-path vertex whose edge color has multiplicity < k; stops when every
// end edge color is saturated. For k = 1 the result has at least (n+1)/2
// vertices from any start.
SolveReport greedy_extend(const ColoredGraph& g, int start, int k);

// Rotation/extension maximalization. Three-case loop, in order: extend at
// the start when some start edge color is unsaturated; else extend at the
// end likewise; else pick the lowest position i whose path edge color is
// saturated, equals some end edge color c(p_t,r), and whose rotation edge
// color c(p_1,p_{i+1}) is unsaturated, rotate there and extend with r.
// Terminates with certificate (true, true). Checked on exit:
//   |C_k| >= (k+1)(n - |V|)                 (always)
//   |C_k| <= |V| - |V(P0)|                  (when P0 was (k-1)-rainbow)
//   |V| >= (2n+1)/3                         (k = 1)
SolveReport maximalize(const ColoredGraph& g, const Path& p0, int k);

// Best maximalize(g, (v), k) over `restarts` seeded random start vertices.
// Deterministic per seed. Off by default everywhere else.
SolveReport maximalize_restarts(const ColoredGraph& g, int k, int restarts, std::uint64_t seed);

// reports[k-1] for k = 1..k_max: k = 1 maximalizes the best greedy path over
// all start vertices; each later k maximalizes the previous report's path.
// Checked: t_k >= (1 - 2/(k+2)!) n and t_k >= t_{k-1}.
std::vector<SolveReport> ladder(const ColoredGraph& g, int k_max);

// k rainbow levels, each a greedy rainbow path over the yet-unused vertices
// starting at the previous level's endpoint, colors reset per level.
// Checked: total vertex count >= n - n/2^k.
SolveReport naive_recursive(const ColoredGraph& g, int k, int start);

// Appends the off-path vertices in ascending order after p_t and closes the
// cycle. The distinct color count is at least the path's edge count.
struct CycleCompletion {
  std::vector<int> cycle;  // vertex sequence, closing edge implied
  int distinct_colors = 0;
};
CycleCompletion complete_to_hamiltonian_cycle(const ColoredGraph& g, const Path& p);

}  // namespace rainbow
