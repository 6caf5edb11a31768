#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/rational.hpp"

#include <utility>
#include <vector>

namespace rainbow {

// A simple path in a ColoredGraph, as an ordered vertex sequence. Positions
// are 1-based in the API surface (p_1..p_t); storage is 0-based. The graph
// reference is non-owning; the graph must outlive the path.
class Path {
 public:
  Path(const ColoredGraph& g, std::vector<int> vertices);

  const ColoredGraph& graph() const { return *g_; }
  int size() const { return static_cast<int>(v_.size()); }
  int edge_count() const { return size() - 1; }
  const std::vector<int>& vertices() const { return v_; }

  // 1-based position access.
  int vertex(int pos) const { return v_[static_cast<std::size_t>(pos) - 1]; }
  int start() const { return v_.front(); }
  int end() const { return v_.back(); }

  bool contains(int v) const { return on_[static_cast<std::size_t>(v)] != 0; }

 private:
  const ColoredGraph* g_;
  std::vector<int> v_;
  std::vector<char> on_;
};

Path reverse(const Path& p);

// The set c(P) of colors used by the path's edges, ascending.
std::vector<ColorId> path_colors(const Path& p);

// A path uses each color at most n-1 times, so multiplicity bounds beyond
// this are pointless; requests above the cap are rejected.
inline constexpr int kMaxMultiplicityBound = 1000000;

// Color multiplicity census of a path under multiplicity bound k.
// classes[i] = C_i = colors used exactly i times (C_0 relative to the
// palette); counts above k land in overflow.
struct PathColorStats {
  int k = 1;
  int edge_count = 0;
  int max_multiplicity = 0;
  std::vector<std::pair<ColorId, int>> multiplicity;  // colors on P, ascending
  std::vector<std::vector<ColorId>> classes;          // C_0..C_k, each ascending
  std::vector<ColorId> overflow;                      // multiplicity > k
};
PathColorStats color_stats(const Path& p, int k);

// max multiplicity <= k. k = 0 is permitted and means "no edges".
bool is_k_rainbow(const Path& p, int k);

// New neighborhood of v relative to P: all u != v (on- and off-path) with
// c(u,v) not used by P.
std::vector<int> new_neighborhood(const Path& p, int v);

// Rotation-eligible positions of a rainbow path: A = positions i with
// p_{i+1} a new neighbor of p_1; B = positions i with p_{i-1} a new
// neighbor of p_t. mirror(A(P)) == B(reverse(P)). Rejects non-rainbow P.
std::vector<int> compute_A(const Path& p);
std::vector<int> compute_B(const Path& p);

// Off-path vertices with more than a new neighbors off the path.
std::vector<int> compute_R(const Path& p, int a);

// |R(P,a)| > n - t - 1/epsilon, evaluated exactly.
bool is_nice(const Path& p, int t, const Rational& epsilon, int a);

// rho_i: (p_i, p_{i-1}, ..., p_1, p_{i+1}, ..., p_t). rho_1 is the identity,
// rho_t the full reversal; for i < t the end vertex is preserved.
Path rotate(const Path& p, int i);

// C_A(P) = { c(p_i, p_{i+1}) : c(p_1, p_{i+1}) not in C_k(P) }, ascending.
std::vector<ColorId> compute_C_A(const Path& p, int k);

// Maximality of a k-rainbow path: start side c(p_1, V(P)^c) contained in
// C_k(P), end side c(p_t, V(P)^c) contained in C_k(P) \ C_A(P). Hamiltonian
// paths satisfy both vacuously.
struct MaximalityCertificate {
  bool start_condition = true;
  bool end_condition = true;
  std::vector<ColorId> c_a;                              // C_A(P)
  std::vector<std::pair<int, ColorId>> start_witnesses;  // (off-path vertex, color)
  std::vector<std::pair<int, ColorId>> end_witnesses;
};
MaximalityCertificate maximality_certificate(const Path& p, int k);

// Number of positions in `positions` (1-based, within 1..t) with no
// k-successor in `positions`, i.e. no member j with 0 < j - i <= k.
// Always at most 1 + t/k.
int count_without_k_successor(const std::vector<int>& positions, int k, int t);

}  // namespace rainbow
