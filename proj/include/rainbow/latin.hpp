#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/exact.hpp"

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace rainbow {

// Order-n grid over 1..n. Construction enforces shape and value range; the
// Latin property itself is checked by validate_latin so that violating grids
// can be represented and reported.
class LatinSquare {
 public:
  LatinSquare(int order, std::vector<int> grid);  // row-major order*order

  int order() const { return n_; }
  int at(int r, int c) const { return grid_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::vector<int>& grid() const { return grid_; }

  bool operator==(const LatinSquare& other) const = default;

 private:
  int n_;
  std::vector<int> grid_;
};

// First violation of the Latin property, scanning rows first (row-major),
// then columns. Indices are 0-based.
struct LatinViolation {
  enum class Kind { row, column };
  Kind kind;
  int index;
  int value;
};
std::optional<LatinViolation> validate_latin(const LatinSquare& sq);

// L[i][j] = ((i+j) mod n) + 1. Handy test square; has no complete
// transversal for even n.
LatinSquare cyclic_latin(int n);

// Order-n square from a proper (n-1)-coloring with palette exactly 1..n-1:
// diagonal n, A[i][j] = c(v_i, v_j). Symmetric and Latin by construction
// (use relabel_palette first if the palette is not 1..n-1).
LatinSquare coloring_to_latin(const ColoredGraph& g);

// Inverse of coloring_to_latin: c(v_i, v_j) = L[i][j]. Rejects asymmetric
// input or a diagonal entry != n, with the witness cell in the message.
ColoredGraph latin_to_coloring(const LatinSquare& sq);

struct Transversal {
  std::vector<std::pair<int, int>> cells;  // (row, column)
  int size() const { return static_cast<int>(cells.size()); }
};

enum class SearchStatus { found, none, budget_exhausted };

inline SearchLimits latin_limits() {
  SearchLimits s;
  s.max_n = 9;  // n! worst case
  return s;
}

// Lexicographically first complete transversal (column-by-column
// backtracking, rows ascending), a proof that none exists, or a budget stop.
struct TransversalResult {
  SearchStatus status;
  std::optional<Transversal> transversal;  // set iff status == found
};
TransversalResult find_transversal(const LatinSquare& sq,
                                   const SearchLimits& limits = latin_limits());

// Maximum-size selection of cells with pairwise distinct rows, columns and
// values, by branch and bound.
struct PartialTransversalResult {
  Transversal transversal;
  bool exhaustive = true;
};
PartialTransversalResult max_partial_transversal(const LatinSquare& sq,
                                                 const SearchLimits& limits = latin_limits());

// For a square in the image of coloring_to_latin and a complete transversal:
// diagonal cells mark excluded vertices, cell (i,j) contributes edge
// {v_i,v_j}. The result is checked to be rainbow, 2-regular on the included
// vertices, 2-cycle-free, and to cover at least n-1 vertices.
struct RainbowSubgraph {
  std::vector<std::pair<int, int>> edges;  // u < v
  std::vector<ColorId> colors;             // parallel to edges
  std::optional<int> excluded_vertex;
};
RainbowSubgraph transversal_to_rainbow_subgraph(const LatinSquare& sq, const Transversal& t);

// find_transversal rendered as a rainbow perfect matching of the bipartite
// rows/columns graph: (row, column, value) triples.
struct RainbowMatching {
  SearchStatus status;
  std::vector<std::tuple<int, int, int>> edges;
};
RainbowMatching latin_to_bipartite_matching(const LatinSquare& sq,
                                            const SearchLimits& limits = latin_limits());

// Latin square file: line 1 "order <N>", then N lines of N space-separated
// integers in 1..N.
LatinSquare read_latin(const std::string& text);
std::string write_latin(const LatinSquare& sq);

}  // namespace rainbow
