#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Colors are dense positive integers; the generators emit 1..n-1 (or 1..n).
using ColorId = int;

// Default cap on the vertex count; matrices are O(n^2).
inline constexpr int kDefaultSizeCap = 4096;

// Witness for a properness failure: c(u,v) == c(u,w) with v < w.
struct PropernessViolation {
  int u;
  int v;
  int w;
};

// A (candidate) proper edge coloring of K_n as a symmetric color matrix.
// Construction enforces shape, symmetry and positive colors; properness is
// checked separately by validate_proper so that violating inputs can be
// represented and reported with a witness. Immutable after construction.
class ColoredGraph {
 public:
  // matrix is row-major n*n; diagonal entries are ignored and stored as 0.
  ColoredGraph(int n, std::vector<ColorId> matrix);

  int n() const { return n_; }

  ColorId color(int u, int v) const { return color_[static_cast<std::size_t>(u) * n_ + v]; }

  // Dense index of color(u,v) into palette(); counting loops index by this.
  int color_index(int u, int v) const { return cidx_[static_cast<std::size_t>(u) * n_ + v]; }

  // Distinct colors appearing, ascending.
  const std::vector<ColorId>& palette() const { return palette_; }
  int palette_size() const { return static_cast<int>(palette_.size()); }

  bool operator==(const ColoredGraph& other) const {
    return n_ == other.n_ && color_ == other.color_;
  }

 private:
  int n_;
  std::vector<ColorId> color_;
  std::vector<int> cidx_;
  std::vector<ColorId> palette_;
};

// ok (nullopt) iff no two coincident edges share a color. First violation in
// scan order: u ascending, then the two smallest conflicting partners.
std::optional<PropernessViolation> validate_proper(const ColoredGraph& g);

// K_{2^m} colored by bitwise XOR of the endpoint labels.
ColoredGraph mm_coloring(int m, int size_cap = kDefaultSizeCap);

// Circle-method 1-factorization of K_n (n even): exactly n-1 colors, every
// color class a perfect matching. Hub is vertex n-1; in round r it pairs
// with r, and {i,j} in 0..n-2 pair when i+j == 2r (mod n-1); color is r+1.
ColoredGraph round_robin_coloring(int n, int size_cap = kDefaultSizeCap);

// Deterministic function of (n, seed): a seeded vertex and color permutation
// of round_robin_coloring(n) for even n; for odd n, of round_robin_coloring
// (n+1) with the hub deleted. NOT uniform over all proper colorings.
ColoredGraph random_proper_coloring(int n, std::uint64_t seed, int size_cap = kDefaultSizeCap);

// Same coloring with the palette renamed to 1..|palette| (ascending by old
// id), plus the old->new mapping.
struct RelabelResult {
  ColoredGraph graph;
  std::vector<std::pair<ColorId, ColorId>> mapping;
};
RelabelResult relabel_palette(const ColoredGraph& g);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ImproperColoringError : public std::runtime_error {
 public:
  explicit ImproperColoringError(const PropernessViolation& v)
      : std::runtime_error("improper coloring: edges (" + std::to_string(v.u) + "," +
                           std::to_string(v.v) + ") and (" + std::to_string(v.u) + "," +
                           std::to_string(v.w) + ") share a color"),
        violation_(v) {}
  const PropernessViolation& violation() const { return violation_; }

 private:
  PropernessViolation violation_;
};

// Coloring file: line 1 "n <N>", then exactly N(N-1)/2 lines "u v c" with
// u < v, 0-indexed, c >= 1, sorted lexicographically by (u,v). Canonical
// form has LF endings and no trailing whitespace. read rejects improper
// colorings (ImproperColoringError) and malformed input (ParseError).
ColoredGraph read_coloring(const std::string& text, int size_cap = kDefaultSizeCap);
std::string write_coloring(const ColoredGraph& g);

}  // namespace rainbow
