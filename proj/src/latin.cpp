#include "rainbow/latin.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

namespace rainbow {

LatinSquare::LatinSquare(int order, std::vector<int> grid) : n_(order), grid_(std::move(grid)) {
  if (n_ < 1) throw std::invalid_argument("order must be >= 1");
  if (grid_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("grid must be order*order");
  for (int v : grid_)
    if (v < 1 || v > n_) throw std::invalid_argument("grid values must be in 1..order");
}

std::optional<LatinViolation> validate_latin(const LatinSquare& sq) {
  int n = sq.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = sq.at(r, c);
      if (seen[static_cast<std::size_t>(v)])
        return LatinViolation{LatinViolation::Kind::row, r, v};
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = sq.at(r, c);
      if (seen[static_cast<std::size_t>(v)])
        return LatinViolation{LatinViolation::Kind::column, c, v};
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return std::nullopt;
}

LatinSquare cyclic_latin(int n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<int> grid(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grid[static_cast<std::size_t>(i) * n + j] = (i + j) % n + 1;
  return LatinSquare(n, std::move(grid));
}

LatinSquare coloring_to_latin(const ColoredGraph& g) {
  int n = g.n();
  if (g.palette_size() != n - 1)
    throw std::invalid_argument("coloring must use exactly n-1 colors");
  if (g.palette().front() != 1 || g.palette().back() != n - 1)
    throw std::invalid_argument("palette must be 1..n-1 (apply relabel_palette first)");
  std::vector<int> grid(static_cast<std::size_t>(n) * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) grid[static_cast<std::size_t>(i) * n + j] = g.color(i, j);
  return LatinSquare(n, std::move(grid));
}

ColoredGraph latin_to_coloring(const LatinSquare& sq) {
  int n = sq.order();
  for (int i = 0; i < n; ++i) {
    if (sq.at(i, i) != n)
      throw std::invalid_argument("diagonal cell (" + std::to_string(i) + "," +
                                  std::to_string(i) + ") must hold the order");
    for (int j = i + 1; j < n; ++j)
      if (sq.at(i, j) != sq.at(j, i))
        throw std::invalid_argument("square is asymmetric at cell (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
  }
  if (n == 1) throw std::invalid_argument("order-1 square has no edges to color");
  std::vector<ColorId> mat(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) mat[static_cast<std::size_t>(i) * n + j] = sq.at(i, j);
  return ColoredGraph(n, std::move(mat));
}

namespace {

using Clock = std::chrono::steady_clock;

struct LatinBudget {
  long long nodes_left = std::numeric_limits<long long>::max();
  bool timed = false;
  Clock::time_point deadline;
  bool exhausted = false;
  int tick = 0;

  static LatinBudget from(const SearchLimits& limits) {
    LatinBudget b;
    if (limits.node_budget) b.nodes_left = *limits.node_budget;
    if (limits.time_budget_ms) {
      b.timed = true;
      b.deadline = Clock::now() + std::chrono::milliseconds(*limits.time_budget_ms);
    }
    return b;
  }

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

void check_order(const LatinSquare& sq, const SearchLimits& limits) {
  bool has_budget = limits.node_budget.has_value() || limits.time_budget_ms.has_value();
  if (sq.order() > limits.max_n && !has_budget)
    throw std::invalid_argument("order exceeds exhaustive search cap; set a budget to override");
}

struct TransversalSearch {
  const LatinSquare& sq;
  LatinBudget budget;
  std::vector<int> row_of_col;  // chosen row per column, -1 = skipped
  std::vector<char> row_used;
  std::vector<char> val_used;

  explicit TransversalSearch(const LatinSquare& s, LatinBudget b)
      : sq(s),
        budget(b),
        row_of_col(static_cast<std::size_t>(s.order()), -1),
        row_used(static_cast<std::size_t>(s.order()), 0),
        val_used(static_cast<std::size_t>(s.order()) + 1, 0) {}

  // complete transversal, columns left to right, rows ascending
  bool complete(int col) {
    if (!budget.spend()) return false;
    int n = sq.order();
    if (col == n) return true;
    for (int r = 0; r < n; ++r) {
      if (row_used[static_cast<std::size_t>(r)]) continue;
      int v = sq.at(r, col);
      if (val_used[static_cast<std::size_t>(v)]) continue;
      row_used[static_cast<std::size_t>(r)] = 1;
      val_used[static_cast<std::size_t>(v)] = 1;
      row_of_col[static_cast<std::size_t>(col)] = r;
      if (complete(col + 1)) return true;
      row_of_col[static_cast<std::size_t>(col)] = -1;
      val_used[static_cast<std::size_t>(v)] = 0;
      row_used[static_cast<std::size_t>(r)] = 0;
      if (budget.exhausted) return false;
    }
    return false;
  }
};

Transversal to_transversal(const std::vector<int>& row_of_col) {
  Transversal t;
  for (std::size_t c = 0; c < row_of_col.size(); ++c)
    if (row_of_col[c] >= 0) t.cells.emplace_back(row_of_col[c], static_cast<int>(c));
  return t;
}

}  // namespace

TransversalResult find_transversal(const LatinSquare& sq, const SearchLimits& limits) {
  check_order(sq, limits);
  TransversalSearch ts(sq, LatinBudget::from(limits));
  if (ts.complete(0)) return {SearchStatus::found, to_transversal(ts.row_of_col)};
  if (ts.budget.exhausted) return {SearchStatus::budget_exhausted, std::nullopt};
  return {SearchStatus::none, std::nullopt};
}

namespace {

struct PartialSearch {
  const LatinSquare& sq;
  LatinBudget budget;
  std::vector<int> row_of_col;
  std::vector<char> row_used;
  std::vector<char> val_used;
  int cur_size = 0;
  std::vector<int> best;
  int best_size = 0;

  explicit PartialSearch(const LatinSquare& s, LatinBudget b)
      : sq(s),
        budget(b),
        row_of_col(static_cast<std::size_t>(s.order()), -1),
        row_used(static_cast<std::size_t>(s.order()), 0),
        val_used(static_cast<std::size_t>(s.order()) + 1, 0),
        best(static_cast<std::size_t>(s.order()), -1) {}

  void dfs(int col) {
    if (!budget.spend()) return;
    int n = sq.order();
    if (cur_size > best_size) {
      best = row_of_col;
      best_size = cur_size;
    }
    if (col == n) return;
    if (cur_size + (n - col) <= best_size) return;  // cannot beat the incumbent
    for (int r = 0; r < n; ++r) {
      if (row_used[static_cast<std::size_t>(r)]) continue;
      int v = sq.at(r, col);
      if (val_used[static_cast<std::size_t>(v)]) continue;
      row_used[static_cast<std::size_t>(r)] = 1;
      val_used[static_cast<std::size_t>(v)] = 1;
      row_of_col[static_cast<std::size_t>(col)] = r;
      ++cur_size;
      dfs(col + 1);
      --cur_size;
      row_of_col[static_cast<std::size_t>(col)] = -1;
      val_used[static_cast<std::size_t>(v)] = 0;
      row_used[static_cast<std::size_t>(r)] = 0;
      if (budget.exhausted) return;
    }
    dfs(col + 1);  // skip this column
  }
};

}  // namespace

PartialTransversalResult max_partial_transversal(const LatinSquare& sq,
                                                 const SearchLimits& limits) {
  check_order(sq, limits);
  PartialSearch ps(sq, LatinBudget::from(limits));
  ps.dfs(0);
  return {to_transversal(ps.best), !ps.budget.exhausted};
}

RainbowSubgraph transversal_to_rainbow_subgraph(const LatinSquare& sq, const Transversal& t) {
  int n = sq.order();
  // image of coloring_to_latin: symmetric, diagonal n, Latin
  for (int i = 0; i < n; ++i) {
    if (sq.at(i, i) != n)
      throw std::invalid_argument("square is not coloring-derived: diagonal != order");
    for (int j = i + 1; j < n; ++j)
      if (sq.at(i, j) != sq.at(j, i))
        throw std::invalid_argument("square is not coloring-derived: asymmetric");
  }
  if (validate_latin(sq))
    throw std::invalid_argument("square is not coloring-derived: not Latin");

  if (t.size() != n) throw std::invalid_argument("transversal must have n cells");
  std::vector<char> row_used(static_cast<std::size_t>(n), 0);
  std::vector<char> col_used(static_cast<std::size_t>(n), 0);
  std::vector<char> val_used(static_cast<std::size_t>(n) + 1, 0);
  for (auto [r, c] : t.cells) {
    if (r < 0 || r >= n || c < 0 || c >= n) throw std::invalid_argument("transversal cell out of range");
    int v = sq.at(r, c);
    if (row_used[static_cast<std::size_t>(r)] || col_used[static_cast<std::size_t>(c)] ||
        val_used[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a transversal: repeated row, column or value");
    row_used[static_cast<std::size_t>(r)] = 1;
    col_used[static_cast<std::size_t>(c)] = 1;
    val_used[static_cast<std::size_t>(v)] = 1;
  }

  RainbowSubgraph out;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [r, c] : t.cells) {
    if (r == c) {
      if (out.excluded_vertex) throw std::logic_error("two diagonal cells in a transversal");
      out.excluded_vertex = r;
      continue;
    }
    out.edges.emplace_back(std::min(r, c), std::max(r, c));
    out.colors.push_back(sq.at(r, c));
    ++degree[static_cast<std::size_t>(r)];
    ++degree[static_cast<std::size_t>(c)];
  }

  // checked consequences of the transversal property
  {
    auto sorted = out.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("mapped subgraph has a 2-cycle");
    auto colors = out.colors;
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
      throw std::logic_error("mapped subgraph is not rainbow");
    int covered = 0;
    for (int v = 0; v < n; ++v) {
      bool excluded = out.excluded_vertex && *out.excluded_vertex == v;
      if (degree[static_cast<std::size_t>(v)] != (excluded ? 0 : 2))
        throw std::logic_error("mapped subgraph is not 2-regular on included vertices");
      if (!excluded) ++covered;
    }
    if (covered < n - 1) throw std::logic_error("mapped subgraph excludes more than one vertex");
  }
  return out;
}

RainbowMatching latin_to_bipartite_matching(const LatinSquare& sq, const SearchLimits& limits) {
  TransversalResult tr = find_transversal(sq, limits);
  RainbowMatching out{tr.status, {}};
  if (tr.status == SearchStatus::found) {
    for (auto [r, c] : tr.transversal->cells) out.edges.emplace_back(r, c, sq.at(r, c));
  }
  return out;
}

LatinSquare read_latin(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, out)) {
      ++lineno;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      return true;
    }
    ++lineno;
    return false;
  };

  if (!next_line(line)) throw ParseError(1, "empty input, expected 'order <N>'");
  long long n = 0;
  {
    std::istringstream ls(line);
    std::string tag, extra;
    if (!(ls >> tag >> n) || tag != "order" || (ls >> extra))
      throw ParseError(lineno, "expected 'order <N>'");
  }
  if (n < 1 || n > kDefaultSizeCap) throw ParseError(lineno, "order out of range");

  int nn = static_cast<int>(n);
  std::vector<int> grid;
  grid.reserve(static_cast<std::size_t>(nn) * nn);
  for (int r = 0; r < nn; ++r) {
    if (!next_line(line)) throw ParseError(lineno, "incomplete square");
    std::istringstream ls(line);
    for (int c = 0; c < nn; ++c) {
      long long v;
      if (!(ls >> v)) throw ParseError(lineno, "expected " + std::to_string(nn) + " values");
      if (v < 1 || v > nn) throw ParseError(lineno, "value out of range 1..order");
      grid.push_back(static_cast<int>(v));
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "unexpected trailing data");
  }
  while (next_line(line)) {
    if (!line.empty() && line.find_first_not_of(" \t") != std::string::npos)
      throw ParseError(lineno, "unexpected trailing data");
  }
  return LatinSquare(nn, std::move(grid));
}

std::string write_latin(const LatinSquare& sq) {
  std::ostringstream out;
  out << "order " << sq.order() << "\n";
  for (int r = 0; r < sq.order(); ++r) {
    for (int c = 0; c < sq.order(); ++c) {
      if (c) out << " ";
      out << sq.at(r, c);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace rainbow
