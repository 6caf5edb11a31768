#include "rainbow/coloring.hpp"

#include "rainbow/rng.hpp"

#include <algorithm>
#include <sstream>

namespace rainbow {

ColoredGraph::ColoredGraph(int n, std::vector<ColorId> matrix)
    : n_(n), color_(std::move(matrix)) {
  if (n_ < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (color_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("color matrix must be n*n");
  for (int u = 0; u < n_; ++u) {
    color_[static_cast<std::size_t>(u) * n_ + u] = 0;
    for (int v = u + 1; v < n_; ++v) {
      ColorId c = color_[static_cast<std::size_t>(u) * n_ + v];
      if (c != color_[static_cast<std::size_t>(v) * n_ + u])
        throw std::invalid_argument("color matrix must be symmetric");
      if (c < 1) throw std::invalid_argument("edge colors must be positive");
    }
  }

  palette_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      palette_.push_back(color(u, v));
  std::sort(palette_.begin(), palette_.end());
  palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());

  cidx_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u == v) continue;
      auto it = std::lower_bound(palette_.begin(), palette_.end(), color(u, v));
      cidx_[static_cast<std::size_t>(u) * n_ + v] = static_cast<int>(it - palette_.begin());
    }
  }
}

std::optional<PropernessViolation> validate_proper(const ColoredGraph& g) {
  int n = g.n();
  // first_partner[idx] = smallest v seen so far (for the current u) with
  // color index idx; stamped per u to avoid clearing.
  std::vector<int> first_partner(g.palette_size(), -1);
  std::vector<int> stamp(g.palette_size(), -1);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      int idx = g.color_index(u, v);
      if (stamp[idx] == u) return PropernessViolation{u, first_partner[idx], v};
      stamp[idx] = u;
      first_partner[idx] = v;
    }
  }
  return std::nullopt;
}

ColoredGraph mm_coloring(int m, int size_cap) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (m >= 31 || (1 << m) > size_cap)
    throw std::invalid_argument("size cap exceeded: n = 2^" + std::to_string(m));
  int n = 1 << m;
  std::vector<ColorId> mat(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) mat[static_cast<std::size_t>(u) * n + v] = u ^ v;
  return ColoredGraph(n, std::move(mat));
}

ColoredGraph round_robin_coloring(int n, int size_cap) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "round robin needs even n >= 2 (use random_proper_coloring for odd n)");
  if (n > size_cap) throw std::invalid_argument("size cap exceeded: n = " + std::to_string(n));
  int hub = n - 1;
  std::vector<ColorId> mat(static_cast<std::size_t>(n) * n, 0);
  auto set = [&](int u, int v, ColorId c) {
    mat[static_cast<std::size_t>(u) * n + v] = c;
    mat[static_cast<std::size_t>(v) * n + u] = c;
  };
  for (int r = 0; r < n - 1; ++r) {
    set(hub, r, r + 1);
    for (int i = 0; i < n - 1; ++i) {
      int j = ((2 * r - i) % (n - 1) + (n - 1)) % (n - 1);
      if (i < j) set(i, j, r + 1);
    }
  }
  return ColoredGraph(n, std::move(mat));
}

ColoredGraph random_proper_coloring(int n, std::uint64_t seed, int size_cap) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (n > size_cap) throw std::invalid_argument("size cap exceeded: n = " + std::to_string(n));

  ColoredGraph base = (n % 2 == 0) ? round_robin_coloring(n, size_cap)
                                   : round_robin_coloring(n + 1, size_cap + 1);
  int colors = (n % 2 == 0) ? n - 1 : n;

  Rng rng(seed);
  std::vector<int> vperm(n);
  for (int i = 0; i < n; ++i) vperm[i] = i;
  rng.shuffle(vperm);
  std::vector<ColorId> cperm(colors + 1);
  for (int c = 1; c <= colors; ++c) cperm[c] = c;
  // shuffle positions 1..colors
  for (int i = colors; i > 1; --i) {
    int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
    std::swap(cperm[i], cperm[j]);
  }

  std::vector<ColorId> mat(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v)
        mat[static_cast<std::size_t>(u) * n + v] = cperm[base.color(vperm[u], vperm[v])];
  return ColoredGraph(n, std::move(mat));
}

RelabelResult relabel_palette(const ColoredGraph& g) {
  const auto& pal = g.palette();
  std::vector<std::pair<ColorId, ColorId>> mapping;
  mapping.reserve(pal.size());
  for (std::size_t i = 0; i < pal.size(); ++i)
    mapping.emplace_back(pal[i], static_cast<ColorId>(i + 1));

  int n = g.n();
  std::vector<ColorId> mat(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) mat[static_cast<std::size_t>(u) * n + v] = g.color_index(u, v) + 1;
  return RelabelResult{ColoredGraph(n, std::move(mat)), std::move(mapping)};
}

ColoredGraph read_coloring(const std::string& text, int size_cap) {
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

  if (!next_line(line)) throw ParseError(1, "empty input, expected 'n <N>'");
  long long n = 0;
  {
    std::istringstream ls(line);
    std::string tag;
    std::string extra;
    if (!(ls >> tag >> n) || tag != "n" || (ls >> extra))
      throw ParseError(lineno, "expected 'n <N>'");
  }
  if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");
  if (n > size_cap) throw ParseError(lineno, "vertex count exceeds size cap");

  int nn = static_cast<int>(n);
  std::vector<ColorId> mat(static_cast<std::size_t>(nn) * nn, 0);
  for (int u = 0; u < nn; ++u) {
    for (int v = u + 1; v < nn; ++v) {
      if (!next_line(line)) throw ParseError(lineno, "incomplete edge list");
      std::istringstream ls(line);
      long long fu = -1, fv = -1, fc = -1;
      std::string extra;
      if (!(ls >> fu >> fv >> fc) || (ls >> extra))
        throw ParseError(lineno, "expected 'u v c'");
      if (fu != u || fv != v)
        throw ParseError(lineno, "expected edge " + std::to_string(u) + " " + std::to_string(v));
      if (fc < 1 || fc > 0x7fffffff) throw ParseError(lineno, "color out of range");
      mat[static_cast<std::size_t>(u) * nn + v] = static_cast<ColorId>(fc);
      mat[static_cast<std::size_t>(v) * nn + u] = static_cast<ColorId>(fc);
    }
  }
  while (next_line(line)) {
    if (!line.empty() && line.find_first_not_of(" \t") != std::string::npos)
      throw ParseError(lineno, "unexpected trailing data");
  }

  ColoredGraph g(nn, std::move(mat));
  if (auto bad = validate_proper(g)) throw ImproperColoringError(*bad);
  return g;
}

std::string write_coloring(const ColoredGraph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      out << u << " " << v << " " << g.color(u, v) << "\n";
  return out.str();
}

}  // namespace rainbow
