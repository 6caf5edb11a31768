#include "rainbow/path.hpp"

#include <algorithm>

namespace rainbow {

Path::Path(const ColoredGraph& g, std::vector<int> vertices)
    : g_(&g), v_(std::move(vertices)), on_(static_cast<std::size_t>(g.n()), 0) {
  if (v_.empty()) throw std::invalid_argument("path must have at least one vertex");
  for (int u : v_) {
    if (u < 0 || u >= g.n()) throw std::invalid_argument("path vertex out of range");
    if (on_[static_cast<std::size_t>(u)]) throw std::invalid_argument("path vertices must be distinct");
    on_[static_cast<std::size_t>(u)] = 1;
  }
}

Path reverse(const Path& p) {
  std::vector<int> v(p.vertices().rbegin(), p.vertices().rend());
  return Path(p.graph(), std::move(v));
}

namespace {

// Multiplicity per palette index.
std::vector<int> edge_color_counts(const Path& p) {
  const auto& g = p.graph();
  std::vector<int> cnt(static_cast<std::size_t>(g.palette_size()), 0);
  const auto& v = p.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) ++cnt[g.color_index(v[i], v[i + 1])];
  return cnt;
}

std::vector<char> used_color_flags(const Path& p) {
  const auto& g = p.graph();
  std::vector<char> used(static_cast<std::size_t>(g.palette_size()), 0);
  const auto& v = p.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) used[g.color_index(v[i], v[i + 1])] = 1;
  return used;
}

void require_rainbow(const Path& p, const char* what) {
  if (!is_k_rainbow(p, 1)) throw std::invalid_argument(std::string(what) + " requires a rainbow path");
}

}  // namespace

std::vector<ColorId> path_colors(const Path& p) {
  auto used = used_color_flags(p);
  std::vector<ColorId> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (used[i]) out.push_back(p.graph().palette()[i]);
  return out;
}

PathColorStats color_stats(const Path& p, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > kMaxMultiplicityBound) throw std::invalid_argument("k exceeds the multiplicity cap");
  const auto& g = p.graph();
  auto cnt = edge_color_counts(p);

  PathColorStats s;
  s.k = k;
  s.edge_count = p.edge_count();
  s.classes.assign(static_cast<std::size_t>(k) + 1, {});
  for (std::size_t i = 0; i < cnt.size(); ++i) {
    ColorId c = g.palette()[i];
    if (cnt[i] > 0) s.multiplicity.emplace_back(c, cnt[i]);
    s.max_multiplicity = std::max(s.max_multiplicity, cnt[i]);
    if (cnt[i] <= k)
      s.classes[static_cast<std::size_t>(cnt[i])].push_back(c);
    else
      s.overflow.push_back(c);
  }
  return s;
}

bool is_k_rainbow(const Path& p, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k > kMaxMultiplicityBound) throw std::invalid_argument("k exceeds the multiplicity cap");
  if (k == 0) return p.edge_count() == 0;
  auto cnt = edge_color_counts(p);
  for (int c : cnt)
    if (c > k) return false;
  return true;
}

std::vector<int> new_neighborhood(const Path& p, int v) {
  const auto& g = p.graph();
  if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
  auto used = used_color_flags(p);
  std::vector<int> out;
  for (int u = 0; u < g.n(); ++u)
    if (u != v && !used[g.color_index(u, v)]) out.push_back(u);
  return out;
}

std::vector<int> compute_A(const Path& p) {
  require_rainbow(p, "compute_A");
  auto gnew = new_neighborhood(p, p.start());
  std::vector<char> is_new(static_cast<std::size_t>(p.graph().n()), 0);
  for (int u : gnew) is_new[static_cast<std::size_t>(u)] = 1;
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)  // position i has successor i+1
    if (is_new[static_cast<std::size_t>(p.vertex(i + 1))]) out.push_back(i);
  return out;
}

std::vector<int> compute_B(const Path& p) {
  require_rainbow(p, "compute_B");
  auto gnew = new_neighborhood(p, p.end());
  std::vector<char> is_new(static_cast<std::size_t>(p.graph().n()), 0);
  for (int u : gnew) is_new[static_cast<std::size_t>(u)] = 1;
  std::vector<int> out;
  for (int i = 2; i <= p.size(); ++i)
    if (is_new[static_cast<std::size_t>(p.vertex(i - 1))]) out.push_back(i);
  return out;
}

std::vector<int> compute_R(const Path& p, int a) {
  require_rainbow(p, "compute_R");
  if (a < 0) throw std::invalid_argument("a must be >= 0");
  const auto& g = p.graph();
  auto used = used_color_flags(p);
  std::vector<int> out;
  for (int r = 0; r < g.n(); ++r) {
    if (p.contains(r)) continue;
    int count = 0;
    for (int u = 0; u < g.n(); ++u)
      if (u != r && !p.contains(u) && !used[g.color_index(r, u)]) ++count;
    if (count > a) out.push_back(r);
  }
  return out;
}

bool is_nice(const Path& p, int t, const Rational& epsilon, int a) {
  require_rainbow(p, "is_nice");
  if (epsilon.num() <= 0) throw std::invalid_argument("epsilon must be positive");
  int r_size = static_cast<int>(compute_R(p, a).size());
  // |R| > n - t - 1/eps
  Rational rhs = Rational(p.graph().n() - t) - epsilon.inverse();
  return Rational(r_size) > rhs;
}

Path rotate(const Path& p, int i) {
  if (i < 1 || i > p.size()) throw std::out_of_range("rotation position out of range");
  const auto& v = p.vertices();
  std::vector<int> out;
  out.reserve(v.size());
  for (int j = i - 1; j >= 0; --j) out.push_back(v[static_cast<std::size_t>(j)]);
  for (std::size_t j = static_cast<std::size_t>(i); j < v.size(); ++j) out.push_back(v[j]);
  return Path(p.graph(), std::move(out));
}

std::vector<ColorId> compute_C_A(const Path& p, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > kMaxMultiplicityBound) throw std::invalid_argument("k exceeds the multiplicity cap");
  if (!is_k_rainbow(p, k)) throw std::invalid_argument("compute_C_A requires a k-rainbow path");
  const auto& g = p.graph();
  auto cnt = edge_color_counts(p);
  std::vector<ColorId> out;
  for (int i = 1; i < p.size(); ++i) {
    int rot_idx = g.color_index(p.start(), p.vertex(i + 1));
    if (cnt[rot_idx] != k) out.push_back(g.color(p.vertex(i), p.vertex(i + 1)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MaximalityCertificate maximality_certificate(const Path& p, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > kMaxMultiplicityBound) throw std::invalid_argument("k exceeds the multiplicity cap");
  if (!is_k_rainbow(p, k))
    throw std::invalid_argument("maximality_certificate requires a k-rainbow path");
  const auto& g = p.graph();
  auto cnt = edge_color_counts(p);

  MaximalityCertificate cert;
  cert.c_a = compute_C_A(p, k);
  std::vector<char> in_ca(static_cast<std::size_t>(g.palette_size()), 0);
  for (ColorId c : cert.c_a) {
    auto it = std::lower_bound(g.palette().begin(), g.palette().end(), c);
    in_ca[static_cast<std::size_t>(it - g.palette().begin())] = 1;
  }

  for (int r = 0; r < g.n(); ++r) {
    if (p.contains(r)) continue;
    int start_idx = g.color_index(p.start(), r);
    if (cnt[start_idx] != k) {
      cert.start_condition = false;
      cert.start_witnesses.emplace_back(r, g.color(p.start(), r));
    }
    int end_idx = g.color_index(p.end(), r);
    if (cnt[end_idx] != k || in_ca[end_idx]) {
      cert.end_condition = false;
      cert.end_witnesses.emplace_back(r, g.color(p.end(), r));
    }
  }
  return cert;
}

int count_without_k_successor(const std::vector<int>& positions, int k, int t) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  std::vector<int> pos = positions;
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  if (!pos.empty() && (pos.front() < 1 || pos.back() > t))
    throw std::invalid_argument("positions must lie in 1..t");
  int count = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    // successor exists iff the next member is within k
    bool has = (i + 1 < pos.size()) && (pos[i + 1] - pos[i] <= k);
    if (!has) ++count;
  }
  return count;
}

}  // namespace rainbow
