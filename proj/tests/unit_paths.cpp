#include "rainbow/path.hpp"

#include "rainbow/heuristics.hpp"
#include "rainbow/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rainbow;

namespace {

// Test-local recomputations straight from the definitions, touching only the
// color matrix. These stay independent of the library's path machinery.

std::set<ColorId> oracle_path_colors(const ColoredGraph& g, const std::vector<int>& p) {
  std::set<ColorId> used;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) used.insert(g.color(p[i], p[i + 1]));
  return used;
}

std::set<int> oracle_gamma_new(const ColoredGraph& g, const std::vector<int>& p, int v) {
  auto used = oracle_path_colors(g, p);
  std::set<int> out;
  for (int u = 0; u < g.n(); ++u)
    if (u != v && !used.count(g.color(u, v))) out.insert(u);
  return out;
}

std::set<int> oracle_A(const ColoredGraph& g, const std::vector<int>& p) {
  auto gnew = oracle_gamma_new(g, p, p.front());
  std::set<int> out;
  for (std::size_t i = 1; i < p.size(); ++i)  // 1-based position i, successor p[i]
    if (gnew.count(p[i])) out.insert(static_cast<int>(i));
  return out;
}

std::set<int> oracle_B(const ColoredGraph& g, const std::vector<int>& p) {
  auto gnew = oracle_gamma_new(g, p, p.back());
  std::set<int> out;
  for (std::size_t i = 2; i <= p.size(); ++i)
    if (gnew.count(p[i - 2])) out.insert(static_cast<int>(i));
  return out;
}

std::vector<int> random_rainbow_path(const ColoredGraph& g, Rng& rng) {
  int n = g.n();
  std::vector<int> p{static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))};
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  on[static_cast<std::size_t>(p[0])] = 1;
  std::set<ColorId> used;
  for (;;) {
    std::vector<int> cands;
    for (int u = 0; u < n; ++u)
      if (!on[static_cast<std::size_t>(u)] && !used.count(g.color(p.back(), u)))
        cands.push_back(u);
    if (cands.empty()) break;
    if (p.size() > 1 && rng.below(4) == 0) break;  // random early stop
    int u = cands[rng.below(cands.size())];
    used.insert(g.color(p.back(), u));
    p.push_back(u);
    on[static_cast<std::size_t>(u)] = 1;
  }
  return p;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("path construction validates input") {
  ColoredGraph g = mm_coloring(2);
  CHECK_THROWS_AS(Path(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(Path(g, {0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Path(g, {0, 4}), std::invalid_argument);
  Path p(g, {0, 1, 2});
  CHECK(p.size() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(p.vertex(1) == 0);
  CHECK(p.vertex(3) == 2);
  CHECK(p.contains(1));
  CHECK_FALSE(p.contains(3));
}

TEST_CASE("color stats census") {
  ColoredGraph g = mm_coloring(2);

  PathColorStats single = color_stats(Path(g, {0}), 1);
  CHECK(single.edge_count == 0);
  CHECK(single.classes[0] == std::vector<ColorId>{1, 2, 3});
  CHECK(single.multiplicity.empty());

  PathColorStats s = color_stats(Path(g, {0, 1, 2}), 1);
  CHECK(s.multiplicity == std::vector<std::pair<ColorId, int>>{{1, 1}, {3, 1}});
  CHECK(s.classes[0] == std::vector<ColorId>{2});
  CHECK(s.classes[1] == std::vector<ColorId>{1, 3});
  CHECK(s.overflow.empty());

  PathColorStats s2 = color_stats(Path(g, {3, 0, 1, 2}), 2);
  CHECK(s2.multiplicity == std::vector<std::pair<ColorId, int>>{{1, 1}, {3, 2}});
  CHECK(s2.classes[2] == std::vector<ColorId>{3});
  CHECK(s2.classes[1] == std::vector<ColorId>{1});
  CHECK(s2.classes[0] == std::vector<ColorId>{2});

  // with k=1 the doubled color lands in overflow
  PathColorStats s1 = color_stats(Path(g, {3, 0, 1, 2}), 1);
  CHECK(s1.overflow == std::vector<ColorId>{3});
  CHECK(s1.max_multiplicity == 2);
}

TEST_CASE("color stats classes partition the palette") {
  ColoredGraph g = random_proper_coloring(15, 4);
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto verts = random_rainbow_path(g, rng);
    for (int k = 1; k <= 3; ++k) {
      PathColorStats s = color_stats(Path(g, verts), k);
      std::size_t total = s.overflow.size();
      long long weighted = 0;
      for (std::size_t i = 0; i < s.classes.size(); ++i) {
        total += s.classes[i].size();
        weighted += static_cast<long long>(i) * static_cast<long long>(s.classes[i].size());
      }
      for (ColorId c : s.overflow) {
        // overflow counts still contribute to the edge total
        for (auto [col, cnt] : s.multiplicity)
          if (col == c) weighted += cnt;
      }
      CHECK(total == static_cast<std::size_t>(g.palette_size()));
      CHECK(weighted == s.edge_count);
    }
  }
}

TEST_CASE("is_k_rainbow") {
  ColoredGraph g = mm_coloring(2);
  CHECK(is_k_rainbow(Path(g, {0, 1}), 1));
  CHECK_FALSE(is_k_rainbow(Path(g, {3, 0, 1, 2}), 1));
  CHECK(is_k_rainbow(Path(g, {3, 0, 1, 2}), 2));
  CHECK(is_k_rainbow(Path(g, {1, 0, 2}), 1));
}

TEST_CASE("new neighborhood on the worked K4") {
  ColoredGraph g = mm_coloring(2);

  Path single(g, {1});
  CHECK(new_neighborhood(single, 1) == std::vector<int>{0, 2, 3});

  Path p(g, {0, 1, 2});
  CHECK(new_neighborhood(p, 2) == std::vector<int>{0});
  CHECK(new_neighborhood(p, 0) == std::vector<int>{2});
}

TEST_CASE("A and B on the worked K4") {
  ColoredGraph g = mm_coloring(2);

  Path two(g, {0, 1});
  CHECK(compute_A(two).empty());
  CHECK(compute_B(two).empty());

  Path p(g, {0, 1, 2});
  CHECK(compute_A(p) == std::vector<int>{2});
  CHECK(compute_B(p) == std::vector<int>{2});

  CHECK_THROWS_AS(compute_A(Path(g, {3, 0, 1, 2})), std::invalid_argument);
}

TEST_CASE("A and B match the definitional oracle and mirror each other") {
  ColoredGraph g = random_proper_coloring(20, 7);
  Rng rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    auto verts = random_rainbow_path(g, rng);
    Path p(g, verts);
    CHECK(as_set(compute_A(p)) == oracle_A(g, verts));
    CHECK(as_set(compute_B(p)) == oracle_B(g, verts));

    // mirror(A(P)) == B(reverse(P)) under position i -> t+1-i
    int t = p.size();
    std::set<int> mirrored;
    for (int i : compute_A(p)) mirrored.insert(t + 1 - i);
    CHECK(mirrored == as_set(compute_B(reverse(p))));
  }
}

TEST_CASE("compute_R") {
  ColoredGraph g = random_proper_coloring(16, 3);
  Path p = greedy_extend(g, 0, 1).path;

  CHECK(compute_R(p, 16).empty());  // a >= n can never be exceeded

  // a = 0: exactly the off-path vertices with at least one new neighbor off P
  auto r0 = compute_R(p, 0);
  auto used = oracle_path_colors(g, p.vertices());
  std::set<int> expect;
  for (int r = 0; r < 16; ++r) {
    if (p.contains(r)) continue;
    for (int u = 0; u < 16; ++u) {
      if (u == r || p.contains(u)) continue;
      if (!used.count(g.color(r, u))) {
        expect.insert(r);
        break;
      }
    }
  }
  CHECK(as_set(r0) == expect);
}

TEST_CASE("compute_R is empty on Hamiltonian paths") {
  ColoredGraph g = mm_coloring(2);
  Path ham(g, {3, 0, 1, 2});
  // not rainbow; use the rainbow Hamiltonian path of K_2 instead
  ColoredGraph k2 = mm_coloring(1);
  CHECK(compute_R(Path(k2, {0, 1}), 0).empty());
  CHECK_THROWS_AS(compute_R(ham, 0), std::invalid_argument);
}

TEST_CASE("is_nice evaluates the exact inequality") {
  ColoredGraph k2 = mm_coloring(1);
  // Hamiltonian path, t = n: 0 > -1/eps
  CHECK(is_nice(Path(k2, {0, 1}), 2, Rational(1), 0));

  ColoredGraph g = random_proper_coloring(8, 5);
  // V(P)^c nonempty, a >= n: |R| = 0, need 0 > n - t - 1/eps with t = n/2
  CHECK_FALSE(is_nice(Path(g, {0, 1}), 4, Rational(1), 8));
  // fractional epsilon: 0 > 8 - 8 - 3/2 holds
  CHECK(is_nice(Path(g, {0, 1}), 8, Rational(2, 3), 8));
}

TEST_CASE("niceness sweep stays consistent with its definition") {
  ColoredGraph g = random_proper_coloring(24, 9);
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto verts = random_rainbow_path(g, rng);
    Path p(g, verts);
    for (int a : {0, 2, 5}) {
      int r_size = static_cast<int>(compute_R(p, a).size());
      for (auto [num, den] : {std::pair<long long, long long>{1, 1}, {1, 2}, {2, 3}}) {
        // |R| > n - t - 1/eps with t = |V(P)|, recomputed from scratch
        bool expect = Rational(r_size) > Rational(24 - p.size()) - Rational(den, num);
        CHECK(is_nice(p, p.size(), Rational(num, den), a) == expect);
      }
    }
  }
}

TEST_CASE("certificate conditions mirror their witness lists") {
  ColoredGraph g = random_proper_coloring(18, 13);
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    auto verts = random_rainbow_path(g, rng);
    for (int k = 1; k <= 2; ++k) {
      MaximalityCertificate cert = maximality_certificate(Path(g, verts), k);
      CHECK(cert.start_condition == cert.start_witnesses.empty());
      CHECK(cert.end_condition == cert.end_witnesses.empty());
    }
  }
}

TEST_CASE("rotate on the worked paths") {
  ColoredGraph g = random_proper_coloring(9, 11);
  Path p(g, {0, 1, 2, 3});
  CHECK(rotate(p, 1).vertices() == std::vector<int>{0, 1, 2, 3});
  CHECK(rotate(p, 4).vertices() == std::vector<int>{3, 2, 1, 0});
  CHECK(rotate(p, 2).vertices() == std::vector<int>{1, 0, 2, 3});
  CHECK_THROWS_AS(rotate(p, 0), std::out_of_range);
  CHECK_THROWS_AS(rotate(p, 5), std::out_of_range);
}

TEST_CASE("rotate properties") {
  ColoredGraph g = random_proper_coloring(14, 21);
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto verts = random_rainbow_path(g, rng);
    Path p(g, verts);
    int t = p.size();
    for (int i = 1; i <= t; ++i) {
      Path q = rotate(p, i);
      CHECK(as_set(q.vertices()) == as_set(p.vertices()));
      if (i < t) CHECK(q.end() == p.end());
      CHECK(rotate(q, i).vertices() == p.vertices());  // involution
    }
    // rotation through A(P) swaps exactly one color
    for (int i : compute_A(p)) {
      Path q = rotate(p, i);
      CHECK(is_k_rainbow(q, 1));
      auto before = oracle_path_colors(g, p.vertices());
      auto after = oracle_path_colors(g, q.vertices());
      if (i < t) {
        before.erase(g.color(p.vertex(i), p.vertex(i + 1)));
        before.insert(g.color(p.vertex(1), p.vertex(i + 1)));
      }
      CHECK(after == before);
    }
  }
}

TEST_CASE("C_A on the worked K4") {
  ColoredGraph g = mm_coloring(2);
  CHECK(compute_C_A(Path(g, {0, 1}), 1).empty());
  CHECK(compute_C_A(Path(g, {0, 1, 2}), 1) == std::vector<ColorId>{3});
  CHECK(compute_C_A(Path(g, {3, 0, 1, 2}), 2) == std::vector<ColorId>{1, 3});
}

TEST_CASE("maximality certificates on the worked K4") {
  ColoredGraph g = mm_coloring(2);

  MaximalityCertificate ham = maximality_certificate(Path(g, {3, 0, 1, 2}), 2);
  CHECK(ham.start_condition);
  CHECK(ham.end_condition);
  CHECK(ham.start_witnesses.empty());
  CHECK(ham.end_witnesses.empty());

  MaximalityCertificate c1 = maximality_certificate(Path(g, {0, 1, 2}), 1);
  CHECK(c1.start_condition);
  CHECK(c1.end_condition);
  CHECK(c1.c_a == std::vector<ColorId>{3});

  MaximalityCertificate c2 = maximality_certificate(Path(g, {0, 1, 2}), 2);
  CHECK_FALSE(c2.start_condition);
  CHECK(c2.start_witnesses == std::vector<std::pair<int, ColorId>>{{3, 3}});
}

TEST_CASE("count_without_k_successor") {
  CHECK(count_without_k_successor({1, 2, 3}, 2, 9) == 1);
  CHECK(count_without_k_successor({}, 3, 10) == 0);
  CHECK(count_without_k_successor({1, 5, 9}, 4, 9) == 1);
  CHECK(count_without_k_successor({1, 5, 9}, 3, 9) == 3);
  CHECK_THROWS_AS(count_without_k_successor({0}, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(count_without_k_successor({6}, 1, 5), std::invalid_argument);
}

TEST_CASE("count_without_k_successor stays under 1 + t/k") {
  Rng rng(2024);
  int t = 60;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> subset;
    for (int i = 1; i <= t; ++i)
      if (rng.coin()) subset.push_back(i);
    for (int k = 1; k <= 6; ++k) {
      long long count = count_without_k_successor(subset, k, t);
      // count <= 1 + t/k, exactly
      CHECK(count * k <= k + t);
    }
  }
}
