#include <gtest/gtest.h>

#include <random>

#include "evenmwis/evenmwis.hpp"
#include "oracles.hpp"

using namespace evenmwis;

namespace {

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> v) { return VertexSet(n, v); }

std::vector<std::size_t> path_lengths(const InducedPaths& p) {
  std::vector<std::size_t> out;
  for (const auto& x : p.paths) out.push_back(x.size() - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet a(70, {0, 5, 69});
  VertexSet b(70, {5, 6});
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(a.contains(69));
  EXPECT_EQ((a | b).count(), 4u);
  EXPECT_EQ((a & b), VertexSet(70, {5}));
  EXPECT_EQ((a - b), VertexSet(70, {0, 69}));
  EXPECT_EQ(a.complement().count(), 67u);
  EXPECT_EQ(a.to_vector(), (std::vector<Vertex>{0, 5, 69}));
  EXPECT_EQ(VertexSet::full(70).count(), 70u);
  EXPECT_TRUE(VertexSet(70, {5}).is_subset_of(a));
  EXPECT_THROW((void)(a | VertexSet(10)), Error);
  EXPECT_THROW(a.insert(70), Error);
}

TEST(VertexSet, LexOrderBySortedMembers) {
  VertexSet e(5);
  VertexSet s0(5, {0});
  VertexSet s01(5, {0, 1});
  VertexSet s02(5, {0, 2});
  VertexSet s1(5, {1});
  EXPECT_TRUE(lex_less(e, s0));
  EXPECT_TRUE(lex_less(s0, s01));
  EXPECT_TRUE(lex_less(s01, s02));
  EXPECT_TRUE(lex_less(s02, s1));
  EXPECT_FALSE(lex_less(s1, s02));
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  try {
    Graph(3, {{0, 1}, {1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LoopOrMultiEdge);
  }
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
}

TEST(Graph, AdjacencyIsSymmetricAndDegreeCached) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(15, 0.3, rng);
    int maxd = 0;
    for (Vertex v = 0; v < 15; ++v) {
      maxd = std::max(maxd, g.degree(v));
      auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex u : nb) EXPECT_TRUE(g.adjacent(u, v));
    }
    EXPECT_EQ(maxd, g.max_degree());
  }
}

TEST(Components, Examples) {
  Graph c6 = cycle_graph(6);
  auto all = components(c6, c6.all());
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].count(), 6u);

  auto split = components(c6, set_of(6, {0, 1, 3, 4}));
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0], set_of(6, {0, 1}));
  EXPECT_EQ(split[1], set_of(6, {3, 4}));

  EXPECT_TRUE(components(c6, VertexSet(6)).empty());
}

TEST(Components, PartitionProperty) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(20, 0.12, rng);
    VertexSet alive(20);
    for (Vertex v = 0; v < 20; ++v) {
      if (rng() % 3 != 0) alive.insert(v);
    }
    auto parts = components(g, alive);
    VertexSet seen(20);
    Vertex last = -1;
    for (const auto& p : parts) {
      EXPECT_FALSE(p.intersects(seen));
      seen |= p;
      EXPECT_GT(p.first(), last);
      last = p.first();
      EXPECT_TRUE(oracle::induced_connected(g, p.to_vector()));
      // no edge leaves the part inside alive
      EXPECT_FALSE(neighborhood(g, p).intersects(alive));
    }
    EXPECT_EQ(seen, alive);
  }
}

TEST(Ball, Examples) {
  Graph p5 = path_graph(5);
  EXPECT_EQ(ball(p5, 2, 1), set_of(5, {1, 2, 3}));
  Graph c8 = cycle_graph(8);
  EXPECT_EQ(ball(c8, 0, 2), set_of(8, {6, 7, 0, 1, 2}));
  EXPECT_EQ(ball(c8, 3, 0), set_of(8, {3}));
  Graph two(6, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(ball(two, 0, 6), set_of(6, {0, 1, 2}));
}

TEST(Ball, Monotone) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(25, 0.1, rng);
    for (Vertex v = 0; v < 25; v += 6) {
      VertexSet prev = ball(g, v, 0);
      EXPECT_EQ(prev, VertexSet(25, {v}));
      for (std::size_t d = 1; d <= 6; ++d) {
        VertexSet cur = ball(g, v, d);
        EXPECT_TRUE(prev.is_subset_of(cur));
        prev = cur;
      }
      for (const auto& comp : components(g, g.all())) {
        if (comp.contains(v)) EXPECT_EQ(ball(g, v, 25), comp);
      }
    }
  }
}

TEST(Neighborhood, Examples) {
  Graph c6 = cycle_graph(6);
  EXPECT_EQ(neighborhood(c6, set_of(6, {0})), set_of(6, {1, 5}));
  EXPECT_TRUE(neighborhood(c6, c6.all()).empty());
  Graph k4 = complete_graph(4);
  EXPECT_EQ(neighborhood(k4, set_of(4, {0, 1})), set_of(4, {2, 3}));
  EXPECT_EQ(closed_neighborhood(c6, 0), set_of(6, {5, 0, 1}));
}

TEST(InducedPaths, Examples) {
  Graph c6 = cycle_graph(6);
  auto p02 = enumerate_induced_paths(c6, 0, 2, 100);
  EXPECT_FALSE(p02.truncated);
  EXPECT_EQ(path_lengths(p02), (std::vector<std::size_t>{2, 4}));
  auto p03 = enumerate_induced_paths(c6, 0, 3, 100);
  EXPECT_EQ(path_lengths(p03), (std::vector<std::size_t>{3, 3}));
  Graph e(2, {{0, 1}});
  EXPECT_EQ(path_lengths(enumerate_induced_paths(e, 0, 1, 10)), (std::vector<std::size_t>{1}));
}

TEST(InducedPaths, TruncationFlag) {
  Graph c6 = cycle_graph(6);
  auto p = enumerate_induced_paths(c6, 0, 3, 1);
  EXPECT_TRUE(p.truncated);
  EXPECT_EQ(p.paths.size(), 1u);
  EXPECT_THROW(enumerate_induced_paths(c6, 0, 0, 5), Error);
}

TEST(InducedPaths, ChordlessAndCompleteAgainstSubsetEnumeration) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(10, 0.3, rng);
    for (Vertex u = 0; u < 10; u += 3) {
      for (Vertex v = u + 1; v < 10; v += 4) {
        auto res = enumerate_induced_paths(g, u, v, 1'000'000);
        std::set<std::vector<Vertex>> sets;
        bool even = false;
        bool odd = false;
        for (const auto& p : res.paths) {
          EXPECT_EQ(p.front(), u);
          EXPECT_EQ(p.back(), v);
          for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = i + 1; j < p.size(); ++j) EXPECT_EQ(g.adjacent(p[i], p[j]), j == i + 1);
          }
          auto s = p;
          std::sort(s.begin(), s.end());
          sets.insert(s);
          ((p.size() - 1) % 2 == 0 ? even : odd) = true;
        }
        EXPECT_EQ(sets.size(), res.paths.size());  // no repeats
        auto [oe, oo] = oracle::path_parities(g, u, v, (1U << 10) - 1);
        EXPECT_EQ(even, oe);
        EXPECT_EQ(odd, oo);
      }
    }
  }
}

TEST(Weights, UniformPartitionSumsToOne) {
  for (std::size_t n : {1u, 3u, 7u, 400u, 2999u}) {
    Weights w = Weights::uniform(n);
    EXPECT_EQ(w.total(), Fraction(1));
    EXPECT_TRUE(w.is_uniform());
    std::mt19937_64 rng(n);
    std::vector<VertexSet> parts(5, VertexSet(n));
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) parts[rng() % 5].insert(v);
    Fraction total(0);
    for (const auto& p : parts) total += w.sum(p);
    EXPECT_EQ(total, Fraction(1));
  }
}

TEST(Weights, ExactThresholds) {
  Weights w = Weights::uniform(400);
  VertexSet s(400);
  for (Vertex v = 0; v < 240; ++v) s.insert(v);
  EXPECT_TRUE(w.sum_at_most(s, Fraction(3, 5)));
  s.insert(240);
  EXPECT_FALSE(w.sum_at_most(s, Fraction(3, 5)));
  Weights u = Weights::uniform_on(VertexSet(6, {1, 4}));
  EXPECT_EQ(u.value(1), Fraction(1, 2));
  EXPECT_EQ(u.value(0), Fraction(0));
  EXPECT_TRUE(u.is_uniform());
  EXPECT_FALSE(Weights({1, 2}, 3).is_uniform());
  EXPECT_THROW(Weights({-1}, 1), Error);
}

TEST(Weights, ParseFraction) {
  EXPECT_EQ(parse_fraction("3/5"), Fraction(3, 5));
  EXPECT_EQ(parse_fraction("6/10"), Fraction(3, 5));
  EXPECT_EQ(parse_fraction("1"), Fraction(1));
  EXPECT_THROW(parse_fraction("3/0"), Error);
  EXPECT_THROW(parse_fraction("x/5"), Error);
  EXPECT_THROW(parse_fraction("3/"), Error);
  EXPECT_EQ(to_string(Fraction(3, 5)), "3/5");
}

TEST(InducedSubgraph, RelabelsInOrder) {
  Graph c6 = cycle_graph(6);
  auto sub = induced_subgraph(c6, VertexSet(6, {1, 2, 3, 5}));
  EXPECT_EQ(sub.original, (std::vector<Vertex>{1, 2, 3, 5}));
  EXPECT_EQ(sub.graph.edge_count(), 2u);
  EXPECT_TRUE(sub.graph.adjacent(0, 1));
  EXPECT_TRUE(sub.graph.adjacent(1, 2));
  EXPECT_EQ(sub.graph.degree(3), 0);
}
