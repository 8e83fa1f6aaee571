#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace cubmatch;

TEST(Lambda, SmallFixtures) {
  EXPECT_EQ(lambda_profile(theta_graph()).rho, 1u);
  EXPECT_EQ(lambda_profile(theta_graph()).lambda, 0u);
  EXPECT_EQ(lambda_profile(k4_graph()).lambda, 4u);
  auto k33 = lambda_profile(k33_graph());
  EXPECT_EQ(k33.lambda, 0u);
  EXPECT_EQ(k33.rho, 9u);
  EXPECT_EQ(k33.partners, std::vector<std::size_t>(6, 3));
  EXPECT_EQ(lambda_profile(cycle_graph_c4_cubic()).rho, 2u);
  EXPECT_EQ(lambda_profile(cube_graph()).rho, 16u);
  EXPECT_EQ(lambda_profile(petersen_graph()).lambda, 10u);
}

TEST(Lambda, K33SpliceK4) {
  Multigraph g = k33_splice_k4();
  auto p = lambda_profile(g);
  EXPECT_EQ(g.n(), 8u);
  EXPECT_EQ(p.lambda, 6u);
  EXPECT_EQ(p.lambda_set, (VertexSet{2, 3, 4, 5, 6, 7}));  // B' and X
}

TEST(Lambda, CertificatesHaveTheRightDegrees) {
  for (const auto& g : testing_corpus::upto(10, 2)) {
    for (Vertex v = 0; v < g.n(); ++v)
      if (auto c = find_v_matching(g, v)) {
        EXPECT_TRUE(c->validate(g));
        EXPECT_EQ(c->centers, (std::vector<Vertex>{v}));
      }
    if (auto parts = bipartition(g))
      for (Vertex a : parts->a)
        for (Vertex b : parts->b)
          if (auto c = find_ab_matching(g, a, b)) EXPECT_TRUE(c->validate(g));
  }
}

TEST(Lambda, FastPathMatchesEnumeration) {
  for (const auto& g : testing_corpus::upto(10, 2)) {
    auto fast = lambda_profile(g), slow = oracle::lambda_profile(g);
    EXPECT_EQ(fast.lambda_set, slow.lambda_set);
    EXPECT_EQ(fast.pairs, slow.pairs);
    EXPECT_EQ(fast.partners, slow.partners);
  }
}

TEST(Lambda, InvariantUnderRelabelling) {
  std::mt19937 rng(11);
  for (const auto& g : testing_corpus::upto(10, 2)) {
    auto h = testing_corpus::relabel(g, rng);
    auto p = lambda_profile(g), q = lambda_profile(h);
    EXPECT_EQ(p.lambda, q.lambda);
    EXPECT_EQ(p.rho, q.rho);
  }
}

TEST(Lambda, PreconditionsAreChecked) {
  Multigraph path(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(lambda_profile(path), GraphError);
  Multigraph b(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 5}});
  ASSERT_TRUE(is_cubic(b));
  EXPECT_THROW(lambda_profile(b), GraphError);
  EXPECT_THROW(find_ab_matching(k33_graph(), 0, 0), GraphError);
  auto parts = bipartition(k33_graph());
  EXPECT_THROW(is_lambda_matchable_pair(k33_graph(), *parts, 0, 1), GraphError);
  EXPECT_TRUE(is_lambda_matchable_pair(k33_graph(), *parts, 0, 3));
  EXPECT_THROW(partner_count(k4_graph(), 0), GraphError);
}

// A vertex is not λ-matchable iff a barrier isolates it.
TEST(Lambda, IsolatingBarriers) {
  for (const auto& g : testing_corpus::upto(12, 3)) {
    for (Vertex v = 0; v < g.n(); ++v) {
      auto b = find_isolating_barrier(g, v);
      if (is_lambda_matchable_vertex(g, v)) {
        EXPECT_FALSE(b.has_value());
        continue;
      }
      ASSERT_TRUE(b.has_value());
      EXPECT_TRUE(is_barrier(g, b->vertices));
      for (Vertex w : g.neighbors(v)) EXPECT_TRUE(b->contains(w));
      EXPECT_FALSE(b->contains(v));
    }
  }
}

// Every edge ab of a connected bipartite cubic graph lies in a 2-cut or
// gives a λ-matchable pair, never both.
TEST(Lambda, EdgesInTwoCutsOrMatchable) {
  for (const auto& g : testing_corpus::upto(12, 2)) {
    if (!is_bipartite(g)) continue;
    auto cuts = enumerate_small_cuts(g, 2);
    for (EdgeIndex e = 0; e < g.m(); ++e) {
      bool in_cut = std::any_of(cuts.begin(), cuts.end(), [&](const Cut& c) {
        return std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end();
      });
      EXPECT_NE(in_cut, is_lambda_matchable_pair(g, g.edge(e).u, g.edge(e).v));
    }
  }
}

// The cut characterization of non-matchable pairs agrees with the search.
TEST(Lambda, PairCharacterizationByCuts) {
  for (const auto& g : testing_corpus::upto(12, 2)) {
    auto parts = bipartition(g);
    if (!parts) continue;
    std::vector<Cut> tight;
    for (const Cut& c : enumerate_small_cuts(g, 3))
      if (is_tight_cut(g, c)) tight.push_back(c);
    auto two = enumerate_small_cuts(g, 2);
    for (Vertex a : parts->a)
      for (Vertex b : parts->b)
        EXPECT_EQ(pair_blocked_by_cuts(g, *parts, a, b, tight, two), !is_lambda_matchable_pair(g, a, b));
  }
}

TEST(Lambda, PartnerCount) {
  EXPECT_EQ(partner_count(k33_graph(), 0), 3u);
  EXPECT_EQ(partner_count(cube_graph(), 0), 4u);
}
