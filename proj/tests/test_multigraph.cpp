#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace cubmatch;

TEST(Multigraph, EdgesAreNormalisedAndIdsAdvance) {
  Multigraph g(3);
  EXPECT_EQ(g.add_edge(2, 0), 0u);
  EXPECT_EQ(g.edge(0).u, 0u);
  EXPECT_EQ(g.edge(0).v, 2u);
  g.add_edge(0, 1, 10);
  EXPECT_EQ(g.next_id(), 11u);
  EXPECT_EQ(g.edge(g.add_edge(1, 2)).id, 11u);
  EXPECT_THROW(g.add_edge(1, 1), GraphError);
  EXPECT_THROW(g.add_edge(0, 3), GraphError);
}

TEST(Multigraph, MultiplicityAndSimplicity) {
  Multigraph theta = theta_graph();
  EXPECT_EQ(theta.multiplicity(0, 1), 3u);
  EXPECT_EQ(theta.neighbors(0), (VertexSet{1}));
  EXPECT_FALSE(theta.is_simple());
  EXPECT_TRUE(k4_graph().is_simple());
  EXPECT_EQ(theta.find_edge_by_id(2), std::optional<EdgeIndex>(2));
  EXPECT_FALSE(theta.find_edge_by_id(7).has_value());
}

TEST(Multigraph, Bipartition) {
  auto p = bipartition(k33_graph());
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->a, (VertexSet{0, 1, 2}));
  EXPECT_EQ(p->b, (VertexSet{3, 4, 5}));
  EXPECT_FALSE(is_bipartite(k4_graph()));
  EXPECT_TRUE(is_bipartite(theta_graph()));
  EXPECT_TRUE(is_bipartite(cube_graph()));
  EXPECT_FALSE(is_bipartite(petersen_graph()));
}

TEST(Multigraph, ComponentsAndConnectivity) {
  Multigraph g(4, {{0, 1}, {2, 3}});
  auto [comp, count] = components(g);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_NE(comp[0], comp[2]);
  EXPECT_FALSE(is_connected(g));
  EXPECT_THROW(edge_connectivity(g), GraphError);

  EXPECT_EQ(edge_connectivity(theta_graph()), 3u);
  EXPECT_EQ(vertex_connectivity(theta_graph()), 3u);
  EXPECT_EQ(vertex_connectivity(k4_graph()), 3u);
  EXPECT_EQ(vertex_connectivity(cycle_graph_c4_cubic()), 2u);
  EXPECT_EQ(vertex_connectivity(petersen_graph()), 3u);
  EXPECT_EQ(vertex_connectivity(k4_glue_k33()), 2u);
}

TEST(Multigraph, VertexAndEdgeConnectivityAgreeOnCubicGraphs) {
  for (const auto& g : testing_corpus::upto(10))
    EXPECT_EQ(vertex_connectivity(g), edge_connectivity(g));
}

// In a cubic graph |∂(X)| and |X| have the same parity.
TEST(Multigraph, CutParityMatchesShoreParity) {
  for (const auto& g : testing_corpus::upto(10))
    for (std::size_t k = 1; k <= 4; ++k)
      for (const Cut& c : enumerate_small_cuts(g, k)) EXPECT_EQ(c.size() % 2, c.shore.size() % 2);
}

// Brute force over all shores containing vertex 0.
TEST(Multigraph, SmallCutEnumerationMatchesBruteForce) {
  for (const auto& g : testing_corpus::upto(10)) {
    const std::size_t n = g.n();
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<VertexSet> want;
      for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
        if (mask == (1u << n) - 1) continue;
        VertexSet shore;
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1u) shore.push_back(v);
        Cut c = cut_of(g, shore);
        if (c.size() == k && induces_connected(g, shore) && induces_connected(g, c.other_shore(n)))
          want.push_back(shore);
      }
      std::vector<VertexSet> got;
      for (const Cut& c : enumerate_small_cuts(g, k)) got.push_back(c.shore);
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want);
    }
  }
}

TEST(Multigraph, ContractionKeepsIdsAndPutsContractionVertexLast) {
  Multigraph g = k33_splice_k4();
  Cut c = cut_of(g, {5, 6, 7});
  ASSERT_EQ(c.size(), 3u);
  Contraction k = contract(g, c.shore);
  EXPECT_EQ(k.graph.n(), 6u);
  EXPECT_EQ(k.contraction_vertex, 5u);
  EXPECT_TRUE(are_isomorphic(k.graph, k33_graph()));
  for (EdgeIndex e = 0; e < k.graph.m(); ++e) {
    auto host = g.find_edge_by_id(k.graph.edge(e).id);
    ASSERT_TRUE(host.has_value());
  }
  EXPECT_EQ(k.to_host[k.contraction_vertex], kNoVertex);
  Contraction other = contract(g, c.other_shore(g.n()));
  EXPECT_TRUE(are_isomorphic(other.graph, k4_graph()));
}

TEST(Multigraph, InducedSubgraph) {
  Subgraph s = induced_subgraph(k4_graph(), VertexSet{1, 2, 3});
  EXPECT_EQ(s.graph.n(), 3u);
  EXPECT_EQ(s.graph.m(), 3u);
  EXPECT_EQ(s.to_host, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(s.from_host[0], kNoVertex);
}

TEST(Canonical, IsomorphismInvariantUnderRelabelling) {
  std::mt19937 rng(7);
  for (const auto& g : testing_corpus::upto(10))
    for (int rep = 0; rep < 3; ++rep) EXPECT_EQ(canonical_form(testing_corpus::relabel(g, rng)), canonical_form(g));
}

TEST(Canonical, DistinguishesNonIsomorphicGraphs) {
  auto all = testing_corpus::upto(10);
  std::vector<CanonicalForm> forms;
  for (const auto& g : all) forms.push_back(canonical_form(g));
  std::sort(forms.begin(), forms.end());
  EXPECT_EQ(std::adjacent_find(forms.begin(), forms.end()), forms.end());
  EXPECT_FALSE(are_isomorphic(prism_graph(3), k33_graph()));
  EXPECT_TRUE(are_isomorphic(moebius_ladder(6), k33_graph()));
}

TEST(Canonical, TintSeparatesVertexOrbits) {
  Multigraph g = k33_splice_k4();  // vertices 0,1 (A side) are not similar to 5 (K4 side)
  auto mark = [&](Vertex v) {
    std::vector<std::uint32_t> t(g.n(), 0);
    t[v] = 1;
    return canonical_form(g, t);
  };
  EXPECT_EQ(mark(0), mark(1));
  EXPECT_NE(mark(0), mark(5));
  EXPECT_THROW(canonical_form(g, std::vector<std::uint32_t>(3, 0)), GraphError);
}
