#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace cubmatch;

namespace {

FormMultiset forms(std::initializer_list<Multigraph> gs) {
  FormMultiset out;
  for (const auto& g : gs) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

FormMultiset forms(const std::vector<Multigraph>& gs) {
  FormMultiset out;
  for (const auto& g : gs) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Tightness, FastPathMatchesEnumeration) {
  for (const auto& g : testing_corpus::upto(12, 2)) {
    auto parts = bipartition(g);
    for (const Cut& c : enumerate_small_cuts(g, 3)) {
      const bool want = oracle::is_tight_cut(g, c);
      EXPECT_EQ(is_tight_cut(g, c), want);
      if (parts) EXPECT_EQ(is_tight_cut_bipartite(g, *parts, c), want);
    }
  }
}

TEST(Tightness, EvenCutsAreRejected) {
  Multigraph g = cube_graph();
  Cut c = cut_of(g, VertexSet{0, 1});
  EXPECT_THROW(is_tight_cut(g, c), GraphError);
}

TEST(Tightness, TightCutsAreSeparating) {
  for (const auto& g : testing_corpus::upto(10, 2))
    for (const Cut& c : enumerate_small_cuts(g, 3)) {
      const bool sep = is_separating_cut(g, c);
      EXPECT_EQ(sep, oracle::is_separating_cut(g, c));
      if (is_tight_cut(g, c)) EXPECT_TRUE(sep);
    }
}

// The triangular prism has a separating 3-cut (around a triangle) that is
// not tight.
TEST(Tightness, PrismHasSeparatingNonTightCut) {
  Multigraph g = prism_graph(3);
  bool found = false;
  for (const Cut& c : enumerate_small_cuts(g, 3))
    if (!c.is_trivial(g.n()) && is_separating_cut(g, c) && !is_tight_cut(g, c)) found = true;
  EXPECT_TRUE(found);
}

TEST(TightCutDecomposition, K33SpliceK4) {
  auto t = tight_cut_decomposition(k33_splice_k4());
  EXPECT_EQ(leaf_forms(t, false), forms({k4_graph(), k33_graph()}));
  EXPECT_EQ(t.root.kind, NodeKind::internal);
  ASSERT_EQ(t.root.children.size(), 2u);
}

TEST(TightCutDecomposition, LeavesAreBricksAndBraces) {
  for (const auto& g : testing_corpus::upto(10, 2)) {
    auto t = tight_cut_decomposition(g);
    for (const auto* leaf : t.leaves()) {
      EXPECT_FALSE(find_nontrivial_tight_cut(leaf->graph).has_value());
      if (leaf->kind == NodeKind::brick) EXPECT_TRUE(is_brick(leaf->graph));
      else EXPECT_TRUE(is_bipartite(leaf->graph));
    }
  }
}

TEST(TightCutDecomposition, RequiresTwoConnectedCubic) {
  Multigraph b(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 5}});
  EXPECT_THROW(tight_cut_decomposition(b), GraphError);
  EXPECT_THROW(two_cut_decomposition(Multigraph(3, {{0, 1}, {1, 2}})), GraphError);
}

// Leaf multisets do not depend on which cut is taken first.
TEST(Decomposition, UniqueUnderFirstChoice) {
  for (const auto& g : testing_corpus::upto(10, 2)) {
    auto t0 = leaf_forms(tight_cut_decomposition(g, 0), false);
    const std::size_t tc = nontrivial_tight_cuts(g).size();
    for (std::size_t i = 1; i < tc; ++i) EXPECT_EQ(leaf_forms(tight_cut_decomposition(g, i), false), t0);
    auto s0 = leaf_forms(two_cut_decomposition(g, 0), false);
    const std::size_t sc = enumerate_small_cuts(g, 2).size();
    for (std::size_t i = 1; i < sc; ++i) EXPECT_EQ(leaf_forms(two_cut_decomposition(g, i), false), s0);
  }
}

TEST(Decomposition, LeavesMatchOracle) {
  for (const auto& g : testing_corpus::upto(10, 2)) {
    EXPECT_EQ(leaf_forms(tight_cut_decomposition(g), false), forms(oracle::tight_cut_leaves(g)));
    EXPECT_EQ(forms(three_connected_pieces(g)), forms(oracle::three_connected_pieces(g)));
  }
}

TEST(TwoCutDecomposition, PiecesOfGluedGraphs) {
  EXPECT_EQ(forms(three_connected_pieces(k4_glue_k33())), forms({k4_graph(), k33_graph()}));
  EXPECT_EQ(forms(three_connected_pieces(k33_glue_theta_glue_k33())),
            forms({k33_graph(), theta_graph(), k33_graph()}));
  EXPECT_EQ(forms(three_connected_pieces(cycle_graph_c4_cubic())), forms({theta_graph(), theta_graph()}));
  for (const auto& p : three_connected_pieces(k33_glue_theta_glue_k33())) EXPECT_GE(vertex_connectivity(p), 3u);
}

TEST(TwoCutDecomposition, MarkedComponentsUndoGluing) {
  Multigraph g = glue(petersen_graph(), 0, cube_graph(), 5);
  auto cuts = enumerate_small_cuts(g, 2);
  ASSERT_EQ(cuts.size(), 1u);
  auto [m1, m2] = marked_components(g, cuts.front());
  EXPECT_EQ(forms({m1.graph, m2.graph}), forms({petersen_graph(), cube_graph()}));
  EXPECT_TRUE(is_cubic(m1.graph));
  EXPECT_TRUE(is_cubic(m2.graph));
}

TEST(Invariants, Fixtures) {
  auto k4 = invariants(k4_graph());
  EXPECT_EQ(k4.b, 1u);
  EXPECT_EQ(k4.beta, 4u);
  auto k33 = invariants(k33_graph());
  EXPECT_EQ(k33.b_prime, 1u);
  EXPECT_EQ(k33.beta_prime, 9u);
  auto g = invariants(k4_glue_k33());
  EXPECT_EQ(g.beta, 4u);
  EXPECT_EQ(g.n_nonbip, 4u);
  EXPECT_EQ(g.theta_bar, 2u);
  auto h = invariants(k33_glue_theta_glue_k33());
  EXPECT_EQ(h.beta_prime, 18u);
  EXPECT_EQ(h.b_prime, 2u);
  EXPECT_EQ(h.theta, 1u);
  EXPECT_EQ(h.theta_bar, 2u);
  auto t = invariants(theta_graph());
  EXPECT_EQ(t.theta, 1u);
  EXPECT_EQ(t.b_prime, 0u);
  EXPECT_EQ(invariants(k33_splice_k4()).beta, 4u);
  EXPECT_EQ(invariants(lambda_gt_beta_graph()).beta, 16u);
}

TEST(Invariants, FastPathMatchesOracle) {
  for (const auto& g : testing_corpus::upto(10, 2)) EXPECT_TRUE(invariants(g) == oracle::invariants(g));
}

TEST(Invariants, InvariantUnderRelabelling) {
  std::mt19937 rng(5);
  for (const auto& g : testing_corpus::upto(10, 2))
    EXPECT_TRUE(invariants(g) == invariants(testing_corpus::relabel(g, rng)));
}

TEST(TwoCut, BStarAndSumsAcrossEveryTwoCut) {
  for (const auto& g : testing_corpus::upto(10, 2))
    for (const Cut& c : enumerate_small_cuts(g, 2)) {
      auto r = check_bstar_across_2cut(g, c);
      EXPECT_TRUE(r.bstar_matches);
      EXPECT_TRUE(r.tight_sums_additive);
      EXPECT_TRUE(r.piece_sums_additive);
      if (r.which == TwoCutCase::both_theta) EXPECT_TRUE(are_isomorphic(g, cycle_graph_c4_cubic()));
    }
}

TEST(TwoCut, C4IsTheBothThetaCase) {
  Multigraph g = cycle_graph_c4_cubic();
  auto cuts = enumerate_small_cuts(g, 2);
  ASSERT_FALSE(cuts.empty());
  auto r = check_bstar_across_2cut(g, cuts.front());
  EXPECT_EQ(r.which, TwoCutCase::both_theta);
  EXPECT_EQ(bricks_and_braces(g), FormMultiset{c4_form()});
}

TEST(Barrier, DecompositionIdentitiesHold) {
  for (const auto& g : testing_corpus::upto(12, 3)) {
    if (g.n() < 4) continue;
    for (const Barrier& b : candidate_barriers(g)) {
      auto d = barrier_decomposition(g, b);
      EXPECT_TRUE(d.cuts_tight);
      EXPECT_TRUE(d.pieces_cubic_3conn);
      EXPECT_TRUE(d.bstar_splits);
      EXPECT_TRUE(d.beta_splits);
      EXPECT_TRUE(is_bipartite(d.core));
      EXPECT_EQ(lambda_via_barrier(g, b), lambda_profile(g).lambda_set);
    }
  }
}

TEST(Barrier, RejectsNonBarriers) {
  EXPECT_THROW(barrier_decomposition(k33_splice_k4(), Barrier{{0, 1}}), GraphError);
  EXPECT_THROW(barrier_decomposition(k4_glue_k33(), Barrier{{0}}), GraphError);
}

TEST(Barrier, ExampleFragments) {
  Multigraph g = barrier_example_graph();
  auto b = find_nontrivial_barrier(g);
  ASSERT_TRUE(b.has_value());
  auto d = barrier_decomposition(g, *b);
  EXPECT_TRUE(are_isomorphic(d.core, k33_graph()));
  EXPECT_EQ(lambda_profile(g).lambda, 11u);
}
