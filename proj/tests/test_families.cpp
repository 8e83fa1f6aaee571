#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace cubmatch;

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::J, Family::K, Family::Kprime, Family::L, Family::G, Family::Gprime, Family::N,
                   Family::Nprime})
    EXPECT_EQ(family_from_string(to_string(f)), f);
  EXPECT_FALSE(family_from_string("Q").has_value());
}

TEST(Generators, KWitnessesValidateAndAreRecognised) {
  Recognizer rec;
  const std::size_t want_n[] = {6, 10, 14, 18};
  for (std::size_t d = 0; d < 4; ++d) {
    FamilyMember m = gen_K(d);
    EXPECT_EQ(m.graph.n(), want_n[d]);
    EXPECT_TRUE(validate_witness(m.witness));
    EXPECT_TRUE(rec.in_K(m.graph));
    auto w = rec.witness_K(m.graph);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(validate_witness(*w));
    EXPECT_EQ(lambda_profile(m.graph).rho, 3 * m.graph.n() - 9);
  }
}

TEST(Generators, GWitnessesValidateAndAreRecognised) {
  Recognizer rec;
  const std::size_t want_n[] = {4, 12, 20, 28};
  for (std::size_t d = 0; d < 4; ++d) {
    FamilyMember m = gen_G(d);
    EXPECT_EQ(m.graph.n(), want_n[d]);
    EXPECT_TRUE(validate_witness(m.witness));
    auto w = rec.witness_G(m.graph);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(validate_witness(*w));
    if (m.graph.n() <= 20) {
      EXPECT_EQ(lambda_profile(m.graph).lambda, m.graph.n());
      EXPECT_EQ(invariants(m.graph).beta, m.graph.n());
    }
  }
}

TEST(Generators, NWitnessesValidateAndAreRecognised) {
  Recognizer rec;
  for (std::size_t d = 0; d < 3; ++d)
    for (const FamilyMember& m : gen_N(d)) {
      EXPECT_TRUE(validate_witness(m.witness));
      EXPECT_EQ(m.witness.x_vertex, m.x_vertex);
      auto w = rec.witness_N(m.graph, m.x_vertex);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(validate_witness(*w));
      if (m.graph.n() > 20) continue;
      auto p = lambda_profile(m.graph);
      if (m.x_vertex) {
        EXPECT_EQ(p.lambda, m.graph.n() - 1);
        EXPECT_FALSE(std::binary_search(p.lambda_set.begin(), p.lambda_set.end(), *m.x_vertex));
      } else {
        EXPECT_EQ(p.lambda, m.graph.n());
      }
    }
}

TEST(Witness, TamperingIsDetected) {
  FamilyMember k = gen_K(1);
  FamilyWitness w = k.witness;
  w.family = Family::G;
  EXPECT_FALSE(validate_witness(w));

  FamilyWitness moved = k.witness;
  moved.graph = k33_splice_k4();
  EXPECT_FALSE(validate_witness(moved));

  auto ns = gen_N(1);
  FamilyWitness n = ns.front().witness;
  ASSERT_FALSE(n.a0.empty());
  n.a0.pop_back();
  EXPECT_FALSE(validate_witness(n));
}

TEST(Witness, ReplayRebuildsTheGraph) {
  for (std::size_t d = 1; d < 3; ++d) {
    FamilyMember m = gen_G(d);
    EXPECT_TRUE(are_isomorphic(replay_splice(m.witness).graph, m.graph));
  }
}

namespace {

struct Row {
  const char* name;
  bool kprime, l, gprime, nprime;
};

}  // namespace

TEST(Recognizer, FixtureMembership) {
  const Row rows[] = {
      {"Theta", 1, 1, 1, 0},         {"C4cubic", 1, 1, 1, 0},      {"K4", 0, 0, 1, 1},
      {"K33", 1, 1, 1, 0},           {"C6bar", 0, 0, 1, 1},        {"Cube", 0, 1, 1, 0},
      {"Petersen", 0, 0, 1, 1},      {"PentagonalPrism", 0, 0, 1, 1}, {"K33sK4", 0, 0, 0, 0},
      {"K33sK33", 1, 1, 1, 0},       {"K33s2K4", 0, 0, 0, 0},      {"K33s3K4", 0, 0, 1, 1},
      {"LambdaGtBeta", 0, 0, 0, 1},  {"K4gK33", 0, 0, 1, 0},       {"K33gThetagK33", 1, 1, 1, 0},
      {"BarrierExample", 0, 0, 0, 0}, {"LnotKprime", 0, 1, 1, 0},   {"NprimeExample", 0, 0, 1, 1},
      {"CubesK33", 0, 0, 1, 0},      {"CubesCube", 0, 0, 1, 0},
  };
  Recognizer rec;
  for (const Row& r : rows) {
    SCOPED_TRACE(r.name);
    Multigraph g = named(r.name);
    EXPECT_EQ(rec.in_prime(g, Family::Kprime), r.kprime);
    EXPECT_EQ(rec.in_prime(g, Family::L), r.l);
    EXPECT_EQ(rec.in_prime(g, Family::Gprime), r.gprime);
    EXPECT_EQ(rec.in_prime(g, Family::Nprime), r.nprime);
    for (Family f : {Family::Kprime, Family::L, Family::Gprime, Family::Nprime})
      if (auto w = rec.witness_prime(g, f)) EXPECT_TRUE(validate_witness(*w));
  }
}

// Membership against the extremal values, through n = 10.
TEST(Recognizer, MembershipMatchesExtremalValues) {
  Recognizer rec;
  for (const auto& g : testing_corpus::upto(10, 2)) {
    auto p = lambda_profile(g);
    auto inv = invariants(g);
    EXPECT_EQ(rec.in_prime(g, Family::Gprime), p.lambda == inv.beta);
    EXPECT_EQ(rec.in_prime(g, Family::Nprime), p.lambda == g.n());
    if (vertex_connectivity(g) < 3) continue;
    EXPECT_EQ(rec.in_N(g, std::nullopt), p.lambda == g.n());
    for (Vertex u = 0; u < g.n(); ++u)
      EXPECT_EQ(rec.in_N(g, u), p.lambda + 1 == g.n() && !p.in_lambda(u));
    if (!p.bipartite) EXPECT_EQ(rec.in_G(g), p.lambda == inv.beta);
  }
}

TEST(Recognizer, WitnessAgreesWithMembership) {
  Recognizer rec;
  for (const auto& g : testing_corpus::upto(10, 3)) {
    EXPECT_EQ(rec.in_K(g), rec.witness_K(g).has_value());
    EXPECT_EQ(rec.in_G(g), rec.witness_G(g).has_value());
    EXPECT_EQ(rec.in_N(g, std::nullopt), rec.witness_N(g, std::nullopt).has_value());
    if (auto w = rec.witness_G(g)) EXPECT_TRUE(validate_witness(*w));
  }
}

TEST(Barriers, StableBarriersAreTheNontrivialBarriers) {
  auto key = [](const Barrier& b) { return b.vertices; };
  for (const auto& g : testing_corpus::upto(10, 3)) {
    std::vector<VertexSet> got, want;
    for (const auto& b : stable_barriers(g)) got.push_back(key(b));
    for (const auto& b : all_barriers(g, 2)) want.push_back(key(b));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
}
