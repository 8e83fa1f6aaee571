#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace cubmatch;

TEST(EdgeList, ParsesTheta) {
  Multigraph g = parse_edge_list("cubmatch v1 n=2\n0 1\n0 1\n1 0\n");
  EXPECT_EQ(g.n(), 2u);
  EXPECT_EQ(g.m(), 3u);
  EXPECT_TRUE(are_isomorphic(g, theta_graph()));
}

TEST(EdgeList, RoundTripIsExact) {
  for (const auto& name : named_list()) {
    Multigraph g = named(name);
    std::string text = serialize_edge_list(g);
    EXPECT_EQ(serialize_edge_list(parse_edge_list(text)), text);
  }
}

TEST(EdgeList, CommentsAndBlankLines) {
  Multigraph g = parse_edge_list("# K4\n\ncubmatch v1 n=4\n0 1\n0 2\n# mid\n0 3\n1 2\n1 3\n2 3\n");
  EXPECT_TRUE(are_isomorphic(g, k4_graph()));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("cubmatch v1 n=2\n0 1\n0 0\n0 1\n");
    FAIL() << "loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_edge_list("cubmatch v1 n=2\n0 5\n");
    FAIL() << "out of range vertex accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_edge_list("cubmatch v1 n=x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("cubmatch v1 n=2\n0\n"), ParseError);
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(write_graph6(k4_graph()), "C~");
  EXPECT_TRUE(are_isomorphic(parse_graph6("C~"), k4_graph()));
  EXPECT_TRUE(are_isomorphic(parse_graph6("IheA@GUAo"), petersen_graph()));
  EXPECT_TRUE(are_isomorphic(parse_graph6(">>graph6<<IheA@GUAo\n"), petersen_graph()));
}

TEST(Graph6, RefusesMultigraphs) { EXPECT_THROW(write_graph6(theta_graph()), GraphError); }

TEST(Graph6, RoundTripOnSimpleGraphs) {
  for (const auto& g : testing_corpus::upto(10)) {
    if (!g.is_simple()) continue;
    Multigraph back = parse_graph6(write_graph6(g));
    EXPECT_TRUE(are_isomorphic(back, g));
    EXPECT_EQ(write_graph6(back), write_graph6(g));
  }
}

TEST(Graph6, LongForm) {
  Multigraph g = prism_graph(40);  // 80 vertices
  std::string s = write_graph6(g);
  EXPECT_EQ(s.front(), '~');
  EXPECT_TRUE(are_isomorphic(parse_graph6(s), g));
}

TEST(Graph6, RejectsGarbage) {
  EXPECT_THROW(parse_graph6("C"), GraphError);
  EXPECT_THROW(parse_graph6("C~~"), GraphError);
  EXPECT_THROW(parse_graph6(std::string("C\x01", 2)), GraphError);
}

TEST(Dot, MentionsEveryEdge) {
  std::string s = to_dot(k4_graph());
  EXPECT_NE(s.find("graph G {"), std::string::npos);
  EXPECT_EQ(std::count(s.begin(), s.end(), '-'), 12);
  std::string t = to_dot(tight_cut_decomposition(k33_splice_k4()));
  EXPECT_NE(t.find("digraph tight"), std::string::npos);
  EXPECT_EQ(std::count(t.begin(), t.end(), '>'), 2);
}

TEST(Json, GraphRoundTrip) {
  for (const auto& name : named_list()) {
    Multigraph g = named(name);
    Json j = graph_json(g);
    EXPECT_EQ(j.at("hash").get<std::string>(), canonical_hash(g));
    EXPECT_EQ(graph_json(graph_from_json(j)).dump(), j.dump());
  }
}

TEST(Json, OutputIsDeterministic) {
  Multigraph g = k33_splice_k4();
  EXPECT_EQ(profile_json(lambda_profile(g)).dump(), profile_json(lambda_profile(g)).dump());
  EXPECT_EQ(tree_json(tight_cut_decomposition(g)).dump(), tree_json(tight_cut_decomposition(g)).dump());
  EXPECT_EQ(invariants_json(invariants(g)).at("beta"), 4);
}

TEST(Json, IdsSurvive) {
  Multigraph g(2);
  g.add_edge(0, 1, 5);
  g.add_edge(0, 1, 9);
  g.add_edge(0, 1, 2);
  Multigraph back = graph_from_json_with_ids(graph_json_with_ids(g));
  ASSERT_EQ(back.m(), 3u);
  EXPECT_EQ(back.edge(0).id, 5u);
  EXPECT_EQ(back.edge(1).id, 9u);
  EXPECT_EQ(back.edge(2).id, 2u);
}

TEST(Json, WitnessRoundTripStillValidates) {
  std::vector<FamilyWitness> ws = {gen_K(2).witness, gen_G(2).witness};
  for (const auto& m : gen_N(2)) ws.push_back(m.witness);
  for (const auto& w : ws) {
    Json j = witness_json(w);
    FamilyWitness back = witness_from_json(j);
    EXPECT_TRUE(validate_witness(back));
    EXPECT_EQ(witness_json(back).dump(), j.dump());
  }
  Json bad = witness_json(gen_K(1).witness);
  bad["family"] = "Q";
  EXPECT_THROW(witness_from_json(bad), GraphError);
}
