#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace cubmatch;

TEST(Verify, FixturesAreGreen) {
  Recognizer rec;
  VerifyOptions opt;
  opt.oracle_max_n = 14;
  for (const auto& name : named_list()) {
    Multigraph g = named(name);
    if (!is_cubic(g)) continue;  // the 5-wheel
    SCOPED_TRACE(name);
    VerificationReport rep = verify_graph(g, rec, opt);
    for (const auto& r : rep.records) {
      EXPECT_TRUE(r.green()) << r.theorem << (r.failures.empty() ? "" : ": " + r.failures.front());
    }
  }
}

TEST(Verify, K33RecordValues) {
  Recognizer rec;
  TheoremRecord r = check_rho_bounds(k33_graph(), rec);
  EXPECT_TRUE(r.green());
  EXPECT_EQ(r.values.at("rho"), 9);
  EXPECT_EQ(r.values.at("middle_3conn"), 9);
  EXPECT_EQ(r.values.at("lower_3conn"), 9);
  EXPECT_EQ(r.equality, std::optional<bool>(true));
  TheoremRecord l = check_lambda_bounds(k33_graph(), rec);
  EXPECT_EQ(l.values.at("lambda"), 0);
  EXPECT_EQ(l.values.at("beta"), 0);
}

TEST(Verify, LambdaAboveBetaExample) {
  Recognizer rec;
  TheoremRecord r = check_lambda_bounds(lambda_gt_beta_graph(), rec);
  EXPECT_TRUE(r.green());
  EXPECT_GT(r.values.at("lambda"), r.values.at("beta"));
  EXPECT_EQ(r.equality, std::optional<bool>(false));
}

TEST(Verify, TechnicalInequality) {
  EXPECT_TRUE(check_technical_inequality(3, 3));
  EXPECT_TRUE(check_technical_inequality(3, 4));
  EXPECT_TRUE(check_technical_inequality(4, 4));
  for (long long p = 3; p < 20; ++p)
    for (long long q = 3; q < 20; ++q) EXPECT_TRUE(check_technical_inequality(p, q));
  EXPECT_THROW(check_technical_inequality(2, 5), GraphError);
}

TEST(Verify, RhoNeedsBipartiteInput) {
  Recognizer rec;
  EXPECT_THROW(check_rho_bounds(k4_graph(), rec), GraphError);
  EXPECT_THROW(check_pair_composition(petersen_graph()), GraphError);
}

TEST(Verify, CorpusThroughTenIsGreen) {
  auto reports = run_corpus(testing_corpus::upto(10, 2));
  EXPECT_EQ(reports.size(), 1u + 2 + 5 + 16 + 66);
  for (const auto& rep : reports) EXPECT_TRUE(rep.green()) << rep.graph_id;
}

TEST(Verify, WorkerCountDoesNotChangeOutput) {
  auto corpus = testing_corpus::upto(8, 2);
  auto one = run_corpus(corpus, {}, 1), two = run_corpus(corpus, {}, 2);
  ASSERT_EQ(one.size(), two.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(report_json(one[i]).dump(), report_json(two[i]).dump());
}

TEST(Verify, PreconditionFailuresAreReportedRed) {
  Multigraph bridge(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 5}});
  auto reports = run_corpus({bridge});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports.front().green());
  EXPECT_EQ(reports.front().records.front().theorem, "precondition");
}
