#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "planedp/generate.hpp"
#include "planedp/solver.hpp"

using namespace planedp;

namespace {

Graph k4() { return Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)}); }

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

}  // namespace

TEST(Solver, K4ProperFourExtendsSingleVertex) {
  Graph g = k4();
  auto out = extend_precolored(g, ListAssignment::uniform(4, 4), encode_proper_coloring(g, 4), {0}, {1},
                               TheoremId::MRA);
  ASSERT_EQ(out.status, SearchStatus::Extended);
  EXPECT_EQ(out.coloring[0], 1);
  EXPECT_TRUE(is_mcoloring(g, ListAssignment::uniform(4, 4), encode_proper_coloring(g, 4), out.coloring));
}

TEST(Solver, K4ProperThreeHasNoColoring) {
  Graph g = k4();
  EXPECT_EQ(find_mcoloring(g, ListAssignment::uniform(4, 3), encode_proper_coloring(g, 3)).status,
            SearchStatus::NoExtension);
}

TEST(Solver, FiveCycleFullThreeAssignments) {
  Graph g = cycle(5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto M = random_assignment(g, 3, seed, AssignmentProfile::full());
    EXPECT_EQ(find_mcoloring(g, ListAssignment::uniform(5, 3), M).status, SearchStatus::Extended);
  }
}

TEST(Solver, WholeCyclePrecolored) {
  Graph g = cycle(6);
  auto L = ListAssignment::uniform(6, 4);
  auto M = encode_proper_coloring(g, 4);
  std::vector<Color> phi{1, 2, 1, 2, 1, 3};
  auto out = extend_precolored(g, L, M, {0, 1, 2, 3, 4, 5}, phi, TheoremId::MRB);
  ASSERT_EQ(out.status, SearchStatus::Extended);
  EXPECT_EQ(out.coloring, phi);
}

TEST(Solver, BadPrecoloring) {
  Graph g = cycle(6);
  try {
    extend_precolored(g, ListAssignment::uniform(6, 4), encode_proper_coloring(g, 4), {0, 1, 2, 3, 4, 5},
                      {1, 1, 2, 3, 2, 3}, TheoremId::MRA);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadPrecoloring);
  }
}

TEST(Solver, BadS) {
  Graph g = cycle(8);
  auto L = ListAssignment::uniform(8, 4);
  auto M = encode_proper_coloring(g, 4);
  auto code = [&](std::vector<int> s, TheoremId t) {
    try {
      extend_precolored(g, L, M, s, std::vector<Color>(s.size(), 1), t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::MalformedInput;
  };
  EXPECT_EQ(code({0}, TheoremId::MRB), ErrorCode::BadS);
  EXPECT_EQ(code({0, 1, 2}, TheoremId::MRA), ErrorCode::BadS);
  EXPECT_EQ(code({0, 1, 2, 3, 4, 5, 6, 7}, TheoremId::MRC), ErrorCode::BadS);
}

TEST(Solver, BudgetExhaustedIsDistinct) {
  Graph g = k4();
  auto out = find_mcoloring(g, ListAssignment::uniform(4, 3), encode_proper_coloring(g, 3), {}, 2);
  EXPECT_EQ(out.status, SearchStatus::BudgetExhausted);
}

TEST(Solver, AgreesWithEnumeration) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const int n = 3 + i % 6, k = 1 + i % 3;
    auto pg = generate(GenProfile::parse("triangulation"), n, rng());
    const Graph& g = pg.graph();
    auto L = ListAssignment::uniform(n, k);
    auto prof = i % 2 ? AssignmentProfile::full() : AssignmentProfile::sparse(0.6);
    auto M = random_assignment(g, k, rng(), prof);
    Coloring pre(n, 0);
    if (i % 4 == 0) pre[0] = 1;
    auto out = find_mcoloring(g, L, M, pre);
    const bool truth = oracle::has_mcoloring(g, L, M, pre);
    EXPECT_EQ(out.status == SearchStatus::Extended, truth);
    EXPECT_NE(out.status, SearchStatus::BudgetExhausted);
    if (out.status == SearchStatus::Extended) {
      EXPECT_TRUE(is_mcoloring(g, L, M, out.coloring));
      if (pre[0]) { EXPECT_EQ(out.coloring[0], 1); }
    }
  }
}

TEST(Solver, GreedyExtension) {
  Graph g = cycle(4);
  auto L = ListAssignment::uniform(4, 3);
  auto M = encode_proper_coloring(g, 3);
  auto out = extend_greedily(g, L, M, {1, 0, 0, 0}, {1, 2, 3});
  ASSERT_TRUE(out.has_value());
  EXPECT_TRUE(is_mcoloring(g, L, M, *out));
}

TEST(ChiDp, GroundTruths) {
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(adversarial_chi_dp(cycle(n), 4, true).chi, 3) << "C" << n;
  EXPECT_EQ(adversarial_chi_dp(k4(), 4, true).chi, 4);
  Graph tree(5, {Edge(0, 1), Edge(1, 2), Edge(1, 3), Edge(3, 4)});
  EXPECT_EQ(adversarial_chi_dp(tree, 4, true).chi, 2);
}

TEST(ChiDp, ReductionAgreesWithoutReduction) {
  for (int n = 3; n <= 5; ++n) {
    auto a = adversarial_chi_dp(cycle(n), 3, true);
    auto b = adversarial_chi_dp(cycle(n), 3, false);
    EXPECT_EQ(a.chi, b.chi);
    EXPECT_LE(a.assignments_checked, b.assignments_checked);
  }
}

TEST(ChiDp, HardAssignmentIsUncolorable) {
  auto r = adversarial_chi_dp(cycle(4), 3, true);
  ASSERT_EQ(r.chi, 3);
  ASSERT_TRUE(r.hard_assignment.has_value());
  EXPECT_EQ(r.hard_k, 2);
  EXPECT_FALSE(oracle::has_mcoloring(cycle(4), ListAssignment::uniform(4, 2), *r.hard_assignment));
}
