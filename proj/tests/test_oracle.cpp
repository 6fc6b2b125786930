#include <gtest/gtest.h>

#include <algorithm>

#include "bichroma/errors.hpp"
#include "bichroma/gen.hpp"
#include "bichroma/oracle.hpp"
#include "support.hpp"

using namespace bichroma;

TEST(OracleMatching, Examples) {
  EXPECT_EQ(oracle::matching(CollinearInstance::unit("RBRB")).weight, 2.0);
  const auto rrbb = oracle::matching(CollinearInstance::unit("RRBB"));
  EXPECT_EQ(rrbb.weight, 4.0);
  EXPECT_EQ(rrbb.feasible_count, 1u);
  EXPECT_EQ(oracle::matching(CollinearInstance::unit("RBRB")).feasible_count, 2u);
  EXPECT_THROW(oracle::matching(CollinearInstance::unit("RRB")), Infeasible);
}

TEST(OracleMatching, BlockSplittingAgreesWithPairingEnumeration) {
  std::mt19937_64 rng(3);
  for (std::size_t m = 2; m <= 8; m += 2) {
    for (const auto& unit : color_sequences(m, SequenceFilter::BalancedOnly)) {
      const auto inst = testkit::with_spacing(unit.colors(), rng, false);
      const auto a = oracle::matching(inst);
      const auto b = oracle::matching_by_pairings(inst);
      ASSERT_EQ(a.feasible_count, b.feasible_count) << inst.color_string();
      ASSERT_TRUE(testkit::close(a.weight, b.weight)) << inst.color_string();
    }
  }
}

TEST(OracleMatching, MinimumIsBelowEveryEnumeratedMatching) {
  const auto inst = CollinearInstance::unit("RRBRBBRB");
  const double best = oracle::matching(inst).weight;
  oracle::enumerate_noncrossing_matchings(inst, {}, [&](std::span<const ArcEdge> edges) {
    EXPECT_LE(best, total_weight(inst, edges));
    EXPECT_EQ(count_crossings(edges, inst.size()), 0u);
  });
}

TEST(OracleBudget, AbortsInsteadOfTruncating) {
  const auto big = CollinearInstance::unit("RBRBRBRBRBRBRB");
  EXPECT_THROW(oracle::matching(big), BudgetExceeded);
  EXPECT_THROW(oracle::matching(CollinearInstance::unit("RBRBRBRB"), {12, 3}), BudgetExceeded);
  EXPECT_THROW(oracle::tsp_circle(CircleInstance(7, 7)), BudgetExceeded);
  EXPECT_NO_THROW(oracle::matching(big, {14, 10'000'000}));
}

TEST(OracleMstCrossing, Examples) {
  EXPECT_EQ(oracle::mst_crossing(CollinearInstance::unit("RB")), 1.0);
  EXPECT_EQ(oracle::mst_crossing(CollinearInstance::unit("RRB")), 3.0);
  EXPECT_THROW(oracle::mst_crossing(CollinearInstance::unit("BB")), Infeasible);
}

TEST(OracleMstNoncrossing, Examples) {
  const CollinearInstance rb({{0, Color::Red}, {1.75, Color::Blue}});
  EXPECT_EQ(oracle::mst_noncrossing(rb).weight, 1.75);
  EXPECT_EQ(oracle::mst_noncrossing(CollinearInstance::unit("RBRB")).weight, 3.0);
  EXPECT_EQ(oracle::mst_noncrossing(CollinearInstance::unit("RRBB")).weight, 6.0);
}

TEST(OracleMstNoncrossing, ReducedCandidatesMatchAllArcs) {
  std::mt19937_64 rng(17);
  for (std::size_t m = 2; m <= 7; ++m) {
    for (const auto& unit : color_sequences(m, SequenceFilter::All)) {
      if (!unit.bichromatic()) continue;
      const auto colors = unit.colors();
      const oracle::NoncrossingTreeCatalog reduced(colors, oracle::CandidateEdges::ConsecutiveChunks);
      const oracle::NoncrossingTreeCatalog full(colors, oracle::CandidateEdges::All);
      ASSERT_LE(reduced.tree_count(), full.tree_count());
      for (int s = 0; s < 5; ++s) {
        const auto inst = s == 0 ? unit : testkit::with_spacing(colors, rng, s % 2 == 0);
        ASSERT_TRUE(testkit::close(reduced.minimum(inst).weight, full.minimum(inst).weight)) << inst.color_string();
      }
    }
  }
}

TEST(OracleMstNoncrossing, CatalogHoldsOnlyNoncrossingTrees) {
  const auto inst = CollinearInstance::unit("RRBRB");
  const oracle::NoncrossingTreeCatalog all(inst.colors(), oracle::CandidateEdges::All);
  std::size_t seen = 0;
  all.for_each([&](std::span<const ArcEdge> tree) {
    ++seen;
    const auto v = validate(inst, ArcGraph(inst, {tree.begin(), tree.end()}), StructureKind::SpanningTree);
    EXPECT_TRUE(v.ok);
    EXPECT_TRUE(v.noncrossing);
  });
  EXPECT_EQ(seen, all.tree_count());
  EXPECT_THROW(all.minimum(CollinearInstance::unit("RBRRB")), InvalidInput);
}

TEST(OracleTsp, Examples) {
  EXPECT_EQ(oracle::tsp_circle(CircleInstance(2, 2)), 10);
  EXPECT_EQ(oracle::tsp_circle(CircleInstance(3, 3)), 16);
  EXPECT_EQ(oracle::tsp_circle(CircleInstance(4, 2)), 20);
}

TEST(OracleTsp, InvariantUnderRotationAndReflection) {
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {4, 2}, {4, 4}, {3, 3}, {3, 1}}) {
    const auto colors = CircleInstance(n, k).colors();
    const auto base = oracle::tsp_cycle(colors);
    for (std::size_t r = 0; r < colors.size(); ++r) {
      auto rotated = colors;
      std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(r), rotated.end());
      ASSERT_EQ(oracle::tsp_cycle(rotated), base);
      std::reverse(rotated.begin(), rotated.end());
      ASSERT_EQ(oracle::tsp_cycle(rotated), base);
    }
  }
}

TEST(OracleHamPath, Examples) {
  EXPECT_TRUE(oracle::hampath_exists(CollinearInstance::unit("RBRB"), oracle::PageSet::OneAbove));
  EXPECT_TRUE(oracle::hampath_exists(CollinearInstance::unit("RRBB"), oracle::PageSet::OneAbove));
  EXPECT_THROW(oracle::hampath_exists(CollinearInstance::unit("RRB"), oracle::PageSet::Two), Infeasible);
}

TEST(OracleHamPath, TwoPagesAlwaysSuffice) {
  for (std::size_t m = 2; m <= 10; m += 2) {
    for_each_color_sequence(m, SequenceFilter::BalancedOnly, [](const CollinearInstance& inst, bool) {
      ASSERT_TRUE(oracle::hampath_exists(inst, oracle::PageSet::Two)) << inst.color_string();
    });
  }
}

TEST(OracleHamPath, OnePageCounterexample) {
  const auto inst = CollinearInstance::unit(one_page_blocked_colors());
  const oracle::OracleBudget budget{16, 1'000'000'000};
  EXPECT_FALSE(oracle::hampath_exists(inst, oracle::PageSet::OneAbove, budget));
  EXPECT_TRUE(oracle::hampath_exists(inst, oracle::PageSet::Two, budget));
}

TEST(OracleHamPath, EnumeratedPathsAreNoncrossingPaths) {
  const auto inst = CollinearInstance::unit("RRBBRB");
  std::size_t count = 0;
  oracle::enumerate_hampaths(inst, oracle::PageSet::Two, {}, [&](std::span<const ArcEdge> edges) {
    ++count;
    const auto v = validate(inst, ArcGraph(inst, {edges.begin(), edges.end()}), StructureKind::HamPath);
    EXPECT_TRUE(v.ok && v.noncrossing);
  });
  EXPECT_GT(count, 0u);
}
