#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "bichroma/arc_graph.hpp"
#include "bichroma/errors.hpp"
#include "bichroma/gen.hpp"
#include "bichroma/oracle.hpp"
#include "support.hpp"

using namespace bichroma;

namespace {

const auto A = Page::Above;
const auto B = Page::Below;

}  // namespace

TEST(Color, ComplementSwaps) {
  EXPECT_EQ(complement(Color::Red), Color::Blue);
  EXPECT_EQ(complement(Color::Blue), Color::Red);
  EXPECT_EQ(colors_to_string(colors_from_string("rBbR")), "RBBR");
  EXPECT_THROW(color_from_char('G'), InvalidInput);
}

TEST(CollinearInstance, RejectsBadPoints) {
  EXPECT_THROW(CollinearInstance({{0, Color::Red}}), InvalidInput);
  EXPECT_THROW(CollinearInstance({{0, Color::Red}, {0, Color::Blue}}), InvalidInput);
  EXPECT_THROW(CollinearInstance({{1, Color::Red}, {0, Color::Blue}}), InvalidInput);
  EXPECT_THROW(CollinearInstance({{0, Color::Red}, {std::nan(""), Color::Blue}}), InvalidInput);
  EXPECT_THROW(CollinearInstance({{0, Color::Red}, {std::numeric_limits<double>::infinity(), Color::Blue}}),
               InvalidInput);
}

TEST(CollinearInstance, CountsAndFlags) {
  const auto inst = CollinearInstance::unit("RRBRB");
  EXPECT_EQ(inst.red_count(), 3u);
  EXPECT_EQ(inst.blue_count(), 2u);
  EXPECT_FALSE(inst.balanced());
  EXPECT_TRUE(inst.bichromatic());
  EXPECT_TRUE(inst.integral());
  EXPECT_FALSE(CollinearInstance({{0, Color::Red}, {0.5, Color::Blue}}).integral());
  EXPECT_NE(CollinearInstance::unit("RB").fingerprint(), CollinearInstance::unit("BR").fingerprint());
  EXPECT_NE(CollinearInstance::unit("RB").fingerprint(),
            CollinearInstance({{0, Color::Red}, {2, Color::Blue}}).fingerprint());
}

TEST(CircleInstance, ChunkColors) {
  const CircleInstance c(4, 2);
  EXPECT_EQ(c.size(), 8u);
  EXPECT_EQ(c.chunk_count(), 4u);
  EXPECT_EQ(colors_to_string(c.colors()), "RRBBRRBB");
  EXPECT_EQ(colors_to_string(CircleInstance(3, 3, Color::Blue).colors()), "BBBRRR");
  EXPECT_THROW(CircleInstance(4, 3), InvalidInput);
  EXPECT_THROW(CircleInstance(0, 1), InvalidInput);
  EXPECT_THROW(CircleInstance(2, 0), InvalidInput);
}

TEST(EdgeWeight, Collinear) {
  const CollinearInstance two({{0, Color::Red}, {3, Color::Blue}});
  EXPECT_EQ(edge_weight(two, ArcEdge(0, 1)), 3.0);
  const auto four = CollinearInstance::unit("RBRB");
  EXPECT_EQ(edge_weight(four, ArcEdge(0, 3)), 3.0);
  EXPECT_EQ(edge_weight(four, ArcEdge(3, 0)), 3.0);
  EXPECT_THROW(ArcEdge(2, 2), InvalidInput);
  EXPECT_THROW(edge_weight(four, ArcEdge(0, 4)), InvalidInput);
}

TEST(EdgeWeight, CirclePointCount) {
  const CircleInstance four(2, 1);
  EXPECT_EQ(edge_weight(four, ArcEdge(0, 1)), 2);
  EXPECT_EQ(edge_weight(four, ArcEdge(0, 2)), 3);
  const CircleInstance eight(4, 1);
  EXPECT_EQ(edge_weight(eight, ArcEdge(0, 5)), 4);
  EXPECT_EQ(edge_weight(eight, ArcEdge(0, 7)), 2);
  EXPECT_NEAR(chord_length(four, ArcEdge(0, 2)), 2.0, 1e-12);
}

TEST(EdgeWeight, CircleRangeIsTwoToNPlusOne) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const CircleInstance c(n, 1);
    for (std::size_t u = 0; u < 2 * n; ++u) {
      for (std::size_t v = u + 1; v < 2 * n; ++v) {
        const auto w = edge_weight(c, ArcEdge(u, v));
        EXPECT_GE(w, 2);
        EXPECT_LE(w, static_cast<std::int64_t>(n) + 1);
      }
    }
  }
}

TEST(ArcsCross, Examples) {
  EXPECT_TRUE(arcs_cross(ArcEdge(0, 2, A), ArcEdge(1, 3, A)));
  EXPECT_FALSE(arcs_cross(ArcEdge(0, 3, A), ArcEdge(1, 2, A)));
  EXPECT_FALSE(arcs_cross(ArcEdge(0, 2, A), ArcEdge(1, 3, B)));
  EXPECT_FALSE(arcs_cross(ArcEdge(0, 2, A), ArcEdge(2, 3, A)));
  EXPECT_FALSE(arcs_cross(ArcEdge(0, 1, A), ArcEdge(2, 3, A)));
}

TEST(ArcsCross, SymmetricAndMatchesDefinition) {
  constexpr std::size_t n = 12;
  std::vector<ArcEdge> all;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      all.emplace_back(u, v, A);
      all.emplace_back(u, v, B);
    }
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      const bool expected =
          a.page == b.page && ((a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v));
      ASSERT_EQ(arcs_cross(a, b), expected);
      ASSERT_EQ(arcs_cross(a, b), arcs_cross(b, a));
    }
  }
}

TEST(CountCrossings, MatchesPairwiseCount) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<ArcEdge> edges;
    const std::size_t m = rng() % 40;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t u = rng() % n;
      std::size_t v = rng() % n;
      if (u == v) v = (v + 1) % n;
      edges.emplace_back(u, v, (rng() & 1) ? A : B);
    }
    std::size_t paged = 0;
    std::size_t flat = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        paged += arcs_cross(edges[i], edges[j]);
        ArcEdge a = edges[i], b = edges[j];
        a.page = b.page = A;
        flat += arcs_cross(a, b);
      }
    }
    ASSERT_EQ(count_crossings(edges, n), paged);
    ASSERT_EQ(count_crossings(edges, n, false), flat);
  }
}

TEST(ArcGraph, RejectsBadEdges) {
  const auto inst = CollinearInstance::unit("RRBB");
  EXPECT_THROW(ArcGraph(inst, {ArcEdge(0, 1, A)}), InvalidInput);
  EXPECT_THROW(ArcGraph(inst, {ArcEdge(0, 4, A)}), InvalidInput);
  EXPECT_THROW(ArcGraph(inst, {ArcEdge(0, 2, A), ArcEdge(2, 0, B)}), InvalidInput);
  EXPECT_THROW(ArcGraph(CircleInstance(2, 1), {ArcEdge(0, 1, A)}), InvalidInput);
  EXPECT_NO_THROW(ArcGraph(CircleInstance(2, 1), {ArcEdge(0, 1)}));
}

TEST(Validate, Examples) {
  const auto rbrb = CollinearInstance::unit("RBRB");
  const auto path = validate(rbrb, ArcGraph(rbrb, {ArcEdge(0, 1, A), ArcEdge(1, 2, A), ArcEdge(2, 3, A)}),
                             StructureKind::HamPath);
  EXPECT_TRUE(path.ok);
  EXPECT_TRUE(path.noncrossing);

  const auto matching = validate(rbrb, ArcGraph(rbrb, {ArcEdge(0, 1, A), ArcEdge(2, 3, A)}), StructureKind::Matching);
  EXPECT_TRUE(matching.ok);
  EXPECT_TRUE(matching.noncrossing);

  const auto rrbb = CollinearInstance::unit("RRBB");
  const auto crossed = validate(rrbb, ArcGraph(rrbb, {ArcEdge(0, 2, A), ArcEdge(1, 3, A)}), StructureKind::Matching);
  EXPECT_TRUE(crossed.ok);
  EXPECT_FALSE(crossed.noncrossing);
  EXPECT_EQ(crossed.crossings, 1u);
}

TEST(Validate, RejectsWrongStructures) {
  const auto rbrb = CollinearInstance::unit("RBRB");
  EXPECT_FALSE(validate(rbrb, ArcGraph(rbrb, {ArcEdge(0, 1, A), ArcEdge(2, 3, A)}), StructureKind::HamPath).ok);
  EXPECT_FALSE(validate(rbrb, ArcGraph(rbrb, {ArcEdge(0, 1, A), ArcEdge(2, 3, A)}), StructureKind::SpanningTree).ok);
  EXPECT_FALSE(validate(rbrb, ArcGraph(rbrb, {ArcEdge(0, 1, A), ArcEdge(0, 3, A), ArcEdge(2, 1, A), ArcEdge(2, 3, A)}),
                        StructureKind::SpanningTree)
                   .ok);
  // A star is a spanning tree but not a path.
  const auto rbbb = CollinearInstance::unit("RBBB");
  const ArcGraph star(rbbb, {ArcEdge(0, 1, A), ArcEdge(0, 2, A), ArcEdge(0, 3, A)});
  EXPECT_TRUE(validate(rbbb, star, StructureKind::SpanningTree).ok);
  EXPECT_FALSE(validate(rbbb, star, StructureKind::HamPath).ok);
  EXPECT_FALSE(validate(rbrb, ArcGraph(rbrb, {ArcEdge(0, 1, A)}), StructureKind::Matching).ok);
  EXPECT_THROW(validate(CollinearInstance::unit("RBBR"), ArcGraph(rbrb, {}), StructureKind::Matching), InvalidInput);
}

TEST(Validate, TourOnCircle) {
  const CircleInstance c(2, 1);
  const ArcGraph tour(c, {ArcEdge(0, 1), ArcEdge(1, 2), ArcEdge(2, 3), ArcEdge(3, 0)});
  const auto v = validate(c, tour, StructureKind::Tour);
  EXPECT_TRUE(v.ok);
  EXPECT_TRUE(v.noncrossing);
  const CircleInstance c2(2, 2);
  const ArcGraph crossing(c2, {ArcEdge(0, 2), ArcEdge(2, 1), ArcEdge(1, 3), ArcEdge(3, 0)});
  const auto v2 = validate(c2, crossing, StructureKind::Tour);
  EXPECT_TRUE(v2.ok);
  EXPECT_FALSE(v2.noncrossing);
}

namespace {

// Every set of n-1 distinct bichromatic arcs with pages from `pages`.
template <class F>
void for_each_candidate_set(const CollinearInstance& inst, std::span<const Page> pages, F&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < inst.size(); ++u) {
    for (std::size_t v = u + 1; v < inst.size(); ++v) {
      if (inst.color(u) != inst.color(v)) pairs.emplace_back(u, v);
    }
  }
  const std::size_t k = inst.size() - 1;
  std::vector<std::size_t> pick;
  std::vector<ArcEdge> edges(k);
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == k) {
      std::size_t combos = 1;
      for (std::size_t i = 0; i < k; ++i) combos *= pages.size();
      for (std::size_t mask = 0; mask < combos; ++mask) {
        std::size_t m = mask;
        for (std::size_t i = 0; i < k; ++i) {
          edges[i] = ArcEdge(pairs[pick[i]].first, pairs[pick[i]].second, pages[m % pages.size()]);
          m /= pages.size();
        }
        visit(edges);
      }
      return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

using EdgeKey = std::vector<std::tuple<std::size_t, std::size_t, int>>;

EdgeKey key_of(std::span<const ArcEdge> edges) {
  EdgeKey k;
  for (const auto& e : edges) k.emplace_back(e.u, e.v, static_cast<int>(*e.page));
  std::sort(k.begin(), k.end());
  return k;
}

void expect_validator_matches_enumerator(std::size_t max_points, oracle::PageSet pages) {
  const std::vector<Page> page_list = pages == oracle::PageSet::Two ? std::vector<Page>{A, B} : std::vector<Page>{A};
  for (std::size_t m = 2; m <= max_points; m += 2) {
    for (const auto& inst : color_sequences(m, SequenceFilter::BalancedOnly)) {
      std::set<EdgeKey> accepted;
      for_each_candidate_set(inst, page_list, [&](std::span<const ArcEdge> edges) {
        const auto v = validate(inst, ArcGraph(inst, {edges.begin(), edges.end()}), StructureKind::HamPath);
        if (v.ok && v.noncrossing) accepted.insert(key_of(edges));
      });
      std::set<EdgeKey> enumerated;
      std::size_t visits = 0;
      oracle::enumerate_hampaths(inst, pages, {}, [&](std::span<const ArcEdge> edges) {
        ++visits;
        enumerated.insert(key_of(edges));
      });
      EXPECT_EQ(visits, enumerated.size()) << inst.color_string();
      ASSERT_EQ(accepted, enumerated) << inst.color_string();
    }
  }
}

}  // namespace

TEST(Validate, HamPathAgreesWithPathEnumeratorTwoPages) {
  expect_validator_matches_enumerator(6, oracle::PageSet::Two);
}

TEST(Validate, HamPathAgreesWithPathEnumeratorOnePage) {
  expect_validator_matches_enumerator(8, oracle::PageSet::OneAbove);
}

TEST(SolveReport, WeightIsSumOfEdgeWeights) {
  std::mt19937_64 rng(11);
  const auto inst = testkit::random_instance(rng, 20, true, false);
  std::vector<ArcEdge> edges;
  for (std::size_t i = 0; i + 1 < inst.size(); ++i) {
    if (inst.color(i) != inst.color(i + 1)) edges.emplace_back(i, i + 1, A);
  }
  const auto r = make_report(inst, edges, StructureKind::Matching, "x", "y");
  EXPECT_TRUE(testkit::close(r.total_weight, testkit::plain_weight(inst, edges)));
  EXPECT_EQ(total_weight(inst, edges), r.total_weight);
}

TEST(WeightOrder, ExactAndTolerant) {
  const WeightOrder exact(true);
  EXPECT_FALSE(exact.tied(1e12, 1e12 + 1));
  EXPECT_TRUE(exact.less(1e12, 1e12 + 1));
  const WeightOrder loose(false);
  EXPECT_TRUE(loose.tied(1.0, 1.0 + 1e-12));
  EXPECT_FALSE(loose.less(1.0, 1.0 + 1e-12));
  EXPECT_TRUE(loose.less(1.0, 1.0 + 1e-6));
}
