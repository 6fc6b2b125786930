#include <gtest/gtest.h>

#include <set>

#include "bichroma/errors.hpp"
#include "bichroma/gen.hpp"

using namespace bichroma;

TEST(Gen, Alternating) {
  const auto inst = generate_collinear({Family::Alternating, 8, 1, 0, Spacing::Unit});
  EXPECT_EQ(inst.color_string(), "RBRBRBRB");
  for (std::size_t i = 0; i < inst.size(); ++i) EXPECT_EQ(inst.x(i), static_cast<double>(i));
}

TEST(Gen, Chunked) {
  EXPECT_EQ(generate_collinear({Family::Chunked, 9, 3, 0, Spacing::Unit}).color_string(), "RRRBBBRRR");
  EXPECT_THROW(generate_collinear({Family::Chunked, 8, 0, 0, Spacing::Unit}), InvalidInput);
}

TEST(Gen, CircleChunked) {
  const auto inst = generate({Family::CircleChunked, 8, 4, 0, Spacing::Unit});
  const auto& c = std::get<CircleInstance>(inst);
  EXPECT_EQ(c.n(), 8u);
  EXPECT_EQ(c.k(), 4u);
  EXPECT_EQ(colors_to_string(c.colors()), "RRRRBBBBRRRRBBBB");
  EXPECT_THROW(generate({Family::CircleChunked, 8, 3, 0, Spacing::Unit}), InvalidInput);
  EXPECT_THROW(generate_collinear({Family::CircleChunked, 8, 4, 0, Spacing::Unit}), InvalidInput);
}

TEST(Gen, SeededFamiliesAreDeterministic) {
  for (const auto f : {Family::RandomBalanced, Family::RandomUnbalanced}) {
    const GenSpec spec{f, 10, 1, 42, Spacing::RandomPositive};
    const auto a = generate_collinear(spec);
    const auto b = generate_collinear(spec);
    EXPECT_EQ(a.fingerprint(), b.fingerprint());
    EXPECT_TRUE(a.bichromatic());
    std::set<std::uint64_t> prints;
    for (std::uint64_t s = 0; s < 20; ++s) prints.insert(generate_collinear({f, 10, 1, s, Spacing::RandomPositive}).fingerprint());
    EXPECT_GT(prints.size(), 15u);
  }
  EXPECT_TRUE(generate_collinear({Family::RandomBalanced, 10, 1, 5, Spacing::Unit}).balanced());
  EXPECT_THROW(generate_collinear({Family::RandomBalanced, 7, 1, 5, Spacing::Unit}), InvalidInput);
}

TEST(Gen, RandomSpacingGapsInUnitInterval) {
  const auto inst = generate_collinear({Family::RandomBalanced, 1000, 1, 1, Spacing::RandomPositive});
  for (std::size_t i = 1; i < inst.size(); ++i) {
    const double gap = inst.x(i) - inst.x(i - 1);
    ASSERT_GT(gap, 0.0);
    ASSERT_LE(gap, 1.0);
  }
}

TEST(Gen, OnePageCounterexampleFamily) {
  const auto inst = generate_collinear({Family::OnePageBlocked, 16, 1, 0, Spacing::Unit});
  EXPECT_EQ(inst.color_string(), "RBBBBRRRRRRBBBBR");
  EXPECT_TRUE(inst.balanced());
  EXPECT_THROW(generate_collinear({Family::OnePageBlocked, 12, 1, 0, Spacing::Unit}), InvalidInput);
}

TEST(Gen, FamilyNamesRoundTrip) {
  for (const auto f : {Family::Alternating, Family::Chunked, Family::RandomBalanced, Family::RandomUnbalanced,
                       Family::OnePageBlocked, Family::CircleChunked}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_THROW(family_from_string("spiral"), InvalidInput);
  EXPECT_EQ(spacing_from_string("random"), Spacing::RandomPositive);
  EXPECT_THROW(spacing_from_string("gaussian"), InvalidInput);
}

TEST(ColorSequences, CountsAndOrder) {
  std::vector<std::string> two;
  for (const auto& inst : color_sequences(2, SequenceFilter::All)) two.push_back(inst.color_string());
  EXPECT_EQ(two, (std::vector<std::string>{"RR", "RB", "BR", "BB"}));
  EXPECT_EQ(color_sequences(4, SequenceFilter::BalancedOnly).size(), 6u);
  EXPECT_EQ(color_sequences(12, SequenceFilter::BalancedOnly).size(), 924u);
  for (std::size_t m = 2; m <= 10; ++m) {
    std::set<std::string> unique;
    std::size_t balanced = 0;
    for_each_color_sequence(m, SequenceFilter::All, [&](const CollinearInstance& inst, bool b) {
      unique.insert(inst.color_string());
      EXPECT_EQ(b, inst.balanced());
      balanced += b;
    });
    EXPECT_EQ(unique.size(), std::size_t{1} << m);
  }
  EXPECT_THROW(color_sequences(17, SequenceFilter::All), InvalidInput);
}
