#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>

#include "slownim/fast.hpp"
#include "slownim/oracle.hpp"

using namespace slownim;

TEST(Fast, FrozenValues) {
  EXPECT_EQ(remoteness_fast(position{3, 3, 3}, 2).remoteness, 4);
  EXPECT_EQ(remoteness_fast(position{3, 5, 5}, 2).remoteness, 6);
  EXPECT_EQ(remoteness_fast(position{1, 1, 2}, 2).remoteness, 1);
  EXPECT_EQ(remoteness_fast(position{0, 0, 5}, 2).remoteness, 0);
}

TEST(Fast, Branches) {
  EXPECT_EQ(remoteness_fast(position{0, 0, 5}, 2).branch, analysis_branch::terminal);
  EXPECT_FALSE(remoteness_fast(position{0, 0, 5}, 2).best_keep.has_value());
  const auto exc = remoteness_fast(position{3, 5, 5}, 2);
  EXPECT_EQ(exc.branch, analysis_branch::exceptional);
  EXPECT_EQ(exc.exceptional_m, 6);
  const auto e = remoteness_fast(position{2, 4, 7}, 2);
  EXPECT_EQ(e.branch, analysis_branch::e_rule);
  ASSERT_TRUE(e.support.has_value());
  EXPECT_TRUE(bounded_by<natural>(e.support->witness, position{2, 4, 7}));
  EXPECT_EQ(remoteness_fast(position{3, 4}, 1).branch, analysis_branch::trivial);
  EXPECT_EQ(remoteness_fast(position{3, 4}, 1).remoteness, 7);
}

TEST(Fast, ExceptionalRecognition) {
  EXPECT_EQ(is_exceptional(position{3, 3, 3}, 2), 4);
  EXPECT_EQ(is_exceptional(position{1, 1, 1}, 2), std::nullopt);  // m would be 0
  EXPECT_EQ(is_exceptional(position{3, 3, 5}, 2), std::nullopt);  // max not below m
  EXPECT_EQ(is_exceptional(position{2, 3, 5}, 2), std::nullopt);
}

TEST(Fast, SplitValuesAreAchievable) {
  // Every b_t has a witness checked inside b_t itself; here we only pin a few.
  EXPECT_EQ(b_t(position{0, 0, 4}, 2, 1), 0);
  EXPECT_EQ(e_value(position{2, 2, 2}, 2).value, 2);
  EXPECT_EQ(e_value(position{0, 6, 6}, 2).value, 6);
  EXPECT_THROW(b_t(position{0, 0, 4}, 2, 0), usage_error);
  EXPECT_THROW(b_t(position{0, 0, 4}, 2, 4), usage_error);
}

TEST(Fast, RequiresKPlusOnePiles) {
  EXPECT_THROW(remoteness_fast(position{1, 2, 3, 4}, 2), usage_error);
  EXPECT_THROW(best_move(position{0, 0, 4}, 2), usage_error);
}

TEST(Fast, BFastMatchesOracleOffExceptional) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for_each_sorted_tuple<natural>(k + 1, natural(k == 2 ? 12 : 6), [&](const position& x) {
      if (is_exceptional(x, k)) return;
      EXPECT_EQ(b_fast(x, k), b_oracle(x, k)) << format(x);
    });
  }
}

TEST(Fast, MatchesOracleOnGrids) {
  const std::pair<std::size_t, int> grids[] = {{2, 16}, {3, 10}, {4, 7}, {5, 5}};
  for (auto [k, bound] : grids) {
    oracle o(game_spec::nim(k + 1, k));
    for_each_sorted_tuple<natural>(k + 1, natural(bound), [&](const position& x) {
      ASSERT_EQ(remoteness_fast(x, k).remoteness, o.remoteness(x)) << format(x);
    });
  }
}

TEST(Fast, BestMoveLowersRemotenessByOne) {
  const game_spec g = game_spec::nim(4, 3);
  for_each_sorted_tuple<natural>(4, natural(8), [&](const position& x) {
    if (is_terminal(g, x)) return;
    const natural r = remoteness_fast(x, 3).remoteness;
    const position y = apply_move(g, x, best_move(x, 3));
    EXPECT_EQ(remoteness_fast(y, 3).remoteness + 1, r) << format(x);
  });
}

TEST(Fast, PermutationInvariance) {
  std::vector<natural> raw{7, 2, 9, 4};
  std::sort(raw.begin(), raw.end());
  const natural r = remoteness_fast(position(raw), 3).remoteness;
  do {
    EXPECT_EQ(remoteness_fast(position(raw), 3).remoteness, r);
  } while (std::next_permutation(raw.begin(), raw.end()));
}

TEST(Fast, FixedWidthAgreesWithBigIntegers) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 2 + i % 6;
    std::vector<std::int64_t> small(k + 1);
    std::vector<natural> big(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      small[j] = static_cast<std::int64_t>(rng() >> 4);  // below 2^60
      big[j] = natural(small[j]);
    }
    const auto a = remoteness_fast(basic_position<std::int64_t>(small), k);
    const auto b = remoteness_fast(position(big), k);
    EXPECT_EQ(natural(a.remoteness), b.remoteness);
    EXPECT_EQ(a.best_keep, b.best_keep);
  }
}

TEST(Fast, HugePilesBeyondSixtyFourBits) {
  const natural big = natural(1) << 100;
  // (0, 2^100, 2^100) is basic with b = 2^100, an even value: R = 2^100.
  EXPECT_EQ(remoteness_fast(position{0, big, big}, 2).remoteness, big);
  const position x{big + 1, big + 3, big + 4};
  const natural r = remoteness_fast(x, 2).remoteness;
  const position y = apply_move(game_spec::nim(3, 2), x, best_move(x, 2));
  EXPECT_EQ(remoteness_fast(y, 2).remoteness + 1, r);
}
