#include <gtest/gtest.h>

#include "slownim/position.hpp"

using namespace slownim;

TEST(Position, CanonicalizesToNondecreasingOrder) {
  const position x{5, 3, 5};
  EXPECT_EQ(x, (position{3, 5, 5}));
  EXPECT_EQ(x.min(), 3);
  EXPECT_EQ(x.max(), 5);
  EXPECT_EQ(x.norm(), 13);
  EXPECT_EQ(format(x), "(3,5,5)");
}

TEST(Position, RejectsEmptyAndNegative) {
  EXPECT_THROW(position(std::vector<natural>{}), usage_error);
  EXPECT_THROW((position{1, -2, 3}), usage_error);
  EXPECT_THROW((basic_position<long long>{-1, 0}), usage_error);
}

TEST(Position, ParityCounts) {
  EXPECT_TRUE((position{0, 2, 4}).all_even());
  EXPECT_TRUE((position{1, 3, 5}).all_odd());
  EXPECT_EQ((position{1, 2, 4}).even_count(), 2u);
  EXPECT_FALSE((position{0, 0, 0}).all_odd());
}

TEST(Position, DominanceIsCoordinatewiseOnSortedVectors) {
  EXPECT_TRUE(dominates(position{1, 2, 3}, position{0, 2, 3}));
  EXPECT_TRUE(dominates(position{1, 2, 3}, position{1, 2, 3}));
  EXPECT_FALSE(strictly_dominates(position{1, 2, 3}, position{1, 2, 3}));
  EXPECT_TRUE(strictly_dominates(position{1, 2, 3}, position{1, 1, 3}));
  EXPECT_FALSE(dominates(position{0, 3, 3}, position{1, 2, 2}));
  EXPECT_THROW(dominates(position{1, 2}, position{1, 2, 3}), usage_error);
}

TEST(Position, LexicographicOrder) {
  EXPECT_LT((position{0, 6, 6}), (position{2, 4, 6}));
  EXPECT_LT((position{2, 4, 6}), (position{3, 5, 5}));
  EXPECT_GT((position{4, 4, 4}), (position{3, 5, 5}));
}

TEST(Position, HugeCoordinates) {
  const natural big = natural(1) << 200;
  const position x{big, 1, big - 1};
  EXPECT_EQ(x[0], 1);
  EXPECT_EQ(x[2], big);
  EXPECT_EQ(to_string(natural(1) << 64), "18446744073709551616");
}

TEST(Natural, ParseInteger) {
  EXPECT_EQ(parse_integer<natural>("123456789012345678901234567890"),
            natural("123456789012345678901234567890"));
  EXPECT_THROW(parse_integer<natural>("-3"), usage_error);
  EXPECT_THROW(parse_integer<natural>(""), usage_error);
  EXPECT_THROW(parse_integer<natural>("1x"), usage_error);
  EXPECT_THROW(parse_integer<long long>("99999999999999999999"), usage_error);
}

TEST(Natural, FloorAndCeilDivision) {
  EXPECT_EQ(floor_div(natural(7), natural(2)), 3);
  EXPECT_EQ(floor_div(natural(-7), natural(2)), -4);
  EXPECT_EQ(ceil_div(natural(7), natural(2)), 4);
  EXPECT_EQ(ceil_div(natural(-7), natural(2)), -3);
  EXPECT_EQ(mod_floor(natural(-7), natural(12)), 5);
}
