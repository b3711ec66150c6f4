#include <gtest/gtest.h>

#include <set>
#include <string>

#include "slownim/nim43.hpp"

using namespace slownim;

TEST(Nim43, WorkedExamples) {
  const auto a = nim43_status(position{1, 1, 2, 2});
  EXPECT_EQ(a.status, game_status::N);
  EXPECT_EQ(a.residue, 0);
  EXPECT_EQ(nim43_status(position{0, 0, 0, 0}).status, game_status::P);
  const auto c = nim43_status(position{2, 2, 2, 2});
  EXPECT_EQ(c.status, game_status::P);
  EXPECT_EQ(c.residue, 2);
}

TEST(Nim43, ResidueSelectsCase) {
  for_each_sorted_tuple<natural>(4, natural(9), [&](const position& x) {
    const auto v = nim43_status(x);
    EXPECT_EQ(v.residue, static_cast<int>(x.norm() % 3));
    EXPECT_EQ(v.rule.substr(0, 5), "case" + std::to_string(v.residue));
  });
}

TEST(Nim43, EveryRuleIsReachable) {
  std::set<std::string> rules;
  for_each_sorted_tuple<natural>(4, natural(12), [&](const position& x) {
    rules.insert(std::string(nim43_status(x).rule));
  });
  EXPECT_GE(rules.size(), 6u);
}

TEST(Nim43, ResiduesZeroAndOneAgreeWithSolver) {
  const auto rep = nim43_consistency(natural(14));
  for (const auto& m : rep.mismatches) EXPECT_EQ(m.verdict.residue, 2) << format(m.x);
}

// The residue-2 table disagrees with exhaustive search. This pins the first
// counterexample: the tables predict N but the position has R = 4.
TEST(Nim43, ResidueTwoTableHasCounterexamples) {
  const auto v = nim43_status(position{3, 3, 4, 4});
  EXPECT_EQ(v.status, game_status::N);
  EXPECT_EQ(remoteness_fast(position{3, 3, 4, 4}, 3).remoteness, 4);
  const auto rep = nim43_consistency(natural(20));
  EXPECT_EQ(rep.checked, 10626u);
  EXPECT_EQ(rep.mismatches.size(), 239u);
}
