#include <gtest/gtest.h>

#include <algorithm>

#include "splitpile/errors.hpp"
#include "splitpile/verify.hpp"

using namespace splitpile;

namespace {

bool all_pass(const std::vector<IdentityCheck>& checks) {
  return std::ranges::all_of(checks, [](const IdentityCheck& c) { return c.passed; });
}

}  // namespace

TEST(Verify, SmallRangePasses) {
  const auto checks = verify_range(3, 3);
  EXPECT_FALSE(checks.empty());
  for (const IdentityCheck& c : checks) EXPECT_TRUE(c.passed) << c.identity << " " << c.detail;
}

TEST(Verify, SingleEdgeGraph) {
  const auto clique = verify_cell(1, 1, Side::Clique);
  const auto indep = verify_cell(1, 1, Side::Independent);
  EXPECT_TRUE(all_pass(clique));
  EXPECT_TRUE(all_pass(indep));
  const auto count = std::ranges::find(clique, std::string("recurrent-count=spanning-tree-formula"),
                                       &IdentityCheck::identity);
  ASSERT_NE(count, clique.end());
  EXPECT_EQ(count->detail, "1 == 1");
}

TEST(Verify, EightRecurrentOnTwoByTwo) {
  const auto checks = verify_cell(2, 2, Side::Clique);
  const auto count = std::ranges::find(checks, std::string("recurrent-count=spanning-tree-formula"),
                                       &IdentityCheck::identity);
  ASSERT_NE(count, checks.end());
  EXPECT_EQ(count->detail, "8 == 8");
}

TEST(Verify, InjectedFaultIsReported) {
  VerifyOptions options;
  options.inject_fault = true;
  EXPECT_FALSE(all_pass(verify_cell(2, 2, Side::Clique, options)));
}

TEST(Verify, BudgetIsHonored) {
  VerifyOptions options;
  options.budget = 5;
  EXPECT_THROW(verify_cell(3, 3, Side::Clique, options), BudgetExceeded);
}
