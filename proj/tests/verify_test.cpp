#include "assort/verify.hpp"

#include <gtest/gtest.h>

#include "assort/generators.hpp"

namespace assort {
namespace {

TEST(MaxFeasibleN, MatchesGeneratorLimits) {
  EXPECT_EQ(max_feasible_n(Family::uniform, 16, 2), 1092u);  // floor(32768 / 30)
  EXPECT_NO_THROW(gen_uniform(DatasetSpec{Family::uniform, 1092, 2, 1, 16}));
  EXPECT_ANY_THROW(gen_uniform(DatasetSpec{Family::uniform, 1093, 2, 1, 16}));

  for (const unsigned w : {4u, 8u, 16u, 32u}) {
    const std::size_t n = max_feasible_n(Family::adversarial, w);
    EXPECT_NO_THROW(gen_adversarial(n, WordSpec(w))) << w;
    EXPECT_ANY_THROW(gen_adversarial(n + 1, WordSpec(w))) << w;
  }
  EXPECT_EQ(max_feasible_n(Family::full_universe, 4), 16u);
  EXPECT_EQ(max_feasible_n(Family::best_case, 4), 8u);
}

TEST(HazardCases, ShapeAndBounds) {
  const auto cases = hazard_cases(8);
  ASSERT_FALSE(cases.empty());
  bool has_reference = false;
  for (const HazardCase& hc : cases) {
    EXPECT_EQ(hc.w, 8u);
    EXPECT_LT(hc.values.back(), 128u);
    if (hc.values == std::vector<word_t>{35, 42, 43, 44, 45, 46, 47}) has_reference = true;
  }
  EXPECT_TRUE(has_reference);
  for (const HazardCase& hc : anchored_hazard_cases(16)) {
    EXPECT_EQ(hc.values.front(), 0u);
    EXPECT_LT(hc.values.back(), word_t{1} << 15);
  }
}

TEST(RunVerification, ZeroTrialsRunsNothing) {
  VerifyOptions options;
  options.trials = 0;
  const VerifySummary summary = run_verification(options);
  EXPECT_TRUE(summary.suites.empty());
  EXPECT_EQ(summary.checks(), 0u);
  EXPECT_TRUE(summary.passed());
}

TEST(RunVerification, SmallRunPasses) {
  VerifyOptions options;
  options.trials = 50;
  options.seed = 17;
  options.max_n = 512;
  const VerifySummary summary = run_verification(options);
  ASSERT_EQ(summary.suites.size(), 5u);
  for (const SuiteOutcome& s : summary.suites) {
    EXPECT_GT(s.checks, 0u) << s.name;
    EXPECT_EQ(s.failures, 0u) << s.name << ": " << s.first_failure;
  }
  EXPECT_TRUE(summary.passed());
}

TEST(RunVerification, SingleWidth) {
  VerifyOptions options;
  options.trials = 30;
  options.widths = {4};
  EXPECT_TRUE(run_verification(options).passed());
}

}  // namespace
}  // namespace assort
