#include "assort/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "assort/generators.hpp"

namespace assort {
namespace {

using Words = std::vector<word_t>;

TEST(OracleSort, Examples) {
  const Words in{3, 1, 2};
  EXPECT_EQ(oracle_sort(in), (Words{1, 2, 3}));
  EXPECT_EQ(in, (Words{3, 1, 2}));
  EXPECT_TRUE(oracle_sort(Words{}).empty());
}

TEST(OracleSort, StrictlyAscendingPermutation) {
  DatasetSpec d;
  d.family = Family::full_universe;
  d.n = 2000;
  d.seed = 4;
  const Words in = generate(d);
  const Words out = oracle_sort(in);
  ASSERT_EQ(out.size(), in.size());
  EXPECT_TRUE(std::adjacent_find(out.begin(), out.end(), std::greater_equal<>()) == out.end());
  EXPECT_TRUE(std::is_permutation(in.begin(), in.end(), out.begin()));
}

TEST(VerifyPassTally, Examples) {
  // Pure arithmetic on the values: (v - delta) div 3 < 4.
  const PassTally a = verify_pass_tally(Words{9, 2, 0, 11}, 0, 4, WordSpec(4));
  EXPECT_EQ(a.node_count, 2u);
  EXPECT_EQ(a.idle_count, 2u);
  EXPECT_EQ(a.deferred_count, 0u);

  const PassTally b = verify_pass_tally(Words{0, 100}, 0, 2, WordSpec(4));
  EXPECT_EQ(b.node_count, 1u);
  EXPECT_EQ(b.idle_count, 0u);
  EXPECT_EQ(b.deferred_count, 1u);
  EXPECT_EQ(b.deferred_min, word_t{100});

  const PassTally c = verify_pass_tally(Words{70, 71, 72, 73, 74, 75, 76}, 70, 7, WordSpec(8));
  EXPECT_EQ(c.node_count, 1u);
  EXPECT_EQ(c.idle_count, 6u);
}

TEST(PredictWorstPassBound, Examples) {
  EXPECT_EQ(predict_worst_pass_bound(4, 37, WordSpec(4)), 4u);  // ceil(36/11)
  EXPECT_EQ(predict_worst_pass_bound(4, 12, WordSpec(4)), 1u);
  EXPECT_EQ(predict_worst_pass_bound(1, 1000, WordSpec(8)), 1u);
  EXPECT_EQ(predict_worst_pass_bound(10, 7 * 10 + 1, WordSpec(8)), 2u);
}

TEST(PredictWorstPassBound, MatchesAdversarialPassCount) {
  for (const std::size_t n : {2u, 3u, 8u, 16u, 64u}) {
    const WordSpec spec(40);
    const word_t m = static_cast<word_t>(n - 1) * 39 * n + 1;
    EXPECT_EQ(predict_worst_pass_bound(n, m, spec), n) << n;
  }
}

TEST(PredictAverageWork, Examples) {
  EXPECT_EQ(predict_average_work(1000, 4, WordSpec()), 4000u);
  EXPECT_EQ(predict_average_work(123, 1, WordSpec()), 123u);
  EXPECT_EQ(predict_average_work(0, 8, WordSpec()), 0u);
}

}  // namespace
}  // namespace assort
