// Exact oracles: brute force vs subset dp equivalence, capacity handling,
// prefix reordering, and the score-displacement lower bound.

#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "topagg/topagg.hpp"

using namespace topagg;
using namespace testsupport;

TEST(BruteForce, ReferenceOptimum) {
  const ExactResult result = optimal_bruteforce(reference_profile());
  EXPECT_EQ(result.ranking, FullRanking::identity(8));
  EXPECT_EQ(result.cost, Rational(51, 10));
}

TEST(BruteForce, SingleRankingProfile) {
  const FullRanking tau = ranking_of({2, 3, 1});
  const VotingProfile profile(3, {{BigInt(1), TopList(3, tau.order())}});
  const ExactResult result = optimal_bruteforce(profile);
  EXPECT_EQ(result.ranking, tau);
  EXPECT_EQ(result.cost, Rational(0));
}

TEST(BruteForce, LopsidedTwoCandidateInstance) {
  const VotingProfile profile = profile_of(2, {{999, {1}}, {1, {2, 1}}});
  const ExactResult result = optimal_bruteforce(profile);
  EXPECT_EQ(result.ranking, ranking_of({1, 2}));
  EXPECT_EQ(result.cost, Rational(1, 1000));
}

TEST(BruteForce, CapacityError) {
  RandomInstances random(20240631);
  const VotingProfile profile = random.random_profile(9, 3, 4);
  EXPECT_THROW(optimal_bruteforce(profile), CapacityError);
  EXPECT_NO_THROW(optimal_bruteforce(profile, 9));
}

TEST(SubsetDp, SingleCandidate) {
  const VotingProfile profile = profile_of(1, {{1, {1}}});
  const ExactResult result = optimal_subset_dp(profile);
  EXPECT_EQ(result.ranking.order(), std::vector<CandidateId>{0});
  EXPECT_EQ(result.cost, Rational(0));
}

TEST(SubsetDp, CapacityError) {
  RandomInstances random(20240632);
  const VotingProfile profile = random.random_profile(6, 3, 3);
  EXPECT_THROW(optimal_subset_dp(profile, 5), CapacityError);
}

TEST(SubsetDp, AgreesWithBruteForceOnRandomInstances) {
  RandomInstances random(20240633);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = random.uniform(2, 8);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 6), n);
    const ExactResult dp = optimal_subset_dp(profile);
    const ExactResult brute = optimal_bruteforce(profile);
    EXPECT_EQ(dp.cost, brute.cost);
    EXPECT_EQ(dp.ranking, brute.ranking);  // same declared tie-break
  }
}

TEST(SubsetDp, RestrictedReferenceSubset) {
  // Restriction to candidates {1,2,3,5}; the optimal reordering is 1,2,3,5.
  const RestrictedProfile restricted = restrict_profile(
      reference_profile(), std::vector<CandidateId>{0, 1, 2, 4});
  const ExactResult result = optimal_subset_dp(restricted.profile);
  EXPECT_EQ(result.ranking.order(), (std::vector<CandidateId>{0, 1, 2, 3}));
}

TEST(SubsetDp, TableInvariants) {
  const VotingProfile profile = reference_profile();
  const RestrictedProfile restricted =
      restrict_profile(profile, std::vector<CandidateId>{0, 1, 2, 4});
  const SubsetDpTable<BigInt> table = subset_dp_table(restricted.profile);
  ASSERT_EQ(table.m, 4);
  ASSERT_EQ(table.best_cost.size(), 16u);
  EXPECT_EQ(table.best_cost[0], 0);
  for (int c = 0; c < 4; ++c) EXPECT_EQ(table.best_cost[1u << c], 0);

  // Every subset extends some sub-subset by one appended candidate.
  const PairWeights weights(restricted.profile);
  for (std::uint32_t mask = 1; mask < 16; ++mask) {
    BigInt best = -1;
    for (int c = 0; c < 4; ++c) {
      if (!(mask & (1u << c))) continue;
      BigInt append_cost = table.best_cost[mask ^ (1u << c)];
      for (int s = 0; s < 4; ++s) {
        if ((mask & (1u << s)) && s != c) {
          append_cost += weights.prefer_weight(c, s);
        }
      }
      if (best < 0 || append_cost < best) best = append_cost;
    }
    EXPECT_EQ(table.best_cost[mask], best) << "mask " << mask;
  }

  // The full mask equals the optimal cost in weight units.
  EXPECT_EQ(Rational(table.best_cost[15], restricted.profile.total_weight()),
            optimal_bruteforce(restricted.profile).cost);
}

TEST(ReorderPrefix, ReferenceExample) {
  const VotingProfile profile = reference_profile();
  const FullRanking start = ranking_of({1, 3, 2, 5, 4, 6, 7, 8});
  const FullRanking result = reorder_prefix_optimally(profile, start, 4);
  EXPECT_EQ(result, ranking_of({1, 2, 3, 5, 4, 6, 7, 8}));
}

TEST(ReorderPrefix, LengthOneIsIdentity) {
  const VotingProfile profile = reference_profile();
  const FullRanking start = ranking_of({8, 7, 6, 5, 4, 3, 2, 1});
  EXPECT_EQ(reorder_prefix_optimally(profile, start, 1), start);
}

TEST(ReorderPrefix, FullPrefixReachesTheOptimum) {
  RandomInstances random(20240634);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = random.uniform(2, 7);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 5), n);
    const FullRanking start = random.random_ranking(n);
    const FullRanking reordered = reorder_prefix_optimally(profile, start, n);
    const ExactResult brute = optimal_bruteforce(profile);
    EXPECT_EQ(kendall_profile(reordered, profile), brute.cost);
  }
}

TEST(ReorderPrefix, NeverIncreasesCost) {
  RandomInstances random(20240635);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = random.uniform(2, 9);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 6), n);
    const FullRanking start = random.random_ranking(n);
    const int prefix = random.uniform(1, n);
    const FullRanking reordered =
        reorder_prefix_optimally(profile, start, prefix);
    EXPECT_LE(kendall_profile(reordered, profile),
              kendall_profile(start, profile));
    // Positions past the prefix stay put.
    for (int pos = prefix; pos < n; ++pos) {
      EXPECT_EQ(reordered.order()[pos], start.order()[pos]);
    }
  }
}

TEST(ReorderPrefix, Errors) {
  const VotingProfile profile = reference_profile();
  const FullRanking sigma = FullRanking::identity(8);
  EXPECT_THROW(reorder_prefix_optimally(profile, sigma, 0), ArgumentError);
  EXPECT_THROW(reorder_prefix_optimally(profile, sigma, 9), ArgumentError);
  EXPECT_THROW(reorder_prefix_optimally(profile, sigma, 6, 5), CapacityError);
}

// At the optimum, candidates ranked below the longest list length k pay at
// least their score weight per rank of displacement.
TEST(ExactOracles, ScoreDisplacementLowerBound) {
  RandomInstances random(20240636);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = random.uniform(2, 7);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 6), random.uniform(1, n));
    const ExactResult best = optimal_bruteforce(profile);
    const BigInt bound = score_displacement_bound(profile, best.ranking);
    EXPECT_GE(best.cost, Rational(bound, profile.total_weight()));
  }
}
