// Profiles and their derived statistics: scores, average ranks, pairwise
// preference weights, and restriction to candidate subsets.

#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "topagg/topagg.hpp"

using namespace topagg;
using namespace testsupport;

TEST(VotingProfileTest, ValidatesConstruction) {
  EXPECT_THROW(VotingProfile(3, {}), ArgumentError);
  EXPECT_THROW(VotingProfile(3, {{BigInt(0), list_of(3, {1})}}), ArgumentError);
  EXPECT_THROW(VotingProfile(3, {{BigInt(1), list_of(4, {1})}}),
               DimensionError);
}

TEST(StatsTest, ReferenceScores) {
  const CandidateStats s = stats(reference_profile());
  EXPECT_EQ(s.total_weight(), 10);
  const std::vector<int> expected_weights = {10, 7, 7, 5, 6, 4, 1, 0};
  for (CandidateId c = 0; c < 8; ++c) {
    EXPECT_EQ(s.score_weight(c), expected_weights[c]) << "candidate " << c + 1;
    EXPECT_EQ(s.score(c), Rational(expected_weights[c], 10));
  }
}

TEST(StatsTest, ReferenceAverageRanks) {
  const CandidateStats s = stats(reference_profile());
  const std::vector<Rational> expected = {
      Rational(21, 10), Rational(24, 7), Rational(19, 7), Rational(9, 5),
      Rational(19, 6),  Rational(1),     Rational(4)};
  for (CandidateId c = 0; c < 7; ++c) {
    ASSERT_TRUE(s.average_rank(c).has_value()) << "candidate " << c + 1;
    EXPECT_EQ(*s.average_rank(c), expected[c]) << "candidate " << c + 1;
  }
  EXPECT_FALSE(s.average_rank(7).has_value());  // candidate 8 never appears
}

TEST(StatsTest, SingleFullRankingProfile) {
  const FullRanking tau = ranking_of({4, 2, 1, 3});
  const VotingProfile profile(4, {{BigInt(3), TopList(4, tau.order())}});
  const CandidateStats s = stats(profile);
  for (CandidateId c = 0; c < 4; ++c) {
    EXPECT_EQ(s.score(c), Rational(1));
    EXPECT_EQ(*s.average_rank(c), Rational(tau.rank_of(c)));
  }
}

TEST(StatsTest, ScoreWeightTotalsMatchListLengths) {
  RandomInstances random(20240611);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = random.uniform(2, 10);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 8), n);
    const CandidateStats s = stats(profile);
    BigInt score_sum = 0;
    for (CandidateId c = 0; c < n; ++c) score_sum += s.score_weight(c);
    BigInt expected = 0;
    for (const ProfileEntry& entry : profile.entries()) {
      expected += entry.weight * entry.list.length();
    }
    EXPECT_EQ(score_sum, expected);
  }
}

// Score difference equals the imbalance of "ranked vs unranked" pairs:
// sw(i) - sw(j) == w(i ranked, j not) - w(j ranked, i not).
TEST(StatsTest, ScoreIdentity) {
  RandomInstances random(20240612);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = random.uniform(2, 8);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 6), n);
    const CandidateStats s = stats(profile);
    for (CandidateId i = 0; i < n; ++i) {
      for (CandidateId j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_EQ(s.score_weight(i) - s.score_weight(j),
                  weight_before_unranked(profile, i, j) -
                      weight_before_unranked(profile, j, i));
      }
    }
  }
}

TEST(PairWeightsTest, ReferenceSpotValues) {
  const PairWeights weights(reference_profile());
  // Candidate 1 appears everywhere, candidate 8 nowhere.
  EXPECT_EQ(weights.prefer_weight(0, 7), 10);
  EXPECT_EQ(weights.prefer_weight(7, 0), 0);
  // Candidate 3 precedes candidate 1 in the first two lists only.
  EXPECT_EQ(weights.prefer_weight(2, 0), 3);
  EXPECT_EQ(weights.prefer_weight(0, 2), 7);
}

TEST(PairWeightsTest, StructuralInvariants) {
  RandomInstances random(20240613);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = random.uniform(2, 9);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 6), n);
    const PairWeights weights(profile);
    const CandidateStats s = stats(profile);
    for (CandidateId i = 0; i < n; ++i) {
      EXPECT_EQ(weights.prefer_weight(i, i), 0);
      for (CandidateId j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_LE(weights.prefer_weight(i, j) + weights.prefer_weight(j, i),
                  profile.total_weight());
        // prefer(i, j) dominates the score difference when positive.
        const BigInt diff = s.score_weight(i) - s.score_weight(j);
        if (diff > 0) {
          EXPECT_GE(weights.prefer_weight(i, j), diff);
        }
      }
    }
  }
}

TEST(RestrictTest, ReferenceSubset) {
  const VotingProfile profile = reference_profile();
  const std::vector<CandidateId> subset = {0, 1, 2, 4};  // candidates 1,2,3,5
  const RestrictedProfile restricted = restrict_profile(profile, subset);
  EXPECT_EQ(restricted.index_map, subset);
  ASSERT_EQ(restricted.profile.entries().size(), 4u);
  EXPECT_EQ(restricted.profile.total_weight(), 10);

  // Expected lists in original ids: [3,5,1], [3,1,5], [1,5,2], [1,2,3].
  const std::vector<std::vector<int>> expected = {
      {3, 5, 1}, {3, 1, 5}, {1, 5, 2}, {1, 2, 3}};
  for (std::size_t e = 0; e < 4; ++e) {
    std::vector<int> global_ids;
    for (CandidateId local : restricted.profile.entries()[e].list.ranked()) {
      global_ids.push_back(restricted.index_map[local] + 1);
    }
    EXPECT_EQ(global_ids, expected[e]) << "entry " << e;
  }
}

TEST(RestrictTest, FullSubsetIsIdentity) {
  const VotingProfile profile = reference_profile();
  std::vector<CandidateId> all(8);
  std::iota(all.begin(), all.end(), 0);
  const RestrictedProfile restricted = restrict_profile(profile, all);
  EXPECT_TRUE(restricted.profile == profile);
}

TEST(RestrictTest, SubsetWithSingleSurvivingList) {
  const VotingProfile profile = reference_profile();
  const std::vector<CandidateId> subset = {6, 7};  // candidates 7 and 8

  // Default: empty lists stay, keeping the full weight mass.
  const RestrictedProfile kept = restrict_profile(profile, subset);
  ASSERT_EQ(kept.profile.entries().size(), 4u);
  EXPECT_EQ(kept.profile.total_weight(), 10);
  int nonempty = 0;
  for (const ProfileEntry& entry : kept.profile.entries()) {
    if (entry.list.length() > 0) {
      ++nonempty;
      EXPECT_EQ(entry.weight, 1);
      EXPECT_EQ(entry.list.ranked(), std::vector<CandidateId>{0});  // 7
    }
  }
  EXPECT_EQ(nonempty, 1);

  // Dropping instead removes the weight of vanished lists.
  const RestrictedProfile dropped =
      restrict_profile(profile, subset, RestrictMode::drop_empty_lists);
  ASSERT_EQ(dropped.profile.entries().size(), 1u);
  EXPECT_EQ(dropped.profile.total_weight(), 1);
}

TEST(RestrictTest, PreservesPairwiseWeights) {
  RandomInstances random(20240614);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = random.uniform(3, 9);
    const VotingProfile profile =
        random.random_profile(n, random.uniform(1, 6), n);
    const PairWeights full(profile);

    std::vector<CandidateId> subset;
    for (CandidateId c = 0; c < n; ++c) {
      if (random.uniform(0, 1) == 1) subset.push_back(c);
    }
    if (subset.empty()) subset.push_back(0);

    for (const RestrictMode mode :
         {RestrictMode::keep_empty_lists, RestrictMode::drop_empty_lists}) {
      bool all_dropped = false;
      if (mode == RestrictMode::drop_empty_lists) {
        all_dropped = true;
        for (const ProfileEntry& entry : profile.entries()) {
          for (CandidateId c : entry.list.ranked()) {
            if (std::find(subset.begin(), subset.end(), c) != subset.end()) {
              all_dropped = false;
            }
          }
        }
      }
      if (all_dropped) continue;
      const RestrictedProfile restricted =
          restrict_profile(profile, subset, mode);
      const PairWeights small(restricted.profile);
      for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = 0; b < subset.size(); ++b) {
          EXPECT_EQ(small.prefer_weight(static_cast<CandidateId>(a),
                                        static_cast<CandidateId>(b)),
                    full.prefer_weight(subset[a], subset[b]));
        }
      }
    }
  }
}

TEST(RestrictTest, StatsOfReferenceSubset) {
  // Recomputed by hand from the restricted lists [3,5,1], [3,1,5], [1,5,2]
  // and [1,2,3] with weights 1, 2, 3, 4.
  const RestrictedProfile restricted = restrict_profile(
      reference_profile(), std::vector<CandidateId>{0, 1, 2, 4});
  const CandidateStats s = stats(restricted.profile);
  EXPECT_EQ(s.score(0), Rational(1));        // candidate 1
  EXPECT_EQ(s.score(1), Rational(7, 10));    // candidate 2
  EXPECT_EQ(s.score(2), Rational(7, 10));    // candidate 3
  EXPECT_EQ(s.score(3), Rational(3, 5));     // candidate 5
  EXPECT_EQ(*s.average_rank(0), Rational(7, 5));
  EXPECT_EQ(*s.average_rank(1), Rational(17, 7));
  EXPECT_EQ(*s.average_rank(2), Rational(15, 7));
  EXPECT_EQ(*s.average_rank(3), Rational(7, 3));
}

TEST(RestrictTest, RejectsBadSubsets) {
  const VotingProfile profile = reference_profile();
  EXPECT_THROW(restrict_profile(profile, std::vector<CandidateId>{}),
               ArgumentError);
  EXPECT_THROW(restrict_profile(profile, std::vector<CandidateId>{0, 0}),
               ArgumentError);
  EXPECT_THROW(restrict_profile(profile, std::vector<CandidateId>{8}),
               ArgumentError);
}
