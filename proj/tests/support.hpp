// Shared fixtures and independent oracles for the test suite. Oracles here
// are deliberately naive (quadratic loops, explicit constructions, full
// enumeration) so they cannot share a bug with the library code they check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "topagg/topagg.hpp"

namespace testsupport {

using namespace topagg;

// The eight-candidate instance used as the worked example throughout the
// suite: four top-4-lists with weights 1, 2, 3, 4.
inline constexpr const char* kReferenceText =
    "candidates 8\n"
    "1: 3 5 1 7\n"
    "2: 3 1 4 5\n"
    "3: 4 1 5 2\n"
    "4: 6 1 2 3\n";

inline VotingProfile reference_profile() { return parse_profile(kReferenceText); }

// Builders taking 1-based ids, matching the file format.
inline TopList list_of(CandidateId n, std::vector<int> ids) {
  std::vector<CandidateId> ranked;
  ranked.reserve(ids.size());
  for (int id : ids) ranked.push_back(static_cast<CandidateId>(id - 1));
  return TopList(n, std::move(ranked));
}

inline FullRanking ranking_of(std::vector<int> ids) {
  std::vector<CandidateId> order;
  order.reserve(ids.size());
  for (int id : ids) order.push_back(static_cast<CandidateId>(id - 1));
  return FullRanking::from_order(std::move(order));
}

inline VotingProfile profile_of(
    CandidateId n, std::vector<std::pair<int, std::vector<int>>> weighted) {
  std::vector<ProfileEntry> entries;
  for (auto& [weight, ids] : weighted) {
    entries.push_back({BigInt(weight), list_of(n, std::move(ids))});
  }
  return VotingProfile(n, std::move(entries));
}

// O(n^2) Kendall distance straight from the definition.
inline std::uint64_t naive_kendall(const FullRanking& sigma, const TopList& pi) {
  const CandidateId n = sigma.candidate_count();
  std::uint64_t total = 0;
  for (CandidateId i = 0; i < n; ++i) {
    for (CandidateId j = 0; j < n; ++j) {
      if (sigma.rank_of(i) > sigma.rank_of(j) && pi.rank_of(i) < pi.rank_of(j)) {
        ++total;
      }
    }
  }
  return total;
}

// Footrule distance via an explicitly constructed tie-broken extension.
inline std::uint64_t naive_footrule(const FullRanking& sigma, const TopList& pi) {
  const CandidateId n = sigma.candidate_count();
  std::vector<CandidateId> extension = pi.ranked();
  for (CandidateId c : sigma.order()) {
    if (!pi.is_ranked(c)) extension.push_back(c);
  }
  std::vector<int> extension_rank(n);
  for (std::size_t pos = 0; pos < extension.size(); ++pos) {
    extension_rank[extension[pos]] = static_cast<int>(pos) + 1;
  }
  std::uint64_t total = 0;
  for (CandidateId c = 0; c < n; ++c) {
    total += static_cast<std::uint64_t>(
        std::abs(sigma.rank_of(c) - extension_rank[c]));
  }
  return total;
}

// Weight of lists ranking i strictly before an unranked j, tabulated
// directly.
inline BigInt weight_before_unranked(const VotingProfile& profile,
                                     CandidateId i, CandidateId j) {
  BigInt total = 0;
  for (const ProfileEntry& entry : profile.entries()) {
    if (entry.list.is_ranked(i) && !entry.list.is_ranked(j)) {
      total += entry.weight;
    }
  }
  return total;
}

// Random instances for property tests; independent of the library RNG.
struct RandomInstances {
  explicit RandomInstances(std::uint32_t seed) : engine(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine);
  }

  TopList random_list(CandidateId n, int k) {
    std::vector<CandidateId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), engine);
    pool.resize(k);
    return TopList(n, std::move(pool));
  }

  FullRanking random_ranking(CandidateId n) {
    std::vector<CandidateId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), engine);
    return FullRanking::from_order(std::move(order));
  }

  // Mixed list lengths in [1, max_k], weights in [1, 5].
  VotingProfile random_profile(CandidateId n, int lists, int max_k) {
    std::vector<ProfileEntry> entries;
    for (int i = 0; i < lists; ++i) {
      const int k = uniform(1, max_k);
      entries.push_back({BigInt(uniform(1, 5)), random_list(n, k)});
    }
    return VotingProfile(n, std::move(entries));
  }

  std::mt19937 engine;
};

// Exhaustive assignment oracle: first minimum in lexicographic row->column
// order.
template <class Cost>
std::pair<std::vector<int>, Cost> brute_force_assignment(
    const CostMatrix<Cost>& matrix) {
  const int n = matrix.size();
  std::vector<int> columns(n);
  std::iota(columns.begin(), columns.end(), 0);
  std::vector<int> best = columns;
  Cost best_cost(0);
  bool have = false;
  do {
    Cost cost(0);
    for (int i = 0; i < n; ++i) cost += matrix.at(i, columns[i]);
    if (!have || cost < best_cost) {
      best_cost = cost;
      best = columns;
      have = true;
    }
  } while (std::next_permutation(columns.begin(), columns.end()));
  return {best, best_cost};
}

// Lower bound on the optimal weighted cost of a top-k instance: candidates
// ranked below k contribute their score weight per displaced rank.
inline BigInt score_displacement_bound(const VotingProfile& profile,
                                       const FullRanking& ranking) {
  const CandidateStats s = stats(profile);
  const int k = profile.max_list_length();
  BigInt total = 0;
  for (CandidateId c = 0; c < profile.candidate_count(); ++c) {
    const int rank = ranking.rank_of(c);
    if (rank > k) total += BigInt(rank - k) * s.score_weight(c);
  }
  return total;
}

}  // namespace testsupport
