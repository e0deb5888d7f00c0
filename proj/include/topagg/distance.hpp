// Distances between a full ranking and a top-list or voting profile.
//
// The Kendall distance counts candidate pairs ordered oppositely in the two
// rankings; pairs tied in the top-list (both unranked) cost nothing. The
// footrule distance is the total rank displacement against the linear
// extension of the top-list with ties broken by the full ranking.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "topagg/errors.hpp"
#include "topagg/profile.hpp"
#include "topagg/rational.hpp"
#include "topagg/top_list.hpp"

namespace topagg {

namespace internal {

// Bottom-up merge sort; sorts `values` and returns the inversion count.
inline std::uint64_t count_inversions(std::vector<int>& values) {
  std::uint64_t inversions = 0;
  std::vector<int> buffer(values.size());
  for (std::size_t width = 1; width < values.size(); width *= 2) {
    for (std::size_t lo = 0; lo + width < values.size(); lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, values.size());
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (values[a] <= values[b]) {
          buffer[out++] = values[a++];
        } else {
          inversions += mid - a;
          buffer[out++] = values[b++];
        }
      }
      while (a < mid) buffer[out++] = values[a++];
      while (b < hi) buffer[out++] = values[b++];
      std::copy(buffer.begin() + lo, buffer.begin() + hi, values.begin() + lo);
    }
  }
  return inversions;
}

inline void check_same_candidates(const FullRanking& sigma, CandidateId n) {
  if (sigma.candidate_count() != n) {
    throw DimensionError("ranking and list have different candidate counts");
  }
}

}  // namespace internal

// Number of candidate pairs ranked in reverse order in `sigma` and `pi`.
// Runs in O(k log k) for a list of length k.
inline std::uint64_t kendall_list(const FullRanking& sigma, const TopList& pi) {
  internal::check_same_candidates(sigma, pi.candidate_count());
  std::vector<int> sigma_ranks;
  sigma_ranks.reserve(pi.ranked().size());
  for (CandidateId c : pi.ranked()) sigma_ranks.push_back(sigma.rank_of(c));

  // Pairs ranked by the list and inverted in sigma.
  std::vector<int> sorted = sigma_ranks;
  std::uint64_t total = internal::count_inversions(sorted);

  // Each ranked candidate is also inverted against every unranked candidate
  // that sigma places before it: sigma rank minus one, minus the ranked
  // candidates sigma places before it.
  for (int rank : sigma_ranks) {
    const auto smaller = std::lower_bound(sorted.begin(), sorted.end(), rank) -
                         sorted.begin();
    total += static_cast<std::uint64_t>(rank - 1 - smaller);
  }
  return total;
}

// Linear extension of `pi` with the unranked tail ordered according to
// `sigma`. Kendall and footrule distances against `pi` coincide with the
// classical distances against this extension.
inline FullRanking tie_broken_extension(const FullRanking& sigma,
                                        const TopList& pi) {
  internal::check_same_candidates(sigma, pi.candidate_count());
  std::vector<CandidateId> order = pi.ranked();
  std::vector<bool> ranked(pi.candidate_count(), false);
  for (CandidateId c : order) ranked[c] = true;
  for (CandidateId c : sigma.order()) {
    if (!ranked[c]) order.push_back(c);
  }
  return FullRanking::from_order(std::move(order));
}

// Footrule distance via the closed form 2 * sum of forward displacements of
// ranked candidates; equals the displacement sum against the tie-broken
// extension.
inline std::uint64_t footrule_list(const FullRanking& sigma, const TopList& pi) {
  internal::check_same_candidates(sigma, pi.candidate_count());
  std::uint64_t half = 0;
  const std::vector<CandidateId>& ranked = pi.ranked();
  for (std::size_t pos = 0; pos < ranked.size(); ++pos) {
    const int list_rank = static_cast<int>(pos) + 1;
    const int sigma_rank = sigma.rank_of(ranked[pos]);
    if (list_rank < sigma_rank) {
      half += static_cast<std::uint64_t>(sigma_rank - list_rank);
    }
  }
  return 2 * half;
}

// Average Kendall distance to the profile, exactly.
inline Rational kendall_profile(const FullRanking& sigma,
                                const VotingProfile& profile) {
  internal::check_same_candidates(sigma, profile.candidate_count());
  BigInt weighted = 0;
  for (const ProfileEntry& entry : profile.entries()) {
    weighted += entry.weight * kendall_list(sigma, entry.list);
  }
  return Rational(weighted, profile.total_weight());
}

// Same value computed from pairwise preference weights.
inline Rational kendall_profile(const FullRanking& sigma,
                                const PairWeights& weights) {
  internal::check_same_candidates(sigma, weights.candidate_count());
  BigInt total = 0;
  const std::vector<CandidateId>& order = sigma.order();
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      total += weights.prefer_weight(order[b], order[a]);
    }
  }
  return Rational(total, weights.total_weight());
}

// Average footrule distance to the profile.
inline Rational footrule_profile(const FullRanking& sigma,
                                 const VotingProfile& profile) {
  internal::check_same_candidates(sigma, profile.candidate_count());
  BigInt weighted = 0;
  for (const ProfileEntry& entry : profile.entries()) {
    weighted += entry.weight * footrule_list(sigma, entry.list);
  }
  return Rational(weighted, profile.total_weight());
}

}  // namespace topagg
