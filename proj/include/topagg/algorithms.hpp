// The aggregation algorithms. Each one consumes a voting profile and emits
// a full ranking of all candidates, with diagnostics where useful.
//
// Conventions shared by every algorithm here:
//   - candidates that never appear in any list are appended last, in index
//     order, instead of being stripped by a preprocessing pass;
//   - all remaining ties (equal scores, equal average ranks, equal clocks)
//     break toward the smaller candidate index, so outputs are reproducible;
//   - randomness comes only from an explicit Seed.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topagg/distance.hpp"
#include "topagg/errors.hpp"
#include "topagg/exact.hpp"
#include "topagg/matching.hpp"
#include "topagg/profile.hpp"
#include "topagg/rational.hpp"
#include "topagg/rng.hpp"
#include "topagg/top_list.hpp"

namespace topagg {

// ---------------------------------------------------------------------------
// Score partition: bucket candidates by a randomly shifted logarithmic score
// scale, f(s) = floor(u - eta * ln s). Candidates in lower buckets have
// higher scores; zero-score candidates form their own final bucket.
// ---------------------------------------------------------------------------

struct PartitionParams {
  Rational eta = 1;          // bucket width on the log-score scale
  std::optional<double> u;   // explicit shift; sampled from `seed` if absent
  Seed seed;

  double resolve_u() const {
    if (u) {
      if (*u < 0.0 || *u >= 1.0) throw ArgumentError("u must lie in [0,1)");
      return *u;
    }
    return DeterministicRng(seed).uniform01();
  }
};

struct ScorePartition {
  double u = 0.0;
  // Nonempty buckets with finite index, ascending; members in index order.
  std::vector<std::pair<long long, std::vector<CandidateId>>> buckets;
  std::vector<CandidateId> zero_score;  // the infinite bucket, index order

  std::size_t bucket_count() const {
    return buckets.size() + (zero_score.empty() ? 0 : 1);
  }
};

inline ScorePartition partition_by_score(const CandidateStats& stats,
                                         const PartitionParams& params) {
  if (params.eta <= 0) throw ArgumentError("eta must be positive");
  const double u = params.resolve_u();
  const double eta = to_double(params.eta);

  ScorePartition partition;
  partition.u = u;
  std::map<long long, std::vector<CandidateId>> buckets;
  for (CandidateId c = 0; c < stats.candidate_count(); ++c) {
    if (stats.score_weight(c) == 0) {
      partition.zero_score.push_back(c);
      continue;
    }
    const double x = u - eta * std::log(to_double(stats.score(c)));
    // Values within 1e-12 of an integer boundary snap to the lower bucket
    // index; under continuous u this is a probability-zero event, the fixed
    // rule only removes platform-dependent rounding.
    const double nearest = std::round(x);
    long long bucket;
    if (std::abs(x - nearest) <= 1e-12) {
      bucket = static_cast<long long>(nearest) - 1;
    } else {
      bucket = static_cast<long long>(std::floor(x));
    }
    if (bucket < 0) bucket = 0;
    buckets[bucket].push_back(c);
  }
  partition.buckets.assign(buckets.begin(), buckets.end());
  return partition;
}

// ---------------------------------------------------------------------------
// Sorting primitives shared by the algorithms.
// ---------------------------------------------------------------------------

namespace internal {

// Ascending average rank, ties by index. All members must have a score.
inline void sort_by_average_rank(std::vector<CandidateId>& members,
                                 const CandidateStats& stats) {
  std::vector<Rational> average(members.size());
  std::vector<std::size_t> position(stats.candidate_count());
  for (std::size_t i = 0; i < members.size(); ++i) {
    average[i] = *stats.average_rank(members[i]);
    position[members[i]] = i;
  }
  std::sort(members.begin(), members.end(),
            [&](CandidateId a, CandidateId b) {
              const Rational& ra = average[position[a]];
              const Rational& rb = average[position[b]];
              if (ra != rb) return ra < rb;
              return a < b;
            });
}

}  // namespace internal

// Non-increasing score, ties by ascending average rank, then index. With
// single-candidate lists this alone is optimal; in general it only minimizes
// the ranked-versus-unranked part of the objective.
inline FullRanking score_sort(const VotingProfile& profile) {
  const CandidateStats s = stats(profile);
  const CandidateId n = s.candidate_count();
  std::vector<CandidateId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](CandidateId a, CandidateId b) {
    const BigInt& wa = s.score_weight(a);
    const BigInt& wb = s.score_weight(b);
    if (wa != wb) return wa > wb;
    if (wa != 0) {
      const Rational ra = *s.average_rank(a);
      const Rational rb = *s.average_rank(b);
      if (ra != rb) return ra < rb;
    }
    return a < b;
  });
  return FullRanking::from_order(std::move(order));
}

// ---------------------------------------------------------------------------
// Footrule+: assign candidate i to rank j at cost sum_{r<=j} (j-r) * weight
// of lists giving i rank r, then solve the assignment problem. The result
// minimizes the profile footrule distance, a 2-approximation in Kendall
// distance.
// ---------------------------------------------------------------------------

// Cost matrix in weight units: entry (i, j-1) is totalWeight * C(i, j).
inline CostMatrix<BigInt> footrule_cost_matrix(const CandidateStats& stats) {
  const CandidateId n = stats.candidate_count();
  CostMatrix<BigInt> matrix(n);
  for (CandidateId i = 0; i < n; ++i) {
    const auto& ranks = stats.rank_weights(i);
    std::size_t next = 0;
    BigInt cumulative = 0;  // weight of lists ranking i at rank <= j
    BigInt cost = 0;
    for (int j = 1; j <= n; ++j) {
      matrix.at(i, j - 1) = cost;
      while (next < ranks.size() && ranks[next].first == j) {
        cumulative += ranks[next].second;
        ++next;
      }
      cost += cumulative;
    }
  }
  return matrix;
}

inline FullRanking footrule_plus(const VotingProfile& profile) {
  const CandidateStats s = stats(profile);
  const Assignment<BigInt> assignment =
      min_cost_assignment_auto(footrule_cost_matrix(s));
  std::vector<CandidateId> matched(profile.candidate_count());
  for (CandidateId i = 0; i < profile.candidate_count(); ++i) {
    matched[assignment.column_of[i]] = i;
  }
  // Zero-score candidates have all-zero cost rows, so the matching places
  // them arbitrarily among equal-cost optima. Compacting the others forward
  // and appending the zero-score ones in index order keeps the matching cost
  // (rows are nondecreasing in rank) and matches the shared convention.
  std::vector<CandidateId> order;
  order.reserve(matched.size());
  for (CandidateId c : matched) {
    if (s.score_weight(c) != 0) order.push_back(c);
  }
  for (CandidateId c = 0; c < profile.candidate_count(); ++c) {
    if (s.score_weight(c) == 0) order.push_back(c);
  }
  return FullRanking::from_order(std::move(order));
}

// ---------------------------------------------------------------------------
// RandomSort: give each list an exponential clock with rate proportional to
// its weight, then process lists by increasing clock, appending their
// candidates in rank order. Equivalently, each candidate sorts by the tuple
// (smallest clock among lists ranking it, rank in that list). Expected cost
// is within twice the optimum.
// ---------------------------------------------------------------------------

struct RandomSortResult {
  FullRanking ranking;
  std::vector<int> entry_order;  // profile entries by increasing clock
};

// Deterministic core: append unseen candidates entry by entry, never-ranked
// candidates last in index order.
inline FullRanking ranking_from_entry_order(const VotingProfile& profile,
                                            std::span<const int> entry_order) {
  const auto& entries = profile.entries();
  if (entry_order.size() != entries.size()) {
    throw DimensionError("entry order does not match the profile");
  }
  std::vector<bool> used(entries.size(), false);
  for (int e : entry_order) {
    if (e < 0 || static_cast<std::size_t>(e) >= entries.size() || used[e]) {
      throw ArgumentError("entry order is not a permutation");
    }
    used[e] = true;
  }

  const CandidateId n = profile.candidate_count();
  std::vector<CandidateId> order;
  order.reserve(n);
  std::vector<bool> placed(n, false);
  for (int e : entry_order) {
    for (CandidateId c : entries[e].list.ranked()) {
      if (!placed[c]) {
        placed[c] = true;
        order.push_back(c);
      }
    }
  }
  for (CandidateId c = 0; c < n; ++c) {
    if (!placed[c]) order.push_back(c);
  }
  return FullRanking::from_order(std::move(order));
}

inline RandomSortResult random_sort(const VotingProfile& profile, Seed seed) {
  DeterministicRng rng(seed);
  const double total = to_double(profile.total_weight());
  const auto& entries = profile.entries();
  std::vector<double> clock(entries.size());
  for (std::size_t e = 0; e < entries.size(); ++e) {
    clock[e] = rng.exponential(to_double(entries[e].weight) / total);
  }
  std::vector<int> entry_order(entries.size());
  std::iota(entry_order.begin(), entry_order.end(), 0);
  std::sort(entry_order.begin(), entry_order.end(), [&](int a, int b) {
    if (clock[a] != clock[b]) return clock[a] < clock[b];
    return a < b;
  });
  FullRanking ranking = ranking_from_entry_order(profile, entry_order);
  return {std::move(ranking), std::move(entry_order)};
}

// ---------------------------------------------------------------------------
// Borda+: sort by ascending average rank. Approximation quality degrades
// with the spread of scores; the ratio max/min nonzero score is returned as
// a diagnostic.
// ---------------------------------------------------------------------------

struct BordaResult {
  FullRanking ranking;
  std::optional<Rational> score_ratio;
};

inline BordaResult borda_plus(const VotingProfile& profile) {
  const CandidateStats s = stats(profile);
  const CandidateId n = s.candidate_count();
  std::vector<CandidateId> ranked_somewhere;
  std::vector<CandidateId> never_ranked;
  for (CandidateId c = 0; c < n; ++c) {
    (s.score_weight(c) != 0 ? ranked_somewhere : never_ranked).push_back(c);
  }
  internal::sort_by_average_rank(ranked_somewhere, s);
  ranked_somewhere.insert(ranked_somewhere.end(), never_ranked.begin(),
                          never_ranked.end());
  return {FullRanking::from_order(std::move(ranked_somewhere)),
          s.score_ratio()};
}

// ---------------------------------------------------------------------------
// Score-then-Borda+: partition candidates by rough score (eta = 1), sort
// each bucket by average rank, and concatenate buckets.
// ---------------------------------------------------------------------------

struct ScoreThenBordaResult {
  FullRanking ranking;
  ScorePartition partition;
};

inline ScoreThenBordaResult score_then_borda(
    const VotingProfile& profile, const PartitionParams& params = {}) {
  const CandidateStats s = stats(profile);
  ScorePartition partition = partition_by_score(s, params);
  std::vector<CandidateId> order;
  order.reserve(profile.candidate_count());
  for (auto& [index, members] : partition.buckets) {
    std::vector<CandidateId> bucket = members;
    internal::sort_by_average_rank(bucket, s);
    order.insert(order.end(), bucket.begin(), bucket.end());
  }
  order.insert(order.end(), partition.zero_score.begin(),
               partition.zero_score.end());
  return {FullRanking::from_order(std::move(order)), std::move(partition)};
}

// ---------------------------------------------------------------------------
// Score-then-Adjust: sort by score, then optimally reorder the first
// ceil((1 + 1/eps) * (k - 1)) candidates, where k is the longest list. For
// top-k instances the result is within (1 + eps) of the optimum.
// ---------------------------------------------------------------------------

// ceil((1 + 1/eps)(k - 1)) clamped to [1, n]; exposed for inspection.
inline int adjust_prefix_length(const Rational& epsilon, int max_list_length,
                                CandidateId candidate_count) {
  if (epsilon <= 0) throw ArgumentError("epsilon must be positive");
  if (max_list_length < 1) return 1;
  const Rational target =
      (Rational(1) + Rational(1) / epsilon) * (max_list_length - 1);
  const BigInt num = boost::multiprecision::numerator(target);
  const BigInt den = boost::multiprecision::denominator(target);
  BigInt prefix = (num + den - 1) / den;  // ceil
  if (prefix < 1) prefix = 1;
  if (prefix > candidate_count) prefix = candidate_count;
  return prefix.convert_to<int>();
}

inline FullRanking score_then_adjust(const VotingProfile& profile,
                                     const Rational& epsilon,
                                     int dp_cap = kSubsetDpCap) {
  const int prefix =
      adjust_prefix_length(epsilon, profile.max_list_length(),
                           profile.candidate_count());
  const FullRanking by_score = score_sort(profile);
  return reorder_prefix_optimally(profile, by_score, prefix, dp_cap);
}

// ---------------------------------------------------------------------------
// Score-then-PTAS: partition by rough score with eta = eps/3, then order
// each bucket with a pluggable solver on the restricted instance. With an
// exact bucket solver the expected cost over u is within (1 + eps) of the
// optimum; with a Borda bucket solver only the constant-factor guarantee of
// Score-then-Borda+ applies.
// ---------------------------------------------------------------------------

enum class SolverQuality { exact, borda, external };

struct BucketOrdering {
  std::vector<CandidateId> order;  // ids local to the restricted instance
  SolverQuality quality;
};

struct IntervalSolver {
  SolverQuality declared;
  std::function<BucketOrdering(const VotingProfile&)> solve;
};

// Exact subset dp while the bucket fits under `cap`, Borda fallback above
// it (reported as a quality downgrade in the result).
inline IntervalSolver make_exact_interval_solver(int cap = kSubsetDpCap) {
  return {SolverQuality::exact, [cap](const VotingProfile& bucket) {
            if (bucket.candidate_count() <= cap) {
              return BucketOrdering{
                  optimal_subset_dp(bucket, cap).ranking.order(),
                  SolverQuality::exact};
            }
            return BucketOrdering{borda_plus(bucket).ranking.order(),
                                  SolverQuality::borda};
          }};
}

inline IntervalSolver make_borda_interval_solver() {
  return {SolverQuality::borda, [](const VotingProfile& bucket) {
            return BucketOrdering{borda_plus(bucket).ranking.order(),
                                  SolverQuality::borda};
          }};
}

struct ScoreThenPtasResult {
  FullRanking ranking;
  ScorePartition partition;
  std::vector<SolverQuality> bucket_quality;  // one per nonempty finite bucket
  bool downgraded = false;
};

inline ScoreThenPtasResult score_then_ptas(
    const VotingProfile& profile, const Rational& epsilon, Seed seed,
    const IntervalSolver& solver = make_exact_interval_solver(),
    std::optional<double> u = std::nullopt) {
  if (epsilon <= 0) throw ArgumentError("epsilon must be positive");
  const CandidateStats s = stats(profile);
  PartitionParams params;
  params.eta = epsilon / 3;
  params.seed = seed;
  params.u = u;
  ScorePartition partition = partition_by_score(s, params);

  ScoreThenPtasResult result{FullRanking::identity(1), {}, {}, false};
  std::vector<CandidateId> order;
  order.reserve(profile.candidate_count());
  for (const auto& [index, members] : partition.buckets) {
    const RestrictedProfile restricted = restrict_profile(profile, members);
    BucketOrdering solved = solver.solve(restricted.profile);
    if (solved.order.size() != members.size()) {
      throw DimensionError("bucket solver returned a wrong-sized order");
    }
    for (CandidateId local : solved.order) {
      if (local < 0 || static_cast<std::size_t>(local) >= members.size()) {
        throw ArgumentError("bucket solver output is not a permutation");
      }
      order.push_back(restricted.index_map[local]);
    }
    result.bucket_quality.push_back(solved.quality);
    if (solved.quality != solver.declared) result.downgraded = true;
  }
  order.insert(order.end(), partition.zero_score.begin(),
               partition.zero_score.end());
  result.ranking = FullRanking::from_order(std::move(order));
  result.partition = std::move(partition);
  return result;
}

}  // namespace topagg
