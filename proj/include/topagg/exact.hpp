// Exact aggregation oracles for small instances: full permutation
// enumeration and a subset dynamic program over bitmasks, plus optimal
// reordering of a ranking prefix. All of them minimize the average Kendall
// distance to the profile and break ties toward the lexicographically
// smallest order vector.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "topagg/distance.hpp"
#include "topagg/errors.hpp"
#include "topagg/profile.hpp"
#include "topagg/rational.hpp"
#include "topagg/top_list.hpp"

namespace topagg {

inline constexpr int kBruteForceCap = 8;
inline constexpr int kSubsetDpCap = 24;
// Above this the dp table cannot be addressed sensibly on desk hardware.
inline constexpr int kSubsetDpHardLimit = 30;

struct ExactResult {
  FullRanking ranking;
  Rational cost;
};

// best_cost[mask] is the minimal Kendall cost (in weight units) incurred
// among the candidate pairs inside `mask`, over all orderings of `mask`.
// best_cost[0] = 0, and each subset extends an optimal sub-prefix by one
// appended candidate.
template <class Cost>
struct SubsetDpTable {
  int m = 0;
  std::vector<Cost> best_cost;
};

namespace internal {

// Pairwise preference weights of the (small) instance in a flat native or
// BigInt matrix: weight_of[i][j] = weight of lists ranking i before j.
template <class Cost>
struct PreferenceTable {
  int m;
  std::vector<Cost> weight_of;

  const Cost& at(int i, int j) const { return weight_of[i * m + j]; }
};

template <class Cost>
PreferenceTable<Cost> preference_table(const PairWeights& weights) {
  const int m = weights.candidate_count();
  PreferenceTable<Cost> table{m, std::vector<Cost>()};
  table.weight_of.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if constexpr (std::is_same_v<Cost, BigInt>) {
        table.weight_of.push_back(weights.prefer_weight(i, j));
      } else {
        table.weight_of.push_back(
            weights.prefer_weight(i, j).template convert_to<Cost>());
      }
    }
  }
  return table;
}

// Half-mask sum tables: sums of one matrix row (or column) over any subset,
// looked up as low-half + high-half.
template <class Cost>
struct SubsetSums {
  int low_bits;
  std::vector<std::vector<Cost>> low;   // low[c][mask over low half]
  std::vector<std::vector<Cost>> high;  // high[c][mask over high half]

  Cost sum(int c, std::uint32_t mask) const {
    return low[c][mask & ((1u << low_bits) - 1)] + high[c][mask >> low_bits];
  }
};

template <class Cost, class EntryAt>
SubsetSums<Cost> build_subset_sums(int m, EntryAt entry) {
  SubsetSums<Cost> sums;
  sums.low_bits = (m + 1) / 2;
  const int high_bits = m - sums.low_bits;
  sums.low.assign(m, {});
  sums.high.assign(m, {});
  for (int c = 0; c < m; ++c) {
    auto& lo = sums.low[c];
    lo.assign(std::size_t{1} << sums.low_bits, Cost(0));
    for (std::uint32_t mask = 1; mask < lo.size(); ++mask) {
      const int bit = std::countr_zero(mask);
      lo[mask] = lo[mask & (mask - 1)] + entry(c, bit);
    }
    auto& hi = sums.high[c];
    hi.assign(std::size_t{1} << high_bits, Cost(0));
    for (std::uint32_t mask = 1; mask < hi.size(); ++mask) {
      const int bit = std::countr_zero(mask);
      hi[mask] = hi[mask & (mask - 1)] + entry(c, sums.low_bits + bit);
    }
  }
  return sums;
}

template <class Cost>
SubsetDpTable<Cost> build_dp_table(const PreferenceTable<Cost>& prefer) {
  const int m = prefer.m;
  // Appending candidate c after the set S costs the weight of lists that
  // prefer c over some member of S.
  const SubsetSums<Cost> row_sums = build_subset_sums<Cost>(
      m, [&prefer](int c, int s) { return prefer.at(c, s); });

  SubsetDpTable<Cost> table;
  table.m = m;
  table.best_cost.assign(std::size_t{1} << m, Cost(0));
  for (std::uint32_t mask = 1; mask < table.best_cost.size(); ++mask) {
    bool first = true;
    Cost best(0);
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      // prefer.at(c, c) == 0, so summing over all of `mask` equals summing
      // over mask \ {c}.
      const Cost candidate =
          table.best_cost[mask ^ (1u << c)] + row_sums.sum(c, mask);
      if (first || candidate < best) {
        best = candidate;
        first = false;
      }
    }
    table.best_cost[mask] = best;
  }
  return table;
}

// Reconstructs the lexicographically smallest optimal order front to back:
// place the smallest candidate whose "ranked first" cost plus the optimal
// cost of the remainder matches the table value.
template <class Cost>
std::vector<CandidateId> best_order_from_table(
    const PreferenceTable<Cost>& prefer, const SubsetDpTable<Cost>& table) {
  const int m = prefer.m;
  const SubsetSums<Cost> col_sums = build_subset_sums<Cost>(
      m, [&prefer](int c, int s) { return prefer.at(s, c); });

  std::vector<CandidateId> order;
  order.reserve(m);
  std::uint32_t remaining = (m == 32) ? ~0u : ((1u << m) - 1);
  while (remaining != 0) {
    for (std::uint32_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      const Cost placed_first =
          col_sums.sum(c, remaining) + table.best_cost[remaining ^ (1u << c)];
      if (placed_first == table.best_cost[remaining]) {
        order.push_back(c);
        remaining ^= 1u << c;
        break;
      }
    }
  }
  return order;
}

template <class Cost>
std::pair<std::vector<CandidateId>, Cost> solve_subset_dp(
    const PairWeights& weights) {
  const PreferenceTable<Cost> prefer = preference_table<Cost>(weights);
  const SubsetDpTable<Cost> table = build_dp_table(prefer);
  std::vector<CandidateId> order = best_order_from_table(prefer, table);
  return {std::move(order), table.best_cost.back()};
}

// int64 is enough whenever the worst-case cost, total weight times the
// number of pairs, stays well below 2^63.
inline bool dp_fits_int64(const PairWeights& weights) {
  const int m = weights.candidate_count();
  const BigInt bound = weights.total_weight() * m * m;
  return bound < (BigInt(1) << 62);
}

}  // namespace internal

// Builds the dp table over every candidate subset of the instance; exposed
// for inspection and tests, the solvers below wrap it.
inline SubsetDpTable<BigInt> subset_dp_table(const VotingProfile& profile,
                                             int cap = kSubsetDpCap) {
  const CandidateId n = profile.candidate_count();
  if (n > cap || n > kSubsetDpHardLimit) {
    throw CapacityError("instance exceeds the subset dp cap");
  }
  return internal::build_dp_table(
      internal::preference_table<BigInt>(PairWeights(profile)));
}

// Exact minimizer by enumerating all n! orders in lexicographic sequence;
// the first optimum found is kept.
inline ExactResult optimal_bruteforce(const VotingProfile& profile,
                                      int cap = kBruteForceCap) {
  const CandidateId n = profile.candidate_count();
  if (n > cap) throw CapacityError("instance exceeds the brute force cap");
  const PairWeights weights(profile);

  std::vector<CandidateId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<CandidateId> best_order = order;
  BigInt best_cost = -1;
  do {
    BigInt cost = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        cost += weights.prefer_weight(order[b], order[a]);
      }
    }
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  return {FullRanking::from_order(std::move(best_order)),
          Rational(best_cost, profile.total_weight())};
}

// Exact minimizer via the subset dp; same cost and same tie-broken ranking
// as optimal_bruteforce, at O(2^n * n) time.
inline ExactResult optimal_subset_dp(const VotingProfile& profile,
                                     int cap = kSubsetDpCap) {
  const CandidateId n = profile.candidate_count();
  if (n > cap || n > kSubsetDpHardLimit) {
    throw CapacityError("instance exceeds the subset dp cap");
  }
  const PairWeights weights(profile);
  std::vector<CandidateId> order;
  BigInt cost;
  if (internal::dp_fits_int64(weights)) {
    auto [o, c] = internal::solve_subset_dp<std::uint64_t>(weights);
    order = std::move(o);
    cost = c;
  } else {
    auto [o, c] = internal::solve_subset_dp<BigInt>(weights);
    order = std::move(o);
    cost = std::move(c);
  }
  return {FullRanking::from_order(std::move(order)),
          Rational(cost, profile.total_weight())};
}

// Reorders the first `prefix_len` candidates of `sigma` optimally, leaving
// the rest untouched. Only pairs inside the prefix change orientation, so
// solving the instance restricted to the prefix suffices.
inline FullRanking reorder_prefix_optimally(const VotingProfile& profile,
                                            const FullRanking& sigma,
                                            int prefix_len,
                                            int cap = kSubsetDpCap) {
  const CandidateId n = profile.candidate_count();
  if (sigma.candidate_count() != n) {
    throw DimensionError("ranking does not match the profile");
  }
  if (prefix_len < 1 || prefix_len > n) {
    throw ArgumentError("prefix length out of range");
  }
  if (prefix_len > cap || prefix_len > kSubsetDpHardLimit) {
    throw CapacityError("prefix exceeds the subset dp cap");
  }
  if (prefix_len == 1) return sigma;

  std::vector<CandidateId> prefix(sigma.order().begin(),
                                  sigma.order().begin() + prefix_len);
  std::sort(prefix.begin(), prefix.end());
  const RestrictedProfile restricted = restrict_profile(profile, prefix);
  const PairWeights weights(restricted.profile);

  std::vector<CandidateId> local_order;
  if (internal::dp_fits_int64(weights)) {
    local_order = internal::solve_subset_dp<std::uint64_t>(weights).first;
  } else {
    local_order = internal::solve_subset_dp<BigInt>(weights).first;
  }

  std::vector<CandidateId> order;
  order.reserve(n);
  for (CandidateId local : local_order) {
    order.push_back(restricted.index_map[local]);
  }
  order.insert(order.end(), sigma.order().begin() + prefix_len,
               sigma.order().end());
  return FullRanking::from_order(std::move(order));
}

}  // namespace topagg
