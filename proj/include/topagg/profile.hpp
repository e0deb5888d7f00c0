// Voting profiles (weighted multisets of top-lists) and derived statistics:
// per-candidate scores and average ranks, pairwise preference weights, and
// restriction to a candidate subset.
//
// Weights are positive integers, so every probability is an exact fraction
// with the total weight as denominator.

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topagg/errors.hpp"
#include "topagg/rational.hpp"
#include "topagg/top_list.hpp"

namespace topagg {

struct ProfileEntry {
  BigInt weight;  // > 0
  TopList list;
};

class VotingProfile {
 public:
  VotingProfile(CandidateId candidate_count, std::vector<ProfileEntry> entries)
      : n_(candidate_count), entries_(std::move(entries)) {
    if (n_ < 1) throw ArgumentError("profile needs at least one candidate");
    if (entries_.empty()) throw ArgumentError("profile needs at least one list");
    for (const ProfileEntry& entry : entries_) {
      if (entry.weight <= 0) throw ArgumentError("list weight must be positive");
      if (entry.list.candidate_count() != n_) {
        throw DimensionError("list does not match profile candidate count");
      }
      total_weight_ += entry.weight;
    }
  }

  CandidateId candidate_count() const { return n_; }
  const std::vector<ProfileEntry>& entries() const { return entries_; }
  const BigInt& total_weight() const { return total_weight_; }

  // Largest list length in the profile (the k of a top-k instance).
  int max_list_length() const {
    int k = 0;
    for (const ProfileEntry& entry : entries_) k = std::max(k, entry.list.length());
    return k;
  }

  bool operator==(const VotingProfile& other) const {
    if (n_ != other.n_ || entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].weight != other.entries_[i].weight) return false;
      if (!(entries_[i].list == other.entries_[i].list)) return false;
    }
    return true;
  }

 private:
  CandidateId n_;
  std::vector<ProfileEntry> entries_;
  BigInt total_weight_ = 0;
};

// Per-candidate score (weight fraction of lists ranking the candidate) and
// average rank (expected rank conditioned on being ranked).
class CandidateStats {
 public:
  explicit CandidateStats(const VotingProfile& profile)
      : n_(profile.candidate_count()),
        total_weight_(profile.total_weight()),
        score_weight_(n_, 0),
        weighted_rank_sum_(n_, 0),
        rank_weights_(n_) {
    for (const ProfileEntry& entry : profile.entries()) {
      const std::vector<CandidateId>& ranked = entry.list.ranked();
      for (std::size_t pos = 0; pos < ranked.size(); ++pos) {
        const CandidateId c = ranked[pos];
        const int rank = static_cast<int>(pos) + 1;
        score_weight_[c] += entry.weight;
        weighted_rank_sum_[c] += entry.weight * rank;
        rank_weights_[c].emplace_back(rank, entry.weight);
      }
    }
    for (auto& weights : rank_weights_) {
      std::sort(weights.begin(), weights.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      // Merge duplicate ranks so each (rank, weight) pair is unique.
      std::vector<std::pair<int, BigInt>> merged;
      for (auto& [rank, weight] : weights) {
        if (!merged.empty() && merged.back().first == rank) {
          merged.back().second += weight;
        } else {
          merged.emplace_back(rank, weight);
        }
      }
      weights = std::move(merged);
    }
  }

  CandidateId candidate_count() const { return n_; }
  const BigInt& total_weight() const { return total_weight_; }

  const BigInt& score_weight(CandidateId c) const { return score_weight_[c]; }

  Rational score(CandidateId c) const {
    return Rational(score_weight_[c], total_weight_);
  }

  // Absent (not zero) for candidates that never appear.
  std::optional<Rational> average_rank(CandidateId c) const {
    if (score_weight_[c] == 0) return std::nullopt;
    return Rational(weighted_rank_sum_[c], score_weight_[c]);
  }

  // Weight of lists giving candidate `c` each specific rank, sorted by rank.
  const std::vector<std::pair<int, BigInt>>& rank_weights(CandidateId c) const {
    return rank_weights_[c];
  }

  // Ratio of maximum to minimum score over candidates with nonzero score;
  // absent when no candidate is ever ranked.
  std::optional<Rational> score_ratio() const {
    std::optional<BigInt> min_weight, max_weight;
    for (const BigInt& w : score_weight_) {
      if (w == 0) continue;
      if (!min_weight || w < *min_weight) min_weight = w;
      if (!max_weight || w > *max_weight) max_weight = w;
    }
    if (!min_weight) return std::nullopt;
    return Rational(*max_weight, *min_weight);
  }

 private:
  CandidateId n_;
  BigInt total_weight_;
  std::vector<BigInt> score_weight_;
  std::vector<BigInt> weighted_rank_sum_;
  std::vector<std::vector<std::pair<int, BigInt>>> rank_weights_;
};

inline CandidateStats stats(const VotingProfile& profile) {
  return CandidateStats(profile);
}

// Dense pairwise preference weights: prefer_weight(i, j) is the total weight
// of lists ranking i strictly before j (including lists where j is unranked).
// Quadratic in the candidate count; intended for desk-scale instances.
class PairWeights {
 public:
  explicit PairWeights(const VotingProfile& profile)
      : n_(profile.candidate_count()),
        total_weight_(profile.total_weight()),
        before_(static_cast<std::size_t>(n_) * n_, 0) {
    std::vector<bool> ranked_flag(n_, false);
    for (const ProfileEntry& entry : profile.entries()) {
      const std::vector<CandidateId>& ranked = entry.list.ranked();
      for (CandidateId c : ranked) ranked_flag[c] = true;
      for (std::size_t a = 0; a < ranked.size(); ++a) {
        // Ranked pairs in list order.
        for (std::size_t b = a + 1; b < ranked.size(); ++b) {
          at(ranked[a], ranked[b]) += entry.weight;
        }
        // Ranked candidate before every unranked one.
        for (CandidateId j = 0; j < n_; ++j) {
          if (!ranked_flag[j]) at(ranked[a], j) += entry.weight;
        }
      }
      for (CandidateId c : ranked) ranked_flag[c] = false;
    }
  }

  CandidateId candidate_count() const { return n_; }
  const BigInt& total_weight() const { return total_weight_; }

  const BigInt& prefer_weight(CandidateId i, CandidateId j) const {
    return before_[static_cast<std::size_t>(i) * n_ + j];
  }

 private:
  BigInt& at(CandidateId i, CandidateId j) {
    return before_[static_cast<std::size_t>(i) * n_ + j];
  }

  CandidateId n_;
  BigInt total_weight_;
  std::vector<BigInt> before_;
};

inline PairWeights pair_weights(const VotingProfile& profile) {
  return PairWeights(profile);
}

// Lists that lose every candidate under restriction either stay in the
// profile as empty lists (keeping the total weight, the default) or are
// dropped with the total weight recomputed. Pairwise weights among kept
// candidates are identical under both conventions.
enum class RestrictMode { keep_empty_lists, drop_empty_lists };

struct RestrictedProfile {
  VotingProfile profile;
  std::vector<CandidateId> index_map;  // new id -> original id
};

inline RestrictedProfile restrict_profile(
    const VotingProfile& profile, std::span<const CandidateId> subset,
    RestrictMode mode = RestrictMode::keep_empty_lists) {
  const CandidateId n = profile.candidate_count();
  if (subset.empty()) throw ArgumentError("restriction subset is empty");
  std::vector<CandidateId> new_id(n, -1);
  for (std::size_t a = 0; a < subset.size(); ++a) {
    const CandidateId c = subset[a];
    if (c < 0 || c >= n) throw ArgumentError("subset candidate out of range");
    if (new_id[c] != -1) throw ArgumentError("duplicate candidate in subset");
    new_id[c] = static_cast<CandidateId>(a);
  }

  const CandidateId m = static_cast<CandidateId>(subset.size());
  std::vector<ProfileEntry> entries;
  for (const ProfileEntry& entry : profile.entries()) {
    std::vector<CandidateId> kept;
    for (CandidateId c : entry.list.ranked()) {
      if (new_id[c] != -1) kept.push_back(new_id[c]);
    }
    if (kept.empty() && mode == RestrictMode::drop_empty_lists) continue;
    entries.push_back({entry.weight, TopList(m, std::move(kept))});
  }
  if (entries.empty()) throw ArgumentError("restriction dropped every list");
  return {VotingProfile(m, std::move(entries)),
          std::vector<CandidateId>(subset.begin(), subset.end())};
}

}  // namespace topagg
