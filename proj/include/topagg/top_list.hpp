// Partial and complete rankings.
//
// A top-list ranks k of the n candidates with ranks 1..k; everyone else is
// implicitly tied behind them at an "unranked" sentinel rank. A full ranking
// is a permutation of all n candidates.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "topagg/errors.hpp"

namespace topagg {

// Internal candidate ids are 0-based; all I/O is 1-based.
using CandidateId = std::int32_t;

// Sentinel rank of unranked candidates; compares greater than any real rank.
inline constexpr int kUnranked = std::numeric_limits<int>::max();

class TopList {
 public:
  // `ranked[r - 1]` is the candidate with rank r. Entries must be distinct
  // ids below `candidate_count`. Empty lists are permitted: they arise when a
  // list is restricted to a candidate subset it does not touch (the file
  // format itself requires at least one entry per list).
  TopList(CandidateId candidate_count, std::vector<CandidateId> ranked)
      : n_(candidate_count), ranked_(std::move(ranked)) {
    if (n_ < 1) throw ArgumentError("top-list needs at least one candidate");
    if (ranked_.size() > static_cast<std::size_t>(n_)) {
      throw ArgumentError("top-list ranks more candidates than exist");
    }
    std::vector<bool> seen(n_, false);
    for (CandidateId c : ranked_) {
      if (c < 0 || c >= n_) throw ArgumentError("candidate id out of range");
      if (seen[c]) throw ArgumentError("duplicate candidate in top-list");
      seen[c] = true;
    }
  }

  CandidateId candidate_count() const { return n_; }
  int length() const { return static_cast<int>(ranked_.size()); }
  const std::vector<CandidateId>& ranked() const { return ranked_; }

  // Rank of `candidate` in 1..k, or kUnranked.
  int rank_of(CandidateId candidate) const {
    for (std::size_t pos = 0; pos < ranked_.size(); ++pos) {
      if (ranked_[pos] == candidate) return static_cast<int>(pos) + 1;
    }
    return kUnranked;
  }

  bool is_ranked(CandidateId candidate) const {
    return rank_of(candidate) != kUnranked;
  }

  bool operator==(const TopList& other) const {
    return n_ == other.n_ && ranked_ == other.ranked_;
  }

 private:
  CandidateId n_;
  std::vector<CandidateId> ranked_;
};

class FullRanking {
 public:
  // `order[r - 1]` is the candidate with rank r; must be a permutation.
  static FullRanking from_order(std::vector<CandidateId> order) {
    return FullRanking(std::move(order));
  }

  static FullRanking identity(CandidateId candidate_count) {
    std::vector<CandidateId> order(candidate_count);
    std::iota(order.begin(), order.end(), 0);
    return FullRanking(std::move(order));
  }

  CandidateId candidate_count() const {
    return static_cast<CandidateId>(order_.size());
  }
  const std::vector<CandidateId>& order() const { return order_; }

  // Rank of `candidate`, 1-based.
  int rank_of(CandidateId candidate) const { return rank_[candidate]; }
  const std::vector<int>& ranks() const { return rank_; }

  bool operator==(const FullRanking& other) const {
    return order_ == other.order_;
  }

 private:
  explicit FullRanking(std::vector<CandidateId> order)
      : order_(std::move(order)) {
    if (order_.empty()) throw ArgumentError("empty ranking");
    rank_.assign(order_.size(), 0);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      const CandidateId c = order_[pos];
      if (c < 0 || c >= static_cast<CandidateId>(order_.size()) || rank_[c] != 0) {
        throw ArgumentError("ranking is not a permutation");
      }
      rank_[c] = static_cast<int>(pos) + 1;
    }
  }

  std::vector<CandidateId> order_;
  std::vector<int> rank_;  // rank_[candidate] in 1..n
};

}  // namespace topagg
