// Instance file format and random instance generators.
//
// Profile files are plain text:
//
//     # optional comment
//     candidates 8
//     1: 3 5 1 7
//     2: 3 1 4 5
//
// One header line, then one line per weighted list: a positive integer
// weight, a colon, and the ranked candidates as 1-based ids, best first.
// Candidate ids are 1-based in files and 0-based in memory.

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topagg/errors.hpp"
#include "topagg/profile.hpp"
#include "topagg/rational.hpp"
#include "topagg/rng.hpp"
#include "topagg/top_list.hpp"

namespace topagg {

enum class ParseErrorKind {
  missing_header,
  bad_header,
  bad_entry,
  nonpositive_weight,
  candidate_out_of_range,
  duplicate_candidate,
  empty_profile,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

namespace internal {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    if (end > pos) tokens.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

inline std::optional<long long> parse_int(std::string_view token) {
  long long value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Arbitrary-precision nonnegative integer; rejects anything but digits
// (an optional leading '-' is accepted so negative weights can be told apart
// from garbage).
inline std::optional<BigInt> parse_weight(std::string_view token) {
  if (token.empty()) return std::nullopt;
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return std::nullopt;
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return std::nullopt;
  }
  return BigInt(std::string(token));
}

}  // namespace internal

inline VotingProfile parse_profile(std::string_view text) {
  std::optional<CandidateId> candidate_count;
  std::vector<ProfileEntry> entries;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    line = internal::trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (!candidate_count) {
      const auto tokens = internal::split_ws(line);
      const auto n =
          tokens.size() == 2 ? internal::parse_int(tokens[1]) : std::nullopt;
      if (tokens.size() != 2 || tokens[0] != "candidates" || !n || *n < 1 ||
          *n > (1 << 30)) {
        throw ParseError(ParseErrorKind::bad_header, line_no,
                         "expected `candidates <n>`");
      }
      candidate_count = static_cast<CandidateId>(*n);
      continue;
    }

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(ParseErrorKind::bad_entry, line_no,
                       "expected `<weight>: <candidates>`");
    }
    const auto weight =
        internal::parse_weight(internal::trim(line.substr(0, colon)));
    if (!weight) {
      throw ParseError(ParseErrorKind::bad_entry, line_no,
                       "weight is not an integer");
    }
    if (*weight < 1) {
      throw ParseError(ParseErrorKind::nonpositive_weight, line_no,
                       "list weight must be at least 1");
    }

    const auto tokens = internal::split_ws(line.substr(colon + 1));
    if (tokens.empty()) {
      throw ParseError(ParseErrorKind::bad_entry, line_no,
                       "list ranks no candidates");
    }
    std::vector<CandidateId> ranked;
    std::vector<bool> seen(*candidate_count, false);
    for (std::string_view token : tokens) {
      const auto id = internal::parse_int(token);
      if (!id) {
        throw ParseError(ParseErrorKind::bad_entry, line_no,
                         "candidate id is not an integer");
      }
      if (*id < 1 || *id > *candidate_count) {
        throw ParseError(ParseErrorKind::candidate_out_of_range, line_no,
                         "candidate id out of range");
      }
      const CandidateId c = static_cast<CandidateId>(*id - 1);
      if (seen[c]) {
        throw ParseError(ParseErrorKind::duplicate_candidate, line_no,
                         "candidate listed twice");
      }
      seen[c] = true;
      ranked.push_back(c);
    }
    entries.push_back({*weight, TopList(*candidate_count, std::move(ranked))});
  }

  if (!candidate_count) {
    throw ParseError(ParseErrorKind::missing_header, line_no,
                     "missing `candidates <n>` header");
  }
  if (entries.empty()) {
    throw ParseError(ParseErrorKind::empty_profile, line_no,
                     "profile has no lists");
  }
  return VotingProfile(*candidate_count, std::move(entries));
}

// Canonical form: LF line endings, single spaces, entries in input order.
// parse(serialize(p)) == p.
inline std::string serialize_profile(const VotingProfile& profile) {
  std::string out = "candidates " + std::to_string(profile.candidate_count()) + "\n";
  for (const ProfileEntry& entry : profile.entries()) {
    if (entry.list.length() == 0) {
      throw ArgumentError("cannot serialize an empty list");
    }
    out += entry.weight.str();
    out += ':';
    for (CandidateId c : entry.list.ranked()) {
      out += ' ';
      out += std::to_string(c + 1);
    }
    out += '\n';
  }
  return out;
}

// Space-separated 1-based ids on one line.
inline std::string serialize_ranking(const FullRanking& ranking) {
  std::string out;
  for (std::size_t i = 0; i < ranking.order().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ranking.order()[i] + 1);
  }
  return out;
}

inline FullRanking parse_ranking(std::string_view text, CandidateId n) {
  const auto tokens = internal::split_ws(internal::trim(text));
  std::vector<CandidateId> order;
  for (std::string_view token : tokens) {
    const auto id = internal::parse_int(token);
    if (!id || *id < 1 || *id > n) {
      throw ArgumentError("ranking entries must be ids in [1, n]");
    }
    order.push_back(static_cast<CandidateId>(*id - 1));
  }
  if (order.size() != static_cast<std::size_t>(n)) {
    throw ArgumentError("ranking must mention every candidate exactly once");
  }
  return FullRanking::from_order(std::move(order));  // rejects duplicates
}

// ---------------------------------------------------------------------------
// Instance generators. Both models are synthetic corpora for experiments:
//   - uniform: each list ranks k distinct candidates drawn uniformly, in
//     uniform order;
//   - planted: a hidden ground truth (the identity order) is perturbed; list
//     members are drawn with a geometric bias toward the top of the ground
//     truth, listed in ground-truth order, then shuffled by one pass of
//     adjacent swaps, each applied with probability phi.
// ---------------------------------------------------------------------------

enum class GeneratorModel { uniform, planted };

struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::uniform;
  CandidateId candidate_count = 1;
  int min_list_length = 1;
  int max_list_length = 1;
  int list_count = 1;
  std::uint64_t weight_max = 1;  // weights drawn uniformly in [1, weight_max]
  double phi = 0.0;              // adjacent-swap rate of the planted model
  Seed seed;
};

inline VotingProfile generate(const GeneratorSpec& spec) {
  const CandidateId n = spec.candidate_count;
  if (n < 1) throw ArgumentError("generator needs at least one candidate");
  if (spec.min_list_length < 1 || spec.min_list_length > spec.max_list_length ||
      spec.max_list_length > n) {
    throw ArgumentError("list length range must satisfy 1 <= min <= max <= n");
  }
  if (spec.list_count < 1) throw ArgumentError("need at least one list");
  if (spec.weight_max < 1) throw ArgumentError("weight bound must be positive");
  if (spec.phi < 0.0 || spec.phi > 1.0) {
    throw ArgumentError("phi must lie in [0, 1]");
  }

  DeterministicRng rng(spec.seed);
  const auto draw_length = [&]() {
    const std::uint64_t range =
        static_cast<std::uint64_t>(spec.max_list_length - spec.min_list_length) + 1;
    return spec.min_list_length + static_cast<int>(rng.uniform_below(range));
  };
  const auto draw_weight = [&]() -> BigInt {
    if (spec.weight_max == 1) return 1;
    return BigInt(1 + rng.uniform_below(spec.weight_max));
  };

  std::vector<ProfileEntry> entries;
  entries.reserve(spec.list_count);

  if (spec.model == GeneratorModel::uniform) {
    std::vector<CandidateId> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int list = 0; list < spec.list_count; ++list) {
      const int k = draw_length();
      for (int t = 0; t < k; ++t) {
        const std::uint64_t j =
            t + rng.uniform_below(static_cast<std::uint64_t>(n - t));
        std::swap(pool[t], pool[j]);
      }
      std::vector<CandidateId> ranked(pool.begin(), pool.begin() + k);
      entries.push_back({draw_weight(), TopList(n, std::move(ranked))});
    }
  } else {
    for (int list = 0; list < spec.list_count; ++list) {
      const int k = draw_length();
      std::vector<CandidateId> remaining(n);
      std::iota(remaining.begin(), remaining.end(), 0);
      std::vector<CandidateId> ranked;
      ranked.reserve(k);
      for (int t = 0; t < k; ++t) {
        // Geometric walk from the front of the (ascending) remainder.
        std::size_t idx = 0;
        while (rng.uniform01() < 0.5) ++idx;
        idx %= remaining.size();
        ranked.push_back(remaining[idx]);
        remaining.erase(remaining.begin() + idx);
      }
      std::sort(ranked.begin(), ranked.end());
      for (int pos = 0; pos + 1 < k; ++pos) {
        if (rng.uniform01() < spec.phi) std::swap(ranked[pos], ranked[pos + 1]);
      }
      entries.push_back({draw_weight(), TopList(n, std::move(ranked))});
    }
  }
  return VotingProfile(n, std::move(entries));
}

}  // namespace topagg
