// Command implementations behind the command-line tool. Each command is a
// pure function of its arguments writing to the given stream, so the whole
// surface is testable without spawning processes.
//
// Exit codes: 0 success, 1 usage error, 2 data error (bad input file,
// capacity overflow, invalid combination of values).

#pragma once

#include <fstream>
#include <ostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "topagg/algorithms.hpp"
#include "topagg/bench.hpp"
#include "topagg/distance.hpp"
#include "topagg/errors.hpp"
#include "topagg/exact.hpp"
#include "topagg/io.hpp"
#include "topagg/rational.hpp"

namespace topagg {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Accepts "3", "1/2" and plain decimals like "0.25".
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const auto num = internal::parse_int(text.substr(0, slash));
    const auto den = internal::parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) {
      throw ArgumentError("cannot parse rational: " + text);
    }
    return Rational(*num, *den);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto scaled = internal::parse_int(digits);
    if (!scaled || text.size() - dot - 1 > 18) {
      throw ArgumentError("cannot parse rational: " + text);
    }
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(BigInt(*scaled), den);
  }
  const auto value = internal::parse_int(text);
  if (!value) throw ArgumentError("cannot parse rational: " + text);
  return Rational(*value);
}

inline VotingProfile load_profile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str());
}

// --- solve ------------------------------------------------------------

struct SolveArgs {
  std::string algorithm;  // footrule|randomsort|borda|score-borda|score-ptas|
                          // score-adjust|exact
  std::uint64_t seed = 0;
  std::optional<Rational> epsilon;
  Rational eta = 1;
  std::optional<double> u;
};

inline void run_solve(const SolveArgs& args, const VotingProfile& profile,
                      std::ostream& out) {
  const auto need_epsilon = [&]() -> const Rational& {
    if (!args.epsilon) {
      throw ArgumentError("--epsilon is required for " + args.algorithm);
    }
    return *args.epsilon;
  };

  FullRanking ranking = FullRanking::identity(profile.candidate_count());
  if (args.algorithm == "footrule") {
    ranking = footrule_plus(profile);
  } else if (args.algorithm == "randomsort") {
    ranking = random_sort(profile, Seed{args.seed}).ranking;
  } else if (args.algorithm == "borda") {
    ranking = borda_plus(profile).ranking;
  } else if (args.algorithm == "score-borda") {
    PartitionParams params;
    params.eta = args.eta;
    params.seed = Seed{args.seed};
    params.u = args.u;
    ranking = score_then_borda(profile, params).ranking;
  } else if (args.algorithm == "score-ptas") {
    ranking = score_then_ptas(profile, need_epsilon(), Seed{args.seed},
                              make_exact_interval_solver(), args.u)
                  .ranking;
  } else if (args.algorithm == "score-adjust") {
    ranking = score_then_adjust(profile, need_epsilon());
  } else if (args.algorithm == "exact") {
    ranking = optimal_subset_dp(profile).ranking;
  } else {
    throw ArgumentError("unknown algorithm: " + args.algorithm);
  }

  out << serialize_ranking(ranking) << "\n";
  out << format_cost(kendall_profile(ranking, profile)) << "\n";
}

// --- eval -------------------------------------------------------------

struct EvalArgs {
  std::string ranking;  // 1-based ids, e.g. "1 2 3 4"
};

inline void run_eval(const EvalArgs& args, const VotingProfile& profile,
                     std::ostream& out) {
  const FullRanking ranking =
      parse_ranking(args.ranking, profile.candidate_count());
  out << format_cost(kendall_profile(ranking, profile)) << "\n";
  out << "footrule " << format_cost(footrule_profile(ranking, profile))
      << "\n";
}

// --- stats ------------------------------------------------------------

inline void run_stats(const VotingProfile& profile, std::ostream& out) {
  const CandidateStats s = stats(profile);
  out << "candidate score avg_rank\n";
  for (CandidateId c = 0; c < s.candidate_count(); ++c) {
    out << (c + 1) << ' ' << s.score_weight(c).str() << '/'
        << s.total_weight().str() << ' ';
    const auto average = s.average_rank(c);
    out << (average ? fraction_string(*average) : "-") << "\n";
  }
}

// --- gen --------------------------------------------------------------

struct GenArgs {
  std::string model = "uniform";  // uniform|planted
  CandidateId candidate_count = 1;
  int min_list_length = 1;
  int max_list_length = 0;  // 0 means "same as min"
  int list_count = 1;
  std::uint64_t weight_max = 1;
  std::optional<double> phi;
  std::uint64_t seed = 0;
};

inline std::string run_gen(const GenArgs& args) {
  GeneratorSpec spec;
  if (args.model == "uniform") {
    spec.model = GeneratorModel::uniform;
  } else if (args.model == "planted") {
    spec.model = GeneratorModel::planted;
    if (!args.phi) throw ArgumentError("--phi is required for planted");
  } else {
    throw ArgumentError("unknown model: " + args.model);
  }
  spec.candidate_count = args.candidate_count;
  spec.min_list_length = args.min_list_length;
  spec.max_list_length =
      args.max_list_length > 0 ? args.max_list_length : args.min_list_length;
  spec.list_count = args.list_count;
  spec.weight_max = args.weight_max;
  spec.phi = args.phi.value_or(0.0);
  spec.seed = Seed{args.seed};
  return serialize_profile(generate(spec));
}

// --- bench ------------------------------------------------------------

inline void write_bench_summary(const BenchOutput& output, std::ostream& out) {
  out << "algorithm records max_ratio mean_ratio\n";
  char buf[64];
  for (const BenchSummary& row : output.summary) {
    out << row.algorithm << ' ' << row.records << ' ';
    std::snprintf(buf, sizeof(buf), "%.6g %.6g", row.max_ratio,
                  row.mean_ratio);
    out << buf << "\n";
  }
}

}  // namespace topagg
