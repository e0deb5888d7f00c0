// Benchmark harness: generates instances, runs the requested algorithms,
// compares against the exact oracle where it is affordable, and emits the
// records as CSV plus a per-algorithm ratio summary.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topagg/algorithms.hpp"
#include "topagg/distance.hpp"
#include "topagg/errors.hpp"
#include "topagg/exact.hpp"
#include "topagg/io.hpp"
#include "topagg/rational.hpp"

namespace topagg {

struct BenchRecord {
  int instance_id = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::optional<Rational> epsilon;
  std::optional<Rational> eta;
  Rational cost;
  std::optional<Rational> opt_cost;
  std::optional<double> ratio;
  std::int64_t wall_time_micros = 0;
};

struct BenchConfig {
  std::vector<std::string> algorithms;
  CandidateId candidate_count = 6;
  int list_length = 3;
  int list_count = 8;
  int trials = 10;
  int seeds_per_trial = 1;  // applies to the randomized algorithms
  Rational epsilon = 1;
  Rational eta = 1;
  std::uint64_t base_seed = 1;
  int oracle_cap = 16;  // exact cost is computed when n <= oracle_cap
};

struct BenchSummary {
  std::string algorithm;
  int records = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
};

struct BenchOutput {
  std::vector<BenchRecord> records;
  std::vector<BenchSummary> summary;
};

namespace internal {

inline bool algorithm_is_randomized(const std::string& name) {
  return name == "randomsort" || name == "score-borda" || name == "score-ptas";
}

inline FullRanking run_algorithm(const std::string& name,
                                 const VotingProfile& profile,
                                 const Rational& epsilon, const Rational& eta,
                                 Seed seed) {
  if (name == "footrule") return footrule_plus(profile);
  if (name == "borda") return borda_plus(profile).ranking;
  if (name == "randomsort") return random_sort(profile, seed).ranking;
  if (name == "score-borda") {
    PartitionParams params;
    params.eta = eta;
    params.seed = seed;
    return score_then_borda(profile, params).ranking;
  }
  if (name == "score-adjust") return score_then_adjust(profile, epsilon);
  if (name == "score-ptas") {
    return score_then_ptas(profile, epsilon, seed).ranking;
  }
  if (name == "exact") return optimal_subset_dp(profile).ranking;
  throw ArgumentError("unknown algorithm: " + name);
}

}  // namespace internal

inline BenchOutput run_bench(const BenchConfig& config) {
  if (config.algorithms.empty()) throw ArgumentError("no algorithms selected");
  if (config.trials < 1) throw ArgumentError("need at least one trial");
  if (config.seeds_per_trial < 1) throw ArgumentError("need at least one seed");
  if (config.oracle_cap > kSubsetDpCap) {
    throw ArgumentError("oracle cap exceeds the subset dp cap");
  }

  BenchOutput output;
  for (int trial = 0; trial < config.trials; ++trial) {
    GeneratorSpec spec;
    spec.model = GeneratorModel::uniform;
    spec.candidate_count = config.candidate_count;
    spec.min_list_length = config.list_length;
    spec.max_list_length = config.list_length;
    spec.list_count = config.list_count;
    spec.seed = Seed{config.base_seed + static_cast<std::uint64_t>(trial)};
    const VotingProfile profile = generate(spec);

    std::optional<Rational> opt_cost;
    if (config.candidate_count <= config.oracle_cap) {
      opt_cost = optimal_subset_dp(profile, config.oracle_cap).cost;
    }

    for (const std::string& algorithm : config.algorithms) {
      const bool randomized = internal::algorithm_is_randomized(algorithm);
      const int seeds = randomized ? config.seeds_per_trial : 1;
      for (int seed_index = 0; seed_index < seeds; ++seed_index) {
        BenchRecord record;
        record.instance_id = trial;
        record.algorithm = algorithm;
        record.seed = static_cast<std::uint64_t>(seed_index);
        if (algorithm == "score-adjust" || algorithm == "score-ptas") {
          record.epsilon = config.epsilon;
        }
        if (algorithm == "score-borda") record.eta = config.eta;

        const auto start = std::chrono::steady_clock::now();
        const FullRanking ranking = internal::run_algorithm(
            algorithm, profile, config.epsilon, config.eta,
            Seed{record.seed});
        const auto stop = std::chrono::steady_clock::now();
        record.wall_time_micros =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
                .count();
        record.cost = kendall_profile(ranking, profile);
        record.opt_cost = opt_cost;
        if (opt_cost && *opt_cost > 0) {
          record.ratio = to_double(record.cost / *opt_cost);
        } else if (opt_cost && record.cost == 0) {
          record.ratio = 1.0;  // optimum zero and achieved
        }
        output.records.push_back(std::move(record));
      }
    }
  }

  // Records are already in deterministic (instance, algorithm, seed) order.
  for (const std::string& algorithm : config.algorithms) {
    BenchSummary summary;
    summary.algorithm = algorithm;
    double sum = 0.0;
    for (const BenchRecord& record : output.records) {
      if (record.algorithm != algorithm || !record.ratio) continue;
      ++summary.records;
      sum += *record.ratio;
      summary.max_ratio = std::max(summary.max_ratio, *record.ratio);
    }
    if (summary.records > 0) summary.mean_ratio = sum / summary.records;
    output.summary.push_back(std::move(summary));
  }
  return output;
}

inline std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::string out =
      "instance,algorithm,seed,epsilon,eta,cost,opt_cost,ratio,wall_time_micros\n";
  char buf[64];
  for (const BenchRecord& record : records) {
    out += std::to_string(record.instance_id);
    out += ',';
    out += record.algorithm;
    out += ',';
    out += std::to_string(record.seed);
    out += ',';
    if (record.epsilon) out += fraction_string(*record.epsilon);
    out += ',';
    if (record.eta) out += fraction_string(*record.eta);
    out += ',';
    out += fraction_string(record.cost);
    out += ',';
    if (record.opt_cost) out += fraction_string(*record.opt_cost);
    out += ',';
    if (record.ratio) {
      std::snprintf(buf, sizeof(buf), "%.6g", *record.ratio);
      out += buf;
    }
    out += ',';
    out += std::to_string(record.wall_time_micros);
    out += '\n';
  }
  return out;
}

}  // namespace topagg
