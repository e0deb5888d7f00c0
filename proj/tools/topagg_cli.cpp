// Command-line tool for aggregating top-lists.
//
//   topagg solve --algo exact --input instance.toplist
//   topagg eval  --input instance.toplist --ranking "1 2 3 4"
//   topagg stats --input instance.toplist
//   topagg gen   --model uniform --n 8 --k 4 --lists 10 --seed 1 --out f.toplist
//   topagg bench --algos footrule,borda --n 7 --k 3 --lists 8 --trials 50

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "topagg/cli.hpp"
#include "topagg/topagg.hpp"

namespace {

void write_file_or_stdout(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw topagg::ArgumentError("cannot open output file: " + path);
  out << data;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    if (end > pos) parts.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aggregates weighted top-lists into one full ranking"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Run one aggregation algorithm");
  std::string solve_algo;
  std::string solve_input;
  std::uint64_t solve_seed = 0;
  std::string solve_epsilon, solve_eta = "1";
  std::optional<double> solve_u;
  solve->add_option("--algo", solve_algo,
                    "footrule|randomsort|borda|score-borda|score-ptas|"
                    "score-adjust|exact")
      ->required();
  solve->add_option("--input", solve_input, "instance file")->required();
  solve->add_option("--seed", solve_seed, "seed for randomized algorithms");
  solve->add_option("--epsilon", solve_epsilon,
                    "error parameter (rational, e.g. 3 or 1/2)");
  solve->add_option("--eta", solve_eta, "bucket width for score-borda");
  solve->add_option("--u", solve_u, "explicit partition shift in [0,1)");

  // eval
  auto* eval = app.add_subcommand("eval", "Cost of a given ranking");
  std::string eval_input, eval_ranking;
  eval->add_option("--input", eval_input, "instance file")->required();
  eval->add_option("--ranking", eval_ranking, "1-based ranking, e.g. \"2 1 3\"")
      ->required();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Scores and average ranks");
  std::string stats_input;
  stats_cmd->add_option("--input", stats_input, "instance file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  topagg::GenArgs gen_args;
  std::string gen_out;
  int gen_k = 1, gen_k_max = 0;
  double gen_phi = -1.0;
  gen->add_option("--model", gen_args.model, "uniform|planted");
  gen->add_option("--n", gen_args.candidate_count, "candidates")->required();
  gen->add_option("--k", gen_k, "list length (or minimum)")->required();
  gen->add_option("--k-max", gen_k_max, "maximum list length");
  gen->add_option("--lists", gen_args.list_count, "number of lists")
      ->required();
  gen->add_option("--weight-max", gen_args.weight_max, "maximum weight");
  gen->add_option("--phi", gen_phi, "swap noise of the planted model");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_out, "output file (stdout if omitted)");

  // bench
  auto* bench = app.add_subcommand("bench", "Approximation-ratio benchmark");
  std::string bench_algos;
  topagg::BenchConfig bench_config;
  std::string bench_epsilon = "1", bench_eta = "1";
  std::string bench_out;
  bench->add_option("--algos", bench_algos, "comma-separated algorithms")
      ->required();
  bench->add_option("--n", bench_config.candidate_count, "candidates");
  bench->add_option("--k", bench_config.list_length, "list length");
  bench->add_option("--lists", bench_config.list_count, "lists per instance");
  bench->add_option("--trials", bench_config.trials, "number of instances");
  bench->add_option("--seeds-per-trial", bench_config.seeds_per_trial,
                    "seeds per randomized algorithm");
  bench->add_option("--epsilon", bench_epsilon, "error parameter");
  bench->add_option("--eta", bench_eta, "bucket width for score-borda");
  bench->add_option("--seed", bench_config.base_seed, "base instance seed");
  bench->add_option("--oracle-cap", bench_config.oracle_cap,
                    "run the exact oracle up to this size");
  bench->add_option("--out", bench_out, "CSV file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? topagg::kExitSuccess : topagg::kExitUsage;
  }

  // Flags whose presence depends on another flag's value; their absence is a
  // usage error like any other missing flag.
  if (*solve && (solve_algo == "score-adjust" || solve_algo == "score-ptas") &&
      solve_epsilon.empty()) {
    std::cerr << "usage: --epsilon is required for " << solve_algo << "\n";
    return topagg::kExitUsage;
  }
  if (*gen && gen_args.model == "planted" && gen_phi < 0.0) {
    std::cerr << "usage: --phi is required for the planted model\n";
    return topagg::kExitUsage;
  }

  try {
    if (*solve) {
      topagg::SolveArgs args;
      args.algorithm = solve_algo;
      args.seed = solve_seed;
      if (!solve_epsilon.empty()) {
        args.epsilon = topagg::parse_rational(solve_epsilon);
      }
      args.eta = topagg::parse_rational(solve_eta);
      args.u = solve_u;
      topagg::run_solve(args, topagg::load_profile(solve_input), std::cout);
    } else if (*eval) {
      topagg::EvalArgs args;
      args.ranking = eval_ranking;
      topagg::run_eval(args, topagg::load_profile(eval_input), std::cout);
    } else if (*stats_cmd) {
      topagg::run_stats(topagg::load_profile(stats_input), std::cout);
    } else if (*gen) {
      gen_args.min_list_length = gen_k;
      gen_args.max_list_length = gen_k_max;
      if (gen_phi >= 0.0) gen_args.phi = gen_phi;
      write_file_or_stdout(gen_out, topagg::run_gen(gen_args));
    } else if (*bench) {
      bench_config.algorithms = split_csv(bench_algos);
      bench_config.epsilon = topagg::parse_rational(bench_epsilon);
      bench_config.eta = topagg::parse_rational(bench_eta);
      const topagg::BenchOutput output = topagg::run_bench(bench_config);
      write_file_or_stdout(bench_out, topagg::bench_csv(output.records));
      topagg::write_bench_summary(output,
                                  bench_out.empty() ? std::cerr : std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return topagg::kExitData;
  }
  return topagg::kExitSuccess;
}
