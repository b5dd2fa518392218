#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schoolmatch/harness.hpp"
#include "schoolmatch/oracle.hpp"

namespace {

using namespace schoolmatch;

struct CommonFlags {
  std::string scenario = "A";
  std::string algorithm = "da-stb";
  std::string post = "none";
  std::string strategy = "none";
  double fraction = 0.5;
  int experiments = 1000;
  std::uint64_t seed = 1;
  int best_of = 1;
  int threads = 0;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f, int default_experiments) {
  f.experiments = default_experiments;
  cmd->add_option("--scenario", f.scenario,
                  "builtin scenario (A-D) or scenario file path");
  cmd->add_option("--algorithm", f.algorithm,
                  "boston-stb | boston-mtb | da-stb | da-mtb | zeeburg");
  cmd->add_option("--post", f.post, "post-optimizer: none | pe | pem");
  cmd->add_option("--strategy", f.strategy,
                  "misreport strategy: none | cautious | gambling");
  cmd->add_option("--fraction", f.fraction,
                  "strategist share when a strategy is set");
  cmd->add_option("--experiments", f.experiments, "number of experiments");
  cmd->add_option("--seed", f.seed, "base seed");
  cmd->add_option("--threads", f.threads, "worker threads (0 = auto)");
  cmd->add_option("--format", f.format, "output format: csv | json");
  cmd->add_option("--out", f.out, "output file path")->required();
}

ExperimentConfig to_config(const CommonFlags& f) {
  ExperimentConfig cfg;
  cfg.scenario = f.scenario;
  cfg.algorithm = parse_algorithm(f.algorithm);
  cfg.post = parse_post(f.post);
  cfg.strategy = parse_strategy(f.strategy);
  cfg.fraction = cfg.strategy == StrategyKind::Honest ? 0.0 : f.fraction;
  cfg.experiments = f.experiments;
  cfg.base_seed = f.seed;
  cfg.best_of = f.best_of;
  cfg.threads = f.threads;
  cfg.validate();
  return cfg;
}

void write_instance(std::ostream& out, const Problem& problem,
                    const PreferenceSet& prefs) {
  out << "schools " << problem.num_schools << "\n";
  out << "capacities";
  for (int c : problem.capacities) out << " " << c;
  out << "\n";
  out << "pupils " << problem.num_pupils << "\n";
  for (const auto& pref : prefs) {
    out << "ranking";
    for (int school : pref.ranking) out << " " << school + 1;
    out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"school choice mechanisms: Monte-Carlo comparison harness"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  auto* run_cmd = app.add_subcommand(
      "run", "mechanism sweep: per-experiment rank reports plus summary");
  add_common(run_cmd, run_flags, 1000);
  run_cmd->add_option("--best-of", run_flags.best_of,
                      "tie-break replicas per experiment, best final Q kept");

  CommonFlags sens_flags;
  auto* sens_cmd = app.add_subcommand(
      "sensitivity",
      "tie-breaker sensitivity: same dataset solved with two lotteries");
  add_common(sens_cmd, sens_flags, 1000);

  CommonFlags strat_flags;
  auto* strat_cmd = app.add_subcommand(
      "strategy",
      "strategic vs honest outcomes against an all-honest reference");
  add_common(strat_cmd, strat_flags, 100);

  std::string oracle_instance;
  std::int64_t oracle_max_nodes = 10'000'000;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustive minimum average rank on an instance file");
  oracle_cmd->add_option("--instance", oracle_instance, "instance file path")
      ->required();
  oracle_cmd->add_option("--max-nodes", oracle_max_nodes,
                         "refuse searches larger than this");

  std::string complete_instance;
  std::string complete_out;
  auto* complete_cmd = app.add_subcommand(
      "complete", "extend partial rankings to full permutations");
  complete_cmd
      ->add_option("--instance", complete_instance, "instance file path")
      ->required();
  complete_cmd->add_option("--out", complete_out,
                           "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      const ExperimentConfig cfg = to_config(run_flags);
      const MatrixResult result = run_matrix(cfg);
      emit_run(result, parse_format(run_flags.format), run_flags.out);
      std::cout << "experiments " << result.summary.experiments << "\n"
                << "mean_q " << result.summary.mean_q << "\n"
                << "std_q " << result.summary.std_q << "\n";
    } else if (sens_cmd->parsed()) {
      const ExperimentConfig cfg = to_config(sens_flags);
      const SensitivityResult result = sensitivity_study(cfg);
      emit_sensitivity(result, parse_format(sens_flags.format),
                       sens_flags.out);
      std::cout << "experiments " << result.summary.experiments << "\n"
                << "mean_differences " << result.summary.mean_differences
                << "\n"
                << "mean_dq " << result.summary.mean_dq << "\n";
    } else if (strat_cmd->parsed()) {
      const ExperimentConfig cfg = to_config(strat_flags);
      const StrategyResult result = strategy_study(cfg);
      emit_strategy(result, parse_format(strat_flags.format), strat_flags.out);
      std::cout << "experiments " << result.summary.experiments << "\n"
                << "mean_q_strategists " << result.summary.mean_q_strategists
                << "\n"
                << "mean_q_honest " << result.summary.mean_q_honest << "\n";
    } else if (oracle_cmd->parsed()) {
      const InstanceFile file = load_instance_file(oracle_instance);
      PreferenceSet prefs(file.rankings.size());
      for (size_t i = 0; i < file.rankings.size(); ++i)
        prefs[i].ranking = file.rankings[i];
      const OracleResult result =
          optimal_q(file.problem, prefs, oracle_max_nodes);
      std::cout << "q_min " << result.q_min << "\n"
                << "rank_sum " << result.rank_sum << "\n";
      std::cout << "assignment";
      for (int school : result.best.assignment)
        std::cout << " " << school + 1;
      std::cout << "\n";
    } else if (complete_cmd->parsed()) {
      const InstanceFile file = load_instance_file(complete_instance);
      const PreferenceSet completed =
          complete_preferences(file.rankings, file.problem);
      if (complete_out.empty()) {
        write_instance(std::cout, file.problem, completed);
      } else {
        std::ofstream out(complete_out, std::ios::binary);
        if (!out) throw IoError("cannot write " + complete_out);
        write_instance(out, file.problem, completed);
        out.flush();
        if (!out) throw IoError("write failed for " + complete_out);
      }
    }
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
