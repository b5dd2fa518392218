#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "schoolmatch/core.hpp"
#include "schoolmatch/exchange.hpp"
#include "schoolmatch/scenarios.hpp"
#include "schoolmatch/zeeburg.hpp"

namespace schoolmatch {

// File could not be opened, read, or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Algorithm { BostonStb, BostonMtb, DaStb, DaMtb, Zeeburg };
enum class PostOpt { None, Pe, Pem };
enum class OutputFormat { Csv, Json };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);
std::string post_name(PostOpt p);
PostOpt parse_post(const std::string& name);
std::string strategy_name(StrategyKind k);
StrategyKind parse_strategy(const std::string& name);
OutputFormat parse_format(const std::string& name);

// Every random draw belongs to a role-tagged stream derived from
// (base_seed, experiment, role, index); adding a new study or raising
// best_of never shifts the draws of an existing stream.
enum class StreamRole : std::uint64_t {
  Dataset = 1,
  TieBreak = 2,
  TieBreakSecond = 3,
  StrategistMask = 4,
  BestOf = 5,
};

Rng make_stream(std::uint64_t base_seed, int experiment, StreamRole role,
                int index = 0);

// A problem plus the demand model that generates preferences for it.
struct ScenarioSpec {
  Problem problem;
  Scenario scenario;
};

// Accepts a builtin scenario name (A, B, C, D) or a scenario file path.
ScenarioSpec resolve_scenario(const std::string& name_or_path);
ScenarioSpec parse_scenario_file(std::istream& in, const std::string& context);

// Instance file: problem plus one (possibly partial) ranking per pupil,
// converted to 0-based school ids.
struct InstanceFile {
  Problem problem;
  std::vector<std::vector<int>> rankings;
};
InstanceFile parse_instance_file(std::istream& in, const std::string& context);
InstanceFile load_instance_file(const std::string& path);

struct ExperimentConfig {
  std::string scenario = "A";
  Algorithm algorithm = Algorithm::DaStb;
  PostOpt post = PostOpt::None;
  StrategyKind strategy = StrategyKind::Honest;
  double fraction = 0.0;   // strategist share when strategy is active
  int experiments = 1000;
  std::uint64_t base_seed = 1;
  int best_of = 1;  // independent tie-break replicas, best final Q kept
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct ExperimentRecord {
  int experiment = 0;
  std::uint64_t seed = 0;  // dataset stream seed
  double q = 0.0;          // against true preferences
  std::vector<int> histogram;
  std::vector<double> cumulative;
  int tiebreak_uses = 0;  // zeeburg only, 0 otherwise
  int swaps = 0;          // post-optimizer only, 0 otherwise
};

struct RunSummary {
  int experiments = 0;
  double mean_q = 0.0;
  double std_q = 0.0;  // sample standard deviation across experiments
  std::vector<double> mean_cumulative;
  std::vector<double> std_cumulative;
};

struct MatrixResult {
  std::vector<ExperimentRecord> records;
  RunSummary summary;
};

// Called per experiment with the submitted preferences and final solution.
// Setting an observer forces serial execution so callbacks arrive in
// experiment order.
using ExperimentObserver =
    std::function<void(const ExperimentRecord&, const Problem&,
                       const PreferenceSet& submitted, const Solution&)>;

// Monte-Carlo sweep: per experiment, generate a dataset, apply strategy
// transforms, run the algorithm (best_of tie-break replicas, keeping the
// replica whose post-optimized Q is smallest), post-optimize, and evaluate
// against the true preferences. Deterministic given the config.
MatrixResult run_matrix(const ExperimentConfig& config,
                        const ExperimentObserver& observer = {});

struct SensitivityRecord {
  int experiment = 0;
  std::uint64_t seed = 0;
  int differences = 0;  // pupils assigned differently between the two runs
  double q_first = 0.0;
  double q_second = 0.0;
};

struct SensitivitySummary {
  int experiments = 0;
  double mean_differences = 0.0;
  double std_differences = 0.0;
  double mean_dq = 0.0;  // q_second - q_first
  double std_dq = 0.0;
  double mean_abs_dq = 0.0;
};

struct SensitivityResult {
  std::vector<SensitivityRecord> records;
  SensitivitySummary summary;
};

// Tie-breaker sensitivity: the same dataset solved twice with independent
// lotteries; best_of is ignored.
SensitivityResult sensitivity_study(const ExperimentConfig& config);

struct StrategyRecord {
  int experiment = 0;
  std::uint64_t seed = 0;
  int strategist_count = 0;
  // True-rank means per group in the strategic run...
  double q_strategists = 0.0;
  double q_honest = 0.0;
  // ...and for the same pupils in the all-honest reference run.
  double q_ref_strategists = 0.0;
  double q_ref_honest = 0.0;
  // Fraction of each group that got their true first choice.
  double rank1_strategists = 0.0;
  double rank1_honest = 0.0;
  double rank1_ref_strategists = 0.0;
  double rank1_ref_honest = 0.0;
};

struct StrategySummary {
  int experiments = 0;
  double mean_q_strategists = 0.0;
  double std_q_strategists = 0.0;
  double mean_q_honest = 0.0;
  double std_q_honest = 0.0;
  double mean_q_ref_strategists = 0.0;
  double mean_q_ref_honest = 0.0;
  double mean_rank1_strategists = 0.0;
  double mean_rank1_honest = 0.0;
  double mean_rank1_ref_strategists = 0.0;
  double mean_rank1_ref_honest = 0.0;
  std::vector<double> cum_strategists;  // mean cumulative true-rank curves
  std::vector<double> cum_honest;
};

struct StrategyResult {
  std::vector<StrategyRecord> records;
  StrategySummary summary;
};

// Strategic vs honest outcomes: each experiment runs the strategic
// submission and an all-honest reference on the same dataset and lottery,
// reporting true-rank statistics per group. Requires an active strategy.
StrategyResult strategy_study(const ExperimentConfig& config);

// Writers. CSV puts records in `path` and the summary in a sibling file
// (insert ".summary" before the extension); JSON puts records and summary
// in one file. Numbers use shortest round-trip formatting, so identical
// inputs yield byte-identical files.
std::string summary_path(const std::string& path);
void emit_run(const MatrixResult& result, OutputFormat format,
              const std::string& path);
void emit_sensitivity(const SensitivityResult& result, OutputFormat format,
                      const std::string& path);
void emit_strategy(const StrategyResult& result, OutputFormat format,
                   const std::string& path);

}  // namespace schoolmatch
