#include "schoolmatch/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "schoolmatch/mechanisms.hpp"

namespace schoolmatch {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

template <typename Int>
std::string fmt_int(Int v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

long long parse_int_token(const std::string& token, const std::string& context) {
  long long value = 0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw ValidationError(context + ": expected an integer, got '" + token +
                          "'");
  return value;
}

double parse_double_token(const std::string& token,
                          const std::string& context) {
  double value = 0.0;
  const auto res =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw ValidationError(context + ": expected a number, got '" + token +
                          "'");
  return value;
}

// Keyword lines with '#' comments; blank lines ignored.
std::vector<std::vector<std::string>> read_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream split(raw);
    std::vector<std::string> tokens;
    std::string token;
    while (split >> token) tokens.push_back(token);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

TieBreakMode mode_for(Algorithm a) {
  return a == Algorithm::BostonMtb || a == Algorithm::DaMtb
             ? TieBreakMode::Multiple
             : TieBreakMode::Single;
}

Solution run_algorithm(Algorithm a, const Problem& problem,
                       const PreferenceSet& prefs, const TieBreaker& tb,
                       int* tiebreak_uses) {
  switch (a) {
    case Algorithm::BostonStb:
    case Algorithm::BostonMtb:
      return boston(problem, prefs, tb);
    case Algorithm::DaStb:
    case Algorithm::DaMtb:
      return deferred_acceptance(problem, prefs, tb);
    case Algorithm::Zeeburg: {
      ZeeburgResult z = zeeburg(problem, prefs, tb);
      if (tiebreak_uses) *tiebreak_uses = z.tiebreak_uses;
      return std::move(z.solution);
    }
  }
  throw ValidationError("unknown algorithm");
}

// One mechanism run including the post-optimizer, on already-submitted
// preferences.
Solution run_with_post(const ExperimentConfig& cfg, const Problem& problem,
                       const PreferenceSet& submitted, const TieBreaker& tb,
                       int* tiebreak_uses, int* swaps) {
  Solution sol =
      run_algorithm(cfg.algorithm, problem, submitted, tb, tiebreak_uses);
  if (cfg.post != PostOpt::None) {
    const auto variant = cfg.post == PostOpt::Pe ? ExchangeVariant::PE
                                                 : ExchangeVariant::PEM;
    ExchangeResult ex = pairwise_exchange(problem, submitted, sol, variant);
    if (swaps) *swaps = ex.swaps;
    sol = std::move(ex.solution);
  }
  return sol;
}

struct ExperimentInputs {
  std::uint64_t dataset_seed = 0;
  PreferenceSet true_prefs;
  PreferenceSet submitted;
  std::vector<char> mask;
};

ExperimentInputs prepare_inputs(const ExperimentConfig& cfg,
                                const ScenarioSpec& spec, int e) {
  ExperimentInputs in;
  in.dataset_seed = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(e),
                                static_cast<std::uint64_t>(StreamRole::Dataset));
  Rng data_rng(in.dataset_seed);
  in.true_prefs = generate_dataset(spec.problem, spec.scenario, data_rng);
  in.mask.assign(spec.problem.num_pupils, 0);
  if (cfg.strategy != StrategyKind::Honest) {
    Rng mask_rng =
        make_stream(cfg.base_seed, e, StreamRole::StrategistMask);
    in.mask = strategist_mask(spec.problem.num_pupils, cfg.fraction, mask_rng);
    in.submitted = apply_strategy(cfg.strategy, in.true_prefs, in.mask,
                                  spec.scenario.average_weights());
  } else {
    in.submitted = in.true_prefs;
  }
  return in;
}

ExperimentRecord run_single(const ExperimentConfig& cfg,
                            const ScenarioSpec& spec, int e,
                            PreferenceSet* submitted_out,
                            Solution* solution_out) {
  ExperimentInputs in = prepare_inputs(cfg, spec, e);
  const TieBreakMode mode = mode_for(cfg.algorithm);

  ExperimentRecord best;
  Solution best_sol;
  for (int replica = 0; replica < cfg.best_of; ++replica) {
    Rng tb_rng = replica == 0
                     ? make_stream(cfg.base_seed, e, StreamRole::TieBreak)
                     : make_stream(cfg.base_seed, e, StreamRole::BestOf,
                                   replica);
    const TieBreaker tb = make_tiebreaker(mode, spec.problem, tb_rng);
    int uses = 0;
    int swaps = 0;
    Solution sol =
        run_with_post(cfg, spec.problem, in.submitted, tb, &uses, &swaps);
    const RankReport report = evaluate(spec.problem, in.true_prefs, sol);
    if (replica == 0 || report.average_rank < best.q) {
      best.q = report.average_rank;
      best.histogram = report.histogram;
      best.cumulative = report.cumulative;
      best.tiebreak_uses = uses;
      best.swaps = swaps;
      best_sol = std::move(sol);
    }
  }
  best.experiment = e;
  best.seed = in.dataset_seed;
  if (submitted_out) *submitted_out = std::move(in.submitted);
  if (solution_out) *solution_out = std::move(best_sol);
  return best;
}

void parallel_for(int count, int threads,
                  const std::function<void(int)>& body) {
  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double acc = 0.0;
  for (double x : xs) acc += (x - mean) * (x - mean);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

RunSummary summarize(const std::vector<ExperimentRecord>& records) {
  RunSummary s;
  s.experiments = static_cast<int>(records.size());
  if (records.empty()) return s;
  std::vector<double> qs(records.size());
  for (size_t i = 0; i < records.size(); ++i) qs[i] = records[i].q;
  s.mean_q = mean_of(qs);
  s.std_q = sample_std(qs, s.mean_q);
  const size_t m = records.front().cumulative.size();
  s.mean_cumulative.assign(m, 0.0);
  s.std_cumulative.assign(m, 0.0);
  std::vector<double> point(records.size());
  for (size_t k = 0; k < m; ++k) {
    for (size_t i = 0; i < records.size(); ++i)
      point[i] = records[i].cumulative[k];
    s.mean_cumulative[k] = mean_of(point);
    s.std_cumulative[k] = sample_std(point, s.mean_cumulative[k]);
  }
  return s;
}

void open_for_write(std::ofstream& out, const std::string& path) {
  out.open(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
}

void finish_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out;
  open_for_write(out, path);
  out << text;
  finish_write(out, path);
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::BostonStb: return "boston-stb";
    case Algorithm::BostonMtb: return "boston-mtb";
    case Algorithm::DaStb: return "da-stb";
    case Algorithm::DaMtb: return "da-mtb";
    case Algorithm::Zeeburg: return "zeeburg";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "boston-stb" || name == "boston") return Algorithm::BostonStb;
  if (name == "boston-mtb") return Algorithm::BostonMtb;
  if (name == "da-stb") return Algorithm::DaStb;
  if (name == "da-mtb") return Algorithm::DaMtb;
  if (name == "zeeburg") return Algorithm::Zeeburg;
  throw ValidationError("unknown algorithm: " + name);
}

std::string post_name(PostOpt p) {
  switch (p) {
    case PostOpt::None: return "none";
    case PostOpt::Pe: return "pe";
    case PostOpt::Pem: return "pem";
  }
  return "?";
}

PostOpt parse_post(const std::string& name) {
  if (name == "none") return PostOpt::None;
  if (name == "pe") return PostOpt::Pe;
  if (name == "pem") return PostOpt::Pem;
  throw ValidationError("unknown post-optimizer: " + name);
}

std::string strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::Honest: return "none";
    case StrategyKind::Cautious: return "cautious";
    case StrategyKind::Gambling: return "gambling";
  }
  return "?";
}

StrategyKind parse_strategy(const std::string& name) {
  if (name == "none" || name == "honest") return StrategyKind::Honest;
  if (name == "cautious") return StrategyKind::Cautious;
  if (name == "gambling") return StrategyKind::Gambling;
  throw ValidationError("unknown strategy: " + name);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ValidationError("unknown format: " + name);
}

Rng make_stream(std::uint64_t base_seed, int experiment, StreamRole role,
                int index) {
  return Rng(derive_seed(base_seed, static_cast<std::uint64_t>(experiment),
                         static_cast<std::uint64_t>(role),
                         static_cast<std::uint64_t>(index)));
}

ScenarioSpec resolve_scenario(const std::string& name_or_path) {
  if (name_or_path == "A" || name_or_path == "B" || name_or_path == "C" ||
      name_or_path == "D") {
    return {builtin_problem(), builtin_scenario(name_or_path)};
  }
  std::ifstream in(name_or_path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file " + name_or_path);
  return parse_scenario_file(in, name_or_path);
}

ScenarioSpec parse_scenario_file(std::istream& in,
                                 const std::string& context) {
  ScenarioSpec spec;
  bool saw_schools = false, saw_caps = false, saw_pupils = false;
  for (const auto& tokens : read_lines(in)) {
    const std::string& key = tokens[0];
    if (key == "schools") {
      if (tokens.size() != 2)
        throw ValidationError(context + ": schools takes one value");
      spec.problem.num_schools =
          static_cast<int>(parse_int_token(tokens[1], context));
      saw_schools = true;
    } else if (key == "capacities") {
      spec.problem.capacities.clear();
      for (size_t k = 1; k < tokens.size(); ++k)
        spec.problem.capacities.push_back(
            static_cast<int>(parse_int_token(tokens[k], context)));
      saw_caps = true;
    } else if (key == "pupils") {
      if (tokens.size() != 2)
        throw ValidationError(context + ": pupils takes one value");
      spec.problem.num_pupils =
          static_cast<int>(parse_int_token(tokens[1], context));
      saw_pupils = true;
    } else if (key == "population") {
      if (tokens.size() < 3)
        throw ValidationError(context +
                              ": population needs a fraction and weights");
      Population pop;
      pop.fraction = parse_double_token(tokens[1], context);
      for (size_t k = 2; k < tokens.size(); ++k)
        pop.weights.push_back(parse_double_token(tokens[k], context));
      spec.scenario.populations.push_back(std::move(pop));
    } else {
      throw ValidationError(context + ": unknown keyword '" + key + "'");
    }
  }
  if (!saw_schools || !saw_caps || !saw_pupils ||
      spec.scenario.populations.empty())
    throw ValidationError(
        context + ": needs schools, capacities, pupils and population lines");
  spec.problem.validate();
  spec.scenario.validate(spec.problem);
  return spec;
}

InstanceFile parse_instance_file(std::istream& in,
                                 const std::string& context) {
  InstanceFile file;
  bool saw_schools = false, saw_caps = false, saw_pupils = false;
  for (const auto& tokens : read_lines(in)) {
    const std::string& key = tokens[0];
    if (key == "schools") {
      if (tokens.size() != 2)
        throw ValidationError(context + ": schools takes one value");
      file.problem.num_schools =
          static_cast<int>(parse_int_token(tokens[1], context));
      saw_schools = true;
    } else if (key == "capacities") {
      file.problem.capacities.clear();
      for (size_t k = 1; k < tokens.size(); ++k)
        file.problem.capacities.push_back(
            static_cast<int>(parse_int_token(tokens[k], context)));
      saw_caps = true;
    } else if (key == "pupils") {
      if (tokens.size() != 2)
        throw ValidationError(context + ": pupils takes one value");
      file.problem.num_pupils =
          static_cast<int>(parse_int_token(tokens[1], context));
      saw_pupils = true;
    } else if (key == "ranking") {
      std::vector<int> ranking;
      for (size_t k = 1; k < tokens.size(); ++k) {
        const long long id = parse_int_token(tokens[k], context);
        if (id < 1 || id > file.problem.num_schools)
          throw ValidationError(context + ": school id " + tokens[k] +
                                " out of range");
        ranking.push_back(static_cast<int>(id - 1));
      }
      file.rankings.push_back(std::move(ranking));
    } else {
      throw ValidationError(context + ": unknown keyword '" + key + "'");
    }
  }
  if (!saw_schools || !saw_caps || !saw_pupils)
    throw ValidationError(context +
                          ": needs schools, capacities and pupils lines");
  file.problem.validate();
  if (static_cast<int>(file.rankings.size()) != file.problem.num_pupils)
    throw ValidationError(context + ": expected " +
                          fmt_int(file.problem.num_pupils) +
                          " ranking lines, got " +
                          fmt_int(file.rankings.size()));
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read instance file " + path);
  return parse_instance_file(in, path);
}

void ExperimentConfig::validate() const {
  if (experiments < 1) throw ValidationError("experiments must be >= 1");
  if (fraction < 0.0 || fraction > 1.0)
    throw ValidationError("fraction must lie in [0,1]");
  if (best_of < 1) throw ValidationError("best_of must be >= 1");
  if (threads < 0) throw ValidationError("threads must be >= 0");
}

MatrixResult run_matrix(const ExperimentConfig& config,
                        const ExperimentObserver& observer) {
  config.validate();
  const ScenarioSpec spec = resolve_scenario(config.scenario);

  MatrixResult out;
  out.records.resize(static_cast<size_t>(config.experiments));
  if (observer) {
    for (int e = 0; e < config.experiments; ++e) {
      PreferenceSet submitted;
      Solution sol;
      out.records[static_cast<size_t>(e)] =
          run_single(config, spec, e, &submitted, &sol);
      observer(out.records[static_cast<size_t>(e)], spec.problem, submitted,
               sol);
    }
  } else {
    parallel_for(config.experiments, config.threads, [&](int e) {
      out.records[static_cast<size_t>(e)] =
          run_single(config, spec, e, nullptr, nullptr);
    });
  }
  out.summary = summarize(out.records);
  return out;
}

SensitivityResult sensitivity_study(const ExperimentConfig& config) {
  config.validate();
  const ScenarioSpec spec = resolve_scenario(config.scenario);
  const TieBreakMode mode = mode_for(config.algorithm);

  SensitivityResult out;
  out.records.resize(static_cast<size_t>(config.experiments));
  parallel_for(config.experiments, config.threads, [&](int e) {
    ExperimentInputs in = prepare_inputs(config, spec, e);
    Rng tb_rng1 = make_stream(config.base_seed, e, StreamRole::TieBreak);
    Rng tb_rng2 = make_stream(config.base_seed, e, StreamRole::TieBreakSecond);
    const TieBreaker tb1 = make_tiebreaker(mode, spec.problem, tb_rng1);
    const TieBreaker tb2 = make_tiebreaker(mode, spec.problem, tb_rng2);
    const Solution sol1 =
        run_with_post(config, spec.problem, in.submitted, tb1, nullptr,
                      nullptr);
    const Solution sol2 =
        run_with_post(config, spec.problem, in.submitted, tb2, nullptr,
                      nullptr);
    SensitivityRecord rec;
    rec.experiment = e;
    rec.seed = in.dataset_seed;
    rec.differences = count_differences(sol1, sol2);
    rec.q_first = evaluate(spec.problem, in.true_prefs, sol1).average_rank;
    rec.q_second = evaluate(spec.problem, in.true_prefs, sol2).average_rank;
    out.records[static_cast<size_t>(e)] = rec;
  });

  auto& s = out.summary;
  s.experiments = static_cast<int>(out.records.size());
  std::vector<double> diffs, dqs, abs_dqs;
  diffs.reserve(out.records.size());
  dqs.reserve(out.records.size());
  abs_dqs.reserve(out.records.size());
  for (const auto& rec : out.records) {
    diffs.push_back(static_cast<double>(rec.differences));
    dqs.push_back(rec.q_second - rec.q_first);
    abs_dqs.push_back(std::abs(rec.q_second - rec.q_first));
  }
  s.mean_differences = mean_of(diffs);
  s.std_differences = sample_std(diffs, s.mean_differences);
  s.mean_dq = mean_of(dqs);
  s.std_dq = sample_std(dqs, s.mean_dq);
  s.mean_abs_dq = mean_of(abs_dqs);
  return out;
}

StrategyResult strategy_study(const ExperimentConfig& config) {
  config.validate();
  if (config.strategy == StrategyKind::Honest)
    throw ValidationError("strategy study needs an active strategy");
  const ScenarioSpec spec = resolve_scenario(config.scenario);
  const TieBreakMode mode = mode_for(config.algorithm);
  const int m = spec.problem.num_schools;

  StrategyResult out;
  out.records.resize(static_cast<size_t>(config.experiments));
  std::vector<std::vector<double>> cum_strat(
      static_cast<size_t>(config.experiments)),
      cum_honest(static_cast<size_t>(config.experiments));
  parallel_for(config.experiments, config.threads, [&](int e) {
    ExperimentInputs in = prepare_inputs(config, spec, e);
    Rng tb_rng = make_stream(config.base_seed, e, StreamRole::TieBreak);
    const TieBreaker tb = make_tiebreaker(mode, spec.problem, tb_rng);
    const Solution sol_strategic =
        run_with_post(config, spec.problem, in.submitted, tb, nullptr,
                      nullptr);
    const Solution sol_reference =
        run_with_post(config, spec.problem, in.true_prefs, tb, nullptr,
                      nullptr);
    const auto groups = true_rank_report(spec.problem, in.true_prefs,
                                         sol_strategic, in.mask);
    const auto ref_groups = true_rank_report(spec.problem, in.true_prefs,
                                             sol_reference, in.mask);
    StrategyRecord rec;
    rec.experiment = e;
    rec.seed = in.dataset_seed;
    rec.strategist_count = static_cast<int>(groups.first.ranks.size());
    rec.q_strategists = groups.first.average_rank;
    rec.q_honest = groups.second.average_rank;
    rec.q_ref_strategists = ref_groups.first.average_rank;
    rec.q_ref_honest = ref_groups.second.average_rank;
    auto share = [](const RankReport& r) {
      return r.cumulative.empty() ? 0.0 : r.cumulative.front();
    };
    rec.rank1_strategists = share(groups.first);
    rec.rank1_honest = share(groups.second);
    rec.rank1_ref_strategists = share(ref_groups.first);
    rec.rank1_ref_honest = share(ref_groups.second);
    out.records[static_cast<size_t>(e)] = rec;
    cum_strat[static_cast<size_t>(e)] = groups.first.cumulative;
    cum_honest[static_cast<size_t>(e)] = groups.second.cumulative;
  });

  auto& s = out.summary;
  s.experiments = static_cast<int>(out.records.size());
  std::vector<double> col(out.records.size());
  auto column = [&](double StrategyRecord::*field) -> std::vector<double>& {
    for (size_t i = 0; i < out.records.size(); ++i)
      col[i] = out.records[i].*field;
    return col;
  };
  s.mean_q_strategists = mean_of(column(&StrategyRecord::q_strategists));
  s.std_q_strategists = sample_std(col, s.mean_q_strategists);
  s.mean_q_honest = mean_of(column(&StrategyRecord::q_honest));
  s.std_q_honest = sample_std(col, s.mean_q_honest);
  s.mean_q_ref_strategists =
      mean_of(column(&StrategyRecord::q_ref_strategists));
  s.mean_q_ref_honest = mean_of(column(&StrategyRecord::q_ref_honest));
  s.mean_rank1_strategists =
      mean_of(column(&StrategyRecord::rank1_strategists));
  s.mean_rank1_honest = mean_of(column(&StrategyRecord::rank1_honest));
  s.mean_rank1_ref_strategists =
      mean_of(column(&StrategyRecord::rank1_ref_strategists));
  s.mean_rank1_ref_honest = mean_of(column(&StrategyRecord::rank1_ref_honest));
  s.cum_strategists.assign(static_cast<size_t>(m), 0.0);
  s.cum_honest.assign(static_cast<size_t>(m), 0.0);
  if (!out.records.empty()) {
    for (size_t e = 0; e < out.records.size(); ++e) {
      for (int k = 0; k < m; ++k) {
        s.cum_strategists[static_cast<size_t>(k)] +=
            cum_strat[e][static_cast<size_t>(k)];
        s.cum_honest[static_cast<size_t>(k)] +=
            cum_honest[e][static_cast<size_t>(k)];
      }
    }
    for (int k = 0; k < m; ++k) {
      s.cum_strategists[static_cast<size_t>(k)] /=
          static_cast<double>(out.records.size());
      s.cum_honest[static_cast<size_t>(k)] /=
          static_cast<double>(out.records.size());
    }
  }
  return out;
}

std::string summary_path(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash))
    return path + ".summary";
  return path.substr(0, dot) + ".summary" + path.substr(dot);
}

void emit_run(const MatrixResult& result, OutputFormat format,
              const std::string& path) {
  const auto& s = result.summary;
  if (format == OutputFormat::Json) {
    ordered_json doc;
    doc["records"] = ordered_json::array();
    for (const auto& r : result.records) {
      ordered_json row;
      row["experiment"] = r.experiment;
      row["seed"] = r.seed;
      row["q"] = r.q;
      row["tiebreak_uses"] = r.tiebreak_uses;
      row["swaps"] = r.swaps;
      row["histogram"] = r.histogram;
      row["cumulative"] = r.cumulative;
      doc["records"].push_back(std::move(row));
    }
    doc["summary"] = {{"experiments", s.experiments},
                      {"mean_q", s.mean_q},
                      {"std_q", s.std_q},
                      {"mean_cumulative", s.mean_cumulative},
                      {"std_cumulative", s.std_cumulative}};
    write_text(path, doc.dump(2) + "\n");
    return;
  }

  std::string csv = "experiment,seed,q,tiebreak_uses,swaps";
  const size_t m =
      result.records.empty() ? 0 : result.records.front().histogram.size();
  for (size_t k = 1; k <= m; ++k) csv += ",hist_" + fmt_int(k);
  for (size_t k = 1; k <= m; ++k) csv += ",cum_" + fmt_int(k);
  csv += "\n";
  for (const auto& r : result.records) {
    csv += fmt_int(r.experiment) + "," + fmt_int(r.seed) + "," + fmt(r.q) +
           "," + fmt_int(r.tiebreak_uses) + "," + fmt_int(r.swaps);
    for (int h : r.histogram) csv += "," + fmt_int(h);
    for (double c : r.cumulative) csv += "," + fmt(c);
    csv += "\n";
  }
  write_text(path, csv);

  std::string sum = "key,value\n";
  sum += "experiments," + fmt_int(s.experiments) + "\n";
  sum += "mean_q," + fmt(s.mean_q) + "\n";
  sum += "std_q," + fmt(s.std_q) + "\n";
  for (size_t k = 0; k < s.mean_cumulative.size(); ++k)
    sum += "mean_cum_" + fmt_int(k + 1) + "," + fmt(s.mean_cumulative[k]) +
           "\n";
  for (size_t k = 0; k < s.std_cumulative.size(); ++k)
    sum += "std_cum_" + fmt_int(k + 1) + "," + fmt(s.std_cumulative[k]) + "\n";
  write_text(summary_path(path), sum);
}

void emit_sensitivity(const SensitivityResult& result, OutputFormat format,
                      const std::string& path) {
  const auto& s = result.summary;
  if (format == OutputFormat::Json) {
    ordered_json doc;
    doc["records"] = ordered_json::array();
    for (const auto& r : result.records) {
      ordered_json row;
      row["experiment"] = r.experiment;
      row["seed"] = r.seed;
      row["differences"] = r.differences;
      row["q_first"] = r.q_first;
      row["q_second"] = r.q_second;
      doc["records"].push_back(std::move(row));
    }
    doc["summary"] = {{"experiments", s.experiments},
                      {"mean_differences", s.mean_differences},
                      {"std_differences", s.std_differences},
                      {"mean_dq", s.mean_dq},
                      {"std_dq", s.std_dq},
                      {"mean_abs_dq", s.mean_abs_dq}};
    write_text(path, doc.dump(2) + "\n");
    return;
  }

  std::string csv = "experiment,seed,differences,q_first,q_second\n";
  for (const auto& r : result.records)
    csv += fmt_int(r.experiment) + "," + fmt_int(r.seed) + "," +
           fmt_int(r.differences) + "," + fmt(r.q_first) + "," +
           fmt(r.q_second) + "\n";
  write_text(path, csv);

  std::string sum = "key,value\n";
  sum += "experiments," + fmt_int(s.experiments) + "\n";
  sum += "mean_differences," + fmt(s.mean_differences) + "\n";
  sum += "std_differences," + fmt(s.std_differences) + "\n";
  sum += "mean_dq," + fmt(s.mean_dq) + "\n";
  sum += "std_dq," + fmt(s.std_dq) + "\n";
  sum += "mean_abs_dq," + fmt(s.mean_abs_dq) + "\n";
  write_text(summary_path(path), sum);
}

void emit_strategy(const StrategyResult& result, OutputFormat format,
                   const std::string& path) {
  const auto& s = result.summary;
  if (format == OutputFormat::Json) {
    ordered_json doc;
    doc["records"] = ordered_json::array();
    for (const auto& r : result.records) {
      ordered_json row;
      row["experiment"] = r.experiment;
      row["seed"] = r.seed;
      row["strategist_count"] = r.strategist_count;
      row["q_strategists"] = r.q_strategists;
      row["q_honest"] = r.q_honest;
      row["q_ref_strategists"] = r.q_ref_strategists;
      row["q_ref_honest"] = r.q_ref_honest;
      row["rank1_strategists"] = r.rank1_strategists;
      row["rank1_honest"] = r.rank1_honest;
      row["rank1_ref_strategists"] = r.rank1_ref_strategists;
      row["rank1_ref_honest"] = r.rank1_ref_honest;
      doc["records"].push_back(std::move(row));
    }
    doc["summary"] = {
        {"experiments", s.experiments},
        {"mean_q_strategists", s.mean_q_strategists},
        {"std_q_strategists", s.std_q_strategists},
        {"mean_q_honest", s.mean_q_honest},
        {"std_q_honest", s.std_q_honest},
        {"mean_q_ref_strategists", s.mean_q_ref_strategists},
        {"mean_q_ref_honest", s.mean_q_ref_honest},
        {"mean_rank1_strategists", s.mean_rank1_strategists},
        {"mean_rank1_honest", s.mean_rank1_honest},
        {"mean_rank1_ref_strategists", s.mean_rank1_ref_strategists},
        {"mean_rank1_ref_honest", s.mean_rank1_ref_honest},
        {"cum_strategists", s.cum_strategists},
        {"cum_honest", s.cum_honest}};
    write_text(path, doc.dump(2) + "\n");
    return;
  }

  std::string csv =
      "experiment,seed,strategist_count,q_strategists,q_honest,"
      "q_ref_strategists,q_ref_honest,rank1_strategists,rank1_honest,"
      "rank1_ref_strategists,rank1_ref_honest\n";
  for (const auto& r : result.records)
    csv += fmt_int(r.experiment) + "," + fmt_int(r.seed) + "," +
           fmt_int(r.strategist_count) + "," + fmt(r.q_strategists) + "," +
           fmt(r.q_honest) + "," + fmt(r.q_ref_strategists) + "," +
           fmt(r.q_ref_honest) + "," + fmt(r.rank1_strategists) + "," +
           fmt(r.rank1_honest) + "," + fmt(r.rank1_ref_strategists) + "," +
           fmt(r.rank1_ref_honest) + "\n";
  write_text(path, csv);

  std::string sum = "key,value\n";
  sum += "experiments," + fmt_int(s.experiments) + "\n";
  sum += "mean_q_strategists," + fmt(s.mean_q_strategists) + "\n";
  sum += "std_q_strategists," + fmt(s.std_q_strategists) + "\n";
  sum += "mean_q_honest," + fmt(s.mean_q_honest) + "\n";
  sum += "std_q_honest," + fmt(s.std_q_honest) + "\n";
  sum += "mean_q_ref_strategists," + fmt(s.mean_q_ref_strategists) + "\n";
  sum += "mean_q_ref_honest," + fmt(s.mean_q_ref_honest) + "\n";
  sum += "mean_rank1_strategists," + fmt(s.mean_rank1_strategists) + "\n";
  sum += "mean_rank1_honest," + fmt(s.mean_rank1_honest) + "\n";
  sum += "mean_rank1_ref_strategists," + fmt(s.mean_rank1_ref_strategists) +
         "\n";
  sum += "mean_rank1_ref_honest," + fmt(s.mean_rank1_ref_honest) + "\n";
  for (size_t k = 0; k < s.cum_strategists.size(); ++k)
    sum += "cum_strategists_" + fmt_int(k + 1) + "," +
           fmt(s.cum_strategists[k]) + "\n";
  for (size_t k = 0; k < s.cum_honest.size(); ++k)
    sum += "cum_honest_" + fmt_int(k + 1) + "," + fmt(s.cum_honest[k]) + "\n";
  write_text(summary_path(path), sum);
}

}  // namespace schoolmatch
