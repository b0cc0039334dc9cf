#include "msde/experiment.hpp"

#include <cmath>
#include <stdexcept>

#include "msde/parallel.hpp"

namespace msde {

const char* strategy_name(Strategy s) {
  return s == Strategy::De ? "de" : "msde";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "de" || name == "DE") return Strategy::De;
  if (name == "msde" || name == "MSDE") return Strategy::Msde;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::uint64_t run_seed(std::uint64_t master_seed, std::string_view problem,
                       Strategy algorithm, int run_index) {
  std::uint64_t s = mix64(master_seed);
  s = mix64(s ^ fnv1a64(problem));
  s = mix64(s ^ (algorithm == Strategy::Msde ? 0x4d53ULL : 0x4445ULL));
  s = mix64(s ^ static_cast<std::uint64_t>(run_index));
  return s;
}

RunResult execute_run(const Problem& problem, DEConfig config,
                      const MemeticConfig& memetic, Strategy algorithm,
                      std::uint64_t seed, const RunHooks* hooks) {
  config.seed = seed;
  config.strategy = algorithm;
  Rng rng(seed);
  if (algorithm == Strategy::Msde)
    return run_msde(problem, config, memetic, rng, hooks);
  return run_de(problem, config, rng, hooks);
}

AggregateStats aggregate(const std::vector<RunResult>& results,
                         const Problem& problem) {
  (void)problem;
  if (results.empty())
    throw std::invalid_argument("aggregate: empty result sequence");
  AggregateStats s;
  s.runs = static_cast<int>(results.size());
  for (const auto& r : results) {
    s.mfv += r.best_objective;
    s.me += r.error;
    s.afe += static_cast<double>(r.evals_used);
    s.sr += r.success ? 1 : 0;
  }
  s.mfv /= s.runs;
  s.me /= s.runs;
  s.afe /= s.runs;
  double var = 0.0;
  for (const auto& r : results) {
    const double d = r.best_objective - s.mfv;
    var += d * d;
  }
  s.sd = std::sqrt(var / s.runs);
  return s;
}

ExperimentTable run_experiment(const ExperimentSpec& spec,
                               const ProblemCatalog& catalog) {
  if (spec.problems.empty())
    throw std::invalid_argument("run_experiment: no problems selected");
  if (spec.algorithms.empty())
    throw std::invalid_argument("run_experiment: no algorithms selected");
  if (spec.runs <= 0)
    throw std::invalid_argument("run_experiment: runs must be positive");
  spec.base_config.validate();
  spec.memetic.validate();
  for (const auto& name : spec.problems)
    if (!catalog.contains(name))
      throw std::invalid_argument("unknown problem: " + name);

  struct Cell {
    const Problem* problem;
    Strategy algorithm;
    std::vector<RunResult> results;
  };
  std::vector<Cell> cells;
  for (const auto& name : spec.problems)
    for (Strategy algo : spec.algorithms)
      cells.push_back(
          {&catalog.lookup(name), algo, std::vector<RunResult>(spec.runs)});

  const long total = static_cast<long>(cells.size()) * spec.runs;
  parallel_for(total, spec.threads, [&](long task) {
    Cell& cell = cells[static_cast<std::size_t>(task / spec.runs)];
    const int run_index = static_cast<int>(task % spec.runs);
    const std::uint64_t seed = run_seed(spec.master_seed, cell.problem->name,
                                        cell.algorithm, run_index);
    cell.results[run_index] = execute_run(*cell.problem, spec.base_config,
                                          spec.memetic, cell.algorithm, seed);
  });

  ExperimentTable table;
  table.reserve(cells.size());
  for (const auto& cell : cells)
    table.push_back({cell.problem->name, cell.algorithm,
                     aggregate(cell.results, *cell.problem)});
  return table;
}

std::vector<std::pair<double, double>> cr_sweep(
    const ExperimentSpec& spec, const std::vector<double>& cr_values,
    const ProblemCatalog& catalog) {
  if (cr_values.empty())
    throw std::invalid_argument("cr_sweep: no CR values given");
  for (double cr : cr_values)
    if (cr < 0.0 || cr > 1.0)
      throw std::invalid_argument("cr_sweep: CR outside [0, 1]");

  std::vector<std::pair<double, double>> rows;
  rows.reserve(cr_values.size());
  for (double cr : cr_values) {
    ExperimentSpec point = spec;
    point.base_config.crossover_rate = cr;
    const ExperimentTable table = run_experiment(point, catalog);
    double mean_afe = 0.0;
    for (const auto& row : table) mean_afe += row.stats.afe;
    mean_afe /= static_cast<double>(table.size());
    rows.emplace_back(cr, mean_afe);
  }
  return rows;
}

std::vector<ComparisonRow> compare_sign(const ExperimentTable& table) {
  std::vector<ComparisonRow> rows;
  for (const auto& row : table) {
    if (row.algorithm != Strategy::De) continue;
    const ExperimentRow* msde_row = nullptr;
    for (const auto& other : table)
      if (other.problem == row.problem && other.algorithm == Strategy::Msde)
        msde_row = &other;
    if (!msde_row)
      throw std::invalid_argument("compare_sign: missing MSDE cell for " +
                                  row.problem);
    const AggregateStats& d = row.stats;
    const AggregateStats& m = msde_row->stats;
    const bool plus = m.sr > d.sr || (m.sr == d.sr && m.afe < d.afe) ||
                      (m.sr == d.sr && m.afe == d.afe && m.me < d.me);
    rows.push_back({row.problem, plus ? '+' : '-'});
  }
  if (rows.empty())
    throw std::invalid_argument("compare_sign: no DE/MSDE pairs in table");
  return rows;
}

int total_plus(const std::vector<ComparisonRow>& rows) {
  int n = 0;
  for (const auto& r : rows) n += r.verdict == '+' ? 1 : 0;
  return n;
}

}  // namespace msde
