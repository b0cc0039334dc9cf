#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msde/catalog.hpp"
#include "msde/de.hpp"
#include "msde/gss.hpp"

namespace msde {

struct ExperimentSpec {
  std::vector<std::string> problems;
  std::vector<Strategy> algorithms{Strategy::De, Strategy::Msde};
  int runs = 100;
  DEConfig base_config{};    // NP=50, F=0.5, CR=0.9, 200000 evals
  MemeticConfig memetic{};
  std::uint64_t master_seed = 1;
  int threads = 0;           // 0: hardware concurrency
};

// One statistics row: the aggregate over repeated runs of a (problem,
// algorithm) cell. sd is the population (divide-by-N) standard deviation.
struct AggregateStats {
  double mfv = 0.0;  // mean best objective
  double sd = 0.0;
  double me = 0.0;   // mean |best - optimum|, failed runs included
  double afe = 0.0;  // mean evaluations consumed
  int sr = 0;        // count of successful runs
  int runs = 0;
};

struct ExperimentRow {
  std::string problem;
  Strategy algorithm;
  AggregateStats stats;
};

using ExperimentTable = std::vector<ExperimentRow>;

struct ComparisonRow {
  std::string problem;
  char verdict = '-';  // '+' when MSDE is better under the sign criterion
};

const char* strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);  // "de" | "msde"

// Pure function of the experiment coordinates; run order and thread count
// can never change which seed a run receives.
std::uint64_t run_seed(std::uint64_t master_seed, std::string_view problem,
                       Strategy algorithm, int run_index);

// One seeded run of the selected strategy.
RunResult execute_run(const Problem& problem, DEConfig config,
                      const MemeticConfig& memetic, Strategy algorithm,
                      std::uint64_t seed, const RunHooks* hooks = nullptr);

// mfv/sd/me/afe/sr over a non-empty result set.
AggregateStats aggregate(const std::vector<RunResult>& results,
                         const Problem& problem);

// `runs` independent seeded runs for every (problem, algorithm) cell.
// Unknown names are rejected before any run starts. Runs may execute on a
// thread pool; the table depends on the spec alone, never on scheduling.
ExperimentTable run_experiment(const ExperimentSpec& spec,
                               const ProblemCatalog& catalog);

// Re-runs the experiment at each CR value; returns (cr, mean AFE across the
// spec's cells) rows, one per input value. Values outside [0, 1] are
// rejected.
std::vector<std::pair<double, double>> cr_sweep(
    const ExperimentSpec& spec, const std::vector<double>& cr_values,
    const ProblemCatalog& catalog);

// Sign summary, MSDE vs DE per problem. The verdict is lexicographic:
// '+' when MSDE has strictly higher SR; on an SR tie, strictly lower AFE;
// on an AFE tie, strictly lower ME; otherwise '-'. Requires both algorithms
// present for every problem in the table.
std::vector<ComparisonRow> compare_sign(const ExperimentTable& table);

int total_plus(const std::vector<ComparisonRow>& rows);

}  // namespace msde
