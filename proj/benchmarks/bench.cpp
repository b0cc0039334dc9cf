#include <benchmark/benchmark.h>

#include "msde/catalog.hpp"
#include "msde/experiment.hpp"

namespace {

const msde::ProblemCatalog& catalog() {
  static msde::ProblemCatalog c;
  return c;
}

msde::CandidateVector midpoint(const msde::Problem& p) {
  msde::CandidateVector x(static_cast<std::size_t>(p.dimension));
  for (int d = 0; d < p.dimension; ++d)
    x[static_cast<std::size_t>(d)] =
        0.5 * (p.bounds[d].low + p.bounds[d].high) + 0.01 * d;
  return x;
}

void BM_Objective(benchmark::State& state, const char* name) {
  const msde::Problem& p = catalog().lookup(name);
  const msde::CandidateVector x = midpoint(p);
  for (auto _ : state) benchmark::DoNotOptimize(p.objective(x));
}

void BM_SampleIndices(benchmark::State& state) {
  msde::Rng rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(msde::sample_distinct_indices(50, 7, rng));
}

void BM_Run(benchmark::State& state, msde::Strategy algo, const char* name) {
  const msde::Problem& p = catalog().lookup(name);
  std::uint64_t seed = 0;
  long evals = 0;
  for (auto _ : state) {
    const msde::RunResult r = msde::execute_run(
        p, msde::DEConfig{}, msde::MemeticConfig{}, algo, ++seed);
    benchmark::DoNotOptimize(r.best_objective);
    evals += r.evals_used;
  }
  state.counters["evals"] =
      benchmark::Counter(static_cast<double>(evals), benchmark::Counter::kAvgIterations);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Objective, step_f1, "f1");
BENCHMARK_CAPTURE(BM_Objective, kowalik_f3, "f3");
BENCHMARK_CAPTURE(BM_Objective, lennard_jones_f10, "f10");
BENCHMARK_CAPTURE(BM_Objective, fm_wave_f11, "f11");
BENCHMARK(BM_SampleIndices);
BENCHMARK_CAPTURE(BM_Run, de_hosaki, msde::Strategy::De, "f6");
BENCHMARK_CAPTURE(BM_Run, msde_hosaki, msde::Strategy::Msde, "f6");

BENCHMARK_MAIN();
