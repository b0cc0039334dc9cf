#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>

#include "msde/problem.hpp"
#include "msde/rng.hpp"

namespace msde {

enum class Strategy { De, Msde };

struct DEConfig {
  int np = 50;                  // population size, >= 4
  double scale_factor = 0.5;    // F in [0, 1]
  double crossover_rate = 0.9;  // CR in [0, 1]
  long max_evals = 200000;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::De;
  // ABC-style "Limit = D*NP/2" from the source protocol; parsed for
  // configuration fidelity, not consulted by either algorithm.
  double limit = 0.0;

  void validate() const;  // throws std::invalid_argument
};

struct EvalCounter {
  long count = 0;  // objective evaluations consumed
  long limit = 0;

  bool exhausted() const { return count >= limit; }
  long remaining() const { return limit - count; }
};

struct Individual {
  CandidateVector vector;
  double objective = std::numeric_limits<double>::infinity();
  bool evaluated = false;
};

struct Population {
  std::vector<Individual> members;
  long generation = 0;
  int best_index = 0;

  int size() const { return static_cast<int>(members.size()); }
  const Individual& best() const { return members[best_index]; }
  // Recomputes best_index as the argmin objective over evaluated members.
  void refresh_best_index();
};

struct RunResult {
  CandidateVector best_vector;
  double best_objective = std::numeric_limits<double>::infinity();
  double error = std::numeric_limits<double>::infinity();
  long evals_used = 0;
  bool success = false;
  long generations = 0;
};

struct GssResult;

// Optional per-run observers; any member may be left empty. Used by tests
// to audit trajectories without touching the run loop.
struct RunHooks {
  // After every completed generation: (generation index, population best).
  std::function<void(long, double)> on_generation;
  // After each memetic phase: (generation index, line-search outcome).
  std::function<void(long, const GssResult&)> on_memetic;
};

// Budget, best-so-far and stopping-tolerance bookkeeping shared by every
// objective evaluation of one run, memetic phase included. The counter
// advances exactly once per objective call.
class EvalContext {
 public:
  EvalContext(const Problem& problem, long max_evals);

  // Requires !exhausted(). Counts the call, updates the best-so-far and
  // latches the tolerance flag when |best - optimum| <= acceptable_error.
  double evaluate(const CandidateVector& x);

  bool exhausted() const { return counter_.exhausted(); }
  bool tolerance_met() const { return tolerance_met_; }
  const EvalCounter& counter() const { return counter_; }
  const Problem& problem() const { return *problem_; }
  double best_objective() const { return best_objective_; }
  const CandidateVector& best_vector() const { return best_vector_; }

 private:
  const Problem* problem_;
  EvalCounter counter_;
  double best_objective_ = std::numeric_limits<double>::infinity();
  CandidateVector best_vector_;
  bool tolerance_met_ = false;
};

// Three indices drawn uniformly without replacement from
// {0..population_size-1} \ {exclude}. Requires population_size >= 4.
std::array<int, 3> sample_distinct_indices(int population_size, int exclude,
                                           Rng& rng);

// Projects each component onto its [low, high] range.
CandidateVector clamp_to_bounds(CandidateVector v, const Problem& problem);

// v = x_{i1} + amplification * (x_{i2} - x_{i3}), clamped to bounds; the
// donor triple excludes `target`. Plain DE uses amplification = F, the
// memetic strategy F + f_j.
CandidateVector mutate_amplified(const Population& population, int target,
                                 double amplification, const Problem& problem,
                                 Rng& rng);

// Classic rand/1 mutation: amplification = scale_factor.
CandidateVector mutate_rand_1(const Population& population, int target,
                              double scale_factor, const Problem& problem,
                              Rng& rng);

// Binomial crossover with one forced index: component j comes from `trial`
// when u_j < crossover_rate or j == j_rand, else from `parent`.
CandidateVector crossover_binomial(const CandidateVector& parent,
                                   const CandidateVector& trial,
                                   double crossover_rate, Rng& rng);

// The individual with the smaller objective; ties keep the offspring.
const Individual& select_greedy(const Individual& parent,
                                const Individual& offspring);

// NP individuals drawn uniformly from the search box, evaluated in order
// until the budget runs out. All NP vectors are generated even when the
// budget cuts evaluation short, so population content depends only on rng.
Population init_population(const Problem& problem, const DEConfig& config,
                           Rng& rng, EvalContext& ctx);

// One full DE/rand/1/bin run (requires config.strategy == Strategy::De).
// Stops as soon as the best-so-far error reaches the problem's acceptable
// error — checked after every objective evaluation — or the budget is gone.
RunResult run_de(const Problem& problem, const DEConfig& config, Rng& rng,
                 const RunHooks* hooks = nullptr);

}  // namespace msde
