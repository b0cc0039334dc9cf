#include "msde/de.hpp"

#include <cmath>
#include <stdexcept>

#include "run_loop.hpp"

namespace msde {

void DEConfig::validate() const {
  if (np < 4)
    throw std::invalid_argument("DEConfig: np must be >= 4 (mutation draws "
                                "four pairwise-distinct indices)");
  if (scale_factor < 0.0 || scale_factor > 1.0)
    throw std::invalid_argument("DEConfig: scale_factor outside [0, 1]");
  if (crossover_rate < 0.0 || crossover_rate > 1.0)
    throw std::invalid_argument("DEConfig: crossover_rate outside [0, 1]");
  if (max_evals <= 0)
    throw std::invalid_argument("DEConfig: max_evals must be positive");
}

void Population::refresh_best_index() {
  best_index = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    if (members[i].evaluated && members[i].objective < best) {
      best = members[i].objective;
      best_index = i;
    }
  }
}

EvalContext::EvalContext(const Problem& problem, long max_evals)
    : problem_(&problem) {
  counter_.limit = max_evals;
}

double EvalContext::evaluate(const CandidateVector& x) {
  if (counter_.exhausted())
    throw std::logic_error("EvalContext: evaluation past the budget");
  ++counter_.count;
  const double f = problem_->objective(x);
  if (f < best_objective_) {
    best_objective_ = f;
    best_vector_ = x;
  }
  if (!tolerance_met_ &&
      std::abs(best_objective_ - problem_->optimum_value) <=
          problem_->acceptable_error)
    tolerance_met_ = true;
  return f;
}

std::array<int, 3> sample_distinct_indices(int population_size, int exclude,
                                           Rng& rng) {
  if (population_size < 4)
    throw std::invalid_argument(
        "sample_distinct_indices: population_size must be >= 4");
  std::array<int, 3> out{};
  int drawn = 0;
  while (drawn < 3) {
    const int candidate = rng.uniform_index(population_size);
    if (candidate == exclude) continue;
    bool repeat = false;
    for (int k = 0; k < drawn; ++k) repeat |= out[k] == candidate;
    if (repeat) continue;
    out[drawn++] = candidate;
  }
  return out;
}

CandidateVector clamp_to_bounds(CandidateVector v, const Problem& problem) {
  for (std::size_t d = 0; d < v.size(); ++d) {
    const Bounds& b = problem.bounds[d];
    if (v[d] < b.low) v[d] = b.low;
    if (v[d] > b.high) v[d] = b.high;
  }
  return v;
}

CandidateVector mutate_amplified(const Population& population, int target,
                                 double amplification, const Problem& problem,
                                 Rng& rng) {
  const auto idx = sample_distinct_indices(population.size(), target, rng);
  const CandidateVector& x1 = population.members[idx[0]].vector;
  const CandidateVector& x2 = population.members[idx[1]].vector;
  const CandidateVector& x3 = population.members[idx[2]].vector;
  CandidateVector v(x1.size());
  for (std::size_t d = 0; d < v.size(); ++d)
    v[d] = x1[d] + amplification * (x2[d] - x3[d]);
  return clamp_to_bounds(std::move(v), problem);
}

CandidateVector mutate_rand_1(const Population& population, int target,
                              double scale_factor, const Problem& problem,
                              Rng& rng) {
  return mutate_amplified(population, target, scale_factor, problem, rng);
}

CandidateVector crossover_binomial(const CandidateVector& parent,
                                   const CandidateVector& trial,
                                   double crossover_rate, Rng& rng) {
  if (parent.size() != trial.size())
    throw std::invalid_argument("crossover_binomial: dimension mismatch");
  const int dim = static_cast<int>(parent.size());
  const int j_rand = rng.uniform_index(dim);
  CandidateVector offspring(parent.size());
  for (int j = 0; j < dim; ++j) {
    const bool from_trial = rng.uniform01() < crossover_rate || j == j_rand;
    offspring[j] = from_trial ? trial[j] : parent[j];
  }
  return offspring;
}

const Individual& select_greedy(const Individual& parent,
                                const Individual& offspring) {
  return offspring.objective <= parent.objective ? offspring : parent;
}

Population init_population(const Problem& problem, const DEConfig& config,
                           Rng& rng, EvalContext& ctx) {
  Population pop;
  pop.members.resize(static_cast<std::size_t>(config.np));
  for (auto& ind : pop.members) {
    ind.vector.resize(static_cast<std::size_t>(problem.dimension));
    for (int d = 0; d < problem.dimension; ++d)
      ind.vector[d] = rng.uniform(problem.bounds[d].low, problem.bounds[d].high);
  }
  for (auto& ind : pop.members) {
    if (ctx.exhausted()) break;
    ind.objective = ctx.evaluate(ind.vector);
    ind.evaluated = true;
  }
  pop.refresh_best_index();
  return pop;
}

namespace detail {

RunResult evolve(const Problem& problem, const DEConfig& config,
                 const MemeticConfig* memetic, Rng& rng, EvalContext& ctx,
                 Population& population, const RunHooks* hooks) {
  const auto finalize = [&] {
    RunResult r;
    r.best_vector = ctx.best_vector();
    r.best_objective = ctx.best_objective();
    r.error = std::abs(r.best_objective - problem.optimum_value);
    r.success = r.error <= problem.acceptable_error;
    r.evals_used = ctx.counter().count;
    r.generations = population.generation;
    return r;
  };

  if (ctx.tolerance_met() || ctx.exhausted()) return finalize();

  std::vector<Individual> next;
  Individual offspring;
  while (true) {
    double amplification = config.scale_factor;
    if (memetic) {
      amplification +=
          compute_fj(population, problem, config.scale_factor, *memetic, rng,
                     ctx, hooks);
      if (ctx.tolerance_met() || ctx.exhausted()) return finalize();
    }

    next = population.members;  // donors come from the generation snapshot
    for (int i = 0; i < population.size(); ++i) {
      CandidateVector trial =
          mutate_amplified(population, i, amplification, problem, rng);
      offspring.vector = crossover_binomial(population.members[i].vector,
                                            trial, config.crossover_rate, rng);
      if (ctx.exhausted()) {
        population.members = std::move(next);
        population.refresh_best_index();
        return finalize();
      }
      offspring.objective = ctx.evaluate(offspring.vector);
      offspring.evaluated = true;
      next[i] = select_greedy(population.members[i], offspring);
      if (ctx.tolerance_met()) {
        population.members = std::move(next);
        population.refresh_best_index();
        return finalize();
      }
    }
    population.members = std::move(next);
    population.refresh_best_index();
    ++population.generation;
    if (hooks && hooks->on_generation)
      hooks->on_generation(population.generation, population.best().objective);
    if (ctx.exhausted()) return finalize();
  }
}

}  // namespace detail

RunResult run_de(const Problem& problem, const DEConfig& config, Rng& rng,
                 const RunHooks* hooks) {
  config.validate();
  if (config.strategy != Strategy::De)
    throw std::invalid_argument("run_de: config.strategy must be DE");
  EvalContext ctx(problem, config.max_evals);
  Population population = init_population(problem, config, rng, ctx);
  return detail::evolve(problem, config, nullptr, rng, ctx, population, hooks);
}

}  // namespace msde
