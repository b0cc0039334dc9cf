#include "msde/gss.hpp"

#include <stdexcept>

#include "run_loop.hpp"

namespace msde {

void MemeticConfig::validate() const {
  if (!(interval.low < interval.high))
    throw std::invalid_argument("MemeticConfig: interval low must be < high");
  if (golden_ratio <= 0.0 || golden_ratio >= 1.0)
    throw std::invalid_argument("MemeticConfig: golden_ratio outside (0, 1)");
  if (width_tolerance <= 0.0)
    throw std::invalid_argument("MemeticConfig: width_tolerance must be > 0");
  if (max_gss_iterations < 0)
    throw std::invalid_argument("MemeticConfig: max_gss_iterations negative");
}

GssResult gss_minimize(const std::function<double(double)>& phi,
                       const MemeticConfig& config, const EvalCounter& counter,
                       const std::function<bool()>& stop) {
  config.validate();
  double a = config.interval.low;
  double b = config.interval.high;

  GssResult result;
  result.final_interval = {a, b};
  result.c_best = config.interval.midpoint();

  while (b - a > config.width_tolerance &&
         result.iterations < config.max_gss_iterations) {
    if (stop && stop()) break;
    const double c1 = b - (b - a) * config.golden_ratio;
    const double c2 = a + (b - a) * config.golden_ratio;

    if (counter.exhausted()) break;
    const double p1 = phi(c1);
    ++result.evals;
    if (p1 < result.phi_best) {
      result.phi_best = p1;
      result.c_best = c1;
    }
    if (stop && stop()) break;
    if (counter.exhausted()) break;
    const double p2 = phi(c2);
    ++result.evals;
    if (p2 < result.phi_best) {
      result.phi_best = p2;
      result.c_best = c2;
    }

    if (p1 < p2)
      b = c2;
    else
      a = c1;
    ++result.iterations;
    result.final_interval = {a, b};
  }
  return result;
}

double compute_fj(Population& population, const Problem& problem,
                  double scale_factor, const MemeticConfig& config, Rng& rng,
                  EvalContext& ctx, const RunHooks* hooks) {
  (void)scale_factor;
  config.validate();
  // A phase that cannot iterate must not disturb the run's random stream,
  // so the disabled cases exit before any draw.
  if (config.interval.width() <= config.width_tolerance ||
      config.max_gss_iterations == 0 || ctx.exhausted())
    return config.interval.midpoint();

  const auto idx =
      sample_distinct_indices(population.size(), population.best_index, rng);
  const CandidateVector& base = population.best().vector;
  const CandidateVector& x2 = population.members[idx[1]].vector;
  const CandidateVector& x3 = population.members[idx[2]].vector;

  CandidateVector trial(base.size());
  CandidateVector best_trial;
  double best_trial_objective = std::numeric_limits<double>::infinity();

  const auto phi = [&](double c) {
    for (std::size_t d = 0; d < trial.size(); ++d)
      trial[d] = base[d] + c * (x2[d] - x3[d]);
    trial = clamp_to_bounds(std::move(trial), problem);
    const double f = ctx.evaluate(trial);
    if (f < best_trial_objective) {
      best_trial_objective = f;
      best_trial = trial;
    }
    return f;
  };
  const auto stop = [&ctx] { return ctx.tolerance_met(); };

  const GssResult result = gss_minimize(phi, config, ctx.counter(), stop);
  if (hooks && hooks->on_memetic)
    hooks->on_memetic(population.generation, result);

  // Lamarckian step: the best individual adopts the best sampled trial.
  if (best_trial_objective < population.best().objective) {
    Individual& best = population.members[population.best_index];
    best.vector = std::move(best_trial);
    best.objective = best_trial_objective;
    best.evaluated = true;
  }
  return result.c_best;
}

CandidateVector mutate_msde(const Population& population, int target,
                            double scale_factor, double f_j,
                            const Problem& problem, Rng& rng) {
  return mutate_amplified(population, target, scale_factor + f_j, problem,
                          rng);
}

RunResult run_msde(const Problem& problem, const DEConfig& config,
                   const MemeticConfig& memetic, Rng& rng,
                   const RunHooks* hooks) {
  config.validate();
  memetic.validate();
  if (config.strategy != Strategy::Msde)
    throw std::invalid_argument("run_msde: config.strategy must be MSDE");
  EvalContext ctx(problem, config.max_evals);
  Population population = init_population(problem, config, rng, ctx);
  return detail::evolve(problem, config, &memetic, rng, ctx, population,
                        hooks);
}

}  // namespace msde
