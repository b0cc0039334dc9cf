#pragma once

#include "msde/de.hpp"

namespace msde {

struct GssInterval {
  double low = -1.2;
  double high = 1.2;

  double width() const { return high - low; }
  double midpoint() const { return 0.5 * (low + high); }
};

struct MemeticConfig {
  GssInterval interval{};
  double golden_ratio = 0.618;   // psi
  double width_tolerance = 1e-3; // stop when high - low <= this
  int max_gss_iterations = 20;

  void validate() const;  // throws std::invalid_argument
};

struct GssResult {
  double c_best = 0.0;   // interior point with the smallest phi seen
  double phi_best = std::numeric_limits<double>::infinity();
  int iterations = 0;
  GssInterval final_interval{};
  long evals = 0;        // phi calls made (2 per completed iteration)
};

// Golden section search over [low, high], exactly as the two-point scheme:
// each iteration evaluates phi at both interior points
//   c1 = b - (b - a) * psi,   c2 = a + (b - a) * psi
// and keeps the half bracketing the smaller value, so every iteration costs
// two fresh evaluations and shrinks the width by psi.
//
// phi is responsible for charging `counter` (one tick per call when it wraps
// a real objective); the search itself only consults the counter and stops
// before an evaluation it cannot afford, returning the best point seen so
// far. `stop` is polled between evaluations for external termination. With
// no evaluation performed, c_best is the interval midpoint.
GssResult gss_minimize(const std::function<double(double)>& phi,
                       const MemeticConfig& config, const EvalCounter& counter,
                       const std::function<bool()>& stop = {});

// Per-generation memetic phase: draws one donor triple excluding the best
// index, fixes the difference direction d = x_{r2} - x_{r3}, and golden-
// section-searches the coefficient of the line through the best individual,
//   phi(c) = f(clamp(x_best + c * d)).
// Every phi call charges the run budget through ctx. If some sampled trial
// improves on the best individual, it replaces it (Lamarckian update).
// Returns the located coefficient as this generation's f_j; when the phase
// cannot run (degenerate interval, zero iteration budget, or an exhausted
// counter) it returns the interval midpoint without consuming randomness or
// evaluations.
double compute_fj(Population& population, const Problem& problem,
                  double scale_factor, const MemeticConfig& config, Rng& rng,
                  EvalContext& ctx, const RunHooks* hooks = nullptr);

// Modified mutation: v = x_{i1} + (F + f_j) * (x_{i2} - x_{i3}), clamped.
CandidateVector mutate_msde(const Population& population, int target,
                            double scale_factor, double f_j,
                            const Problem& problem, Rng& rng);

// Memetic-search DE (requires config.strategy == Strategy::Msde): as run_de,
// except each generation starts with compute_fj and every mutation that
// generation shares the resulting f_j. GSS evaluations count toward the
// budget and the stopping check like any other.
RunResult run_msde(const Problem& problem, const DEConfig& config,
                   const MemeticConfig& memetic, Rng& rng,
                   const RunHooks* hooks = nullptr);

}  // namespace msde
