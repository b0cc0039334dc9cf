#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace msde {

// A point in the D-dimensional real search space.
using CandidateVector = std::vector<double>;

struct Bounds {
  double low = 0.0;
  double high = 0.0;
};

// Inequality constraints g_k(x) <= 0 handled by a static quadratic penalty.
struct ConstraintSet {
  std::vector<std::function<double(const CandidateVector&)>> inequalities;
  double penalty_coefficient = 1e12;

  // penalty_coefficient * sum_k max(0, g_k(x))^2; zero on the feasible set.
  double penalty(const CandidateVector& x) const;
};

struct Problem {
  std::string name;
  int dimension = 0;
  std::vector<Bounds> bounds;  // one entry per dimension
  std::function<double(const CandidateVector&)> objective;
  double optimum_value = 0.0;
  std::optional<CandidateVector> optimum_point;
  double acceptable_error = 1e-5;
  std::optional<ConstraintSet> constraints;
};

// Closed-form benchmark objectives. Each throws std::invalid_argument on a
// dimension mismatch.
namespace functions {

// sum_i floor(x_i + 0.5)^2, any D
double step(const CandidateVector& x);
// D = 4
double colville(const CandidateVector& x);
// sum_i (a_i - x1 (b_i^2 + b_i x2) / (b_i^2 + b_i x3 + x4))^2, D = 4
double kowalik(const CandidateVector& x, const std::vector<double>& a,
               const std::vector<double>& b);
// sum_{i<D} [100 (z_i^2 - z_{i+1})^2 + (z_i - 1)^2] + bias, z = x - shift + 1
double shifted_rosenbrock(const CandidateVector& x,
                          const std::vector<double>& shift, double bias);
// D = 2
double six_hump_camel(const CandidateVector& x);
// D = 2
double hosaki(const CandidateVector& x);
// sum_i (x1 x3 t_i / (1 + x1 t_i + x2 v_i) - y_i)^2, D = 3
double meyer_roth(const CandidateVector& x, const std::vector<double>& t,
                  const std::vector<double>& v, const std::vector<double>& y);
// product of sum_{i=1..5} i cos((i+1) x_j + i), D = 2
double shubert(const CandidateVector& x);

// Cylindrical vessel cost (material, forming, welding), D = 4, no penalty.
double pressure_vessel_cost(const CandidateVector& x);
// The three design constraints g_k(x) <= 0.
double pressure_vessel_g1(const CandidateVector& x);
double pressure_vessel_g2(const CandidateVector& x);
double pressure_vessel_g3(const CandidateVector& x);

// Cluster energy sum_{p<q} (r^-12 - 2 r^-6) over atom pairs; D must be a
// multiple of 3. Returns the 1e12 cap when a pair distance underflows 1e-6.
double lennard_jones(const CandidateVector& x);

// Squared error between the parameterised FM wave and the fixed target wave
// over t = 0..100, theta = 2 pi / 100. D = 6.
double fm_sound_wave(const CandidateVector& x);

}  // namespace functions

}  // namespace msde
