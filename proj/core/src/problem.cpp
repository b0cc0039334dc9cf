#include "msde/problem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace msde {

double ConstraintSet::penalty(const CandidateVector& x) const {
  double sum = 0.0;
  for (const auto& g : inequalities) {
    const double v = g(x);
    if (v > 0.0) sum += v * v;
  }
  return penalty_coefficient * sum;
}

namespace functions {
namespace {

void require_dimension(const CandidateVector& x, std::size_t d,
                       const char* name) {
  if (x.size() != d)
    throw std::invalid_argument(std::string(name) + ": expected dimension " +
                                std::to_string(d) + ", got " +
                                std::to_string(x.size()));
}

}  // namespace

double step(const CandidateVector& x) {
  double sum = 0.0;
  for (double xi : x) {
    const double t = std::floor(xi + 0.5);
    sum += t * t;
  }
  return sum;
}

double colville(const CandidateVector& x) {
  require_dimension(x, 4, "colville");
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  return 100.0 * (x2 - x1 * x1) * (x2 - x1 * x1) + (1.0 - x1) * (1.0 - x1) +
         90.0 * (x4 - x3 * x3) * (x4 - x3 * x3) + (1.0 - x3) * (1.0 - x3) +
         10.1 * ((x2 - 1.0) * (x2 - 1.0) + (x4 - 1.0) * (x4 - 1.0)) +
         19.8 * (x2 - 1.0) * (x4 - 1.0);
}

double kowalik(const CandidateVector& x, const std::vector<double>& a,
               const std::vector<double>& b) {
  require_dimension(x, 4, "kowalik");
  if (a.size() != b.size())
    throw std::invalid_argument("kowalik: data rows mismatched");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double bi = b[i];
    const double r = a[i] - x[0] * (bi * bi + bi * x[1]) /
                                (bi * bi + bi * x[2] + x[3]);
    sum += r * r;
  }
  return sum;
}

double shifted_rosenbrock(const CandidateVector& x,
                          const std::vector<double>& shift, double bias) {
  require_dimension(x, shift.size(), "shifted_rosenbrock");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double zi = x[i] - shift[i] + 1.0;
    const double zn = x[i + 1] - shift[i + 1] + 1.0;
    sum += 100.0 * (zi * zi - zn) * (zi * zi - zn) + (zi - 1.0) * (zi - 1.0);
  }
  return sum + bias;
}

double six_hump_camel(const CandidateVector& x) {
  require_dimension(x, 2, "six_hump_camel");
  const double x1 = x[0], x2 = x[1];
  return (4.0 - 2.1 * x1 * x1 + x1 * x1 * x1 * x1 / 3.0) * x1 * x1 + x1 * x2 +
         (-4.0 + 4.0 * x2 * x2) * x2 * x2;
}

double hosaki(const CandidateVector& x) {
  require_dimension(x, 2, "hosaki");
  const double x1 = x[0], x2 = x[1];
  const double poly = 1.0 - 8.0 * x1 + 7.0 * x1 * x1 -
                      7.0 / 3.0 * x1 * x1 * x1 +
                      0.25 * x1 * x1 * x1 * x1;
  return poly * x2 * x2 * std::exp(-x2);
}

double meyer_roth(const CandidateVector& x, const std::vector<double>& t,
                  const std::vector<double>& v, const std::vector<double>& y) {
  require_dimension(x, 3, "meyer_roth");
  if (t.size() != v.size() || t.size() != y.size())
    throw std::invalid_argument("meyer_roth: data rows mismatched");
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r =
        x[0] * x[2] * t[i] / (1.0 + x[0] * t[i] + x[1] * v[i]) - y[i];
    sum += r * r;
  }
  return sum;
}

double shubert(const CandidateVector& x) {
  require_dimension(x, 2, "shubert");
  double s1 = 0.0, s2 = 0.0;
  for (int i = 1; i <= 5; ++i) {
    s1 += i * std::cos((i + 1.0) * x[0] + i);
    s2 += i * std::cos((i + 1.0) * x[1] + i);
  }
  return s1 * s2;
}

double pressure_vessel_cost(const CandidateVector& x) {
  require_dimension(x, 4, "pressure_vessel");
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  return 0.6224 * x1 * x3 * x4 + 1.7781 * x2 * x3 * x3 +
         3.1611 * x1 * x1 * x4 + 19.84 * x1 * x1 * x3;
}

double pressure_vessel_g1(const CandidateVector& x) {
  return 0.0193 * x[2] - x[0];
}

double pressure_vessel_g2(const CandidateVector& x) {
  return 0.00954 * x[2] - x[1];
}

double pressure_vessel_g3(const CandidateVector& x) {
  return 750.0 * 1728.0 -
         std::numbers::pi * x[2] * x[2] * (x[3] + 4.0 / 3.0 * x[2]);
}

double lennard_jones(const CandidateVector& x) {
  if (x.size() % 3 != 0 || x.empty())
    throw std::invalid_argument(
        "lennard_jones: dimension must be a positive multiple of 3");
  const std::size_t n = x.size() / 3;
  double energy = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double dx = x[3 * p] - x[3 * q];
      const double dy = x[3 * p + 1] - x[3 * q + 1];
      const double dz = x[3 * p + 2] - x[3 * q + 2];
      const double r2 = dx * dx + dy * dy + dz * dz;
      if (r2 < 1e-12) return 1e12;  // pair closer than 1e-6: capped
      const double inv6 = 1.0 / (r2 * r2 * r2);
      energy += inv6 * inv6 - 2.0 * inv6;
    }
  }
  return energy;
}

double fm_sound_wave(const CandidateVector& x) {
  require_dimension(x, 6, "fm_sound_wave");
  const double theta = 2.0 * std::numbers::pi / 100.0;
  double sum = 0.0;
  for (int t = 0; t <= 100; ++t) {
    const double y = x[0] * std::sin(x[1] * t * theta +
                                     x[2] * std::sin(x[3] * t * theta +
                                                     x[4] * std::sin(x[5] * t * theta)));
    const double y0 = 1.0 * std::sin(5.0 * t * theta -
                                     1.5 * std::sin(4.8 * t * theta +
                                                    2.0 * std::sin(4.9 * t * theta)));
    sum += (y - y0) * (y - y0);
  }
  return sum;
}

}  // namespace functions
}  // namespace msde
