#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "msde/catalog.hpp"
#include "msde/rng.hpp"

using namespace msde;

namespace {

const ProblemCatalog& catalog() {
  static ProblemCatalog c;
  return c;
}

double lj_energy(const CandidateVector& p) {
  const std::size_t n = p.size() / 3;
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = p[3 * i] - p[3 * j];
      const double dy = p[3 * i + 1] - p[3 * j + 1];
      const double dz = p[3 * i + 2] - p[3 * j + 2];
      const double u = dx * dx + dy * dy + dz * dz;
      const double u3 = u * u * u;
      e += 1.0 / (u3 * u3) - 2.0 / u3;
    }
  return e;
}

CandidateVector lj_gradient(const CandidateVector& p) {
  const std::size_t n = p.size() / 3;
  CandidateVector g(p.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d[3] = {p[3 * i] - p[3 * j], p[3 * i + 1] - p[3 * j + 1],
                           p[3 * i + 2] - p[3 * j + 2]};
      const double u = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
      const double u4 = u * u * u * u;
      // d/du (u^-6 - 2 u^-3) = -6 u^-7 + 6 u^-4; chain rule adds 2 d_k.
      const double coef = 12.0 * (1.0 / u4 - 1.0 / (u4 * u * u * u));
      for (int k = 0; k < 3; ++k) {
        g[3 * i + k] += coef * d[k];
        g[3 * j + k] -= coef * d[k];
      }
    }
  return g;
}

// Steepest descent with backtracking; independent of the library's
// objective path on purpose — it is the oracle for the f10 configuration.
double lj_descend(CandidateVector x, int iterations = 4000) {
  double f = lj_energy(x);
  for (int it = 0; it < iterations; ++it) {
    const CandidateVector g = lj_gradient(x);
    double norm2 = 0.0;
    for (double gk : g) norm2 += gk * gk;
    if (norm2 < 1e-24) break;
    double step = 1e-2;
    CandidateVector trial(x.size());
    for (int back = 0; back < 40; ++back) {
      for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] - step * g[k];
      const double ft = lj_energy(trial);
      if (ft < f) {
        x = trial;
        f = ft;
        break;
      }
      step *= 0.5;
    }
  }
  return f;
}

}  // namespace

TEST_CASE("catalog holds eleven problems keyed f1..f11") {
  CHECK(catalog().problems().size() == 11);
  for (int i = 1; i <= 11; ++i)
    CHECK(catalog().contains("f" + std::to_string(i)));
  CHECK_THROWS_AS(catalog().lookup("f12"), std::invalid_argument);
}

TEST_CASE("catalog metadata matches the published table") {
  const auto& f1 = catalog().lookup("f1");
  CHECK(f1.dimension == 30);
  CHECK(f1.bounds[0].low == -100.0);
  CHECK(f1.bounds[0].high == 100.0);
  CHECK(f1.acceptable_error == 1e-5);

  const auto& f4 = catalog().lookup("f4");
  CHECK(f4.acceptable_error == 1e-1);
  CHECK(f4.optimum_value == 390.0);
  CHECK(f4.dimension == 10);

  const auto& f6 = catalog().lookup("f6");
  CHECK(f6.bounds[0].high == 5.0);
  CHECK(f6.bounds[1].high == 6.0);
  CHECK(f6.acceptable_error == 1e-6);

  const auto& f9 = catalog().lookup("f9");
  CHECK(f9.bounds[0].low == 1.125);
  CHECK(f9.bounds[1].low == 0.625);
  CHECK(f9.bounds[2].high == 240.0);
  CHECK(f9.constraints.has_value());

  const auto& f10 = catalog().lookup("f10");
  CHECK(f10.dimension == 15);
  CHECK(f10.bounds[0].low == -2.0);

  const auto& f11 = catalog().lookup("f11");
  CHECK(f11.dimension == 6);
  CHECK(f11.bounds[0].low == -6.4);
  CHECK(f11.bounds[0].high == 6.35);
}

TEST_CASE("every stored optimum point reproduces its optimum value") {
  for (const auto& p : catalog().problems()) {
    REQUIRE(p.optimum_point.has_value());
    CHECK(std::abs(p.objective(*p.optimum_point) - p.optimum_value) <= 1e-3);
  }
}

TEST_CASE("objectives are pure: repeated evaluation is bit-identical") {
  Rng rng(3);
  for (const auto& p : catalog().problems()) {
    CandidateVector x(static_cast<std::size_t>(p.dimension));
    for (int d = 0; d < p.dimension; ++d)
      x[static_cast<std::size_t>(d)] = rng.uniform(p.bounds[d].low, p.bounds[d].high);
    CHECK(p.objective(x) == p.objective(x));
  }
}

TEST_CASE("f1 step: zero plateau, hand values, integrality") {
  CHECK(functions::step(CandidateVector(30, 0.4)) == 0.0);
  CHECK(functions::step({1.2, -0.6}) == 2.0);  // floor(1.7)^2 + floor(-0.1)^2
  CHECK(catalog().eval_closed_form("f1", {1.2, -0.6}) == 2.0);
  Rng rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    CandidateVector x(30);
    for (auto& v : x) v = rng.uniform(-100.0, 100.0);
    const double f = functions::step(x);
    CHECK(f >= 0.0);
    CHECK(f == std::floor(f));
  }
}

TEST_CASE("f2 Colville is exactly zero at the all-ones point") {
  CHECK(functions::colville({1.0, 1.0, 1.0, 1.0}) == 0.0);
}

TEST_CASE("f3 Kowalik reproduces the published minimum") {
  const auto& t = catalog().tables();
  CHECK(t.kowalik_a.size() == 11);
  const double f =
      functions::kowalik({0.1928, 0.1908, 0.1231, 0.1357}, t.kowalik_a,
                         t.kowalik_b);
  CHECK(f == doctest::Approx(3.07e-4).epsilon(1e-5 / 3.07e-4));
}

TEST_CASE("f4 shifted Rosenbrock equals the bias exactly at the shift") {
  const auto& f4 = catalog().lookup("f4");
  CHECK(f4.objective(catalog().tables().rosenbrock_shift) == 390.0);
}

TEST_CASE("f5 six-hump camel at the published point") {
  CHECK(functions::six_hump_camel({-0.0898, 0.7126}) ==
        doctest::Approx(-1.0316).epsilon(1e-3));
}

TEST_CASE("f6 Hosaki at its minimiser (4, 2)") {
  CHECK(functions::hosaki({4.0, 2.0}) ==
        doctest::Approx(-2.3458).epsilon(1e-3));
}

TEST_CASE("f7 Meyer-Roth reproduces the published minimum") {
  const auto& t = catalog().tables();
  const double f = functions::meyer_roth({3.13, 15.16, 0.78}, t.meyer_t,
                                         t.meyer_v, t.meyer_y);
  CHECK(std::abs(f - 0.4e-4) <= 1e-5);
}

TEST_CASE("f8 Shubert at the catalog minimiser") {
  const double f = functions::shubert({-7.0835, 4.8580});
  CHECK(f == doctest::Approx(-186.7309).epsilon(1e-3 / 186.7309));
}

TEST_CASE("f9 pressure vessel: optimum, penalty-free feasibility, penalty") {
  const auto& f9 = catalog().lookup("f9");
  const CandidateVector& opt = *f9.optimum_point;
  CHECK(f9.objective(opt) == doctest::Approx(7197.729).epsilon(0.1 / 7197.729));
  CHECK(f9.constraints->penalty(opt) == 0.0);

  // Feasible interior point: penalised objective equals the raw cost.
  const CandidateVector feasible{2.0, 1.0, 50.0, 100.0};
  CHECK(functions::pressure_vessel_g1(feasible) <= 0.0);
  CHECK(functions::pressure_vessel_g2(feasible) <= 0.0);
  CHECK(functions::pressure_vessel_g3(feasible) <= 0.0);
  CHECK(f9.objective(feasible) == functions::pressure_vessel_cost(feasible));

  // Push x3 past the g1 boundary: strictly above the raw cost.
  const CandidateVector infeasible{1.125, 0.625, 60.0, 100.0};
  CHECK(functions::pressure_vessel_g1(infeasible) > 0.0);
  CHECK(f9.objective(infeasible) > functions::pressure_vessel_cost(infeasible));
}

TEST_CASE("f10 Lennard-Jones: pair energy, invariance, cap, errors") {
  // Two atoms at distance 1: single pair at the potential minimum.
  CHECK(functions::lennard_jones({0, 0, 0, 1, 0, 0}) == -1.0);

  // Rigid translation leaves the energy unchanged.
  Rng rng(23);
  CandidateVector x(15);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  CandidateVector shifted = x;
  for (std::size_t i = 0; i < shifted.size(); ++i)
    shifted[i] += (i % 3 == 0) ? 0.37 : (i % 3 == 1 ? -1.91 : 0.55);
  const double a = functions::lennard_jones(x);
  const double b = functions::lennard_jones(shifted);
  CHECK(std::abs(a - b) <= 1e-9 * std::max(std::abs(a), 1.0));

  // Coincident atoms hit the finite cap instead of overflowing.
  CHECK(functions::lennard_jones({0, 0, 0, 0, 0, 0}) == 1e12);

  CHECK_THROWS_AS(functions::lennard_jones({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("f10 oracle: descent from a perturbed bipyramid finds the optimum") {
  // Triangular bipyramid seed, scaled near the pair-equilibrium distance.
  const double s3 = std::sqrt(3.0);
  CandidateVector seed{0.7,   0.0,        0.0,  -0.35, 0.7 * s3 / 2, 0.0,
                       -0.35, -0.7 * s3 / 2, 0.0, 0.0,  0.0,       0.56,
                       0.0,   0.0,        -0.56};
  Rng rng(31);
  double best = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    CandidateVector x = seed;
    for (auto& v : x) v += rng.uniform(-0.05, 0.05);
    best = std::min(best, lj_descend(std::move(x)));
  }
  CHECK(best == doctest::Approx(-9.1038).epsilon(1e-2 / 9.1038));
  CHECK(best == doctest::Approx(catalog().lookup("f10").optimum_value)
                    .epsilon(1e-3 / 9.1038));
}

TEST_CASE("f11 FM wave: exact zero at the target parameters") {
  const auto& f11 = catalog().lookup("f11");
  CHECK(f11.objective({1.0, 5.0, -1.5, 4.8, 2.0, 4.9}) == 0.0);
}

TEST_CASE("f11 FM wave at the origin equals the target wave energy") {
  // Independent recomputation: at x = 0 the estimated wave vanishes, so the
  // value is the direct sum of squared target samples.
  const double theta = 2.0 * 3.14159265358979323846 / 100.0;
  double expected = 0.0;
  for (int t = 0; t <= 100; ++t) {
    const double y0 = std::sin(5.0 * t * theta -
                               1.5 * std::sin(4.8 * t * theta +
                                              2.0 * std::sin(4.9 * t * theta)));
    expected += y0 * y0;
  }
  const double got = functions::fm_sound_wave(CandidateVector(6, 0.0));
  CHECK(got == doctest::Approx(expected).epsilon(1e-12));
  CHECK(got == doctest::Approx(31.014046918141872).epsilon(1e-9));
}

TEST_CASE("f11 is non-negative everywhere") {
  Rng rng(29);
  for (int rep = 0; rep < 500; ++rep) {
    CandidateVector x(6);
    for (auto& v : x) v = rng.uniform(-6.4, 6.35);
    CHECK(functions::fm_sound_wave(x) >= 0.0);
  }
}

TEST_CASE("closed-form dispatch rejects unknown names and bad dimensions") {
  CHECK_THROWS_AS(catalog().eval_closed_form("f9", {1, 1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(catalog().eval_closed_form("nope", {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(catalog().eval_closed_form("f2", {1.0, 2.0}),
                  std::invalid_argument);
  CHECK(catalog().eval_closed_form("f2", {1, 1, 1, 1}) == 0.0);
}

TEST_CASE("shift vector regenerates from its documented seed") {
  CHECK(generate_rosenbrock_shift() == catalog().tables().rosenbrock_shift);
}

TEST_CASE("tampered data files fail the checksum") {
  std::string dir = "/tmp/msde_tamper_test";
  std::filesystem::create_directories(dir);
  for (const char* f :
       {"kowalik.dat", "meyer_roth.dat", "rosenbrock_shift.dat"}) {
    std::ifstream in(default_data_dir() + "/" + f, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    std::ofstream out(dir + "/" + std::string(f), std::ios::binary);
    out << text.str();
  }
  {
    std::ofstream out(dir + "/kowalik.dat", std::ios::app);
    out << "0.5 0.5\n";
  }
  CHECK_THROWS_AS(ProblemCatalog{dir}, std::runtime_error);
}
