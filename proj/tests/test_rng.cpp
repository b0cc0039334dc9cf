#include <doctest.h>

#include <stdexcept>
#include <array>
#include <vector>

#include "msde/de.hpp"
#include "msde/experiment.hpp"
#include "msde/rng.hpp"

using namespace msde;

TEST_CASE("rng: identical seeds produce identical streams") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.uniform01() == b.uniform01());
}

TEST_CASE("rng: uniform01 stays in [0, 1)") {
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("rng: uniform(a, b) stays in range and uniform_index in [0, n)") {
  Rng rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.uniform(-3.5, 2.25);
    CHECK(v >= -3.5);
    CHECK(v < 2.25);
    const int k = rng.uniform_index(7);
    CHECK(k >= 0);
    CHECK(k < 7);
  }
}

TEST_CASE("fnv1a64 distinguishes names; mix64 spreads small inputs") {
  CHECK(fnv1a64("f1") != fnv1a64("f2"));
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(mix64(1) != mix64(2));
}

TEST_CASE("run_seed is a pure function of its coordinates") {
  const auto s = run_seed(5, "f3", Strategy::De, 17);
  CHECK(s == run_seed(5, "f3", Strategy::De, 17));
  CHECK(s != run_seed(5, "f3", Strategy::De, 18));
  CHECK(s != run_seed(5, "f3", Strategy::Msde, 17));
  CHECK(s != run_seed(5, "f4", Strategy::De, 17));
  CHECK(s != run_seed(6, "f3", Strategy::De, 17));
}

TEST_CASE("sample_distinct_indices: NP=4 yields a permutation of the rest") {
  Rng rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const auto idx = sample_distinct_indices(4, 0, rng);
    std::array<bool, 4> seen{};
    for (int k : idx) {
      CHECK(k >= 1);
      CHECK(k <= 3);
      seen[static_cast<std::size_t>(k)] = true;
    }
    CHECK((seen[1] && seen[2] && seen[3]));
  }
}

TEST_CASE("sample_distinct_indices: excluded index never appears") {
  Rng rng(13);
  for (int rep = 0; rep < 500; ++rep) {
    const auto idx = sample_distinct_indices(50, 7, rng);
    CHECK(idx[0] != 7);
    CHECK(idx[1] != 7);
    CHECK(idx[2] != 7);
    CHECK(idx[0] != idx[1]);
    CHECK(idx[0] != idx[2]);
    CHECK(idx[1] != idx[2]);
  }
}

TEST_CASE("sample_distinct_indices: slot-union frequency matches 3/4") {
  // NP=5 with one excluded leaves four admissible indices; each should land
  // in the drawn triple with probability 3/4.
  Rng rng(17);
  const int draws = 100000;
  std::array<int, 5> hits{};
  for (int rep = 0; rep < draws; ++rep) {
    const auto idx = sample_distinct_indices(5, 2, rng);
    for (int k : idx) ++hits[static_cast<std::size_t>(k)];
  }
  CHECK(hits[2] == 0);
  for (int k : {0, 1, 3, 4}) {
    const double freq = static_cast<double>(hits[static_cast<std::size_t>(k)]) / draws;
    CHECK(freq == doctest::Approx(0.75).epsilon(0.01 / 0.75));
  }
}

TEST_CASE("sample_distinct_indices rejects populations below four") {
  Rng rng(1);
  CHECK_THROWS_AS(sample_distinct_indices(3, 0, rng), std::invalid_argument);
}
