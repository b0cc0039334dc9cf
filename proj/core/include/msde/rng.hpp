#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace msde {

// Deterministic random stream for one optimization run.
//
// The engine is std::mt19937_64 (bit-exact across platforms by the C++
// standard). Scalar mappings are implemented here instead of through
// std::uniform_*_distribution, whose output is implementation-defined;
// with them, a seed fully determines a trajectory on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [low, high).
  double uniform(double low, double high) {
    return low + uniform01() * (high - low);
  }

  // Uniform integer in [0, n). Requires n > 0.
  int uniform_index(int n) { return static_cast<int>(uniform01() * n); }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; spreads structured inputs over 64 bits.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a over a byte string. Used for seed derivation from problem names
// and as the checksum for the on-disk data tables.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace msde
