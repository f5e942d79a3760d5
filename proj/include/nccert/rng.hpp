#pragma once

#include <cstdint>
#include <random>

namespace nccert {

/// 64-bit Mersenne Twister with a hand-rolled double conversion, so streams are
/// bit-identical across standard libraries (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the index-th independent unit of work (restart, context).
inline std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) { return seed ^ index; }

}  // namespace nccert
