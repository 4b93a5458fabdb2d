#pragma once

#include <cstdint>
#include <random>

namespace uavpc {

// Deterministic random stream. All draws go through explicit conversions so
// results do not depend on standard-library distribution internals; the same
// seed reproduces the same sequence bit-for-bit on a given platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on (0, 1].
  double uniform_open01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Integer in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller; consumes two uniforms every other call.
  double gaussian();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Derives an independent stream seed from a base seed and a stream tag
// (splitmix64 finalizer), used to give parallel workers disjoint streams.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace uavpc
