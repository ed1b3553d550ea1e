#pragma once

#include <cmath>
#include <cstdint>

namespace gfs {

// Deterministic splitmix64 generator. Standard-library distributions are
// implementation-defined, so every draw that can reach a persisted output
// goes through this class instead; identical seeds give identical streams
// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double symmetric_unit() { return 2.0 * unit() - 1.0; }

  // Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = unit(), u2 = unit();
    while (u1 <= 0.0) u1 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Stable derivation of substream seeds (per trial, per retry, ...).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x94d049bb133111ebULL * (stream + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gfs
