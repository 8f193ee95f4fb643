#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <random>

namespace curvop {

/// Deterministic uniform sampler. Doubles are derived from the raw 64-bit
/// stream, so sequences are reproducible across platforms and standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return double(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    int v = lo + int(unit() * double(hi - lo + 1));
    return std::min(v, hi);
  }

  /// Three uniform draws in [lo, hi), sorted ascending.
  std::array<double, 3> sorted_triple(double lo, double hi) {
    std::array<double, 3> t{uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    std::sort(t.begin(), t.end());
    return t;
  }

 private:
  std::mt19937_64 gen_;
};

/// Stream seed for sample `index` under a master seed (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace curvop
