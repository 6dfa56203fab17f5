#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace wocsim {

// splitmix64 finalizer, used for seed derivation only.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based seed splitting: derive_seed(base, a, b) feeds each counter
// through the splitmix64 finalizer so nearby (a, b) pairs land on unrelated
// streams. No global RNG anywhere; every run owns its streams.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                    std::uint64_t b = 0) {
  return mix64(mix64(mix64(base) ^ mix64(a)) ^ mix64(b));
}

// Deterministic RNG with documented draw counts. All randomness in the
// simulation goes through this wrapper so traces are bit-reproducible across
// platforms (mt19937_64 output is fixed by the standard; the distributions
// below are implemented here rather than via <random> distributions, whose
// draw counts are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // One draw. Result in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // One draw. Result in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // One draw.
  bool bernoulli(double p) { return uniform01() < p; }

  // Exactly two draws (Box-Muller, second variate discarded so the draw
  // count stays fixed).
  double normal(double mean, double sd) {
    double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    double u2 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    double z = std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    return mean + sd * z;
  }

  // Unbiased integer in [0, n). One draw in the common case (rejection
  // sampling, so the count is variable but seed-determined).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // One draw. probs need not be normalized; total must be positive.
  std::size_t categorical(const std::vector<double>& probs) {
    double total = 0.0;
    for (double p : probs) total += p;
    double u = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return i;
    }
    // fp spill: return the last index with positive mass
    for (std::size_t i = probs.size(); i-- > 0;)
      if (probs[i] > 0.0) return i;
    return probs.size() - 1;
  }

  // Fisher-Yates; draw order is i = n-1 down to 1.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i-- > 1;) {
      std::size_t j = below(i + 1);
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wocsim
