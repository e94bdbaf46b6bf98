#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace achgnn {

// All randomness in a run flows from one base seed. Components draw from
// fixed offset streams so adding draws in one component never shifts another:
//   stream(k) uses seed = base_seed + k
// Parallel workers follow the same contract: worker i uses stream(base + i).
namespace rng_stream {
inline constexpr std::uint64_t kParamInit = 1;
inline constexpr std::uint64_t kNegativeMining = 2;
inline constexpr std::uint64_t kTraining = 3;
inline constexpr std::uint64_t kSynthetic = 4;
inline constexpr std::uint64_t kFoldSplit = 5;
inline constexpr std::uint64_t kInference = 6;
inline constexpr std::uint64_t kDiagnostics = 7;
}  // namespace rng_stream

// Deterministic generator: mt19937_64 (engine output is pinned by the
// standard) plus hand-rolled distributions, so sequences are identical
// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : base_seed_(seed), engine_(seed) {}

  std::uint64_t base_seed() const { return base_seed_; }

  // Independent stream derived from the same base seed.
  Rng split(std::uint64_t stream) const { return Rng(base_seed_ + stream); }

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_u64(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return x % bound;
  }

  std::uint32_t uniform_u32(std::uint32_t bound) {
    return static_cast<std::uint32_t>(uniform_u64(bound));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; one fresh pair of uniforms per call so
  // the draw count is a pure function of the call count.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  // Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_u64(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices from [0, n), ascending. k >= n returns all of 0..n-1.
  std::vector<std::uint32_t> sample_indices(std::uint32_t n, std::uint32_t k);

 private:
  std::uint64_t base_seed_;
  std::mt19937_64 engine_;
};

}  // namespace achgnn
