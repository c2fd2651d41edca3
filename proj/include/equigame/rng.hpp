#ifndef EQUIGAME_RNG_HPP
#define EQUIGAME_RNG_HPP

#include <cassert>
#include <cmath>
#include <cstdint>

namespace equigame {

// Counter-based generator (SplitMix64 core). A stream is fully determined by
// the (seed, stream) pair, so parallel replicas can each derive their own
// stream and the overall run stays reproducible from a single seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : state_(mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(stream + 0xbf58476d1ce4e5b9ull)) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // uniform in [0, 1)
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) noexcept {
    assert(n > 0);
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  // standard normal via Box-Muller, second value cached
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace equigame

#endif
