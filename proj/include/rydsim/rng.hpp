#ifndef RYDSIM_RNG_HPP
#define RYDSIM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace rydsim {

// Counter-based random number generator. Output i of stream (key) is a pure
// function of (key, i), so streams can be split per trajectory and consumed
// from any thread without coordination, and a rerun with the same master
// seed reproduces every draw bit-for-bit regardless of scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  // Derives the independent stream for one Monte Carlo trajectory.
  static CounterRng trajectory_stream(std::uint64_t master_seed,
                                      std::uint64_t trajectory_index) {
    const std::uint64_t k = mix(master_seed + kGolden * (trajectory_index + 1));
    return CounterRng(mix(k ^ 0x5851f42d4c957f2dULL));
  }

  std::uint64_t next_u64() { return mix(key_ + kGolden * (++counter_)); }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller; the paired draw is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // Shift into (0, 1] so the log argument never vanishes.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Index into a discrete distribution given by nonnegative weights summing
  // to ~1; the final bucket absorbs rounding.
  template <typename Container>
  int categorical(const Container& weights) {
    double u = uniform();
    int last = 0;
    int i = 0;
    for (const double w : weights) {
      if (w > 0.0) last = i;
      u -= w;
      if (u < 0.0 && w > 0.0) return i;
      ++i;
    }
    return last;
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rydsim

#endif  // RYDSIM_RNG_HPP
