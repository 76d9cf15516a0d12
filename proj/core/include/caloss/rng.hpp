#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace caloss {

// Stateless counter RNG built from the splitmix64 finalizer. Every value is a
// pure function of (seed, stream, counter), so each variable, worker or
// training run draws from its own substream without shared state, and regimes
// that share a seed share base randomness across non-intervened variables.
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(std::uint64_t stream, std::uint64_t counter) const {
    return mix(mix(seed_ + kGolden * (stream + 1)) + kGolden * (counter + 1));
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform(std::uint64_t stream, std::uint64_t counter) const {
    return static_cast<double>(bits(stream, counter) >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; draw k consumes counters 2k and 2k+1.
  double gaussian(std::uint64_t stream, std::uint64_t draw) const {
    const double u1 = uniform(stream, 2 * draw);
    const double u2 = uniform(stream, 2 * draw + 1);
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

// Sequential view over one substream, for consumers that just want a cursor
// (weight init, shuffling, dropout masks).
class StreamDraw {
 public:
  StreamDraw(StreamRng rng, std::uint64_t stream)
      : rng_(rng), stream_(stream) {}

  double uniform() { return rng_.uniform(stream_, counter_++); }

  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t bits() { return rng_.bits(stream_, counter_++); }

  // Portable Fisher-Yates; std::shuffle is implementation-defined.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bits() % i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  StreamRng rng_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace caloss
