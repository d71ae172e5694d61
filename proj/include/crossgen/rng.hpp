#pragma once

#include <cstdint>
#include <vector>

namespace crossgen {

// SplitMix64 generator. The standard <random> distributions are
// implementation-defined, so every sampled experiment goes through this to
// keep results reproducible from a seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) { next(); }

  // Derives an independent stream, e.g. one per experiment sample.
  Rng(std::uint64_t seed, std::uint64_t stream)
      : Rng(seed + 0x9e3779b97f4a7c15ULL * (stream + 1)) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace crossgen
