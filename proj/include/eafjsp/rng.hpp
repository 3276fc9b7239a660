#pragma once

#include <cstdint>
#include <vector>

namespace eafjsp {

// All randomness in the library flows through Rng so that a run is fully
// reproducible from one master seed. Streams for individuals, generations
// and experiment cells are derived by folding tags into the seed with
// splitmix64; parallel and serial execution therefore draw identical values.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive: derive_seed(s, a, b) != derive_seed(s, b, a).
template <typename... Tags>
constexpr std::uint64_t derive_seed(std::uint64_t seed, Tags... tags) {
  ((seed = splitmix64(seed ^ static_cast<std::uint64_t>(tags))), ...);
  return splitmix64(seed);
}

inline std::uint64_t hash_bytes(const void* data, std::size_t len,
                                std::uint64_t seed = 0x243f6a8885a308d3ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) h = splitmix64(h ^ p[i]);
  return h;
}

// xoshiro256** with an explicit implementation so results do not depend on
// the standard library. Bounded draws use rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) {
    std::uint64_t s = seed;
    for (auto& w : state_) {
      s = splitmix64(s);
      w = s;
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1).
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  // Fisher-Yates, explicit so shuffles are identical across compilers.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace eafjsp
