#pragma once

#include <cstdint>
#include <cmath>

namespace tsallis {

// SplitMix64 (Steele/Lea/Vigna). Used to expand seeds and to derive
// independent substream seeds, so every consumer of randomness can be
// reproduced from a single master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for substream `index` under `master`: the (index+1)-th output of the
// SplitMix64 sequence started at `master`. Distinct indices give decorrelated,
// reproducible streams regardless of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master + index * 0x9e3779b97f4a7c15ULL;
  return splitmix64(state);
}

// xoshiro256++ 1.0 (Blackman/Vigna, public domain reference implementation).
// A fixed published algorithm: the bit stream for a given seed is identical on
// every conforming platform, which is what makes sweep tables reproducible.
class Xoshiro256 {
public:
  explicit Xoshiro256(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  // Two independent standard normal draws (Box-Muller).
  void normal_pair(double& z0, double& z1) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    z0 = r * std::cos(2.0 * kTwoPi * u2);
    z1 = r * std::sin(2.0 * kTwoPi * u2);
  }

  // Standard exponential draw.
  double exponential() { return -std::log(uniform_pos()); }

private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559005768;
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

}  // namespace tsallis
