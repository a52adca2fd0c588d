#pragma once

#include <array>
#include <cstdint>

namespace risnoma {

// Seed of one Monte-Carlo trial. The pair (master_seed, trial_index) fully
// determines every random draw made for that trial, so trials can be
// produced independently, in any order, and on any number of threads.
struct RngSeed {
  std::uint64_t master_seed = 1;
  std::uint32_t trial_index = 0;
};

// splitmix64 finalizer (Steele, Lea & Flood, "Fast splittable pseudorandom
// number generators", OOPSLA 2014).
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Derives an independent child seed from (seed, word). Chaining calls walks
// a tree of streams: chain(chain(master, domain), index) etc.
constexpr std::uint64_t seed_chain(std::uint64_t seed, std::uint64_t word) {
  constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ull;
  return mix64(seed + golden_gamma * (word + 1));
}

// Stream domains, so that e.g. channel draws and optimizer restarts for the
// same trial never consume the same stream.
namespace seed_domain {
constexpr std::uint64_t channels = 1;
constexpr std::uint64_t optimizer = 2;
}  // namespace seed_domain

// xoshiro256++ (Blackman & Vigna, 2019), state seeded by splitmix64
// expansion. Fully specified here so that output sequences are identical
// across platforms and standard-library versions.
class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += 0x9e3779b97f4a7c15ull;
      word = mix64(sm);
    }
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

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform01_positive() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace risnoma
