#pragma once

#include <cstdint>

namespace rsrepair {

/// SplitMix64 (Steele/Lea/Flood). Used to expand a user seed into generator
/// state. Increment 0x9E3779B97F4A7C15, mix constants as published.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman/Vigna), scrambler rotl(s1*5,7)*9.
/// State is seeded from four SplitMix64 outputs so any 64-bit seed works.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero is invalid
  }

  /// Independent per-trial stream: state drawn from the SplitMix64 sequence
  /// starting `stream` increments past `seed`. Deterministic in (seed, stream)
  /// and independent of thread scheduling.
  static Xoshiro256StarStar for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Xoshiro256StarStar(seed + stream * 0x9E3779B97F4A7C15ULL);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform value in [0, bound) by 128-bit multiply-shift (Lemire).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace rsrepair
