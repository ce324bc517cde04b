// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace esf {

/// SplitMix64: seeds the main generator and serves as the stream-derivation
/// hash.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

/// xoshiro256++ (Blackman & Vigna).  Small state, fast seeding, passes the
/// usual statistical batteries; satisfies UniformRandomBitGenerator.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~static_cast<result_type>(0); }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in (0, 1); never returns 0 so logs stay finite.
  double uniform() {
    double u = static_cast<double>(operator()() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  /// Exponential with the given rate.
  double exponential(double rate) { return -std::log(uniform()) / rate; }

  /// Standard exponential.
  double exponential() { return -std::log(uniform()); }

  /// Uniform integer in [0, bound) by rejection-free Lemire reduction.
  std::uint64_t below(std::uint64_t bound) {
    __uint128_t m = static_cast<__uint128_t>(operator()()) * bound;
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

/// Replicate stream derivation: stream i is a xoshiro256++ generator seeded
/// through SplitMix64 from  master_seed + (i + 1) * golden-gamma.  The
/// mapping is a pure function of (master_seed, i), so any scheduling of
/// replicates across threads reproduces the same draws.
inline Xoshiro256pp seed_replicate_rng(std::uint64_t master_seed, std::uint64_t replicate_index) {
  return Xoshiro256pp(master_seed + (replicate_index + 1) * 0x9e3779b97f4a7c15ull);
}

}  // namespace esf
