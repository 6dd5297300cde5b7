// Copyright 2026 The seedbank authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained pseudo-random machinery. The standard library's
// distribution objects are implementation-defined, so results would not
// reproduce across toolchains; everything here is pinned down to the bit.

#ifndef SEEDBANK_RNG_HPP
#define SEEDBANK_RNG_HPP

#include <cmath>
#include <cstdint>

#include "seedbank/errors.hpp"

namespace seedbank {

// SplitMix64 finalizer. Used for seeding and for deriving per-replicate
// stream seeds; full-period, passes the usual avalanche tests.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for an independent replicate stream. Distinct (master, index) pairs
// give unrelated states; safe to compose (streams of streams).
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ (mix64(index + 0x632be59bd9b4e019ULL) + 0x9e3779b97f4a7c15ULL));
}

// xoshiro256++ with SplitMix64 state expansion.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    for (auto& word : state_) {
      seed = mix64(seed);
      word = seed;
    }
    // The all-zero state is fixed; mix64 of a zero walk never yields it,
    // but guard anyway.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[3] = 1;
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

  // Uniform on [0,1) with 53 random bits; never returns 1.0.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform on {0,...,n-1}, unbiased (Lemire multiply-reject).
  std::int64_t uniform_int(std::int64_t n) {
    if (n <= 0) throw DomainError("uniform_int: n must be positive");
    const std::uint64_t range = static_cast<std::uint64_t>(n);
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * range;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < range) {
      const std::uint64_t threshold = (0 - range) % range;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * range;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::int64_t>(m >> 64);
  }

  // Exponential with the given mean, by inversion.
  double exponential(double mean) {
    if (!(mean > 0.0)) throw DomainError("exponential: mean must be positive");
    return -mean * std::log1p(-uniform01());
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Geometric on {1,2,...} with success probability p: number of trials up to
// and including the first success, mean 1/p. Inverse CDF: the unique k with
// k-1 < log(1-u)/log(1-p) <= k. Caches 1/log1p(-p) for hot loops.
class GeometricSampler {
 public:
  explicit GeometricSampler(double p) : p_(p) {
    if (!(p > 0.0) || p > 1.0) throw DomainError("geometric: p must be in (0,1]");
    inv_log_q_ = p < 1.0 ? 1.0 / std::log1p(-p) : 0.0;
  }

  std::int64_t draw(Rng& rng) const {
    if (p_ >= 1.0) return 1;
    const double r = std::log1p(-rng.uniform01()) * inv_log_q_;
    const auto k = static_cast<std::int64_t>(std::ceil(r));
    return k < 1 ? 1 : k;
  }

  double p() const { return p_; }

 private:
  double p_;
  double inv_log_q_;
};

inline std::int64_t geometric(Rng& rng, double p) {
  return GeometricSampler(p).draw(rng);
}

}  // namespace seedbank

#endif  // SEEDBANK_RNG_HPP
