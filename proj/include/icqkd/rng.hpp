// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace icqkd {

// SplitMix64 (Steele, Lea & Flood): a counter-based 64-bit generator. The
// state advances by a fixed odd increment, so the n-th output is a pure
// function of (initial state, n). Substreams for (seed, stream) pairs are
// derived by remixing, which is what makes per-round simulation
// order-independent and batch-parallel safe.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ull); }

  // Uniform in [0, 1) with full 53-bit mantissa resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
  }

  // Uniform integer in [0, n). Lemire multiply-shift; the bias at n this
  // small is far below anything observable.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Knuth's multiplication method; intended for the sub-unity means of weak
  // coherent pulses, where it needs ~1 + mean uniforms per draw.
  unsigned poisson(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    unsigned k = 0;
    double p = uniform01();
    while (p > limit) {
      ++k;
      p *= uniform01();
    }
    return k;
  }

  // Binomial thinning: survivors of k independent trials at probability p.
  unsigned thin(unsigned k, double p) {
    if (p >= 1.0) return k;
    if (p <= 0.0) return 0;
    unsigned kept = 0;
    for (unsigned i = 0; i < k; ++i) {
      if (uniform01() < p) ++kept;
    }
    return kept;
  }

 private:
  std::uint64_t state_;
};

// Starting state for substream `stream` of a session seeded with `seed`.
inline std::uint64_t substream_state(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(substream_state(seed, stream));
}

// Independent session seed for sweep point / replicate `index`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(substream_state(seed, index) ^ 0xd1f6a5c842e0f3b7ull);
}

}  // namespace icqkd
