#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "bgcf/stats.hpp"

namespace bgcf {

/// Seedable random stream with deterministic substream derivation.
///
/// The generator (xoshiro256**) and every distribution transform are
/// implemented here, so draws are bit-reproducible across platforms and
/// standard-library versions. Substreams are derived by hashing the parent
/// seed with a path of integers, which gives independent streams for
/// parallel replicates without coordination.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_hash_(seed) {
    // splitmix64 expansion of the seed into the full state.
    std::uint64_t x = seed;
    for (auto &word : state_) word = splitmix64(x);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  /// Independent stream identified by (this stream's seed, path...).
  RngStream substream(std::initializer_list<std::uint64_t> path) const {
    std::uint64_t h = seed_hash_;
    for (std::uint64_t w : path) h = mix(h, w);
    return RngStream(h);
  }

  std::uint64_t next_u64() {
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

  /// Uniform on the open interval (0,1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via inverse-CDF of a (0,1) uniform.
  double normal() { return norm_quantile(uniform()); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Gamma(shape, scale) by Marsaglia-Tsang squeeze; shape < 1 boosted.
  double gamma(double shape, double scale) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
  }

  double chi_squared(double df) { return gamma(0.5 * df, 2.0); }

  double inverse_gamma(double shape, double rate) { return rate / gamma(shape, 1.0); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int s) { return (x << s) | (x >> (64 - s)); }

  static std::uint64_t splitmix64(std::uint64_t &x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t mix(std::uint64_t h, std::uint64_t w) {
    std::uint64_t x = h ^ (w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    return splitmix64(x);
  }

  std::uint64_t state_[4];
  std::uint64_t seed_hash_ = 0;
};

}  // namespace bgcf
