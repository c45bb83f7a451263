#pragma once

#include <cmath>
#include <cstdint>

namespace frf {

/// Counter-based deterministic stream. A stream is fully determined by the
/// keys it was constructed with (seed, replication, cell indices, ...), so
/// disjoint work units can be filled in any order or from any thread and
/// still produce identical output.
class RngStream {
 public:
  explicit RngStream(std::uint64_t k0, std::uint64_t k1 = 0, std::uint64_t k2 = 0,
                     std::uint64_t k3 = 0) {
    state_ = 0x9e3779b97f4a7c15ULL;
    absorb(k0);
    absorb(k1);
    absorb(k2);
    absorb(k3);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform on (0,1), never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  double exponential() { return -std::log(uniform()); }

  /// Poisson draw; inversion for small means, transformed rejection (PTRS)
  /// for large ones.
  std::uint64_t poisson(double mean);

 private:
  void absorb(std::uint64_t k) { state_ = mix(state_ ^ (k + 0x9e3779b97f4a7c15ULL)); }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

inline std::uint64_t RngStream::poisson(double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 12.0) {
    double l = std::exp(-mean);
    std::uint64_t k = 0;
    double p = uniform();
    while (p > l) {
      ++k;
      p *= uniform();
    }
    return k;
  }
  // Hoermann's PTRS transformed rejection, valid for mean >= 10.
  double b = 0.931 + 2.53 * std::sqrt(mean);
  double a = -0.059 + 0.02483 * b;
  double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  double v_r = 0.9277 - 3.6224 / (b - 2.0);
  double log_mean = std::log(mean);
  for (;;) {
    double u = uniform() - 0.5;
    double v = uniform();
    double us = 0.5 - std::fabs(u);
    double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0)) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

}  // namespace frf
