// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace oeq {

/// Counter-based 64-bit PRNG (splitmix64). Every consumer in the project
/// draws from an explicitly seeded stream of these, so any artifact can be
/// regenerated bit-exactly from the seeds recorded in its config.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1], safe as a log() argument.
  double next_double_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller. Not stateful across calls (draws a
  /// fresh pair each time) so streams stay position-independent.
  double next_gaussian() {
    double u = next_double_open();
    double v = next_double();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  /// Gaussian pair, for complex noise (one sqrt/log per two samples).
  void next_gaussian_pair(double& a, double& b) {
    double u = next_double_open();
    double v = next_double();
    double r = std::sqrt(-2.0 * std::log(u));
    double phi = 2.0 * std::numbers::pi * v;
    a = r * std::cos(phi);
    b = r * std::sin(phi);
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

/// One-shot mix of the splitmix64 finalizer; used to derive sub-stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic sub-seed: master seed + stream tag (+ index).
/// Streams used in the pipeline are named by StreamTag so train/test bits,
/// per-span ASE, weight init and batch shuffling never collide.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index = 0) {
  return mix64(master ^ mix64(tag + 0x9e3779b97f4a7c15ULL * (index + 1)));
}

namespace stream_tag {
inline constexpr std::uint64_t kBitsX = 0x01;
inline constexpr std::uint64_t kBitsY = 0x02;
inline constexpr std::uint64_t kAse = 0x03;
inline constexpr std::uint64_t kInit = 0x04;
inline constexpr std::uint64_t kShuffle = 0x05;
inline constexpr std::uint64_t kTrainSplit = 0x06;
inline constexpr std::uint64_t kTestSplit = 0x07;
}  // namespace stream_tag

}  // namespace oeq
