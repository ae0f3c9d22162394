// SPDX-License-Identifier: Apache-2.0
#include "oeq/signal/constellation.hpp"

#include <cmath>

#include "oeq/common/rng.hpp"

namespace oeq::signal {

namespace {
bool is_even_power_of_two(unsigned v) {
  if (v < 4) return false;
  unsigned bits = 0;
  while ((v & 1u) == 0) {
    v >>= 1;
    ++bits;
  }
  return v == 1 && bits % 2 == 0;
}
}  // namespace

ConstellationSpec::ConstellationSpec(unsigned order) : order_(order) {
  if (!is_even_power_of_two(order))
    throw ConfigError("ConstellationSpec: order must be an even power of two, got " + std::to_string(order));
  bits_ = 0;
  for (unsigned v = order; v > 1; v >>= 1) ++bits_;
  bits_per_axis_ = bits_ / 2;

  const unsigned levels = 1u << bits_per_axis_;

  // Gray sequence over levels: level index i (amplitude 2i - (levels-1))
  // carries word i ^ (i >> 1), so neighbouring amplitudes differ in one bit.
  gray_.resize(levels);
  ungray_.resize(levels);
  for (unsigned i = 0; i < levels; ++i) {
    gray_[i] = i ^ (i >> 1);
    ungray_[gray_[i]] = i;
  }

  // Mean energy of the unnormalized grid: two independent PAM axes.
  double axis_energy = 0.0;
  for (unsigned i = 0; i < levels; ++i) {
    double amp = 2.0 * static_cast<double>(i) - static_cast<double>(levels - 1);
    axis_energy += amp * amp;
  }
  axis_energy /= levels;
  scale_ = 1.0 / std::sqrt(2.0 * axis_energy);

  points_.resize(order_);
  for (std::uint32_t word = 0; word < order_; ++word) {
    std::uint32_t wi = word >> bits_per_axis_;
    std::uint32_t wq = word & (levels - 1);
    double ai = 2.0 * static_cast<double>(ungray_[wi]) - static_cast<double>(levels - 1);
    double aq = 2.0 * static_cast<double>(ungray_[wq]) - static_cast<double>(levels - 1);
    points_[word] = cplx(ai, aq) * scale_;
  }
}

std::uint32_t ConstellationSpec::decide(cplx received) const {
  const unsigned levels = 1u << bits_per_axis_;
  auto axis_index = [&](double v) -> std::uint32_t {
    // Nearest odd-grid level, ties toward the smaller amplitude.
    double u = (v / scale_ + static_cast<double>(levels - 1)) / 2.0;
    double idx = std::ceil(u - 0.5);  // round half down
    if (idx < 0.0) idx = 0.0;
    if (idx > static_cast<double>(levels - 1)) idx = static_cast<double>(levels - 1);
    return static_cast<std::uint32_t>(idx);
  };
  std::uint32_t wi = gray_[axis_index(received.real())];
  std::uint32_t wq = gray_[axis_index(received.imag())];
  return (wi << bits_per_axis_) | wq;
}

CplxSeq map_bits_to_symbols(const std::vector<std::uint8_t>& bits, const ConstellationSpec& spec) {
  const unsigned bps = spec.bits_per_symbol();
  if (bits.size() % bps != 0)
    throw FramingError("map_bits_to_symbols: bit count " + std::to_string(bits.size()) +
                       " not divisible by bits/symbol " + std::to_string(bps));
  CplxSeq out(bits.size() / bps);
  for (std::size_t s = 0; s < out.size(); ++s) {
    std::uint32_t word = 0;
    for (unsigned b = 0; b < bps; ++b) word = (word << 1) | (bits[s * bps + b] & 1u);
    out[s] = spec.point(word);
  }
  return out;
}

std::vector<std::uint8_t> demap_symbols_to_bits(const CplxSeq& symbols, const ConstellationSpec& spec) {
  const unsigned bps = spec.bits_per_symbol();
  std::vector<std::uint8_t> bits(symbols.size() * bps);
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    std::uint32_t word = spec.decide(symbols[s]);
    for (unsigned b = 0; b < bps; ++b) bits[s * bps + b] = static_cast<std::uint8_t>((word >> (bps - 1 - b)) & 1u);
  }
  return bits;
}

std::vector<std::uint8_t> generate_bits(std::size_t count, std::uint64_t seed) {
  std::vector<std::uint8_t> bits(count);
  SplitMix64 rng(seed);
  std::size_t i = 0;
  while (i < count) {
    std::uint64_t w = rng.next_u64();
    for (int b = 0; b < 64 && i < count; ++b, ++i) bits[i] = static_cast<std::uint8_t>((w >> b) & 1u);
  }
  return bits;
}

}  // namespace oeq::signal
