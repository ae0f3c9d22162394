// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "oeq/signal/waveform.hpp"

namespace oeq::signal {

/// Square M-QAM alphabet with Gray bit mapping, built from two independent
/// Gray-coded PAM axes (first half of the bit word drives I, second half Q).
/// Points are scaled so the alphabet has unit mean energy; for 64-QAM the
/// scale is 1/sqrt(42).
class ConstellationSpec {
 public:
  /// order must be an even power of two (4, 16, 64, ...).
  explicit ConstellationSpec(unsigned order = 64);

  unsigned order() const { return order_; }
  unsigned bits_per_symbol() const { return bits_; }
  double normalization() const { return scale_; }

  /// Gray map: bit word (bits_per_symbol wide, MSB-first) -> unit-energy point.
  cplx point(std::uint32_t word) const { return points_[word]; }
  const std::vector<cplx>& alphabet() const { return points_; }

  /// Nearest-point hard decision; ties break toward the smaller real part,
  /// then the smaller imaginary part. Returns the Gray bit word.
  std::uint32_t decide(cplx received) const;

 private:
  unsigned order_;
  unsigned bits_;           // log2(order)
  unsigned bits_per_axis_;  // bits_/2
  double scale_;            // 1/sqrt(mean unnormalized energy)
  std::vector<cplx> points_;         // indexed by bit word
  std::vector<std::uint32_t> gray_;  // axis level index -> axis bit word
  std::vector<std::uint32_t> ungray_;
};

/// Packs each log2(order)-bit group through the Gray map.
/// Throws FramingError if bits.size() is not divisible by log2(order).
CplxSeq map_bits_to_symbols(const std::vector<std::uint8_t>& bits, const ConstellationSpec& spec);

/// Hard decision followed by the inverse Gray map.
std::vector<std::uint8_t> demap_symbols_to_bits(const CplxSeq& symbols, const ConstellationSpec& spec);

/// Random bit sequence from an explicitly seeded counter PRNG.
std::vector<std::uint8_t> generate_bits(std::size_t count, std::uint64_t seed);

}  // namespace oeq::signal
