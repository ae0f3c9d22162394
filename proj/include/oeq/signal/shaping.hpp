// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oeq/signal/waveform.hpp"

namespace oeq::signal {

/// Unit-energy root-raised-cosine taps at `oversampling` samples/symbol,
/// spanning `span_symbols` symbols (odd tap count, centered).
std::vector<double> rrc_taps(unsigned oversampling, double rolloff, unsigned span_symbols);

/// Upsample by zero insertion and convolve with the unit-energy RRC filter.
/// Same-length convolution: output has symbols.size() * oversampling samples
/// with the filter group delay removed.
CplxSeq rrc_shape(const CplxSeq& symbols, unsigned oversampling, double rolloff, unsigned span_symbols);

/// Matched filter (same RRC, same-length convolution).
CplxSeq rrc_matched_filter(const CplxSeq& samples, unsigned oversampling, double rolloff, unsigned span_symbols);

/// Take every `oversampling`-th sample starting at `phase`.
CplxSeq downsample(const CplxSeq& samples, unsigned oversampling, std::size_t phase = 0);

}  // namespace oeq::signal
