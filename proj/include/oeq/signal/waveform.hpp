// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "oeq/common/errors.hpp"

namespace oeq::signal {

using cplx = std::complex<double>;
using CplxSeq = std::vector<cplx>;

/// Dual-polarization complex baseband field envelope. Samples carry sqrt(W)
/// units: mean(|x|^2 + |y|^2) equals the optical power at that point of the
/// link (launch power right after the transmitter).
struct SampledWaveform {
  CplxSeq samples_x;
  CplxSeq samples_y;
  double sample_rate = 0.0;        // Hz
  double center_wavelength = 0.0;  // m

  std::size_t size() const { return samples_x.size(); }

  void validate() const {
    if (samples_x.size() != samples_y.size())
      throw DimensionError("SampledWaveform: polarization lengths differ (x=" +
                           std::to_string(samples_x.size()) + ", y=" + std::to_string(samples_y.size()) + ")");
    if (samples_x.empty()) throw DimensionError("SampledWaveform: empty");
    if (sample_rate <= 0.0) throw ConfigError("SampledWaveform: sample_rate must be > 0");
  }

  /// Mean power summed over both polarizations [W].
  double mean_power() const {
    double p = 0.0;
    for (std::size_t i = 0; i < samples_x.size(); ++i) p += std::norm(samples_x[i]) + std::norm(samples_y[i]);
    return p / static_cast<double>(samples_x.size());
  }

  /// Total energy in sample units (sum |.|^2 over both polarizations).
  double energy() const {
    double e = 0.0;
    for (std::size_t i = 0; i < samples_x.size(); ++i) e += std::norm(samples_x[i]) + std::norm(samples_y[i]);
    return e;
  }
};

/// Aligned transmitted/received symbol sequences at 1 sample per symbol.
struct SymbolFrame {
  CplxSeq tx_x, tx_y;
  CplxSeq rx_x, rx_y;
  double symbol_rate = 0.0;  // Baud

  std::size_t size() const { return tx_x.size(); }

  void validate() const {
    if (tx_x.size() != tx_y.size() || tx_x.size() != rx_x.size() || tx_x.size() != rx_y.size())
      throw DimensionError("SymbolFrame: sequences have differing lengths");
  }
};

/// Multi-symbol window geometry: input_len symbols in, the centered
/// output_len symbols as targets.
struct WindowSpec {
  std::size_t input_len = 221;
  std::size_t output_len = 171;
  std::size_t stride = 171;

  std::size_t guard() const { return (input_len - output_len) / 2; }

  void validate() const {
    if (input_len < output_len) throw ConfigError("WindowSpec: input_len < output_len");
    if ((input_len - output_len) % 2 != 0)
      throw ConfigError("WindowSpec: input_len - output_len must be even (symmetric guard)");
    if (stride < 1) throw ConfigError("WindowSpec: stride must be >= 1");
  }
};

}  // namespace oeq::signal
