// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "oeq/common/errors.hpp"
#include "oeq/common/units.hpp"

namespace oeq::channel {

/// Standard single-mode fiber link geometry and coefficients.
struct FiberParams {
  double attenuation_db_per_km = 0.2;
  double dispersion_ps_nm_km = 17.0;  // D
  double gamma_per_w_km = 1.3;        // nonlinear coefficient
  double span_length_km = 50.0;
  unsigned spans = 20;

  void validate() const {
    if (attenuation_db_per_km < 0.0) throw ConfigError("FiberParams: attenuation must be >= 0");
    if (span_length_km <= 0.0) throw ConfigError("FiberParams: span_length must be > 0");
    if (spans < 1) throw ConfigError("FiberParams: spans must be >= 1");
  }

  double span_loss_db() const { return attenuation_db_per_km * span_length_km; }
  double total_length_m() const { return span_length_km * 1e3 * spans; }
};

/// Per-span EDFA. Gain defaults to the span loss when not overridden.
struct AmplifierParams {
  double noise_figure_db = 4.5;
  double gain_db = -1.0;   // < 0 means "use span loss"
  bool ase_enabled = true;

  double effective_gain_db(const FiberParams& fiber) const {
    return gain_db < 0.0 ? fiber.span_loss_db() : gain_db;
  }

  /// True when the noise figure is at or above the 3 dB quantum limit.
  bool physically_plausible() const { return noise_figure_db >= 3.0; }
};

enum class StepScheme { kUniform, kLogarithmic };

struct SsfmConfig {
  unsigned steps_per_span = 50;
  StepScheme step_scheme = StepScheme::kUniform;
  std::uint64_t seed = 0;

  void validate() const {
    if (steps_per_span < 1) throw ConfigError("SsfmConfig: steps_per_span must be >= 1");
  }
};

}  // namespace oeq::channel
