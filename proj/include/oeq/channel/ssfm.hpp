// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oeq/channel/fiber.hpp"
#include "oeq/signal/waveform.hpp"

namespace oeq::channel {

/// One symmetric split-step pass over a single span, shared by the forward
/// simulator and digital backpropagation.
///
/// The Manakov pair (x, y) is advanced as
///   D(h/2) N D(h) N ... N D(h/2)
/// where D applies dispersion beta2 and field loss alpha_field in the
/// frequency domain, and N rotates both polarizations by
///   gamma_eff * (|x|^2 + |y|^2) * L_eff(step)
/// with L_eff computed from `alpha_for_leff` (the forward power attenuation,
/// also when running inverted -- this keeps matched-step backpropagation an
/// exact inverse).
struct SpanOps {
  double beta2 = 0.0;           // s^2/m, signed as applied
  double alpha_field = 0.0;     // 1/m field decay (negative = gain)
  double gamma_eff = 0.0;       // 1/(W m), includes the Manakov 8/9, signed
  double alpha_for_leff = 0.0;  // 1/m power attenuation used in L_eff
  double span_m = 0.0;
  unsigned steps = 1;
  StepScheme scheme = StepScheme::kUniform;
  bool reverse_steps = false;  // apply the step-length sequence in reverse
};

/// Advances the pair in place. sample_rate in Hz.
void ssfm_span_inplace(signal::CplxSeq& x, signal::CplxSeq& y, double sample_rate, const SpanOps& ops);

/// Step-length sequence for a span [m]. Uniform or logarithmic (steps sized
/// for equal nonlinear phase under exponential power decay).
std::vector<double> span_step_lengths(double span_m, unsigned steps, StepScheme scheme, double alpha_power_per_m);

/// Effective nonlinear length of one step starting after `z0` of loss.
double step_effective_length(double step_m, double alpha_power_per_m);

/// Forward propagation of one fiber span (no amplifier).
/// Throws ConfigError when the signal occupies more than 80% of Nyquist.
signal::SampledWaveform propagate_span(const signal::SampledWaveform& w, const FiberParams& fiber,
                                       const SsfmConfig& cfg);

/// Fraction of signal power outside +-0.8 * Nyquist; used by the aliasing guard.
double out_of_band_power_fraction(const signal::SampledWaveform& w);

}  // namespace oeq::channel
