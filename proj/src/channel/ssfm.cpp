// SPDX-License-Identifier: Apache-2.0
#include "oeq/channel/ssfm.hpp"

#include <cmath>

#include "oeq/common/fft.hpp"

namespace oeq::channel {

using signal::CplxSeq;
using signal::SampledWaveform;

std::vector<double> span_step_lengths(double span_m, unsigned steps, StepScheme scheme, double alpha_power_per_m) {
  std::vector<double> h(steps);
  if (scheme == StepScheme::kUniform || alpha_power_per_m <= 0.0) {
    std::fill(h.begin(), h.end(), span_m / steps);
    return h;
  }
  // Equal nonlinear phase per step under exponential power decay:
  // boundaries z_k with (1 - e^{-a z_k}) = (k/K)(1 - e^{-a L}).
  const double a = alpha_power_per_m;
  const double total = 1.0 - std::exp(-a * span_m);
  double prev = 0.0;
  for (unsigned k = 1; k <= steps; ++k) {
    double zk = (k == steps) ? span_m : -std::log(1.0 - total * k / steps) / a;
    h[k - 1] = zk - prev;
    prev = zk;
  }
  return h;
}

double step_effective_length(double step_m, double alpha_power_per_m) {
  if (alpha_power_per_m == 0.0) return step_m;
  return (1.0 - std::exp(-alpha_power_per_m * step_m)) / alpha_power_per_m;
}

namespace {

/// D operator over length l: dispersion phase + field loss, frequency domain.
void linear_step(CplxSeq& x, CplxSeq& y, const Fft& fft, const std::vector<double>& omega, double beta2,
                 double alpha_field, double l) {
  fft.forward(x);
  fft.forward(y);
  const double amp = std::exp(-0.5 * alpha_field * l);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double phase = 0.5 * beta2 * omega[k] * omega[k] * l;
    const std::complex<double> m = std::polar(amp, phase);
    x[k] *= m;
    y[k] *= m;
  }
  fft.inverse(x);
  fft.inverse(y);
}

/// N operator: common phase rotation from the instantaneous dual-pol power.
void nonlinear_step(CplxSeq& x, CplxSeq& y, double gamma_eff, double l_eff) {
  const double c = gamma_eff * l_eff;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = std::norm(x[i]) + std::norm(y[i]);
    const std::complex<double> r = std::polar(1.0, c * p);
    x[i] *= r;
    y[i] *= r;
  }
}

}  // namespace

void ssfm_span_inplace(CplxSeq& x, CplxSeq& y, double sample_rate, const SpanOps& ops) {
  Fft fft(x.size());
  const auto omega = Fft::angular_frequencies(x.size(), sample_rate);

  auto steps = span_step_lengths(ops.span_m, ops.steps, ops.scheme, ops.alpha_for_leff);
  if (ops.reverse_steps) std::reverse(steps.begin(), steps.end());

  // Symmetric scheme with merged interior half-steps:
  // D(h1/2) N(h1) D((h1+h2)/2) N(h2) ... N(hK) D(hK/2)
  double pending = steps[0] / 2.0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    linear_step(x, y, fft, omega, ops.beta2, ops.alpha_field, pending);
    nonlinear_step(x, y, ops.gamma_eff, step_effective_length(steps[k], ops.alpha_for_leff));
    pending = (k + 1 < steps.size()) ? (steps[k] + steps[k + 1]) / 2.0 : steps[k] / 2.0;
  }
  linear_step(x, y, fft, omega, ops.beta2, ops.alpha_field, pending);
}

double out_of_band_power_fraction(const SampledWaveform& w) {
  Fft fft(w.size());
  CplxSeq fx = w.samples_x;
  CplxSeq fy = w.samples_y;
  fft.forward(fx);
  fft.forward(fy);
  const std::size_t n = w.size();
  // Natural bin order: indices [0, n/2) positive, [n/2, n) negative.
  const double guard = 0.8 * 0.5;  // fraction of the sample rate
  double total = 0.0, outside = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double f_frac =
        (k < n - n / 2) ? static_cast<double>(k) / n : (static_cast<double>(k) - static_cast<double>(n)) / n;
    const double p = std::norm(fx[k]) + std::norm(fy[k]);
    total += p;
    if (std::abs(f_frac) > guard) outside += p;
  }
  return total > 0.0 ? outside / total : 0.0;
}

SampledWaveform propagate_span(const SampledWaveform& w, const FiberParams& fiber, const SsfmConfig& cfg) {
  w.validate();
  fiber.validate();
  cfg.validate();

  if (out_of_band_power_fraction(w) > 1e-3)
    throw ConfigError("propagate_span: signal occupies more than 80% of Nyquist; raise the sample rate");

  SampledWaveform out = w;
  SpanOps ops;
  ops.beta2 = beta2_from_dispersion(fiber.dispersion_ps_nm_km, w.center_wavelength);
  const double alpha = attenuation_per_meter(fiber.attenuation_db_per_km);
  ops.alpha_field = alpha;
  ops.alpha_for_leff = alpha;
  ops.gamma_eff = (8.0 / 9.0) * fiber.gamma_per_w_km * 1e-3;  // 1/(W m)
  ops.span_m = fiber.span_length_km * 1e3;
  ops.steps = cfg.steps_per_span;
  ops.scheme = cfg.step_scheme;
  ssfm_span_inplace(out.samples_x, out.samples_y, out.sample_rate, ops);
  return out;
}

}  // namespace oeq::channel
