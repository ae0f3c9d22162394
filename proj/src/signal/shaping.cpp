// SPDX-License-Identifier: Apache-2.0
#include "oeq/signal/shaping.hpp"

#include <cmath>
#include <numbers>

#include "oeq/common/fft.hpp"

namespace oeq::signal {

std::vector<double> rrc_taps(unsigned oversampling, double rolloff, unsigned span_symbols) {
  if (oversampling < 2) throw ConfigError("rrc_taps: oversampling must be >= 2");
  if (!(rolloff > 0.0 && rolloff <= 1.0)) throw ConfigError("rrc_taps: rolloff must be in (0, 1]");
  if (span_symbols < 2) throw ConfigError("rrc_taps: span_symbols must be >= 2");

  const std::size_t half = static_cast<std::size_t>(span_symbols) * oversampling / 2;
  const std::size_t n = 2 * half + 1;
  std::vector<double> h(n);

  const double b = rolloff;
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    // t in symbol periods
    double t = (static_cast<double>(i) - static_cast<double>(half)) / oversampling;
    double v;
    if (std::abs(t) < 1e-12) {
      v = 1.0 + b * (4.0 / pi - 1.0);
    } else if (std::abs(std::abs(t) - 1.0 / (4.0 * b)) < 1e-9) {
      v = b / std::sqrt(2.0) *
          ((1.0 + 2.0 / pi) * std::sin(pi / (4.0 * b)) + (1.0 - 2.0 / pi) * std::cos(pi / (4.0 * b)));
    } else {
      double num = std::sin(pi * t * (1.0 - b)) + 4.0 * b * t * std::cos(pi * t * (1.0 + b));
      double den = pi * t * (1.0 - (4.0 * b * t) * (4.0 * b * t));
      v = num / den;
    }
    h[i] = v;
  }

  double energy = 0.0;
  for (double v : h) energy += v * v;
  const double norm = 1.0 / std::sqrt(energy);
  for (double& v : h) v *= norm;
  return h;
}

namespace {

std::size_t next_pow2(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

/// Same-length convolution with an odd, centered tap vector; zero padding
/// outside the sequence. Direct for short inputs, FFT overlap-free for long.
CplxSeq convolve_same(const CplxSeq& x, const std::vector<double>& h) {
  const std::size_t n = x.size();
  const std::size_t taps = h.size();
  const std::size_t half = taps / 2;

  if (n * taps < (1u << 22)) {
    CplxSeq y(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      // y[i] = sum_k h[k] * x[i + half - k]
      const std::size_t k_lo = (i + half >= n) ? i + half - (n - 1) : 0;
      const std::size_t k_hi = std::min(taps - 1, i + half);
      cplx acc(0.0, 0.0);
      for (std::size_t k = k_lo; k <= k_hi; ++k) acc += h[k] * x[i + half - k];
      y[i] = acc;
    }
    return y;
  }

  const std::size_t m = next_pow2(n + taps - 1);
  Fft fft(m);
  CplxSeq xf(m, cplx(0.0, 0.0));
  CplxSeq hf(m, cplx(0.0, 0.0));
  std::copy(x.begin(), x.end(), xf.begin());
  for (std::size_t k = 0; k < taps; ++k) hf[k] = cplx(h[k], 0.0);
  fft.forward(xf);
  fft.forward(hf);
  for (std::size_t k = 0; k < m; ++k) xf[k] *= hf[k];
  fft.inverse(xf);
  // Linear convolution sits at offsets [0, n + taps - 1); center is at +half.
  return CplxSeq(xf.begin() + static_cast<std::ptrdiff_t>(half),
                 xf.begin() + static_cast<std::ptrdiff_t>(half + n));
}

}  // namespace

CplxSeq rrc_shape(const CplxSeq& symbols, unsigned oversampling, double rolloff, unsigned span_symbols) {
  auto h = rrc_taps(oversampling, rolloff, span_symbols);
  CplxSeq up(symbols.size() * oversampling, cplx(0.0, 0.0));
  for (std::size_t s = 0; s < symbols.size(); ++s) up[s * oversampling] = symbols[s];
  return convolve_same(up, h);
}

CplxSeq rrc_matched_filter(const CplxSeq& samples, unsigned oversampling, double rolloff, unsigned span_symbols) {
  auto h = rrc_taps(oversampling, rolloff, span_symbols);
  return convolve_same(samples, h);
}

CplxSeq downsample(const CplxSeq& samples, unsigned oversampling, std::size_t phase) {
  CplxSeq out;
  out.reserve(samples.size() / oversampling + 1);
  for (std::size_t i = phase; i < samples.size(); i += oversampling) out.push_back(samples[i]);
  return out;
}

}  // namespace oeq::signal
