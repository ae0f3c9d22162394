// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace oeq {

/// In-place complex FFT engine over interleaved dual-polarization data.
/// Wraps FFTW with plans cached per length. Plans use FFTW_ESTIMATE so the
/// transform choice (and hence the output bits) never depends on runtime
/// measurements; reruns of the same config produce identical artifacts.
///
/// Thread safety: plan creation is serialized internally; execute() on
/// distinct Fft instances may run concurrently.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const { return n_; }

  /// Unnormalized forward transform, convention X[k] = sum x[n] e^{-2pi i nk/N}.
  void forward(std::complex<double>* data) const;
  /// Inverse transform including the 1/N normalization.
  void inverse(std::complex<double>* data) const;

  void forward(std::vector<std::complex<double>>& v) const { forward(v.data()); }
  void inverse(std::vector<std::complex<double>>& v) const { inverse(v.data()); }

  /// FFT-bin angular frequencies [rad/s] for a given sample rate, in the
  /// natural bin order (DC first, negative frequencies in the upper half).
  static std::vector<double> angular_frequencies(std::size_t n, double sample_rate);

 private:
  std::size_t n_;
  void* plan_fwd_;  // fftw_plan
  void* plan_inv_;
};

}  // namespace oeq
