// SPDX-License-Identifier: Apache-2.0
#include "oeq/common/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>

namespace oeq {

namespace {
// The FFTW planner is not thread safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  std::lock_guard lock(planner_mutex());
  // Plan on a scratch buffer so ESTIMATE planning never touches user data.
  fftw_complex* scratch = fftw_alloc_complex(n);
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_inv_ = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_free(scratch);
}

Fft::~Fft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Fft::forward(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), p, p);
}

void Fft::inverse(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(plan_inv_), p, p);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] *= scale;
}

std::vector<double> Fft::angular_frequencies(std::size_t n, double sample_rate) {
  std::vector<double> w(n);
  const double dw = 2.0 * std::numbers::pi * sample_rate / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto ks = static_cast<std::ptrdiff_t>(k);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    const std::ptrdiff_t signed_k = (ks < static_cast<std::ptrdiff_t>(n) - half) ? ks : ks - static_cast<std::ptrdiff_t>(n);
    w[k] = dw * static_cast<double>(signed_k);
  }
  return w;
}

}  // namespace oeq
