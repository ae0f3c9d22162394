// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace oeq {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s
inline constexpr double kPlanck = 6.62607015e-34;      // J*s

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

/// Power attenuation coefficient in 1/m from dB/km.
inline double attenuation_per_meter(double db_per_km) {
  return db_per_km * std::numbers::ln10 / 10.0 / 1000.0;
}

/// Group-velocity dispersion beta2 [s^2/m] from D [ps/(nm km)] at wavelength
/// lambda [m]. beta2 = -D lambda^2 / (2 pi c); D > 0 gives beta2 < 0.
inline double beta2_from_dispersion(double d_ps_nm_km, double lambda_m) {
  double d_si = d_ps_nm_km * 1e-6;  // s/m^2
  return -d_si * lambda_m * lambda_m / (2.0 * std::numbers::pi * kSpeedOfLight);
}

}  // namespace oeq
