#pragma once

#include <cmath>

namespace optomech {

// Internal unit system: all rates are angular frequencies (rad/s), hbar = 1,
// dimensionless quadratures q = (a + a^dag)/sqrt(2).

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// hbar / k_B in kelvin * seconds; multiplying by an angular frequency gives
// the temperature equivalent of one quantum.
inline constexpr double kHbarOverKb = 1.0545718176461565e-34 / 1.380649e-23;

// Thermal occupation of a mode at angular frequency omega and temperature T.
inline double thermal_occupation(double omega, double temperature_k) {
  if (temperature_k <= 0.0 || omega <= 0.0) return 0.0;
  const double x = kHbarOverKb * omega / temperature_k;
  return 1.0 / std::expm1(x);
}

// Inverse of thermal_occupation: temperature realizing a given occupation.
inline double temperature_from_occupation(double omega, double n_bar) {
  if (n_bar <= 0.0) return 0.0;
  return kHbarOverKb * omega / std::log1p(1.0 / n_bar);
}

}  // namespace optomech
