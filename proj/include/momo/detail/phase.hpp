#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace momo::detail {

/// e^{2 pi i num/den}, exact when the angle is a multiple of a quarter turn.
inline std::complex<double> root_of_unity(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if ((4 * num) % den == 0) {
    switch ((4 * num) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

/// e^{2 pi i frac} for frac in [0, 1), exact on quarter turns.
inline std::complex<double> unit_phase(long double frac) {
  const long double quarters = frac * 4.0L;
  if (quarters == std::floor(quarters)) {
    return root_of_unity(static_cast<std::uint64_t>(quarters), 4);
  }
  const long double angle = 2.0L * std::numbers::pi_v<long double> * frac;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

}  // namespace momo::detail
