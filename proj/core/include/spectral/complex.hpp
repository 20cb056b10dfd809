#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

namespace spectral {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool all_finite(std::span<const Complex> values) noexcept {
  for (const Complex& z : values) {
    if (!is_finite(z)) return false;
  }
  return true;
}

/// e^{2 pi i k / n}, evaluated from the exponential with k reduced mod n.
inline Complex unit_root(std::size_t k, std::size_t n) noexcept {
  const double angle = kTwoPi * static_cast<double>(k % n) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

inline bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace spectral
