#pragma once

#include <span>

#include "spectral/complex.hpp"

namespace spectral {

// Pairwise (cascade) summation. Error grows like O(eps log n) instead of
// O(eps n) for the naive loop.
double pairwise_sum(std::span<const double> values) noexcept;
Complex pairwise_sum(std::span<const Complex> values) noexcept;

}  // namespace spectral
