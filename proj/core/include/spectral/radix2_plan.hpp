#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spectral/complex.hpp"

namespace spectral {

/// Arithmetic performed by a transform, counted in complex operations.
struct OpCount {
  std::uint64_t multiplies = 0;
  std::uint64_t additions = 0;

  std::uint64_t total() const noexcept { return multiplies + additions; }
};

/// Precomputed bit-reversal permutation and twiddle table for in-place
/// radix-2 decimation-in-time transforms of one fixed power-of-two length.
///
/// Each butterfly stage combines the half-length spectra of the even and odd
/// subsequences as
///   P[k]       = E[k] + w^k O[k]
///   P[k + m/2] = E[k] - w^k O[k]
/// where w = e^{2 pi i / m} for the current sub-length m. Twiddles for every
/// stage are read with a stride from one table of e^{2 pi i k / n}, each entry
/// evaluated directly from the exponential.
///
/// A plan is immutable after construction and may be shared between threads.
class Radix2Plan {
 public:
  /// Throws Radix2Error if `n` is not a power of two. `axis` only decorates
  /// the error message (-1 for 1D, 0 = x, 1 = y).
  explicit Radix2Plan(std::size_t n, int axis = -1);

  std::size_t size() const noexcept { return n_; }

  /// In-place forward transform with kernel e^{+2 pi i jk/n}; no scaling.
  void forward(std::span<Complex> data, OpCount* ops = nullptr) const;

  /// In-place inverse, computed as conj(forward(conj(X))) / n.
  void inverse(std::span<Complex> data) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> bit_reverse_;
  std::vector<Complex> twiddles_;
};

}  // namespace spectral
