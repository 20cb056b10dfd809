#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spectral/complex.hpp"
#include "spectral/radix2_plan.hpp"

namespace spectral {

/// Ordering of spectral bins.
///
/// Natural: bin k holds frequency k / (N dt), k = 0..N-1.
/// Centered: bins sorted by ascending signed frequency, the upper half of the
/// natural ordering folded onto negative frequencies. For even N the first
/// centered bin is -f_c.
enum class Layout { Natural, Centered };

/// Uniform samples p_n = p(origin + n * spacing), n = 0..N-1.
class SampleVector1D {
 public:
  /// Throws InvalidArgument for empty input, non-positive spacing or
  /// non-finite values.
  SampleVector1D(std::vector<Complex> values, double spacing, double origin = 0.0);

  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double spacing() const noexcept { return spacing_; }
  double origin() const noexcept { return origin_; }
  double coordinate(std::size_t n) const noexcept {
    return origin_ + static_cast<double>(n) * spacing_;
  }
  const Complex& operator[](std::size_t n) const noexcept { return values_[n]; }

 private:
  std::vector<Complex> values_;
  double spacing_;
  double origin_;
};

class Spectrum1D {
 public:
  /// `freq_spacing` is 1 / (N dt). Throws InvalidArgument for empty or
  /// non-finite input.
  Spectrum1D(std::vector<Complex> values, double freq_spacing,
             Layout layout = Layout::Natural);

  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double freq_spacing() const noexcept { return freq_spacing_; }
  Layout layout() const noexcept { return layout_; }
  const Complex& operator[](std::size_t k) const noexcept { return values_[k]; }

  /// Frequency of bin `i` under the current layout. Natural bins report the
  /// unsigned k / (N dt); centered bins report the signed frequency.
  double frequency(std::size_t i) const noexcept;

 private:
  std::vector<Complex> values_;
  double freq_spacing_;
  Layout layout_;
};

/// Dense N x N matrix W with W(k, j) = e^{2 pi i jk / N}.
class FourierMatrix {
 public:
  std::size_t order() const noexcept { return order_; }
  const Complex& operator()(std::size_t k, std::size_t j) const noexcept {
    return entries_[k * order_ + j];
  }
  /// Row-major entries.
  std::span<const Complex> entries() const noexcept { return entries_; }

  /// W x, by explicit matrix-vector product.
  std::vector<Complex> apply(std::span<const Complex> x) const;

 private:
  friend FourierMatrix build_fourier_matrix(std::size_t n);
  FourierMatrix(std::size_t order, std::vector<Complex> entries)
      : order_(order), entries_(std::move(entries)) {}

  std::size_t order_;
  std::vector<Complex> entries_;
};

inline constexpr std::size_t kMaxFourierMatrixOrder = 1024;

// Span-level kernels. `forward` selects the e^{+2 pi i jk/N} kernel; the
// inverse kernel is its conjugate and includes the 1/N factor.
std::vector<Complex> naive_dft(std::span<const Complex> x, bool forward = true,
                               OpCount* ops = nullptr);
std::vector<Complex> radix2_fft(std::span<const Complex> x, bool forward = true,
                                OpCount* ops = nullptr);

/// P_k = sum_j p_j e^{2 pi i jk/N} by direct summation. O(N^2).
Spectrum1D dft_forward(const SampleVector1D& x, OpCount* ops = nullptr);

/// p_j = (1/N) sum_k P_k e^{-2 pi i jk/N}. Requires Natural layout.
SampleVector1D dft_inverse(const Spectrum1D& spectrum, double spacing);

/// Same contract as dft_forward, O(N log N); N must be a power of two.
Spectrum1D fft_forward(const SampleVector1D& x, OpCount* ops = nullptr);

/// (1/N) conj(fft_forward(conj(X))). Requires Natural layout and N = 2^m.
SampleVector1D fft_inverse(const Spectrum1D& spectrum, double spacing);

/// f_k = k / (N spacing), k = 0..N-1.
std::vector<double> frequency_axis(std::size_t n, double spacing);

/// Signed frequencies in Centered order.
std::vector<double> centered_frequency_axis(std::size_t n, double spacing);

Spectrum1D shift_center(const Spectrum1D& spectrum);
Spectrum1D unshift_center(const Spectrum1D& spectrum);

/// Throws InvalidArgument outside 1 <= n <= kMaxFourierMatrixOrder.
FourierMatrix build_fourier_matrix(std::size_t n);

/// Multiplies every bin by `spacing`, turning the unitless DFT into the
/// Riemann-sum approximation of the continuous transform.
Spectrum1D spectrum_physical_scale(const Spectrum1D& spectrum, double spacing);

// Index rotations shared by the 1D and 2D centering code.
std::size_t centered_to_natural(std::size_t i, std::size_t n) noexcept;
std::size_t natural_to_centered(std::size_t k, std::size_t n) noexcept;

}  // namespace spectral
