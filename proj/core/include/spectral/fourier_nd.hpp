#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "spectral/complex.hpp"
#include "spectral/fourier1d.hpp"
#include "spectral/radix2_plan.hpp"

namespace spectral {

/// Shape and placement of a uniform 2D grid. Sample (j, k) sits at
/// (x0 + j dx, y0 + k dy).
struct GridMeta {
  std::size_t nx = 1;
  std::size_t ny = 1;
  double dx = 1.0;
  double dy = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;

  std::size_t size() const noexcept { return nx * ny; }
  double x(std::size_t j) const noexcept { return x0 + static_cast<double>(j) * dx; }
  double y(std::size_t k) const noexcept { return y0 + static_cast<double>(k) * dy; }
  double length_x() const noexcept { return static_cast<double>(nx) * dx; }
  double length_y() const noexcept { return static_cast<double>(ny) * dy; }
  /// Row-major offset with x varying fastest.
  std::size_t index(std::size_t j, std::size_t k) const noexcept { return k * nx + j; }

  /// Throws InvalidArgument on zero extents or non-positive spacing.
  void validate() const;
  /// Throws Radix2Error naming the first axis that is not a power of two.
  void require_radix2() const;

  /// Square periodic box [lo, hi)^2 with n points per axis.
  static GridMeta square(std::size_t n, double lo, double hi);

  friend bool operator==(const GridMeta&, const GridMeta&) = default;
};

/// Complex samples on a GridMeta, stored row-major with x fastest.
class Grid2D {
 public:
  /// Zero-filled grid.
  explicit Grid2D(const GridMeta& meta);
  /// Throws InvalidArgument if values.size() != nx * ny.
  Grid2D(const GridMeta& meta, std::vector<Complex> values);

  /// Samples `fn(x, y)` at every grid point.
  static Grid2D sample(const GridMeta& meta, const std::function<Complex(double, double)>& fn);

  const GridMeta& meta() const noexcept { return meta_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  std::vector<Complex> release() && { return std::move(values_); }

  Complex& operator()(std::size_t j, std::size_t k) noexcept { return values_[meta_.index(j, k)]; }
  const Complex& operator()(std::size_t j, std::size_t k) const noexcept {
    return values_[meta_.index(j, k)];
  }

 private:
  GridMeta meta_;
  std::vector<Complex> values_;
};

/// Transform-domain counterpart of Grid2D. In Natural layout entry (a, b)
/// corresponds to frequencies (a / (nx dx), b / (ny dy)); Centered applies the
/// 1D centering rotation along each axis.
class Spectrum2D {
 public:
  Spectrum2D(const GridMeta& meta, std::vector<Complex> values, Layout layout = Layout::Natural);

  const GridMeta& meta() const noexcept { return meta_; }
  Layout layout() const noexcept { return layout_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }

  Complex& operator()(std::size_t a, std::size_t b) noexcept { return values_[meta_.index(a, b)]; }
  const Complex& operator()(std::size_t a, std::size_t b) const noexcept {
    return values_[meta_.index(a, b)];
  }

 private:
  GridMeta meta_;
  std::vector<Complex> values_;
  Layout layout_;
};

/// Angular wavenumbers per axis with the upper half of the bins folded onto
/// negative values; the Nyquist bin (index n/2 for even n) carries +pi/d.
struct WavenumberTable {
  std::vector<double> omega_x;
  std::vector<double> omega_y;
  /// omega_x[a]^2 + omega_y[b]^2, indexed like the grid.
  std::vector<double> omega_sq;

  double omega_sq_max() const noexcept;
};

/// Reusable plan for repeated 2D transforms of one shape. Rows (along x) are
/// transformed first, then columns (along y). Each row and column is an
/// independent 1D transform, so `threads > 1` changes scheduling only.
class Fft2Plan {
 public:
  /// Throws Radix2Error naming the offending axis.
  explicit Fft2Plan(const GridMeta& meta);

  const GridMeta& meta() const noexcept { return meta_; }

  void forward(std::span<Complex> values, int threads = 1) const;
  void inverse(std::span<Complex> values, int threads = 1) const;

 private:
  void run(std::span<Complex> values, bool forward, int threads) const;

  GridMeta meta_;
  Radix2Plan plan_x_;
  Radix2Plan plan_y_;
};

/// P(a, b) = sum_{j,k} p(j, k) e^{2 pi i aj/nx} e^{2 pi i bk/ny}.
Spectrum2D fft2_forward(const Grid2D& grid, int threads = 1);

/// Inverse of fft2_forward. Requires Natural layout.
Grid2D fft2_inverse(const Spectrum2D& spectrum, int threads = 1);

WavenumberTable build_wavenumbers(const GridMeta& meta);

Spectrum2D shift_center(const Spectrum2D& spectrum);
Spectrum2D unshift_center(const Spectrum2D& spectrum);

}  // namespace spectral
