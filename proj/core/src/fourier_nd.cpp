#include "spectral/fourier_nd.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "spectral/errors.hpp"
#include "spectral/parallel.hpp"

namespace spectral {

namespace {

// Applies `plan` to every line along `axis` of a row-major array whose first
// axis varies fastest. Works for any rank; the 2D plan calls it once per axis.
void transform_axis(std::span<Complex> values, std::span<const std::size_t> shape,
                    std::size_t axis, const Radix2Plan& plan, bool forward, int threads) {
  std::size_t stride = 1;
  for (std::size_t a = 0; a < axis; ++a) stride *= shape[a];
  const std::size_t length = shape[axis];
  const std::size_t block = stride * length;
  const std::size_t lines = values.size() / length;

  detail::parallel_for(lines, threads, [&](std::size_t line) {
    const std::size_t inner = line % stride;
    const std::size_t outer = line / stride;
    Complex* base = values.data() + outer * block + inner;
    if (stride == 1) {
      std::span<Complex> contiguous(base, length);
      forward ? plan.forward(contiguous) : plan.inverse(contiguous);
      return;
    }
    std::vector<Complex> buffer(length);
    for (std::size_t i = 0; i < length; ++i) buffer[i] = base[i * stride];
    forward ? plan.forward(buffer) : plan.inverse(buffer);
    for (std::size_t i = 0; i < length; ++i) base[i * stride] = buffer[i];
  });
}

std::vector<double> folded_wavenumbers(std::size_t n, double spacing) {
  std::vector<double> omega(n);
  const double length = static_cast<double>(n) * spacing;
  for (std::size_t a = 0; a < n; ++a) {
    const double signed_index =
        (a <= n / 2) ? static_cast<double>(a) : static_cast<double>(a) - static_cast<double>(n);
    omega[a] = kTwoPi * signed_index / length;
  }
  return omega;
}

template <typename IndexMap>
std::vector<Complex> permute_axes(const GridMeta& meta, std::span<const Complex> in,
                                  IndexMap&& map) {
  std::vector<Complex> out(in.size());
  for (std::size_t b = 0; b < meta.ny; ++b) {
    for (std::size_t a = 0; a < meta.nx; ++a) {
      out[meta.index(map(a, meta.nx), map(b, meta.ny))] = in[meta.index(a, b)];
    }
  }
  return out;
}

}  // namespace

void GridMeta::validate() const {
  if (nx == 0 || ny == 0) throw InvalidArgument("grid must have at least one point per axis");
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    throw InvalidArgument("grid spacing must be positive and finite");
  }
  if (!std::isfinite(x0) || !std::isfinite(y0)) throw InvalidArgument("grid origin must be finite");
}

void GridMeta::require_radix2() const {
  if (!is_power_of_two(nx)) throw Radix2Error(nx, 0);
  if (!is_power_of_two(ny)) throw Radix2Error(ny, 1);
}

GridMeta GridMeta::square(std::size_t n, double lo, double hi) {
  if (n == 0 || !(hi > lo)) throw InvalidArgument("square domain needs n >= 1 and hi > lo");
  const double h = (hi - lo) / static_cast<double>(n);
  GridMeta meta{n, n, h, h, lo, lo};
  meta.validate();
  return meta;
}

Grid2D::Grid2D(const GridMeta& meta) : meta_(meta) {
  meta_.validate();
  values_.assign(meta_.size(), Complex{});
}

Grid2D::Grid2D(const GridMeta& meta, std::vector<Complex> values)
    : meta_(meta), values_(std::move(values)) {
  meta_.validate();
  if (values_.size() != meta_.size()) {
    throw InvalidArgument("grid holds " + std::to_string(values_.size()) + " values, expected " +
                          std::to_string(meta_.size()));
  }
}

Grid2D Grid2D::sample(const GridMeta& meta, const std::function<Complex(double, double)>& fn) {
  Grid2D grid(meta);
  for (std::size_t k = 0; k < meta.ny; ++k) {
    const double y = meta.y(k);
    for (std::size_t j = 0; j < meta.nx; ++j) grid(j, k) = fn(meta.x(j), y);
  }
  return grid;
}

Spectrum2D::Spectrum2D(const GridMeta& meta, std::vector<Complex> values, Layout layout)
    : meta_(meta), values_(std::move(values)), layout_(layout) {
  meta_.validate();
  if (values_.size() != meta_.size()) throw InvalidArgument("spectrum size does not match grid metadata");
}

double WavenumberTable::omega_sq_max() const noexcept {
  return omega_sq.empty() ? 0.0 : *std::max_element(omega_sq.begin(), omega_sq.end());
}

Fft2Plan::Fft2Plan(const GridMeta& meta)
    : meta_((meta.validate(), meta.require_radix2(), meta)),
      plan_x_(meta.nx, 0),
      plan_y_(meta.ny, 1) {}

void Fft2Plan::forward(std::span<Complex> values, int threads) const { run(values, true, threads); }

void Fft2Plan::inverse(std::span<Complex> values, int threads) const { run(values, false, threads); }

void Fft2Plan::run(std::span<Complex> values, bool forward, int threads) const {
  if (values.size() != meta_.size()) throw InvalidArgument("2D transform size mismatch");
  const std::array<std::size_t, 2> shape{meta_.nx, meta_.ny};
  transform_axis(values, shape, 0, plan_x_, forward, threads);
  transform_axis(values, shape, 1, plan_y_, forward, threads);
}

Spectrum2D fft2_forward(const Grid2D& grid, int threads) {
  if (!all_finite(grid.values())) throw InvalidArgument("grid contains non-finite values");
  const Fft2Plan plan(grid.meta());
  std::vector<Complex> values(grid.values().begin(), grid.values().end());
  plan.forward(values, threads);
  return Spectrum2D(grid.meta(), std::move(values), Layout::Natural);
}

Grid2D fft2_inverse(const Spectrum2D& spectrum, int threads) {
  if (spectrum.layout() != Layout::Natural) {
    throw LayoutError("inverse 2D transform requires a Natural-layout spectrum");
  }
  const Fft2Plan plan(spectrum.meta());
  std::vector<Complex> values(spectrum.values().begin(), spectrum.values().end());
  plan.inverse(values, threads);
  return Grid2D(spectrum.meta(), std::move(values));
}

WavenumberTable build_wavenumbers(const GridMeta& meta) {
  meta.validate();
  WavenumberTable table;
  table.omega_x = folded_wavenumbers(meta.nx, meta.dx);
  table.omega_y = folded_wavenumbers(meta.ny, meta.dy);
  table.omega_sq.resize(meta.size());
  for (std::size_t b = 0; b < meta.ny; ++b) {
    const double wy = table.omega_y[b];
    for (std::size_t a = 0; a < meta.nx; ++a) {
      const double wx = table.omega_x[a];
      table.omega_sq[meta.index(a, b)] = wx * wx + wy * wy;
    }
  }
  return table;
}

Spectrum2D shift_center(const Spectrum2D& spectrum) {
  if (spectrum.layout() != Layout::Natural) {
    throw LayoutError("shift_center expects a Natural-layout spectrum");
  }
  return Spectrum2D(spectrum.meta(),
                    permute_axes(spectrum.meta(), spectrum.values(), natural_to_centered),
                    Layout::Centered);
}

Spectrum2D unshift_center(const Spectrum2D& spectrum) {
  if (spectrum.layout() != Layout::Centered) {
    throw LayoutError("unshift_center expects a Centered-layout spectrum");
  }
  return Spectrum2D(spectrum.meta(),
                    permute_axes(spectrum.meta(), spectrum.values(), centered_to_natural),
                    Layout::Natural);
}

}  // namespace spectral
