#include "spectral/fourier1d.hpp"

#include <algorithm>
#include <cmath>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

void require_finite(std::span<const Complex> values, const char* what) {
  if (!all_finite(values)) throw InvalidArgument(std::string(what) + " contains non-finite values");
}

void require_spacing(double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw InvalidArgument("sample spacing must be positive and finite");
  }
}

void require_natural(const Spectrum1D& spectrum) {
  if (spectrum.layout() != Layout::Natural) {
    throw LayoutError("inverse transform requires a Natural-layout spectrum; unshift it first");
  }
}

double frequency_spacing(std::size_t n, double spacing) {
  return 1.0 / (static_cast<double>(n) * spacing);
}

}  // namespace

SampleVector1D::SampleVector1D(std::vector<Complex> values, double spacing, double origin)
    : values_(std::move(values)), spacing_(spacing), origin_(origin) {
  if (values_.empty()) throw InvalidArgument("sample vector must not be empty");
  require_spacing(spacing_);
  if (!std::isfinite(origin_)) throw InvalidArgument("sample origin must be finite");
  require_finite(values_, "sample vector");
}

Spectrum1D::Spectrum1D(std::vector<Complex> values, double freq_spacing, Layout layout)
    : values_(std::move(values)), freq_spacing_(freq_spacing), layout_(layout) {
  if (values_.empty()) throw InvalidArgument("spectrum must not be empty");
  require_finite(values_, "spectrum");
}

double Spectrum1D::frequency(std::size_t i) const noexcept {
  const std::size_t n = values_.size();
  if (layout_ == Layout::Natural) return static_cast<double>(i) * freq_spacing_;
  const auto shift = static_cast<std::ptrdiff_t>(n / 2);
  return static_cast<double>(static_cast<std::ptrdiff_t>(i) - shift) * freq_spacing_;
}

std::vector<Complex> FourierMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != order_) throw InvalidArgument("vector length does not match matrix order");
  std::vector<Complex> out(order_);
  for (std::size_t k = 0; k < order_; ++k) {
    Complex sum{};
    for (std::size_t j = 0; j < order_; ++j) sum += entries_[k * order_ + j] * x[j];
    out[k] = sum;
  }
  return out;
}

std::vector<Complex> naive_dft(std::span<const Complex> x, bool forward, OpCount* ops) {
  const std::size_t n = x.size();
  if (n == 0) throw InvalidArgument("transform input must not be empty");

  std::vector<Complex> roots(n);
  for (std::size_t m = 0; m < n; ++m) {
    roots[m] = forward ? unit_root(m, n) : std::conj(unit_root(m, n));
  }

  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex sum{};
    std::size_t index = 0;  // (j * k) mod n
    for (std::size_t j = 0; j < n; ++j) {
      sum += x[j] * roots[index];
      index += k;
      if (index >= n) index -= n;
    }
    out[k] = sum;
  }

  if (!forward) {
    const double scale = 1.0 / static_cast<double>(n);
    for (Complex& z : out) z *= scale;
  }
  if (ops != nullptr) {
    ops->multiplies += static_cast<std::uint64_t>(n) * n;
    ops->additions += static_cast<std::uint64_t>(n) * (n - 1);
  }
  return out;
}

std::vector<Complex> radix2_fft(std::span<const Complex> x, bool forward, OpCount* ops) {
  if (x.empty()) throw InvalidArgument("transform input must not be empty");
  const Radix2Plan plan(x.size());
  std::vector<Complex> out(x.begin(), x.end());
  if (forward) {
    plan.forward(out, ops);
  } else {
    plan.inverse(out);
  }
  return out;
}

Spectrum1D dft_forward(const SampleVector1D& x, OpCount* ops) {
  return Spectrum1D(naive_dft(x.values(), true, ops), frequency_spacing(x.size(), x.spacing()));
}

SampleVector1D dft_inverse(const Spectrum1D& spectrum, double spacing) {
  require_natural(spectrum);
  return SampleVector1D(naive_dft(spectrum.values(), false), spacing);
}

Spectrum1D fft_forward(const SampleVector1D& x, OpCount* ops) {
  return Spectrum1D(radix2_fft(x.values(), true, ops), frequency_spacing(x.size(), x.spacing()));
}

SampleVector1D fft_inverse(const Spectrum1D& spectrum, double spacing) {
  require_natural(spectrum);
  return SampleVector1D(radix2_fft(spectrum.values(), false), spacing);
}

std::vector<double> frequency_axis(std::size_t n, double spacing) {
  if (n == 0) throw InvalidArgument("frequency axis needs at least one point");
  require_spacing(spacing);
  std::vector<double> axis(n);
  for (std::size_t k = 0; k < n; ++k) {
    axis[k] = static_cast<double>(k) / (static_cast<double>(n) * spacing);
  }
  return axis;
}

std::vector<double> centered_frequency_axis(std::size_t n, double spacing) {
  if (n == 0) throw InvalidArgument("frequency axis needs at least one point");
  require_spacing(spacing);
  std::vector<double> axis(n);
  const auto shift = static_cast<double>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    axis[i] = (static_cast<double>(i) - shift) / (static_cast<double>(n) * spacing);
  }
  return axis;
}

std::size_t centered_to_natural(std::size_t i, std::size_t n) noexcept {
  return (i + (n + 1) / 2) % n;
}

std::size_t natural_to_centered(std::size_t k, std::size_t n) noexcept {
  return (k + n / 2) % n;
}

Spectrum1D shift_center(const Spectrum1D& spectrum) {
  if (spectrum.layout() != Layout::Natural) {
    throw LayoutError("shift_center expects a Natural-layout spectrum");
  }
  const std::size_t n = spectrum.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = spectrum[centered_to_natural(i, n)];
  return Spectrum1D(std::move(out), spectrum.freq_spacing(), Layout::Centered);
}

Spectrum1D unshift_center(const Spectrum1D& spectrum) {
  if (spectrum.layout() != Layout::Centered) {
    throw LayoutError("unshift_center expects a Centered-layout spectrum");
  }
  const std::size_t n = spectrum.size();
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[centered_to_natural(i, n)] = spectrum[i];
  return Spectrum1D(std::move(out), spectrum.freq_spacing(), Layout::Natural);
}

FourierMatrix build_fourier_matrix(std::size_t n) {
  if (n == 0 || n > kMaxFourierMatrixOrder) {
    throw InvalidArgument("Fourier matrix order must lie in [1, " +
                          std::to_string(kMaxFourierMatrixOrder) + "]");
  }
  std::vector<Complex> entries(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) entries[k * n + j] = unit_root((j * k) % n, n);
  }
  return FourierMatrix(n, std::move(entries));
}

Spectrum1D spectrum_physical_scale(const Spectrum1D& spectrum, double spacing) {
  std::vector<Complex> out(spectrum.values().begin(), spectrum.values().end());
  for (Complex& z : out) z *= spacing;
  return Spectrum1D(std::move(out), spectrum.freq_spacing(), spectrum.layout());
}

}  // namespace spectral
