#include "spectral/radix2_plan.hpp"

#include <utility>

#include "spectral/errors.hpp"

namespace spectral {

Radix2Plan::Radix2Plan(std::size_t n, int axis) : n_(n) {
  if (!is_power_of_two(n)) throw Radix2Error(n, axis);

  unsigned bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;

  bit_reverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t reversed = 0;
    for (unsigned b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) reversed |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = static_cast<std::uint32_t>(reversed);
  }

  twiddles_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) twiddles_[k] = unit_root(k, n);
}

void Radix2Plan::forward(std::span<Complex> data, OpCount* ops) const {
  if (data.size() != n_) throw InvalidArgument("radix-2 plan size does not match input length");

  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(data[i], data[j]);
  }

  std::uint64_t butterflies = 0;
  for (std::size_t length = 2; length <= n_; length <<= 1) {
    const std::size_t half = length / 2;
    const std::size_t stride = n_ / length;
    for (std::size_t start = 0; start < n_; start += length) {
      Complex* even = data.data() + start;
      Complex* odd = even + half;
      for (std::size_t k = 0; k < half; ++k) {
        const Complex t = twiddles_[k * stride] * odd[k];
        odd[k] = even[k] - t;
        even[k] += t;
      }
    }
    butterflies += n_ / 2;
  }

  if (ops != nullptr) {
    ops->multiplies += butterflies;
    ops->additions += 2 * butterflies;
  }
}

void Radix2Plan::inverse(std::span<Complex> data) const {
  for (Complex& z : data) z = std::conj(z);
  forward(data);
  const double scale = 1.0 / static_cast<double>(n_);
  for (Complex& z : data) z = std::conj(z) * scale;
}

}  // namespace spectral
