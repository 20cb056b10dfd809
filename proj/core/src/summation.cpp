#include "spectral/summation.hpp"

namespace spectral {

namespace {

constexpr std::size_t kLeafSize = 16;

template <typename T>
T cascade(std::span<const T> values) noexcept {
  if (values.size() <= kLeafSize) {
    T sum{};
    for (const T& v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return cascade(values.first(half)) + cascade(values.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) noexcept {
  return cascade(values);
}

Complex pairwise_sum(std::span<const Complex> values) noexcept {
  return cascade(values);
}

}  // namespace spectral
