#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace spectral::harness {

template <typename Fn>
double median_seconds(Fn&& fn, int repetitions, double min_sample_seconds) {
  double start = cpu_seconds();
  fn();
  const double warm = std::max(cpu_seconds() - start, 1e-9);
  const long inner = std::max(1L, static_cast<long>(std::ceil(min_sample_seconds / warm)));

  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(repetitions));
  for (int r = 0; r < repetitions; ++r) {
    start = cpu_seconds();
    for (long i = 0; i < inner; ++i) fn();
    samples.push_back((cpu_seconds() - start) / static_cast<double>(inner));
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

}  // namespace spectral::harness
