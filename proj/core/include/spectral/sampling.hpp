#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spectral {

/// Real samples p_n = p(origin + n * spacing).
class BandlimitedSampleSet {
 public:
  /// Throws InvalidArgument for non-positive spacing or non-finite samples.
  BandlimitedSampleSet(std::vector<double> samples, double spacing, double origin = 0.0);

  std::span<const double> samples() const noexcept { return samples_; }
  double spacing() const noexcept { return spacing_; }
  double origin() const noexcept { return origin_; }
  double time(std::size_t n) const noexcept {
    return origin_ + static_cast<double>(n) * spacing_;
  }

 private:
  std::vector<double> samples_;
  double spacing_;
  double origin_;
};

/// f_c = 1 / (2 spacing). Throws InvalidArgument for spacing <= 0.
double nyquist_frequency(double spacing);

/// Whittaker-Shannon interpolation truncated to the available window:
///   p(t) ~ dt * sum_n p_n sin(2 pi f_c (t - t_n)) / (pi (t - t_n)).
/// Exact at the sample points. Away from them the missing tail contributes an
/// error that shrinks like 1 / (distance to the window edge).
double sinc_reconstruct(const BandlimitedSampleSet& set, double t);

/// The frequency in (-f_c, f_c] that a sinusoid at `f` becomes
/// indistinguishable from once sampled every `spacing`: f - round(f dt) / dt.
/// Ties at -f_c fold to +f_c.
double alias_of(double f, double spacing);

}  // namespace spectral
