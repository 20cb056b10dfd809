#include "spectral/sampling.hpp"

#include <cmath>
#include <numbers>

#include "spectral/errors.hpp"

namespace spectral {

namespace {

constexpr double kSingularityEpsilon = 1e-9;

void require_spacing(double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw InvalidArgument("sampling interval must be positive and finite");
  }
}

// sin(pi x) with exact zeros at integer x.
double sin_pi(double x) {
  const double nearest = std::round(x);
  const double remainder = x - nearest;
  const double s = std::sin(std::numbers::pi * remainder);
  return std::fmod(nearest, 2.0) == 0.0 ? s : -s;
}

}  // namespace

BandlimitedSampleSet::BandlimitedSampleSet(std::vector<double> samples, double spacing,
                                           double origin)
    : samples_(std::move(samples)), spacing_(spacing), origin_(origin) {
  require_spacing(spacing_);
  if (!std::isfinite(origin_)) throw InvalidArgument("sample origin must be finite");
  for (double p : samples_) {
    if (!std::isfinite(p)) throw InvalidArgument("samples must be finite");
  }
}

double nyquist_frequency(double spacing) {
  require_spacing(spacing);
  return 1.0 / (2.0 * spacing);
}

double sinc_reconstruct(const BandlimitedSampleSet& set, double t) {
  // With f_c = 1 / (2 dt) each term dt * sin(2 pi f_c s) / (pi s) reduces to
  // sin(pi u) / (pi u) for u = s / dt.
  const double dt = set.spacing();
  const double position = (t - set.origin()) / dt;
  const auto samples = set.samples();

  double sum = 0.0;
  for (std::size_t n = 0; n < samples.size(); ++n) {
    const double u = position - static_cast<double>(n);
    if (std::abs(u) < kSingularityEpsilon) {
      sum += samples[n];
    } else {
      sum += samples[n] * sin_pi(u) / (std::numbers::pi * u);
    }
  }
  return sum;
}

double alias_of(double f, double spacing) {
  require_spacing(spacing);
  double cycles = f * spacing;
  cycles -= std::round(cycles);
  if (cycles <= -0.5) cycles += 1.0;
  return cycles / spacing;
}

}  // namespace spectral
