#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace spectral::harness {

struct BenchRecord {
  std::size_t n = 0;
  /// Median CPU seconds per call.
  double dft_seconds = 0.0;
  double fft_seconds = 0.0;
  int repetitions = 0;
};

/// Least-squares line through (log x, log y).
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

enum class CostModel { Quadratic, NLogN };

/// t ~ c * g(N) with g fixed by the model; c and R^2 are computed on log t.
struct ModelFit {
  CostModel model = CostModel::Quadratic;
  double coefficient = 0.0;
  double r_squared = 0.0;
};

/// Process CPU time in seconds, or monotonic wall time if the CPU clock is
/// unavailable.
double cpu_seconds();

/// Median CPU seconds per call of `fn`. One warm-up call also sizes a batch so
/// each timed sample lasts at least `min_sample_seconds`.
template <typename Fn>
double median_seconds(Fn&& fn, int repetitions, double min_sample_seconds = 2e-3);

/// Times dft_forward and fft_forward on the same seeded random input per size.
/// Throws InvalidArgument for non-power-of-two sizes or fewer than 5 repetitions.
std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes, int repetitions,
                                   std::uint64_t seed);

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y);
ModelFit fit_model(std::span<const double> n, std::span<const double> seconds, CostModel model);

/// `N,dft_seconds,fft_seconds,repetitions,dft_normalized,fft_normalized,speedup`
/// with both normalized columns relative to the DFT time at the largest N.
void write_bench_csv(std::span<const BenchRecord> records, const std::filesystem::path& path);
/// `algorithm,model,coefficient,r_squared,loglog_slope`
void write_bench_fits(std::span<const BenchRecord> records, const std::filesystem::path& path);

}  // namespace spectral::harness

#include "spectral/harness/bench_impl.hpp"
