#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "spectral/harness/bench.hpp"
#include "spectral/harness/config.hpp"
#include "spectral/harness/grid_io.hpp"
#include "spectral/pde_solvers.hpp"

namespace spectral::harness {

/// e^{-t^2} sampled periodically on [0, 20) with N = 32 (samples with t >= 10
/// carry the negative-time half). Spectra are scaled by dt so they approximate
/// the continuous transform sqrt(pi) e^{-(pi f)^2}.
struct TransformDemo {
  std::size_t n = 32;
  double spacing = 20.0 / 32.0;
  std::vector<double> natural_frequency;
  std::vector<Complex> natural;
  std::vector<double> centered_frequency;
  std::vector<Complex> centered;
  /// Exact transform on a fine symmetric grid over [-f_c, f_c], f = 0 included.
  std::vector<double> curve_frequency;
  std::vector<double> curve_exact;
};

TransformDemo run_transform_demo();
double gaussian_transform_exact(double f);

struct PoissonRun {
  std::size_t n = 0;
  Grid2D source;
  Grid2D solution;
  double residual = 0.0;
};

std::vector<PoissonRun> run_poisson(const RunConfig& cfg);

/// A time-dependent run: frames at cfg.output_times plus a diagnostics row at
/// every frame and every multiple of cfg.diagnostic_interval.
struct SeriesRun {
  std::string name;
  std::vector<Snapshot> frames;
  std::vector<DiagnosticRow> diagnostics;
};

SeriesRun run_diffusion(const RunConfig& cfg, const SolverOptions& options = {});
/// Gaussian pulse with s = 0 and g = 0, closed-form path.
SeriesRun run_wave_pulse(const RunConfig& cfg, const SolverOptions& options = {});
/// Zero initial data driven by the orbiting source, RK4 path.
SeriesRun run_wave_orbit(const RunConfig& cfg, const SolverOptions& options = {});

/// Times of the diagnostics series: output times merged with multiples of the
/// interval up to t_final.
std::vector<double> series_times(const RunConfig& cfg);

struct ConvergenceReport {
  std::array<std::size_t, 3> resolutions{};
  std::vector<double> times;
  /// (mean_2 - mean_1) / (mean_3 - mean_2) on real parts.
  std::vector<double> q_mean;
  /// ||u_2 - u_1|| / ||u_3 - u_2|| over the points of the coarsest grid.
  std::vector<double> q_grid;
  std::vector<std::array<double, 3>> means;
};

/// Orbiting-source wave runs at N, 2N, 4N with dt = dt_factor * h each;
/// report times are the positive multiples of cfg.diagnostic_interval.
ConvergenceReport run_convergence(const RunConfig& cfg, const SolverOptions& options = {});

/// Validates `cfg`, runs its experiment, writes every artifact plus
/// `manifest.txt` into cfg.out_dir and returns the written paths.
/// `log` receives one line per written file and solver warnings.
std::vector<std::filesystem::path> run_experiment(const RunConfig& cfg,
                                                  const std::function<void(const std::string&)>& log);

}  // namespace spectral::harness
