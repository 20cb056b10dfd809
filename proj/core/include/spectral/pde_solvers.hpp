#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spectral/fourier_nd.hpp"

namespace spectral {

/// Physical-space source sampled on a grid at time t.
using TimeDependentSource = std::function<Grid2D(double t, const GridMeta& meta)>;

/// Solver output frame.
struct Snapshot {
  double time = 0.0;
  Grid2D grid;
};

struct SolverOptions {
  /// Worker threads for the row/column transforms.
  int threads = 1;
  /// Receives stability warnings. Silent when empty.
  std::function<void(const std::string&)> on_warning;
  /// When set, every frame is handed over as soon as it is computed and the
  /// solver returns an empty vector. Keeps memory flat for long series.
  std::function<void(Snapshot&&)> on_snapshot;
};

/// RK4 stays bounded on the negative real axis down to about -2.785 and on the
/// imaginary axis up to about 2.83; the guard uses 2.8 for both.
inline constexpr double kRk4StabilityLimit = 2.8;

// ---------------------------------------------------------------------------
// Elliptic: laplacian(u) = s on a periodic box.

struct PoissonProblem {
  Grid2D source;
};

/// Arithmetic mean of all samples, by pairwise summation.
Complex grid_mean(const Grid2D& grid);

/// Solves laplacian(u) = s - mean(s). The free constant is fixed by giving u
/// zero mean (u_hat(0, 0) = 0); every other mode is -g_hat / omega^2.
Grid2D solve_poisson(const PoissonProblem& problem, const SolverOptions& options = {});

/// Inverse transform of -omega^2 * u_hat.
Grid2D spectral_laplacian(const Grid2D& u, int threads = 1);

/// max |spectral_laplacian(u) - (s - mean(s))|. Throws MetadataMismatch when
/// the grids differ in shape or placement.
double poisson_residual(const Grid2D& u, const Grid2D& source);

// ---------------------------------------------------------------------------
// Parabolic: du/dt = laplacian(u) + s, u(0) = f.

struct DiffusionProblem {
  Grid2D initial;
  std::optional<TimeDependentSource> source{};
  double t_final = 0.0;
  /// Only used by the ODE path.
  double dt = 0.0;
  std::vector<double> output_times{};

  /// Throws InvalidArgument unless output_times are ascending in [0, t_final].
  void validate() const;
};

/// u_hat(t) = f_hat * exp(-omega^2 t). Throws UnsupportedProblem if a source
/// is present.
std::vector<Snapshot> solve_diffusion_closed(const DiffusionProblem& problem,
                                             const SolverOptions& options = {});

/// Integrates d(u_hat)/dt = -omega^2 u_hat + s_hat(t) with RK4, transforming
/// the physical source at every stage time. Warns when dt * max(omega^2)
/// exceeds the RK4 real-axis limit; throws NumericFailure on blow-up.
std::vector<Snapshot> solve_diffusion_ode(const DiffusionProblem& problem,
                                          const SolverOptions& options = {});

// ---------------------------------------------------------------------------
// Hyperbolic: u_tt - laplacian(u) = s, u(0) = f, u_t(0) = g.

using WaveSource = std::variant<std::monostate, Grid2D, TimeDependentSource>;

struct WaveProblem {
  Grid2D initial_u;
  Grid2D initial_v;
  WaveSource source{};
  /// Only c = 1 is supported; other speeds follow by rescaling t -> c t.
  double wave_speed = 1.0;
  double t_final = 0.0;
  double dt = 0.0;
  std::vector<double> output_times{};

  void validate() const;
};

/// Spectral state of the first-order oscillator system.
struct WaveState {
  Spectrum2D u_hat;
  Spectrum2D v_hat;
};

/// Per-mode forced-oscillator solution at time t for a static (or absent)
/// source:
///   omega != 0: u_hat = (f_hat - s_hat/omega^2) cos(omega t)
///                       + (g_hat/omega) sin(omega t) + s_hat/omega^2
///   omega == 0: u_hat = s_hat t^2 / 2 + g_hat t + f_hat
/// Throws UnsupportedProblem for time-dependent sources.
WaveState wave_closed_state(const WaveProblem& problem, double t, int threads = 1);

std::vector<Snapshot> solve_wave_closed(const WaveProblem& problem,
                                        const SolverOptions& options = {});

/// RK4 on d(u_hat)/dt = v_hat, d(v_hat)/dt = -omega^2 u_hat + s_hat(t).
/// Warns when dt * max(omega) exceeds the RK4 imaginary-axis limit.
std::vector<Snapshot> solve_wave_rk4(const WaveProblem& problem,
                                     const SolverOptions& options = {});

// ---------------------------------------------------------------------------
// Sources and initial data.

/// A * exp(-[(x - x0)^2 + (y - y0)^2] / sigma^2) * cos(gamma t) with the
/// centre on a circle: x0 = r cos(Omega t), y0 = r sin(Omega t).
struct OrbitingGaussianSource {
  double amplitude = 1.0;
  double sigma = 0.1;
  double orbit_radius = 1.0;
  double orbit_omega = 5.0;
  double gamma = 10.0;

  void validate() const;
};

Grid2D orbiting_source_eval(const OrbitingGaussianSource& source, double t, const GridMeta& meta);

/// A * exp(-[(x - xc)^2 + (y - yc)^2] / sigma^2).
Grid2D gaussian_profile(const GridMeta& meta, double amplitude, double sigma, double xc = 0.0,
                        double yc = 0.0);

}  // namespace spectral
