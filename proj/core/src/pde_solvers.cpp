#include "spectral/pde_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spectral/errors.hpp"
#include "spectral/summation.hpp"
#include "spectral/time_integration.hpp"

namespace spectral {

namespace {

void validate_output_times(const std::vector<double>& times, double t_final) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw InvalidArgument("t_final must be finite and non-negative");
  }
  double previous = 0.0;
  for (double t : times) {
    if (!(t >= 0.0) || t > t_final) throw InvalidArgument("output times must lie in [0, t_final]");
    if (t < previous) throw InvalidArgument("output times must be ascending");
    previous = t;
  }
}

void emit(std::vector<Snapshot>& frames, const SolverOptions& options, Snapshot&& frame) {
  if (options.on_snapshot) {
    options.on_snapshot(std::move(frame));
  } else {
    frames.push_back(std::move(frame));
  }
}

void warn(const SolverOptions& options, const std::string& message) {
  if (options.on_warning) options.on_warning(message);
}

std::vector<Complex> forward_copy(const Fft2Plan& plan, const Grid2D& grid, int threads) {
  if (!all_finite(grid.values())) throw InvalidArgument("grid contains non-finite values");
  std::vector<Complex> values(grid.values().begin(), grid.values().end());
  plan.forward(values, threads);
  return values;
}

Grid2D inverse_copy(const Fft2Plan& plan, std::span<const Complex> spectrum, int threads) {
  std::vector<Complex> values(spectrum.begin(), spectrum.end());
  plan.inverse(values, threads);
  return Grid2D(plan.meta(), std::move(values));
}

void require_source_meta(const Grid2D& source, const GridMeta& meta) {
  if (!(source.meta() == meta)) throw MetadataMismatch("source grid does not match the solution grid");
}

// Marches `state` through every requested output time, recording the
// inverse transform of component 0 at each.
std::vector<Snapshot> march(const Fft2Plan& plan, OdeState state, const std::vector<double>& times,
                            double dt, const OdeRhs& rhs, const SolverOptions& options) {
  std::vector<Snapshot> frames;
  frames.reserve(times.size());
  Rk4Stepper stepper;
  for (double t : times) {
    stepper.advance_to(state, t, dt, rhs);
    emit(frames, options, {t, inverse_copy(plan, state.components[0], options.threads)});
  }
  return frames;
}

}  // namespace

Complex grid_mean(const Grid2D& grid) {
  return pairwise_sum(grid.values()) / static_cast<double>(grid.values().size());
}

Grid2D solve_poisson(const PoissonProblem& problem, const SolverOptions& options) {
  const Grid2D& source = problem.source;
  const Fft2Plan plan(source.meta());
  const WavenumberTable wavenumbers = build_wavenumbers(source.meta());

  const Complex mean = grid_mean(source);
  std::vector<Complex> g(source.values().begin(), source.values().end());
  for (Complex& z : g) z -= mean;
  plan.forward(g, options.threads);

  for (std::size_t i = 0; i < g.size(); ++i) {
    const double w2 = wavenumbers.omega_sq[i];
    g[i] = (w2 == 0.0) ? Complex{} : -g[i] / w2;
  }
  plan.inverse(g, options.threads);
  return Grid2D(source.meta(), std::move(g));
}

Grid2D spectral_laplacian(const Grid2D& u, int threads) {
  const Fft2Plan plan(u.meta());
  const WavenumberTable wavenumbers = build_wavenumbers(u.meta());
  std::vector<Complex> values = forward_copy(plan, u, threads);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= -wavenumbers.omega_sq[i];
  plan.inverse(values, threads);
  return Grid2D(u.meta(), std::move(values));
}

double poisson_residual(const Grid2D& u, const Grid2D& source) {
  if (!(u.meta() == source.meta())) {
    throw MetadataMismatch("solution and source grids have different metadata");
  }
  const Grid2D laplacian = spectral_laplacian(u);
  const Complex mean = grid_mean(source);
  double worst = 0.0;
  for (std::size_t i = 0; i < laplacian.values().size(); ++i) {
    worst = std::max(worst, std::abs(laplacian.values()[i] - (source.values()[i] - mean)));
  }
  return worst;
}

void DiffusionProblem::validate() const {
  initial.meta().require_radix2();
  validate_output_times(output_times, t_final);
}

std::vector<Snapshot> solve_diffusion_closed(const DiffusionProblem& problem,
                                             const SolverOptions& options) {
  problem.validate();
  if (problem.source.has_value()) {
    throw UnsupportedProblem("closed-form diffusion requires s = 0; use the ODE path for sources");
  }
  const GridMeta& meta = problem.initial.meta();
  const Fft2Plan plan(meta);
  const WavenumberTable wavenumbers = build_wavenumbers(meta);
  const std::vector<Complex> f_hat = forward_copy(plan, problem.initial, options.threads);

  std::vector<Snapshot> frames;
  frames.reserve(problem.output_times.size());
  std::vector<Complex> u_hat(f_hat.size());
  for (double t : problem.output_times) {
    for (std::size_t i = 0; i < f_hat.size(); ++i) {
      u_hat[i] = f_hat[i] * std::exp(-wavenumbers.omega_sq[i] * t);
    }
    emit(frames, options, {t, inverse_copy(plan, u_hat, options.threads)});
  }
  return frames;
}

std::vector<Snapshot> solve_diffusion_ode(const DiffusionProblem& problem,
                                          const SolverOptions& options) {
  problem.validate();
  if (!(problem.dt > 0.0)) throw InvalidArgument("diffusion ODE path needs dt > 0");

  const GridMeta& meta = problem.initial.meta();
  const Fft2Plan plan(meta);
  const WavenumberTable wavenumbers = build_wavenumbers(meta);
  const double stiffness = problem.dt * wavenumbers.omega_sq_max();
  if (stiffness > kRk4StabilityLimit) {
    std::ostringstream message;
    message << "dt * max(omega^2) = " << stiffness << " exceeds the RK4 stability limit "
            << kRk4StabilityLimit << "; expect blow-up";
    warn(options, message.str());
  }

  const int threads = options.threads;
  std::vector<Complex> s_hat;
  const OdeRhs rhs = [&](double t, const Fields& y, Fields& dydt) {
    const auto& u_hat = y[0];
    auto& du = dydt[0];
    if (problem.source) {
      Grid2D s = (*problem.source)(t, meta);
      require_source_meta(s, meta);
      s_hat = forward_copy(plan, s, threads);
      for (std::size_t i = 0; i < u_hat.size(); ++i) {
        du[i] = -wavenumbers.omega_sq[i] * u_hat[i] + s_hat[i];
      }
    } else {
      for (std::size_t i = 0; i < u_hat.size(); ++i) du[i] = -wavenumbers.omega_sq[i] * u_hat[i];
    }
  };

  OdeState state{{forward_copy(plan, problem.initial, threads)}, 0.0};
  return march(plan, std::move(state), problem.output_times, problem.dt, rhs, options);
}

void WaveProblem::validate() const {
  initial_u.meta().require_radix2();
  if (!(initial_v.meta() == initial_u.meta())) {
    throw MetadataMismatch("initial u and v grids have different metadata");
  }
  if (const auto* grid = std::get_if<Grid2D>(&source)) require_source_meta(*grid, initial_u.meta());
  if (wave_speed != 1.0) {
    throw UnsupportedProblem("only unit wave speed is supported; rescale time by c instead");
  }
  validate_output_times(output_times, t_final);
}

WaveState wave_closed_state(const WaveProblem& problem, double t, int threads) {
  problem.validate();
  if (std::holds_alternative<TimeDependentSource>(problem.source)) {
    throw UnsupportedProblem("closed-form wave solution needs a static source; use RK4");
  }
  const GridMeta& meta = problem.initial_u.meta();
  const Fft2Plan plan(meta);
  const WavenumberTable wavenumbers = build_wavenumbers(meta);
  const std::vector<Complex> f_hat = forward_copy(plan, problem.initial_u, threads);
  const std::vector<Complex> g_hat = forward_copy(plan, problem.initial_v, threads);
  std::vector<Complex> s_hat(f_hat.size());
  if (const auto* grid = std::get_if<Grid2D>(&problem.source)) {
    s_hat = forward_copy(plan, *grid, threads);
  }

  std::vector<Complex> u_hat(f_hat.size());
  std::vector<Complex> v_hat(f_hat.size());
  for (std::size_t i = 0; i < f_hat.size(); ++i) {
    const double w2 = wavenumbers.omega_sq[i];
    if (w2 == 0.0) {
      u_hat[i] = 0.5 * s_hat[i] * t * t + g_hat[i] * t + f_hat[i];
      v_hat[i] = s_hat[i] * t + g_hat[i];
      continue;
    }
    const double w = std::sqrt(w2);
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    const Complex offset = s_hat[i] / w2;
    const Complex homogeneous = f_hat[i] - offset;
    u_hat[i] = homogeneous * c + (g_hat[i] / w) * s + offset;
    v_hat[i] = -w * homogeneous * s + g_hat[i] * c;
  }
  return {Spectrum2D(meta, std::move(u_hat)), Spectrum2D(meta, std::move(v_hat))};
}

std::vector<Snapshot> solve_wave_closed(const WaveProblem& problem, const SolverOptions& options) {
  problem.validate();
  std::vector<Snapshot> frames;
  frames.reserve(problem.output_times.size());
  for (double t : problem.output_times) {
    WaveState state = wave_closed_state(problem, t, options.threads);
    emit(frames, options, {t, fft2_inverse(state.u_hat, options.threads)});
  }
  return frames;
}

std::vector<Snapshot> solve_wave_rk4(const WaveProblem& problem, const SolverOptions& options) {
  problem.validate();
  if (!(problem.dt > 0.0)) throw InvalidArgument("wave RK4 path needs dt > 0");

  const GridMeta& meta = problem.initial_u.meta();
  const Fft2Plan plan(meta);
  const WavenumberTable wavenumbers = build_wavenumbers(meta);
  const double courant = problem.dt * std::sqrt(wavenumbers.omega_sq_max());
  if (courant > kRk4StabilityLimit) {
    std::ostringstream message;
    message << "dt * max(omega) = " << courant << " exceeds the RK4 stability limit "
            << kRk4StabilityLimit << "; expect blow-up";
    warn(options, message.str());
  }

  const int threads = options.threads;
  std::vector<Complex> s_hat(meta.size());
  const TimeDependentSource* moving = std::get_if<TimeDependentSource>(&problem.source);
  if (const auto* grid = std::get_if<Grid2D>(&problem.source)) {
    s_hat = forward_copy(plan, *grid, threads);
  }

  const OdeRhs rhs = [&](double t, const Fields& y, Fields& dydt) {
    if (moving != nullptr) {
      Grid2D s = (*moving)(t, meta);
      require_source_meta(s, meta);
      s_hat = forward_copy(plan, s, threads);
    }
    const auto& u_hat = y[0];
    const auto& v_hat = y[1];
    auto& du = dydt[0];
    auto& dv = dydt[1];
    for (std::size_t i = 0; i < u_hat.size(); ++i) {
      du[i] = v_hat[i];
      dv[i] = -wavenumbers.omega_sq[i] * u_hat[i] + s_hat[i];
    }
  };

  OdeState state{{forward_copy(plan, problem.initial_u, threads),
                  forward_copy(plan, problem.initial_v, threads)},
                 0.0};
  return march(plan, std::move(state), problem.output_times, problem.dt, rhs, options);
}

void OrbitingGaussianSource::validate() const {
  if (!(sigma > 0.0)) throw InvalidArgument("source width sigma must be positive");
  if (!(orbit_radius >= 0.0)) throw InvalidArgument("orbit radius must be non-negative");
}

Grid2D orbiting_source_eval(const OrbitingGaussianSource& source, double t, const GridMeta& meta) {
  source.validate();
  const double xc = source.orbit_radius * std::cos(source.orbit_omega * t);
  const double yc = source.orbit_radius * std::sin(source.orbit_omega * t);
  return gaussian_profile(meta, source.amplitude * std::cos(source.gamma * t), source.sigma, xc, yc);
}

Grid2D gaussian_profile(const GridMeta& meta, double amplitude, double sigma, double xc,
                        double yc) {
  if (!(sigma > 0.0)) throw InvalidArgument("Gaussian width must be positive");
  const double inv_sigma_sq = 1.0 / (sigma * sigma);
  Grid2D grid(meta);
  // exp(-(dx^2 + dy^2)/s^2) = exp(-dx^2/s^2) exp(-dy^2/s^2)
  std::vector<double> gx(meta.nx);
  for (std::size_t j = 0; j < meta.nx; ++j) {
    const double d = meta.x(j) - xc;
    gx[j] = std::exp(-d * d * inv_sigma_sq);
  }
  for (std::size_t k = 0; k < meta.ny; ++k) {
    const double d = meta.y(k) - yc;
    const double gy = amplitude * std::exp(-d * d * inv_sigma_sq);
    for (std::size_t j = 0; j < meta.nx; ++j) grid(j, k) = gy * gx[j];
  }
  return grid;
}

}  // namespace spectral
