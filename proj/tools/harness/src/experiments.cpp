#include "spectral/harness/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "spectral/fourier1d.hpp"
#include "spectral/harness/errors.hpp"
#include "spectral/summation.hpp"

namespace spectral::harness {
namespace fs = std::filesystem;

namespace {

GridMeta box(const RunConfig& cfg, std::size_t n, double lo, double hi) {
  return GridMeta::square(n, cfg.domain_min.value_or(lo), cfg.domain_max.value_or(hi));
}

bool same_time(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

bool is_output_time(const RunConfig& cfg, double t) {
  return std::any_of(cfg.output_times.begin(), cfg.output_times.end(),
                     [&](double o) { return same_time(o, t); });
}

// Runs `solve` over the series times, keeping full frames only at output times.
template <typename Solve>
SeriesRun collect(const std::string& name, const RunConfig& cfg, SolverOptions options,
                  Solve&& solve) {
  SeriesRun run;
  run.name = name;
  options.on_snapshot = [&](Snapshot&& frame) {
    run.diagnostics.push_back(diagnose(frame));
    if (is_output_time(cfg, frame.time)) run.frames.push_back(std::move(frame));
  };
  solve(series_times(cfg), options);
  return run;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void close_out(std::ofstream& out, const fs::path& path) {
  out.close();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

double gaussian_transform_exact(double f) {
  const double a = std::numbers::pi * f;
  return std::sqrt(std::numbers::pi) * std::exp(-a * a);
}

TransformDemo run_transform_demo() {
  TransformDemo demo;
  const std::size_t n = demo.n;
  const double dt = demo.spacing;
  const double period = dt * static_cast<double>(n);
  std::vector<Complex> p(n);
  for (std::size_t j = 0; j < n; ++j) {
    double t = static_cast<double>(j) * dt;
    if (t >= period / 2) t -= period;
    p[j] = std::exp(-t * t);
  }
  const Spectrum1D scaled = spectrum_physical_scale(fft_forward(SampleVector1D(p, dt)), dt);
  const Spectrum1D centered = shift_center(scaled);
  demo.natural_frequency = frequency_axis(n, dt);
  demo.natural.assign(scaled.values().begin(), scaled.values().end());
  demo.centered_frequency = centered_frequency_axis(n, dt);
  demo.centered.assign(centered.values().begin(), centered.values().end());

  const double fc = 0.5 / dt;
  const int half = 200;
  for (int i = -half; i <= half; ++i) {
    const double f = fc * i / half;
    demo.curve_frequency.push_back(f);
    demo.curve_exact.push_back(gaussian_transform_exact(f));
  }
  return demo;
}

std::vector<PoissonRun> run_poisson(const RunConfig& cfg) {
  std::vector<PoissonRun> runs;
  for (std::size_t n : cfg.resolutions) {
    const GridMeta meta = box(cfg, n, -2.0, 2.0);
    Grid2D source = gaussian_profile(meta, cfg.amplitude, cfg.sigma);
    SolverOptions options;
    options.threads = cfg.threads;
    Grid2D solution = solve_poisson({source}, options);
    const double residual = poisson_residual(solution, source);
    runs.push_back({n, std::move(source), std::move(solution), residual});
  }
  return runs;
}

std::vector<double> series_times(const RunConfig& cfg) {
  std::vector<double> times = cfg.output_times;
  if (cfg.diagnostic_interval > 0.0) {
    const auto steps = static_cast<long>(std::floor(cfg.t_final / cfg.diagnostic_interval + 1e-9));
    for (long i = 0; i <= steps; ++i) times.push_back(static_cast<double>(i) * cfg.diagnostic_interval);
  }
  std::sort(times.begin(), times.end());
  std::vector<double> merged;
  for (double t : times) {
    if (t > cfg.t_final && !same_time(t, cfg.t_final)) continue;
    if (!merged.empty() && same_time(merged.back(), t)) {
      // Prefer the exact output time when both lists hold nearly the same value.
      if (is_output_time(cfg, t)) merged.back() = t;
      continue;
    }
    merged.push_back(std::min(t, cfg.t_final));
  }
  return merged;
}

SeriesRun run_diffusion(const RunConfig& cfg, const SolverOptions& base) {
  const GridMeta meta = box(cfg, cfg.resolutions.at(0), -1.0, 1.0);
  DiffusionProblem problem{.initial = gaussian_profile(meta, cfg.amplitude, cfg.sigma)};
  problem.t_final = cfg.t_final;
  problem.dt = cfg.time_step(meta.dx);
  return collect("diffusion", cfg, base, [&](std::vector<double> times, const SolverOptions& o) {
    problem.output_times = std::move(times);
    if (cfg.method == "ode") {
      solve_diffusion_ode(problem, o);
    } else {
      solve_diffusion_closed(problem, o);
    }
  });
}

SeriesRun run_wave_pulse(const RunConfig& cfg, const SolverOptions& base) {
  const GridMeta meta = box(cfg, cfg.resolutions.at(0), -1.0, 1.0);
  WaveProblem problem{.initial_u = gaussian_profile(meta, cfg.amplitude, cfg.sigma),
                      .initial_v = Grid2D(meta)};
  problem.t_final = cfg.t_final;
  problem.dt = cfg.time_step(meta.dx);
  return collect("wave_pulse", cfg, base, [&](std::vector<double> times, const SolverOptions& o) {
    problem.output_times = std::move(times);
    solve_wave_closed(problem, o);
  });
}

namespace {

WaveProblem orbit_problem(const RunConfig& cfg, const GridMeta& meta) {
  OrbitingGaussianSource src;
  src.amplitude = cfg.source_amplitude;
  src.sigma = cfg.source_sigma;
  src.orbit_radius = cfg.orbit_radius;
  src.orbit_omega = cfg.orbit_omega;
  src.gamma = cfg.gamma;
  src.validate();
  WaveProblem problem{.initial_u = Grid2D(meta), .initial_v = Grid2D(meta)};
  problem.source = TimeDependentSource(
      [src](double t, const GridMeta& m) { return orbiting_source_eval(src, t, m); });
  problem.t_final = cfg.t_final;
  problem.dt = cfg.time_step(meta.dx);
  return problem;
}

}  // namespace

SeriesRun run_wave_orbit(const RunConfig& cfg, const SolverOptions& base) {
  const GridMeta meta = box(cfg, cfg.resolutions.at(0), -2.0, 2.0);
  WaveProblem problem = orbit_problem(cfg, meta);
  return collect("wave_orbit", cfg, base, [&](std::vector<double> times, const SolverOptions& o) {
    problem.output_times = std::move(times);
    solve_wave_rk4(problem, o);
  });
}

ConvergenceReport run_convergence(const RunConfig& cfg, const SolverOptions& base) {
  cfg.validate();
  ConvergenceReport report;
  std::copy_n(cfg.resolutions.begin(), 3, report.resolutions.begin());
  const auto count = static_cast<std::size_t>(std::floor(cfg.t_final / cfg.diagnostic_interval + 1e-9));
  for (std::size_t i = 1; i <= count; ++i) report.times.push_back(static_cast<double>(i) * cfg.diagnostic_interval);

  const std::size_t coarse = report.resolutions[0];
  // restricted[r][i] holds run r at report time i, sampled on the coarse points.
  std::array<std::vector<std::vector<Complex>>, 3> restricted;
  std::array<std::vector<double>, 3> means;
  for (std::size_t r = 0; r < 3; ++r) {
    const std::size_t n = report.resolutions[r];
    const std::size_t stride = n / coarse;
    WaveProblem problem = orbit_problem(cfg, box(cfg, n, -2.0, 2.0));
    problem.output_times = report.times;
    SolverOptions options = base;
    options.on_snapshot = [&](Snapshot&& frame) {
      means[r].push_back(grid_mean(frame.grid).real());
      std::vector<Complex> sub;
      sub.reserve(coarse * coarse);
      for (std::size_t k = 0; k < n; k += stride)
        for (std::size_t j = 0; j < n; j += stride) sub.push_back(frame.grid(j, k));
      restricted[r].push_back(std::move(sub));
    };
    solve_wave_rk4(problem, options);
  }

  for (std::size_t i = 0; i < report.times.size(); ++i) {
    report.means.push_back({means[0][i], means[1][i], means[2][i]});
    report.q_mean.push_back((means[1][i] - means[0][i]) / (means[2][i] - means[1][i]));
    std::vector<double> d21, d32;
    for (std::size_t p = 0; p < coarse * coarse; ++p) {
      d21.push_back(std::norm(restricted[1][i][p] - restricted[0][i][p]));
      d32.push_back(std::norm(restricted[2][i][p] - restricted[1][i][p]));
    }
    report.q_grid.push_back(std::sqrt(pairwise_sum(d21) / pairwise_sum(d32)));
  }
  return report;
}

namespace {

void write_transform_demo(const fs::path& dir, std::vector<fs::path>& written) {
  const TransformDemo demo = run_transform_demo();
  const fs::path natural = dir / "transform_natural.csv";
  auto out = open_out(natural);
  out << "k,f,re,im,abs\n";
  for (std::size_t k = 0; k < demo.n; ++k) {
    out << k << ',' << format_double(demo.natural_frequency[k]) << ','
        << format_double(demo.natural[k].real()) << ',' << format_double(demo.natural[k].imag())
        << ',' << format_double(std::abs(demo.natural[k])) << '\n';
  }
  close_out(out, natural);
  written.push_back(natural);

  const fs::path centered = dir / "transform_centered.csv";
  out = open_out(centered);
  out << "i,f,re,im,abs,exact\n";
  for (std::size_t i = 0; i < demo.n; ++i) {
    const double f = demo.centered_frequency[i];
    out << i << ',' << format_double(f) << ',' << format_double(demo.centered[i].real()) << ','
        << format_double(demo.centered[i].imag()) << ',' << format_double(std::abs(demo.centered[i]))
        << ',' << format_double(gaussian_transform_exact(f)) << '\n';
  }
  close_out(out, centered);
  written.push_back(centered);

  const fs::path exact = dir / "transform_exact.csv";
  out = open_out(exact);
  out << "f,exact\n";
  for (std::size_t i = 0; i < demo.curve_frequency.size(); ++i) {
    out << format_double(demo.curve_frequency[i]) << ',' << format_double(demo.curve_exact[i]) << '\n';
  }
  close_out(out, exact);
  written.push_back(exact);
}

void write_series(const SeriesRun& run, const fs::path& dir, std::vector<fs::path>& written) {
  for (const Snapshot& frame : run.frames) {
    const fs::path path = dir / frame_file_name(run.name, frame.time);
    write_grid_csv(frame.grid, frame.time, path);
    written.push_back(path);
  }
  const fs::path diag = dir / (run.name + "_diagnostics.csv");
  write_diagnostics_csv(run.diagnostics, diag);
  written.push_back(diag);
}

}  // namespace

std::vector<fs::path> run_experiment(const RunConfig& cfg,
                                     const std::function<void(const std::string&)>& log) {
  cfg.validate();
  const fs::path dir = cfg.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  SolverOptions options;
  options.threads = cfg.threads;
  options.on_warning = [&](const std::string& w) {
    if (log) log("warning: " + w);
  };

  std::vector<fs::path> written;
  switch (cfg.experiment) {
    case Experiment::Bench: {
      const auto records = run_bench(cfg.sizes, cfg.repetitions, cfg.seed);
      write_bench_csv(records, dir / "bench.csv");
      write_bench_fits(records, dir / "bench_fits.csv");
      written.push_back(dir / "bench.csv");
      written.push_back(dir / "bench_fits.csv");
      break;
    }
    case Experiment::TransformDemo:
      write_transform_demo(dir, written);
      break;
    case Experiment::Poisson: {
      const fs::path diag = dir / "poisson_diagnostics.csv";
      auto out = open_out(diag);
      out << "N,mean_re,mean_im,min_re,max_re,max_abs,residual\n";
      for (const PoissonRun& run : run_poisson(cfg)) {
        const std::string suffix = "_N" + std::to_string(run.n) + ".csv";
        write_grid_csv(run.source, 0.0, dir / ("poisson_source" + suffix));
        write_grid_csv(run.solution, 0.0, dir / ("poisson_solution" + suffix));
        written.push_back(dir / ("poisson_source" + suffix));
        written.push_back(dir / ("poisson_solution" + suffix));
        const DiagnosticRow d = diagnose({0.0, run.solution});
        double lo = INFINITY, hi = -INFINITY;
        for (const Complex& z : run.solution.values()) {
          lo = std::min(lo, z.real());
          hi = std::max(hi, z.real());
        }
        out << run.n << ',' << format_double(d.mean.real()) << ',' << format_double(d.mean.imag())
            << ',' << format_double(lo) << ',' << format_double(hi) << ','
            << format_double(d.max_abs) << ',' << format_double(run.residual) << '\n';
      }
      close_out(out, diag);
      written.push_back(diag);
      break;
    }
    case Experiment::Diffusion:
      write_series(run_diffusion(cfg, options), dir, written);
      break;
    case Experiment::Wave:
      if (cfg.method != "orbit") write_series(run_wave_pulse(cfg, options), dir, written);
      if (cfg.method != "pulse") write_series(run_wave_orbit(cfg, options), dir, written);
      break;
    case Experiment::Convergence: {
      const ConvergenceReport report = run_convergence(cfg, options);
      const fs::path path = dir / "convergence.csv";
      auto out = open_out(path);
      out << "t,q_mean,q_grid,mean_N" << report.resolutions[0] << ",mean_N" << report.resolutions[1]
          << ",mean_N" << report.resolutions[2] << '\n';
      for (std::size_t i = 0; i < report.times.size(); ++i) {
        out << format_double(report.times[i]) << ',' << format_double(report.q_mean[i]) << ','
            << format_double(report.q_grid[i]) << ',' << format_double(report.means[i][0]) << ','
            << format_double(report.means[i][1]) << ',' << format_double(report.means[i][2])
            << '\n';
      }
      close_out(out, path);
      written.push_back(path);
      break;
    }
  }

  write_manifest(cfg, dir / "manifest.txt");
  written.push_back(dir / "manifest.txt");
  if (log) {
    for (const auto& p : written) log("wrote " + p.string());
  }
  return written;
}

}  // namespace spectral::harness
