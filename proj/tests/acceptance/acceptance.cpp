// One line per acceptance criterion. Exit status is 0 when every criterion
// matches its expectation (pass, or fail if listed with --expect-fail).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "spectral/fourier1d.hpp"
#include "spectral/fourier_nd.hpp"
#include "spectral/harness/bench.hpp"
#include "spectral/harness/config.hpp"
#include "spectral/harness/experiments.hpp"
#include "spectral/pde_solvers.hpp"
#include "spectral/sampling.hpp"
#include "spectral/time_integration.hpp"

namespace {

using namespace spectral;
namespace h = spectral::harness;
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<Complex> to_vec(std::span<const Complex> s) { return {s.begin(), s.end()}; }

// 1 -----------------------------------------------------------------------
Outcome transform_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  double worst_oracle = 0.0;
  for (std::size_t m = 0; m <= 12; ++m) {
    const std::size_t n = std::size_t{1} << m;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto x = oracle::random_complex(n, 1000 * m + seed);
      const auto dft = naive_dft(x);
      const auto fft = radix2_fft(x);
      worst = std::max(worst, max_diff(fft, dft) / oracle::max_abs(dft));
      if (seed == 0 && m <= 10) {
        const auto ref = oracle::dft(x);
        worst_oracle = std::max(worst_oracle, oracle::max_abs_diff(dft, ref) / oracle::max_abs(ref));
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {worst < 1e-10 && worst_oracle < 1e-10 && elapsed < 30.0,
          "max|FFT-DFT|/max|DFT| = " + sci(worst) + " over N=2^0..2^12 x 20 inputs; DFT vs direct sum " +
              sci(worst_oracle) + "; " + sci(elapsed) + " s"};
}

// 2 -----------------------------------------------------------------------
Outcome fourier_matrix_unitarity() {
  double worst = 0.0;
  for (std::size_t n = 1; n <= 64; ++n) {
    const FourierMatrix w = build_fourier_matrix(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        cd sum{};
        for (std::size_t k = 0; k < n; ++k) sum += std::conj(w(k, r)) * w(k, c);
        sum /= static_cast<double>(n);
        worst = std::max(worst, std::abs(sum - (r == c ? cd{1.0} : cd{})));
      }
    }
  }
  return {worst < 1e-12, "max |(1/N) W^H W - I| = " + sci(worst) + " for N=1..64"};
}

// 3 -----------------------------------------------------------------------
double periodic_gaussian(double t) {
  const double s = t < 10.0 ? t : t - 20.0;
  return std::exp(-s * s);
}

Outcome gaussian_transform_demo() {
  const h::TransformDemo demo = h::run_transform_demo();
  const double fs = 1.0 / demo.spacing;
  double worst_exact = 0.0;       // |DFT - exact| beyond the measured discretization error
  double worst_oracle_exact = 0.0;
  double worst_alias_model = 0.0;
  double worst_agreement = 0.0;
  double worst_f = 0.0;
  int agreeing = 0;
  for (std::size_t i = 0; i < demo.n; ++i) {
    const double f = demo.centered_frequency[i];
    const cd dft = demo.centered[i];
    const cd ref = oracle::riemann_ft(periodic_gaussian, f, 0.0, 20.0, 1'000'000);
    const double exact = h::gaussian_transform_exact(f);
    const double discretization = std::abs(dft - ref);
    worst_exact = std::max(worst_exact, std::abs(dft - exact) - discretization);
    worst_oracle_exact = std::max(worst_oracle_exact, std::abs(ref - exact));
    // Sampling every dt folds the transform at f + m/dt onto f.
    double alias = 0.0;
    for (int m = -3; m <= 3; ++m) {
      if (m != 0) alias += h::gaussian_transform_exact(f + m * fs);
    }
    worst_alias_model = std::max(worst_alias_model, std::abs(discretization - alias));
    if (discretization < 1e-6) ++agreeing;
    if (discretization > worst_agreement) {
      worst_agreement = discretization;
      worst_f = f;
    }
  }
  const bool matches = worst_exact <= 1e-6 && worst_oracle_exact < 1e-6 && worst_alias_model < 1e-9;
  const bool agrees = worst_agreement < 1e-6;
  std::ostringstream d;
  d << "exact match within discretization error: " << (matches ? "yes" : "no")
    << " (oracle vs exact " << sci(worst_oracle_exact) << ", DFT-oracle gap minus alias sum "
    << sci(worst_alias_model) << "); DFT vs oracle <= 1e-6 at " << agreeing << "/" << demo.n
    << " bins, worst " << sci(worst_agreement) << " at f=" << worst_f;
  return {matches && agrees, d.str()};
}

// 4 -----------------------------------------------------------------------
Outcome complexity_scaling() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::size_t> sizes;
  for (std::size_t n = 8; n <= 4096; n *= 2) sizes.push_back(n);
  const auto records = h::run_bench(sizes, 5, 7);
  std::vector<double> n, dft, fft;
  for (const auto& r : records) {
    n.push_back(static_cast<double>(r.n));
    dft.push_back(r.dft_seconds);
    fft.push_back(r.fft_seconds);
  }
  const double slope = h::fit_loglog(n, dft).slope;
  const double r2_nlogn = h::fit_model(n, fft, h::CostModel::NLogN).r_squared;
  const double r2_quad = h::fit_model(n, fft, h::CostModel::Quadratic).r_squared;

  const std::vector<std::size_t> big{std::size_t{1} << 15};
  const auto top = h::run_bench(big, 5, 7).front();
  const double speedup = top.dft_seconds / top.fft_seconds;
  const double elapsed = seconds_since(start);

  const bool pass = std::abs(slope - 2.0) <= 0.2 && r2_nlogn > r2_quad && speedup >= 100.0 &&
                    elapsed < 300.0;
  return {pass, "DFT log-log slope " + sci(slope) + "; FFT R^2 NlogN " + sci(r2_nlogn) + " vs N^2 " +
                    sci(r2_quad) + "; speedup at 2^15 " + sci(speedup) + "x; " + sci(elapsed) + " s"};
}

// 5 -----------------------------------------------------------------------
Outcome fft2_double_sum() {
  double worst = 0.0;
  std::uint64_t seed = 0;
  for (std::size_t nx = 1; nx <= 16; nx *= 2) {
    for (std::size_t ny = 1; ny <= 16; ny *= 2) {
      for (int rep = 0; rep < 3; ++rep) {
        const auto p = oracle::random_complex(nx * ny, ++seed);
        const Grid2D grid(GridMeta{nx, ny, 0.1, 0.2, 0.0, 0.0}, p);
        const auto ref = oracle::dft2_double_sum(p, nx, ny);
        worst = std::max(worst, max_diff(fft2_forward(grid).values(), ref));
      }
    }
  }
  return {worst < 1e-10, "max |FFT2 - double sum| = " + sci(worst) + " over 1x1..16x16"};
}

// 6 -----------------------------------------------------------------------
Outcome poisson() {
  const double length = 4.0;
  const double k = 2.0 * kPi / length;
  const double amplitude = -1.0 / (2.0 * k * k);
  double worst_mode = 0.0;
  for (std::size_t n : {64, 128}) {
    const GridMeta meta = GridMeta::square(n, -2.0, 2.0);
    const Grid2D s = Grid2D::sample(meta, [&](double x, double y) { return std::sin(k * x) * std::sin(k * y); });
    const Grid2D u = solve_poisson({s});
    for (std::size_t i = 0; i < s.values().size(); ++i) {
      worst_mode = std::max(worst_mode, std::abs(u.values()[i] - amplitude * s.values()[i]));
    }
  }
  const h::RunConfig cfg = h::default_config(h::Experiment::Poisson);
  double worst_residual = 0.0;
  for (const auto& run : h::run_poisson(cfg)) {
    double smax = 0.0;
    for (const Complex& z : run.source.values()) smax = std::max(smax, std::abs(z));
    worst_residual = std::max(worst_residual, run.residual / smax);
  }
  return {worst_mode < 1e-8 && worst_residual < 1e-8,
          "eigenmode error " + sci(worst_mode) + " (amplitude " + sci(amplitude) +
              "); Gaussian residual/max|s| " + sci(worst_residual) + " at N=64,128"};
}

// 7 -----------------------------------------------------------------------
Outcome diffusion_conservation() {
  const h::RunConfig cfg = h::default_config(h::Experiment::Diffusion);
  const h::SeriesRun run = h::run_diffusion(cfg);
  const double f_mean = run.diagnostics.front().mean.real();
  double drift = 0.0;
  for (const auto& row : run.diagnostics) drift = std::max(drift, std::abs(row.mean.real() / f_mean - 1.0));

  // Every non-zero mode decays at least like exp(-omega_min^2 t).
  const GridMeta meta = GridMeta::square(cfg.resolutions[0], *cfg.domain_min, *cfg.domain_max);
  const Grid2D f = gaussian_profile(meta, cfg.amplitude, cfg.sigma);
  const Spectrum2D f_hat = fft2_forward(f);
  const WavenumberTable w = build_wavenumbers(meta);
  double tail = 0.0, omega_min_sq = std::numeric_limits<double>::infinity(), f_max = 0.0;
  for (std::size_t i = 1; i < f_hat.values().size(); ++i) {
    tail += std::abs(f_hat.values()[i]);
    omega_min_sq = std::min(omega_min_sq, w.omega_sq[i]);
  }
  for (const Complex& z : f.values()) f_max = std::max(f_max, std::abs(z));
  const double n_total = static_cast<double>(meta.size());
  const double t_end = cfg.t_final;
  const double mode_bound = tail / n_total * std::exp(-omega_min_sq * t_end);
  const double roundoff = 4.0 * std::numeric_limits<double>::epsilon() * std::log2(n_total) * f_max;
  const Snapshot& last = run.frames.back();
  double flat = 0.0;
  for (const Complex& z : last.grid.values()) flat = std::max(flat, std::abs(z - f_mean));

  const bool pass = drift < 1e-11 && last.time == t_end && flat <= mode_bound + roundoff;
  return {pass, "max |mean/f_mean - 1| = " + sci(drift) + " over " + std::to_string(run.diagnostics.size()) +
                    " times in [0,10]; max|u(10) - f_mean| = " + sci(flat) + " <= slowest-mode bound " +
                    sci(mode_bound) + " + roundoff floor " + sci(roundoff)};
}

// 8 -----------------------------------------------------------------------
Outcome diffusion_ode_vs_closed() {
  h::RunConfig cfg = h::default_config(h::Experiment::Diffusion);
  cfg.resolutions = {32};
  cfg.t_final = 1.0;
  cfg.output_times = {0.0, 0.05, 0.1, 0.25, 0.5, 1.0};
  cfg.diagnostic_interval = 0.0;
  cfg.method = "ode";
  const GridMeta meta = GridMeta::square(32, -1.0, 1.0);
  const double dt = cfg.time_step(meta.dx);
  const double stiffness = dt * build_wavenumbers(meta).omega_sq_max();
  const h::SeriesRun ode = h::run_diffusion(cfg);
  cfg.method = "closed";
  const h::SeriesRun closed = h::run_diffusion(cfg);
  double worst = 0.0;
  for (std::size_t i = 0; i < ode.frames.size(); ++i) {
    worst = std::max(worst, max_diff(ode.frames[i].grid.values(), closed.frames[i].grid.values()));
  }
  return {worst < 1e-6 && stiffness <= kRk4StabilityLimit && ode.frames.size() == 6,
          "max-norm gap " + sci(worst) + " at N=32, dt=" + sci(dt) + " (dt*max omega^2 = " + sci(stiffness) + ")"};
}

// 9 -----------------------------------------------------------------------
Outcome wave_closed_vs_rk4() {
  const std::size_t n = 256;
  const GridMeta meta = GridMeta::square(n, -1.0, 1.0);
  WaveProblem problem{.initial_u = gaussian_profile(meta, 1.0, 0.1), .initial_v = Grid2D(meta)};
  problem.source = gaussian_profile(meta, 1.0, 0.1, 0.2, -0.3);
  problem.t_final = 2.0;
  problem.dt = 0.25 * meta.dx;
  problem.output_times = {0.0, 0.5, 1.0, 1.5, 2.0};
  const auto closed = solve_wave_closed(problem);
  const auto rk4 = solve_wave_rk4(problem);
  double worst = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    worst = std::max(worst, max_diff(closed[i].grid.values(), rk4[i].grid.values()));
  }

  // Per-mode energy of the oscillator about its static equilibrium s_hat/omega^2.
  const WavenumberTable w = build_wavenumbers(meta);
  const Spectrum2D s_hat = fft2_forward(std::get<Grid2D>(problem.source));
  auto energies = [&](double t) {
    const WaveState st = wave_closed_state(problem, t);
    std::vector<double> e(meta.size(), 0.0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const double w2 = w.omega_sq[i];
      if (w2 == 0.0) continue;
      const cd shifted = st.u_hat.values()[i] - s_hat.values()[i] / w2;
      e[i] = std::norm(st.v_hat.values()[i]) + w2 * std::norm(shifted);
    }
    return e;
  };
  const auto e0 = energies(0.0);
  const double scale = *std::max_element(e0.begin(), e0.end());
  double drift = 0.0;
  for (double t : {0.37, 1.0, 1.63, 2.0}) {
    const auto e = energies(t);
    for (std::size_t i = 0; i < e.size(); ++i) drift = std::max(drift, std::abs(e[i] - e0[i]) / scale);
  }
  return {worst < 1e-6 && drift < 1e-8,
          "max-norm gap " + sci(worst) + " at N=256, dt=0.25h, t in [0,2]; modal invariant drift " +
              sci(drift) + " (relative to largest mode)"};
}

// 10 ----------------------------------------------------------------------
Outcome wave_mean_conservation() {
  h::RunConfig cfg = h::default_config(h::Experiment::Wave);
  cfg.method = "pulse";
  const h::SeriesRun run = h::run_wave_pulse(cfg);
  const double f_mean = run.diagnostics.front().mean.real();
  double drift = 0.0;
  for (const auto& row : run.diagnostics) drift = std::max(drift, std::abs(row.mean.real() / f_mean - 1.0));
  return {drift < 1e-11 && run.diagnostics.back().time == 2.5,
          "max |mean/f_mean - 1| = " + sci(drift) + " over " + std::to_string(run.diagnostics.size()) +
              " times in [0,2.5], N=128"};
}

// 11 ----------------------------------------------------------------------
Outcome self_convergence() {
  const auto start = std::chrono::steady_clock::now();
  const h::RunConfig cfg = h::default_config(h::Experiment::Convergence);
  const h::ConvergenceReport report = h::run_convergence(cfg);
  double lo = INFINITY, hi = -INFINITY;
  int count = 0;
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    const double t = report.times[i];
    if (t < 0.5 - 1e-12 || t > 2.5 + 1e-12) continue;
    lo = std::min(lo, report.q_mean[i]);
    hi = std::max(hi, report.q_mean[i]);
    ++count;
  }
  const double elapsed = seconds_since(start);
  return {count > 0 && lo >= 10.0 && hi <= 24.0 && elapsed < 600.0,
          "q_mean in [" + sci(lo) + ", " + sci(hi) + "] at " + std::to_string(count) +
              " times in [0.5,2.5], N=64/128/256; " + sci(elapsed) + " s"};
}

// 12 ----------------------------------------------------------------------
Outcome sampling() {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  std::vector<double> samples(64);
  for (double& s : samples) s = normal(rng);
  const BandlimitedSampleSet set(samples, 0.3, -1.0);
  double interp = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    interp = std::max(interp, std::abs(sinc_reconstruct(set, set.time(i)) - samples[i]));
  }

  const double dt = 0.25;
  const double fc = nyquist_frequency(dt);
  std::uniform_real_distribution<double> freq(-10.0, 10.0);
  double alias = 0.0;
  bool in_band = true;
  for (int r = 0; r < 50; ++r) {
    const double f = freq(rng);
    const double fa = alias_of(f, dt);
    in_band = in_band && fa > -fc && fa <= fc;
    for (int n = 0; n < 32; ++n) {
      const double t = n * dt;
      const cd direct = std::polar(1.0, 2.0 * kPi * f * t);
      const cd folded = std::polar(1.0, 2.0 * kPi * fa * t);
      alias = std::max(alias, std::abs(direct - folded));
    }
  }
  return {interp < 1e-12 && alias < 1e-12 && in_band,
          "interpolation error at samples " + sci(interp) + "; alias_of vs direct sampling " + sci(alias) +
              " for 50 frequencies"};
}

// 13 ----------------------------------------------------------------------
Outcome rk4_order() {
  const double omega = 2.0;
  const double t_end = 2.0;
  const OdeRhs rhs = [&](double, const Fields& y, Fields& dy) {
    dy[0][0] = y[1][0];
    dy[1][0] = -omega * omega * y[0][0];
  };
  std::vector<double> errors;
  for (double dt : {0.1, 0.05, 0.025, 0.0125}) {
    OdeState state{{{Complex{1.0}}, {Complex{0.0}}}, 0.0};
    Rk4Stepper stepper;
    stepper.advance_to(state, t_end, dt, rhs);
    errors.push_back(std::max(std::abs(state.components[0][0] - oracle::oscillator_position(omega, t_end)),
                              std::abs(state.components[1][0] - oracle::oscillator_velocity(omega, t_end))));
  }
  bool pass = true;
  std::string orders;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    const double p = std::log2(errors[i - 1] / errors[i]);
    pass = pass && p >= 3.8 && p <= 4.2;
    orders += (i > 1 ? ", " : "") + sci(p);
  }
  return {pass, "observed orders " + orders + " for dt = 0.1 / 2^k"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> only;
  std::vector<int> expect_fail;
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--expect-fail", expect_fail, "criteria known to be unattainable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "transform oracle equivalence", transform_oracle_equivalence},
      {2, "Fourier matrix inverse", fourier_matrix_unitarity},
      {3, "Gaussian transform demo", gaussian_transform_demo},
      {4, "complexity scaling", complexity_scaling},
      {5, "2D brute-force equivalence", fft2_double_sum},
      {6, "Poisson eigenfunction and residual", poisson},
      {7, "diffusion conservation", diffusion_conservation},
      {8, "diffusion ODE vs closed form", diffusion_ode_vs_closed},
      {9, "wave closed form vs RK4", wave_closed_vs_rk4},
      {10, "wave mean conservation", wave_mean_conservation},
      {11, "self-convergence", self_convergence},
      {12, "sampling", sampling},
      {13, "RK4 order", rk4_order},
  };
  const std::set<int> selected(only.begin(), only.end());
  const std::set<int> known(expect_fail.begin(), expect_fail.end());

  int unexpected = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const bool expected_fail = known.count(c.id) > 0;
    std::string tag = out.pass ? "PASS" : "FAIL";
    if (expected_fail) tag += out.pass ? " (unexpected pass)" : " (known, see notes)";
    if (out.pass == expected_fail) ++unexpected;
    std::cout << "[" << tag << "] criterion " << c.id << ": " << c.name << ": " << out.detail << std::endl;
  }
  std::cout << (unexpected ? "acceptance: unexpected outcomes: " + std::to_string(unexpected)
                           : std::string("acceptance: all outcomes as expected"))
            << std::endl;
  return unexpected ? 1 : 0;
}
