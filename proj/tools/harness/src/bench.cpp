#include "spectral/harness/bench.hpp"

#include <ctime>
#include <fstream>
#include <numeric>
#include <random>
#include <string>

#include "spectral/errors.hpp"
#include "spectral/fourier1d.hpp"
#include "spectral/harness/errors.hpp"
#include "spectral/harness/grid_io.hpp"

namespace spectral::harness {

double cpu_seconds() {
  timespec ts{};
  if (clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &ts) != 0) clock_gettime(CLOCK_MONOTONIC, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes, int repetitions,
                                   std::uint64_t seed) {
  if (repetitions < 5) throw InvalidArgument("benchmark needs at least 5 repetitions");
  for (std::size_t n : sizes) {
    if (!is_power_of_two(n)) throw Radix2Error(n);
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;

  std::vector<BenchRecord> records;
  for (std::size_t n : sizes) {
    std::vector<Complex> data(n);
    for (auto& z : data) z = {normal(rng), normal(rng)};
    const SampleVector1D input(std::move(data), 1.0);

    BenchRecord r;
    r.n = n;
    r.repetitions = repetitions;
    volatile double sink = 0.0;
    r.dft_seconds = median_seconds([&] { sink = sink + dft_forward(input)[0].real(); }, repetitions);
    r.fft_seconds = median_seconds([&] { sink = sink + fft_forward(input)[0].real(); }, repetitions);
    records.push_back(r);
  }
  return records;
}

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("fit needs two or more points");
  const std::size_t m = x.size();
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / m;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / m;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

ModelFit fit_model(std::span<const double> n, std::span<const double> seconds, CostModel model) {
  if (n.size() != seconds.size() || n.empty()) throw InvalidArgument("fit needs matching samples");
  const std::size_t m = n.size();
  std::vector<double> lt(m), lg(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double g = model == CostModel::Quadratic ? n[i] * n[i] : n[i] * std::log2(n[i]);
    lg[i] = std::log(g);
    lt[i] = std::log(seconds[i]);
  }
  double log_c = 0, mean_t = 0;
  for (std::size_t i = 0; i < m; ++i) {
    log_c += lt[i] - lg[i];
    mean_t += lt[i];
  }
  log_c /= m;
  mean_t /= m;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < m; ++i) {
    ss_res += (lt[i] - log_c - lg[i]) * (lt[i] - log_c - lg[i]);
    ss_tot += (lt[i] - mean_t) * (lt[i] - mean_t);
  }
  return {model, std::exp(log_c), ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0};
}

void write_bench_csv(std::span<const BenchRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  double reference = 0.0;
  std::size_t largest = 0;
  for (const auto& r : records) {
    if (r.n >= largest) {
      largest = r.n;
      reference = r.dft_seconds;
    }
  }
  out << "N,dft_seconds,fft_seconds,repetitions,dft_normalized,fft_normalized,speedup\n";
  for (const auto& r : records) {
    out << r.n << ',' << format_double(r.dft_seconds) << ',' << format_double(r.fft_seconds) << ','
        << r.repetitions << ',' << format_double(r.dft_seconds / reference) << ','
        << format_double(r.fft_seconds / reference) << ','
        << format_double(r.dft_seconds / r.fft_seconds) << '\n';
  }
  out.close();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_bench_fits(std::span<const BenchRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  std::vector<double> n, dft, fft;
  for (const auto& r : records) {
    n.push_back(static_cast<double>(r.n));
    dft.push_back(r.dft_seconds);
    fft.push_back(r.fft_seconds);
  }
  out << "algorithm,model,coefficient,r_squared,loglog_slope\n";
  if (records.size() >= 2) {
    for (const auto& [name, times] : {std::pair{"dft", &dft}, std::pair{"fft", &fft}}) {
      const double slope = fit_loglog(n, *times).slope;
      for (auto model : {CostModel::Quadratic, CostModel::NLogN}) {
        const ModelFit fit = fit_model(n, *times, model);
        out << name << ',' << (model == CostModel::Quadratic ? "N^2" : "NlogN") << ','
            << format_double(fit.coefficient) << ',' << format_double(fit.r_squared) << ','
            << format_double(slope) << '\n';
      }
    }
  }
  out.close();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace spectral::harness
