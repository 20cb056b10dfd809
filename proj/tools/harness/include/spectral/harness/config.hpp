#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spectral::harness {

enum class Experiment { Bench, TransformDemo, Poisson, Diffusion, Wave, Convergence };

std::string to_string(Experiment e);
/// Accepts the CLI subcommand names. Throws ConfigError otherwise.
Experiment parse_experiment(const std::string& name);

struct RunConfig {
  Experiment experiment = Experiment::TransformDemo;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 20240601;
  int threads = 1;

  // Square periodic box [domain_min, domain_max)^2. Unset means the
  // experiment's own default (the wave command uses different boxes for its
  // two cases).
  std::optional<double> domain_min;
  std::optional<double> domain_max;
  /// Points per axis; Poisson runs each entry, convergence wants N, 2N, 4N.
  std::vector<std::size_t> resolutions;
  /// Absolute step. When unset the step is dt_factor * h.
  std::optional<double> dt;
  double dt_factor = 0.25;
  double t_final = 0.0;
  /// Times at which full grid frames are written.
  std::vector<double> output_times;
  /// Spacing of the diagnostics series (0 writes one row per frame only).
  double diagnostic_interval = 0.0;

  // Initial Gaussian (and static Poisson source).
  double amplitude = 1.0;
  double sigma = 0.1;

  // Orbiting source.
  double source_amplitude = 1.0;
  double source_sigma = 0.1;
  double orbit_radius = 1.0;
  double orbit_omega = 5.0;
  double gamma = 10.0;

  /// diffusion: closed | ode. wave: pulse | orbit | both.
  std::string method;

  // Benchmark.
  std::vector<std::size_t> sizes;
  int repetitions = 5;

  /// dt or dt_factor * h for a grid with spacing h.
  double time_step(double h) const;
  /// Throws ConfigError naming the first bad field.
  void validate() const;
  /// Every key with its resolved value, in documentation order.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Defaults reproducing the reference setups for each experiment.
RunConfig default_config(Experiment e);

struct KeyDoc {
  const char* key;
  const char* help;
};
const std::vector<KeyDoc>& config_keys();

/// Sets one key from text. Throws ConfigError for unknown keys and bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
/// "key=value" form used by --set.
void apply_assignment(RunConfig& cfg, const std::string& assignment);
/// Flat file of key=value lines; blank lines and lines starting with '#' are
/// skipped. Throws IoError if unreadable, ConfigError on bad lines.
void load_config_file(RunConfig& cfg, const std::filesystem::path& path);

/// Writes `manifest.txt` style key=value lines for every resolved key.
void write_manifest(const RunConfig& cfg, const std::filesystem::path& path);

}  // namespace spectral::harness
