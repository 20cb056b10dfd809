#include "spectral/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "spectral/complex.hpp"
#include "spectral/harness/errors.hpp"
#include "spectral/harness/grid_io.hpp"

namespace spectral::harness {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || !std::isfinite(v))
    throw ConfigError(key, "expected a finite number, got '" + text + "'");
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) throw ConfigError(key, "expected an integer, got '" + text + "'");
  return v;
}

// "auto" clears an optional setting.
std::optional<double> to_optional(const std::string& key, const std::string& text) {
  if (text == "auto") return std::nullopt;
  return to_double(key, text);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> to_doubles(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(to_double(key, item));
  return out;
}

std::vector<std::size_t> to_sizes(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    long long v = to_integer(key, item);
    if (v <= 0) throw ConfigError(key, "entries must be positive, got " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : "auto"; }

std::vector<double> snapshot_times() { return {0.0, 0.5, 1.0, 1.5, 2.0, 2.5}; }

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::Bench: return "bench";
    case Experiment::TransformDemo: return "transform-demo";
    case Experiment::Poisson: return "poisson";
    case Experiment::Diffusion: return "diffusion";
    case Experiment::Wave: return "wave";
    case Experiment::Convergence: return "convergence";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  for (auto e : {Experiment::Bench, Experiment::TransformDemo, Experiment::Poisson,
                 Experiment::Diffusion, Experiment::Wave, Experiment::Convergence}) {
    if (to_string(e) == name) return e;
  }
  throw ConfigError("experiment", "unknown experiment '" + name + "'");
}

RunConfig default_config(Experiment e) {
  RunConfig c;
  c.experiment = e;
  c.out_dir = "out/" + to_string(e);
  switch (e) {
    case Experiment::Bench:
      for (std::size_t n = 8; n <= (1u << 15); n *= 2) c.sizes.push_back(n);
      break;
    case Experiment::TransformDemo:
      break;
    case Experiment::Poisson:
      c.domain_min = -2.0;
      c.domain_max = 2.0;
      c.resolutions = {64, 128};
      break;
    case Experiment::Diffusion:
      c.domain_min = -1.0;
      c.domain_max = 1.0;
      c.resolutions = {128};
      c.t_final = 10.0;
      c.output_times = snapshot_times();
      c.output_times.push_back(10.0);
      c.diagnostic_interval = 0.0625;
      c.method = "closed";
      break;
    case Experiment::Wave:
      c.resolutions = {128};
      c.t_final = 2.5;
      c.output_times = snapshot_times();
      c.diagnostic_interval = 0.0625;
      c.method = "both";
      break;
    case Experiment::Convergence:
      c.domain_min = -2.0;
      c.domain_max = 2.0;
      c.resolutions = {64, 128, 256};
      c.t_final = 2.5;
      c.output_times = snapshot_times();
      c.diagnostic_interval = 1.0 / 64.0;
      break;
  }
  return c;
}

const std::vector<KeyDoc>& config_keys() {
  static const std::vector<KeyDoc> keys = {
      {"out", "output directory (same as --out)"},
      {"seed", "RNG seed for random inputs (same as --seed)"},
      {"threads", "worker threads for 2D transforms (same as --threads)"},
      {"domain_min", "lower corner of the square box [min, max)^2"},
      {"domain_max", "upper corner of the square box"},
      {"resolutions", "points per axis, comma separated (poisson: each; convergence: N,2N,4N)"},
      {"dt", "absolute time step; overrides dt_factor"},
      {"dt_factor", "time step as a multiple of h (of h^2/2 for diffusion method=ode)"},
      {"t_final", "end of the time interval"},
      {"output_times", "times of full grid frames, comma separated"},
      {"diagnostic_interval", "spacing of the diagnostics series; 0 for frame times only"},
      {"amplitude", "amplitude A of the initial Gaussian / Poisson source"},
      {"sigma", "width sigma of the initial Gaussian / Poisson source"},
      {"source_amplitude", "amplitude of the orbiting source"},
      {"source_sigma", "width of the orbiting source"},
      {"orbit_radius", "radius r_s of the source orbit"},
      {"orbit_omega", "angular frequency Omega of the orbit"},
      {"gamma", "oscillation frequency of the source amplitude"},
      {"method", "diffusion: closed|ode; wave: pulse|orbit|both"},
      {"sizes", "bench transform lengths, comma separated powers of two"},
      {"repetitions", "bench timed repetitions per size (median reported)"},
  };
  return keys;
}

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  using Setter = std::function<void()>;
  const std::map<std::string, Setter> setters = {
      {"out", [&] { c.out_dir = value; }},
      {"seed",
       [&] {
         long long v = to_integer(key, value);
         if (v < 0) throw ConfigError(key, "must be non-negative");
         c.seed = static_cast<std::uint64_t>(v);
       }},
      {"threads", [&] { c.threads = static_cast<int>(to_integer(key, value)); }},
      {"experiment",
       [&] {
         if (parse_experiment(value) != c.experiment)
           throw ConfigError(key, "file is for '" + value + "', not '" + to_string(c.experiment) + "'");
       }},
      {"domain_min", [&] { c.domain_min = to_optional(key, value); }},
      {"domain_max", [&] { c.domain_max = to_optional(key, value); }},
      {"resolutions", [&] { c.resolutions = to_sizes(key, value); }},
      {"dt", [&] { c.dt = to_optional(key, value); }},
      {"dt_factor", [&] { c.dt_factor = to_double(key, value); }},
      {"t_final", [&] { c.t_final = to_double(key, value); }},
      {"output_times", [&] { c.output_times = to_doubles(key, value); }},
      {"diagnostic_interval", [&] { c.diagnostic_interval = to_double(key, value); }},
      {"amplitude", [&] { c.amplitude = to_double(key, value); }},
      {"sigma", [&] { c.sigma = to_double(key, value); }},
      {"source_amplitude", [&] { c.source_amplitude = to_double(key, value); }},
      {"source_sigma", [&] { c.source_sigma = to_double(key, value); }},
      {"orbit_radius", [&] { c.orbit_radius = to_double(key, value); }},
      {"orbit_omega", [&] { c.orbit_omega = to_double(key, value); }},
      {"gamma", [&] { c.gamma = to_double(key, value); }},
      {"method", [&] { c.method = value; }},
      {"sizes", [&] { c.sizes = to_sizes(key, value); }},
      {"repetitions", [&] { c.repetitions = static_cast<int>(to_integer(key, value)); }},
  };
  auto it = setters.find(key);
  if (it == setters.end()) throw ConfigError(key, "unknown key");
  it->second();
}

void apply_assignment(RunConfig& cfg, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError(assignment, "expected key=value");
  apply_setting(cfg, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void load_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.find('=') == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(number), "expected key=value");
    }
    apply_assignment(cfg, line);
  }
}

double RunConfig::time_step(double h) const {
  if (dt) return *dt;
  if (experiment == Experiment::Diffusion && method == "ode") return 0.5 * dt_factor * h * h;
  return dt_factor * h;
}

void RunConfig::validate() const {
  if (out_dir.empty()) throw ConfigError("out", "must not be empty");
  if (threads < 1) throw ConfigError("threads", "must be at least 1");
  if (domain_min.has_value() != domain_max.has_value())
    throw ConfigError("domain_max", "domain_min and domain_max must be set together");
  if (domain_min && !(*domain_max > *domain_min))
    throw ConfigError("domain_max", "extent must be positive (domain_max > domain_min)");
  if (dt && !(*dt > 0.0)) throw ConfigError("dt", "must be positive");
  if (!(dt_factor > 0.0)) throw ConfigError("dt_factor", "must be positive");
  if (diagnostic_interval < 0.0) throw ConfigError("diagnostic_interval", "must be >= 0");
  if (!(sigma > 0.0)) throw ConfigError("sigma", "must be positive");
  if (!(source_sigma > 0.0)) throw ConfigError("source_sigma", "must be positive");
  if (orbit_radius < 0.0) throw ConfigError("orbit_radius", "must be >= 0");

  const bool needs_grid = experiment != Experiment::Bench && experiment != Experiment::TransformDemo;
  if (needs_grid) {
    if (resolutions.empty()) throw ConfigError("resolutions", "at least one resolution required");
    for (std::size_t n : resolutions) {
      if (!is_power_of_two(n) || n < 2)
        throw ConfigError("resolutions", std::to_string(n) + " is not a power of two >= 2");
    }
  }
  const bool timed = experiment == Experiment::Diffusion || experiment == Experiment::Wave ||
                     experiment == Experiment::Convergence;
  if (timed) {
    if (!(t_final > 0.0)) throw ConfigError("t_final", "must be positive");
    double previous = 0.0;
    for (double t : output_times) {
      if (t < 0.0 || t > t_final) throw ConfigError("output_times", "must lie in [0, t_final]");
      if (t < previous) throw ConfigError("output_times", "must be ascending");
      previous = t;
    }
  }

  switch (experiment) {
    case Experiment::Bench:
      if (sizes.empty()) throw ConfigError("sizes", "at least one size required");
      for (std::size_t n : sizes) {
        if (!is_power_of_two(n)) throw ConfigError("sizes", std::to_string(n) + " is not a power of two");
      }
      if (repetitions < 5) throw ConfigError("repetitions", "must be at least 5");
      break;
    case Experiment::Diffusion:
      if (method != "closed" && method != "ode") throw ConfigError("method", "must be closed or ode");
      if (resolutions.size() != 1) throw ConfigError("resolutions", "diffusion takes one resolution");
      break;
    case Experiment::Wave:
      if (method != "pulse" && method != "orbit" && method != "both")
        throw ConfigError("method", "must be pulse, orbit or both");
      if (resolutions.size() != 1) throw ConfigError("resolutions", "wave takes one resolution");
      break;
    case Experiment::Convergence:
      if (resolutions.size() != 3 || resolutions[1] != 2 * resolutions[0] ||
          resolutions[2] != 4 * resolutions[0])
        throw ConfigError("resolutions", "convergence needs three resolutions N, 2N, 4N");
      if (dt) throw ConfigError("dt", "convergence ties dt to h; set dt_factor instead");
      if (!(diagnostic_interval > 0.0))
        throw ConfigError("diagnostic_interval", "convergence needs a positive report interval");
      break;
    default:
      break;
  }
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  return {
      {"experiment", to_string(experiment)},
      {"out", out_dir.string()},
      {"seed", std::to_string(seed)},
      {"threads", std::to_string(threads)},
      {"domain_min", opt(domain_min)},
      {"domain_max", opt(domain_max)},
      {"resolutions", join(resolutions)},
      {"dt", opt(dt)},
      {"dt_factor", format_double(dt_factor)},
      {"t_final", format_double(t_final)},
      {"output_times", join(output_times)},
      {"diagnostic_interval", format_double(diagnostic_interval)},
      {"amplitude", format_double(amplitude)},
      {"sigma", format_double(sigma)},
      {"source_amplitude", format_double(source_amplitude)},
      {"source_sigma", format_double(source_sigma)},
      {"orbit_radius", format_double(orbit_radius)},
      {"orbit_omega", format_double(orbit_omega)},
      {"gamma", format_double(gamma)},
      {"method", method},
      {"sizes", join(sizes)},
      {"repetitions", std::to_string(repetitions)},
  };
}

void write_manifest(const RunConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  for (const auto& [key, value] : cfg.entries()) out << key << '=' << value << '\n';
  out.close();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace spectral::harness
