#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectral/errors.hpp"
#include "spectral/harness/config.hpp"
#include "spectral/harness/errors.hpp"
#include "spectral/harness/experiments.hpp"

namespace {

namespace h = spectral::harness;

enum ExitCode { kOk = 0, kConfig = 2, kNumeric = 3, kIo = 4 };

std::string key_help() {
  std::string text = "\nConfig keys (file lines or --set key=value):\n";
  for (const auto& k : h::config_keys()) {
    std::string key = k.key;
    key.resize(22, ' ');
    text += "  " + key + k.help + "\n";
  }
  text +=
      "\nExit codes: 0 ok, 2 config error, 3 numeric failure, 4 I/O error.\n"
      "Settings apply in order: experiment defaults, --config file, --set, then the\n"
      "--out/--seed/--threads flags.\n";
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral solvers for periodic PDEs: experiments, benchmarks and convergence runs"};
  app.require_subcommand(1);
  app.footer(key_help());

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--threads", threads, "worker threads for 2D transforms");
  app.add_option("--set", overrides, "override one config key (key=value), repeatable");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"bench", "time naive DFT against FFT and fit N^2 / N log N models"},
      {"transform-demo", "Gaussian transform example on [0, 20) with N = 32"},
      {"poisson", "Poisson equation with a Gaussian source"},
      {"diffusion", "diffusion of a Gaussian profile"},
      {"wave", "wave equation: Gaussian pulse and orbiting source"},
      {"convergence", "self-convergence of the orbiting-source wave run at N, 2N, 4N"},
  };
  for (const auto& [name, about] : commands) app.add_subcommand(name, about)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    const auto experiment = h::parse_experiment(app.get_subcommands().front()->get_name());
    h::RunConfig cfg = h::default_config(experiment);
    if (!config_path.empty()) h::load_config_file(cfg, config_path);
    for (const auto& s : overrides) h::apply_assignment(cfg, s);
    if (out_dir) cfg.out_dir = *out_dir;
    if (seed) cfg.seed = *seed;
    if (threads) cfg.threads = *threads;

    h::run_experiment(cfg, [](const std::string& line) { std::cerr << line << '\n'; });
    return kOk;
  } catch (const h::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const h::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const spectral::NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const spectral::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
