// covsim: run one experiment and write its CSV.
//
//   covsim <fig3|fig4|fig5|fig6|scenario> --config <path> [--seed <u64>]
//          [--out <path>] [--quad-tol <float>]
//
// Exit status: 0 success, 1 configuration error, 2 numerical failure.
// Diagnostics go to stderr only.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "covsim/config.hpp"
#include "covsim/experiments.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

std::string summary_path(const std::string& out) {
  const std::string ext = ".csv";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + "_summary.csv";
  }
  return out + ".summary.csv";
}

void write_table(const covsim::SweepTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw covsim::ConfigError("out", "cannot write '" + path + "'");
  }
  table.write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV coverage-extension experiments: path loss, blocking, D2D capacity, scenarios"};
  app.set_version_flag("--version", covsim::version_string());

  std::string experiment_name;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  std::optional<double> quad_tol;

  app.add_option("experiment", experiment_name, "fig3, fig4, fig5, fig6 or scenario")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig4", "fig5", "fig6", "scenario"}));
  app.add_option("--config", config_path, "key = value configuration file")->required();
  app.add_option("--seed", seed, "RNG seed (overrides the config)");
  app.add_option("--out", out_path, "output CSV path (default: stdout)");
  app.add_option("--quad-tol", quad_tol, "absolute quadrature tolerance (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    covsim::ExperimentConfig config = covsim::load_config(config_path);
    config.experiment = *covsim::parse_experiment(experiment_name);
    if (seed) config.seed = *seed;
    if (out_path) config.output_path = *out_path;
    if (quad_tol) config.quad_tol = *quad_tol;
    config.validate();

    if (config.experiment == covsim::Experiment::scenario) {
      const covsim::ScenarioOutput result = covsim::run_scenario(config);
      if (config.output_path.empty()) {
        result.nodes.write(std::cout);
        std::cout << '\n';
        result.summary.write(std::cout);
      } else {
        write_table(result.nodes, config.output_path);
        write_table(result.summary, summary_path(config.output_path));
      }
    } else {
      const covsim::SweepTable table = covsim::run_sweep(config);
      if (config.output_path.empty()) {
        table.write(std::cout);
      } else {
        write_table(table, config.output_path);
      }
    }
  } catch (const covsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
