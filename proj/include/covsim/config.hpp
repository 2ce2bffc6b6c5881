#pragma once

// Flat `key = value` run configuration.
//
// Lines are `key = value`; `#` starts a comment; lists are comma separated.
// Every key carries its unit in the name (altitude_m, fc_ghz, ...). Anything
// not given takes the default below; c_alpha and edge_band_m default to
// values derived from alpha and coverage_radius_m. config_echo() writes every
// resolved key, and parsing that echo reproduces the same configuration.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "covsim/atg_channel.hpp"
#include "covsim/d2d_capacity.hpp"
#include "covsim/scenario.hpp"

namespace covsim {

enum class Experiment { fig3, fig4, fig5, fig6, scenario };

std::string_view to_string(Experiment experiment);
std::optional<Experiment> parse_experiment(std::string_view name);

// Hop radius used for D2D reachability: the D2D distance R_d or the capacity
// model's per-hop distance R_d / n_max_hops.
enum class HopRadius { r_d, r_r };

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::fig3;
  std::uint64_t seed = 1;
  std::string output_path;
  int threads = 1;

  EnvironmentProfile env;
  UavPlacement uav;

  // fig3: path loss against UAV-relay slant distance, one column per carrier.
  std::vector<double> fc_grid_ghz{2.8, 3.5, 5.8};
  std::vector<double> distance_grid_m;

  // fig4: path loss against a free LoS probability, one column per eta_los.
  double fc_ghz = 2.8;
  double distance_m = 100.0;
  std::vector<double> eta_los_grid_db{kEtaLosPreset.begin(), kEtaLosPreset.end()};
  std::vector<double> p_los_grid;

  // fig5: Erlang-B blocking against channel count, one column per load.
  std::vector<std::int64_t> channel_grid;
  std::vector<double> erlang_grid{10.0, 15.0, 20.0};

  // fig6: D2D capacity against hop count, one column per relay density.
  CapacityParams capacity;
  std::vector<std::int64_t> hop_grid;
  std::vector<double> lambda_r_grid{0.1, 0.2, 0.3, 0.4, 0.5};
  IntegrandForm integrand = IntegrandForm::density_prefactor;
  double quad_tol = kDefaultQuadTolerance;

  // scenario
  double area_m = 1000.0;
  double edge_band_m = 30.0;
  SelectionWeights weights;
  std::int64_t relay_k_max = 10;
  std::int64_t n_max_hops = 10;
  HopRadius hop_radius = HopRadius::r_d;
  std::string field_csv;  // import instead of generating when set
  std::string field_out;  // export the generated field when set

  ExperimentConfig();

  // Throws ConfigError naming the offending key.
  void validate() const;

  double hop_radius_m() const;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

// "key = value" lines covering every key, in a fixed order.
std::vector<std::string> config_echo(const ExperimentConfig& config);

// Rebuilds a configuration from the `#` provenance lines of an output CSV.
ExperimentConfig parse_config_echo(std::istream& csv);

}  // namespace covsim
