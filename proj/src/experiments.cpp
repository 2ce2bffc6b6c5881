#include "covsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "covsim/atg_channel.hpp"
#include "covsim/d2d_capacity.hpp"
#include "covsim/erlang.hpp"
#include "covsim/kernels.hpp"

#ifndef COVSIM_VERSION
#define COVSIM_VERSION "0.0.0"
#endif

namespace covsim {

namespace {

constexpr double kHzPerGhz = 1e9;

SweepTable with_provenance(const ExperimentConfig& config) {
  SweepTable table;
  table.provenance = provenance_lines(config);
  return table;
}

// Re-throws a stage failure with the stage name prefixed, keeping the
// exception category the CLI maps to exit codes.
template <typename Fn>
auto stage(std::string_view name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(name) + ": " + e.what());
  } catch (const QuadratureError& e) {
    throw QuadratureError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

std::string version_string() { return std::string("covsim ") + COVSIM_VERSION; }

std::vector<std::string> provenance_lines(const ExperimentConfig& config) {
  std::vector<std::string> lines{version_string()};
  auto echo = config_echo(config);
  lines.insert(lines.end(), echo.begin(), echo.end());
  return lines;
}

SweepTable run_fig3(const ExperimentConfig& config) {
  config.validate();
  SweepTable table = with_provenance(config);
  table.columns.push_back("distance_m");
  for (const double fc : config.fc_grid_ghz) {
    table.columns.push_back("pl_" + format_round_trip(fc) + "GHz_db");
  }

  const double h = config.uav.altitude_m;
  for (const double d : config.distance_grid_m) {
    const double range = std::sqrt(std::max(d * d - h * h, 0.0));
    const double los = p_los(range, h, config.env);
    std::vector<double> row{d};
    for (const double fc : config.fc_grid_ghz) {
      row.push_back(average_path_loss_db(fc * kHzPerGhz, d, los, config.env));
    }
    table.add_row(std::move(row));
  }
  return table;
}

SweepTable run_fig4(const ExperimentConfig& config) {
  config.validate();
  SweepTable table = with_provenance(config);
  table.columns.push_back("p_los");
  for (const double eta : config.eta_los_grid_db) {
    table.columns.push_back("pl_eta" + format_round_trip(eta) + "_db");
  }

  for (const double p : config.p_los_grid) {
    std::vector<double> row{p};
    for (const double eta : config.eta_los_grid_db) {
      EnvironmentProfile env = config.env;
      env.eta_los_db = eta;
      row.push_back(average_path_loss_db(config.fc_ghz * kHzPerGhz, config.distance_m, p, env));
    }
    table.add_row(std::move(row));
  }
  return table;
}

SweepTable run_fig5(const ExperimentConfig& config) {
  config.validate();
  SweepTable table = with_provenance(config);
  table.columns.push_back("channels");
  for (const double a : config.erlang_grid) {
    table.columns.push_back("lp_A" + format_round_trip(a));
  }
  for (const double a : config.erlang_grid) {
    table.columns.push_back("one_minus_lp_A" + format_round_trip(a));
  }

  for (const std::int64_t n : config.channel_grid) {
    std::vector<double> row{static_cast<double>(n)};
    std::vector<double> complement;
    for (const double a : config.erlang_grid) {
      const double lp = loss_probability({a, n});
      row.push_back(lp);
      complement.push_back(1.0 - lp);
    }
    row.insert(row.end(), complement.begin(), complement.end());
    table.add_row(std::move(row));
  }
  return table;
}

SweepTable run_fig6(const ExperimentConfig& config) {
  config.validate();
  SweepTable table = with_provenance(config);
  table.columns.push_back("n_hops");
  for (const double lr : config.lambda_r_grid) {
    table.columns.push_back("cap_lr" + format_round_trip(lr));
  }

  const kernels::CapacityGrid grid =
      stage("capacity", [&] {
        return kernels::capacity_grid(config.capacity, config.hop_grid, config.lambda_r_grid,
                                      config.quad_tol, config.integrand, config.threads);
      });
  for (std::size_t i = 0; i < grid.hops.size(); ++i) {
    std::vector<double> row{static_cast<double>(grid.hops[i])};
    for (std::size_t j = 0; j < grid.lambda_r.size(); ++j) {
      row.push_back(grid.at(i, j).capacity);
    }
    table.add_row(std::move(row));
  }
  return table;
}

ScenarioOutput run_scenario(const ExperimentConfig& config) {
  config.validate();
  ScenarioOutput out;

  out.field = stage("generate_field", [&] {
    if (config.field_csv.empty()) {
      return generate_field(config.capacity.lambda_d, config.area_m, config.seed);
    }
    std::ifstream in(config.field_csv);
    if (!in) {
      throw ConfigError("field_csv", "cannot open '" + config.field_csv + "'");
    }
    return read_field_csv(in, config.area_m);
  });
  if (!config.field_out.empty()) {
    std::ofstream field_out(config.field_out);
    if (!field_out) {
      throw ConfigError("field_out", "cannot write '" + config.field_out + "'");
    }
    write_field_csv(out.field, field_out);
  }

  out.partition = stage("classify_coverage", [&] { return classify_coverage(out.field, config.uav); });
  out.relays = stage("select_relays", [&] {
    return select_relays(out.field, out.partition, config.uav, config.edge_band_m, config.weights,
                         config.relay_k_max);
  });
  out.report = stage("reachability", [&] {
    return reachability(out.field, out.partition, out.relays, config.hop_radius_m(),
                        config.n_max_hops, config.threads);
  });

  // Per-node rows. Out-of-coverage attributes come from the report, relay
  // ranks (1-based, 0 = not a relay) from the relay set.
  const std::size_t n = out.field.nodes.size();
  std::vector<double> in_coverage(n, 0.0), relay_rank(n, 0.0), serving(n, -1.0), hops(n, 0.0),
      reachable(n, 0.0);
  for (const NodeId id : out.partition.in_coverage) {
    in_coverage[static_cast<std::size_t>(id)] = 1.0;
  }
  for (std::size_t r = 0; r < out.relays.relays.size(); ++r) {
    relay_rank[static_cast<std::size_t>(out.relays.relays[r].id)] = static_cast<double>(r + 1);
  }
  for (const NodeReach& reach : out.report.out_nodes) {
    const auto k = static_cast<std::size_t>(reach.id);
    serving[k] = static_cast<double>(reach.serving_relay);
    hops[k] = static_cast<double>(reach.hops);
    reachable[k] = reach.reachable ? 1.0 : 0.0;
  }

  out.nodes = with_provenance(config);
  out.nodes.columns = {"id",         "x_m",          "y_m",           "energy", "quality",
                       "in_coverage", "relay_rank", "serving_relay", "hops",   "reachable"};
  for (const Node& node : out.field.nodes) {
    const auto k = static_cast<std::size_t>(node.id);
    out.nodes.add_row({static_cast<double>(node.id), node.x_m, node.y_m, node.energy, node.quality,
                       in_coverage[k], relay_rank[k], serving[k], hops[k], reachable[k]});
  }

  out.summary = with_provenance(config);
  out.summary.columns = {"nodes",         "in_coverage",           "out_coverage",
                         "relay_count",   "reachable_out",         "direct_coverage_ratio",
                         "coverage_extension_ratio"};
  out.summary.add_row({static_cast<double>(n), static_cast<double>(out.partition.in_coverage.size()),
                       static_cast<double>(out.partition.out_coverage.size()),
                       static_cast<double>(out.relays.relays.size()),
                       static_cast<double>(out.report.reachable_count),
                       out.report.direct_coverage_ratio, out.report.coverage_extension_ratio});
  return out;
}

SweepTable run_sweep(const ExperimentConfig& config) {
  switch (config.experiment) {
    case Experiment::fig3: return run_fig3(config);
    case Experiment::fig4: return run_fig4(config);
    case Experiment::fig5: return run_fig5(config);
    case Experiment::fig6: return run_fig6(config);
    case Experiment::scenario: break;
  }
  throw std::logic_error("run_sweep: scenario produces two tables; use run_scenario");
}

}  // namespace covsim
