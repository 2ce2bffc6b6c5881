#pragma once

// Sweeps behind the path-loss, blocking and capacity figures, plus the seeded
// coverage-extension scenario. Each run returns a SweepTable whose provenance
// lines carry the tool version and the full resolved configuration.

#include <string>

#include "covsim/config.hpp"
#include "covsim/csv.hpp"
#include "covsim/scenario.hpp"

namespace covsim {

std::string version_string();

// Version line followed by the config echo.
std::vector<std::string> provenance_lines(const ExperimentConfig& config);

// distance_m, pl_<fc>GHz_db...: averaged path loss over UAV-relay slant
// distance, LoS probability taken from the geometry at altitude_m.
SweepTable run_fig3(const ExperimentConfig& config);

// p_los, pl_eta<eta>_db...: averaged path loss with the LoS probability swept
// directly, at fixed fc_ghz and distance_m.
SweepTable run_fig4(const ExperimentConfig& config);

// channels, lp_A<A>..., one_minus_lp_A<A>...: Erlang-B blocking and its
// complement.
SweepTable run_fig5(const ExperimentConfig& config);

// n_hops, cap_lr<lambda_r>...: D2D system capacity.
SweepTable run_fig6(const ExperimentConfig& config);

struct ScenarioOutput {
  NodeField field;
  CoveragePartition partition;
  RelaySet relays;
  ReachabilityReport report;
  SweepTable nodes;    // one row per node
  SweepTable summary;  // a single row
};

ScenarioOutput run_scenario(const ExperimentConfig& config);

// Dispatch on config.experiment for the single-table experiments.
SweepTable run_sweep(const ExperimentConfig& config);

}  // namespace covsim
