#pragma once

// Post-disaster field: a Poisson population of ground devices, the UAV's
// served disc, relays picked on the rim of that disc, and multi-hop D2D
// reachability of the devices left outside it.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "covsim/atg_channel.hpp"

namespace covsim {

using NodeId = std::int64_t;
inline constexpr NodeId kNoNode = -1;

struct Node {
  NodeId id;
  double x_m;
  double y_m;
  double energy;   // residual energy, normalized to [0, 1]
  double quality;  // link quality, normalized to [0, 1]
};

struct NodeField {
  double area_m = 1000.0;
  double intensity = 3.3e-4;  // devices per m^2
  std::uint64_t seed = 0;
  std::vector<Node> nodes;  // ids are 0..n-1 in order

  void validate() const;
};

// Count ~ Poisson(intensity * area^2), positions uniform on [0, area)^2,
// energy and quality uniform on [0, 1). Each attribute class uses its own
// RandomStream so the same seed always gives the same field.
NodeField generate_field(double intensity, double area_m, std::uint64_t seed);

// CSV with header `id,x_m,y_m,energy,quality`, 9 significant digits.
void write_field_csv(const NodeField& field, std::ostream& out);
NodeField read_field_csv(std::istream& in, double area_m);

struct CoveragePartition {
  std::vector<NodeId> in_coverage;   // ascending
  std::vector<NodeId> out_coverage;  // ascending
};

// Closed disc: horizontal distance <= coverage radius is in coverage.
CoveragePartition classify_coverage(const NodeField& field, const UavPlacement& uav);

struct SelectionWeights {
  double energy = 0.5;
  double quality = 0.5;

  void validate() const;
};

struct RelayCandidate {
  NodeId id;
  double score;
};

struct RelaySet {
  std::vector<RelayCandidate> relays;  // descending score, then ascending id
  double edge_band_m = 0.0;
  SelectionWeights weights;
};

// Relays are in-coverage nodes in the annulus [r_cov - band, r_cov], ranked
// by energy/quality score and truncated to k_max. No candidates is not an
// error.
RelaySet select_relays(const NodeField& field, const CoveragePartition& partition,
                       const UavPlacement& uav, double edge_band_m, const SelectionWeights& weights,
                       std::int64_t k_max);

struct NodeReach {
  NodeId id;
  NodeId serving_relay;  // root relay of a minimum-hop path, kNoNode if unreachable
  std::int64_t hops;     // minimum hop count, 0 if unreachable
  bool reachable;
};

struct ReachabilityReport {
  std::vector<NodeReach> out_nodes;  // same order as partition.out_coverage
  std::int64_t reachable_count = 0;
  double coverage_extension_ratio = 0.0;  // reachable / |out|, 1 if |out| = 0
  double direct_coverage_ratio = 0.0;     // |in| / |nodes|, 0 for an empty field
};

// Multi-source breadth-first search from the relays over the disc graph of
// radius hop_radius_m restricted to out-of-coverage nodes. A node counts as
// reachable when its minimum hop count is <= n_max. When several relays give
// the same minimum, the higher-ranked relay (earlier in RelaySet) serves.
// `threads` > 1 builds the neighbour lists with the OpenMP kernel.
ReachabilityReport reachability(const NodeField& field, const CoveragePartition& partition,
                                const RelaySet& relays, double hop_radius_m, std::int64_t n_max,
                                int threads = 1);

}  // namespace covsim
