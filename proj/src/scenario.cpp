#include "covsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "checks.hpp"
#include "covsim/csv.hpp"
#include "covsim/kernels.hpp"
#include "covsim/rng.hpp"

namespace covsim {

namespace {

constexpr std::string_view kFieldHeader = "id,x_m,y_m,energy,quality";

double ground_range(const Node& node, const UavPlacement& uav) {
  return std::hypot(node.x_m - uav.ground_x_m, node.y_m - uav.ground_y_m);
}

}  // namespace

void NodeField::validate() const {
  detail::require_positive(area_m, "area_m");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    if (n.id != static_cast<NodeId>(i)) {
      throw std::invalid_argument("node ids must be dense from 0 in order; row " +
                                  std::to_string(i) + " has id " + std::to_string(n.id));
    }
    if (!(n.x_m >= 0.0 && n.x_m <= area_m && n.y_m >= 0.0 && n.y_m <= area_m)) {
      throw std::invalid_argument("node " + std::to_string(n.id) + " lies outside the area");
    }
    detail::require_probability(n.energy, "energy");
    detail::require_probability(n.quality, "quality");
  }
}

NodeField generate_field(double intensity, double area_m, std::uint64_t seed) {
  detail::require_positive(intensity, "intensity");
  detail::require_positive(area_m, "area_m");

  RandomStream count_stream(seed, StreamId::node_count);
  RandomStream position_stream(seed, StreamId::position);
  RandomStream energy_stream(seed, StreamId::residual_energy);
  RandomStream quality_stream(seed, StreamId::link_quality);

  const std::uint64_t count = count_stream.poisson(intensity * area_m * area_m);

  NodeField field{area_m, intensity, seed, {}};
  field.nodes.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double x = position_stream.uniform01() * area_m;
    const double y = position_stream.uniform01() * area_m;
    field.nodes.push_back({static_cast<NodeId>(i), x, y, energy_stream.uniform01(),
                           quality_stream.uniform01()});
  }
  return field;
}

void write_field_csv(const NodeField& field, std::ostream& out) {
  out << kFieldHeader << '\n';
  for (const Node& n : field.nodes) {
    out << n.id << ',' << format_number(n.x_m) << ',' << format_number(n.y_m) << ','
        << format_number(n.energy) << ',' << format_number(n.quality) << '\n';
  }
}

NodeField read_field_csv(std::istream& in, double area_m) {
  detail::require_positive(area_m, "area_m");
  std::string line;
  if (!std::getline(in, line) || trim(line) != kFieldHeader) {
    throw std::invalid_argument("field CSV must start with header '" + std::string(kFieldHeader) +
                                "'");
  }
  NodeField field{area_m, 0.0, 0, {}};
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 5) {
      throw std::invalid_argument("field CSV line " + std::to_string(line_no) +
                                  ": expected 5 columns");
    }
    try {
      const double id = parse_double(cells[0]);
      if (id != std::floor(id)) {
        throw std::invalid_argument("id must be an integer");
      }
      field.nodes.push_back({static_cast<NodeId>(id), parse_double(cells[1]),
                             parse_double(cells[2]), parse_double(cells[3]),
                             parse_double(cells[4])});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("field CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  field.intensity = static_cast<double>(field.nodes.size()) / (area_m * area_m);
  field.validate();
  return field;
}

CoveragePartition classify_coverage(const NodeField& field, const UavPlacement& uav) {
  uav.validate();
  CoveragePartition partition;
  for (const Node& n : field.nodes) {
    if (ground_range(n, uav) <= uav.coverage_radius_m) {
      partition.in_coverage.push_back(n.id);
    } else {
      partition.out_coverage.push_back(n.id);
    }
  }
  return partition;
}

void SelectionWeights::validate() const {
  detail::require_non_negative(energy, "w_energy");
  detail::require_non_negative(quality, "w_quality");
  if (std::abs(energy + quality - 1.0) > 1e-12) {
    throw std::invalid_argument("selection weights must sum to 1");
  }
}

RelaySet select_relays(const NodeField& field, const CoveragePartition& partition,
                       const UavPlacement& uav, double edge_band_m, const SelectionWeights& weights,
                       std::int64_t k_max) {
  uav.validate();
  weights.validate();
  detail::require_positive(edge_band_m, "edge_band_m");
  if (edge_band_m >= uav.coverage_radius_m) {
    throw std::invalid_argument("edge_band_m must be smaller than the coverage radius");
  }
  if (k_max < 1) {
    throw std::invalid_argument("k_max must be >= 1");
  }

  const double inner = uav.coverage_radius_m - edge_band_m;
  RelaySet set{{}, edge_band_m, weights};
  for (const NodeId id : partition.in_coverage) {
    const Node& n = field.nodes.at(static_cast<std::size_t>(id));
    const double range = ground_range(n, uav);
    if (range >= inner && range <= uav.coverage_radius_m) {
      set.relays.push_back({id, weights.energy * n.energy + weights.quality * n.quality});
    }
  }
  std::sort(set.relays.begin(), set.relays.end(),
            [](const RelayCandidate& l, const RelayCandidate& r) {
              return l.score != r.score ? l.score > r.score : l.id < r.id;
            });
  if (set.relays.size() > static_cast<std::size_t>(k_max)) {
    set.relays.resize(static_cast<std::size_t>(k_max));
  }
  return set;
}

ReachabilityReport reachability(const NodeField& field, const CoveragePartition& partition,
                                const RelaySet& relays, double hop_radius_m, std::int64_t n_max,
                                int threads) {
  detail::require_positive(hop_radius_m, "hop_radius_m");
  if (n_max < 1) {
    throw std::invalid_argument("n_max must be >= 1");
  }

  // Vertex layout: relays first (in rank order), then out-of-coverage nodes.
  const std::size_t relay_count = relays.relays.size();
  std::vector<GroundPoint> points;
  points.reserve(relay_count + partition.out_coverage.size());
  std::unordered_map<NodeId, std::size_t> out_index;
  for (const NodeId id : partition.out_coverage) {
    out_index.emplace(id, out_index.size());
  }
  for (const RelayCandidate& r : relays.relays) {
    if (out_index.contains(r.id)) {
      throw std::invalid_argument("relay " + std::to_string(r.id) + " is outside UAV coverage");
    }
    const Node& n = field.nodes.at(static_cast<std::size_t>(r.id));
    points.push_back({n.x_m, n.y_m});
  }
  for (const NodeId id : partition.out_coverage) {
    const Node& n = field.nodes.at(static_cast<std::size_t>(id));
    points.push_back({n.x_m, n.y_m});
  }

  const kernels::NeighborLists graph = kernels::disc_neighbors(points, hop_radius_m, threads);

  constexpr std::int64_t kUnvisited = -1;
  std::vector<std::int64_t> depth(points.size(), kUnvisited);
  std::vector<NodeId> root(points.size(), kNoNode);
  std::deque<std::size_t> frontier;
  for (std::size_t r = 0; r < relay_count; ++r) {
    depth[r] = 0;
    root[r] = relays.relays[r].id;
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop_front();
    if (depth[v] >= n_max) {
      continue;
    }
    for (const std::uint32_t w : graph.of(v)) {
      if (w >= relay_count && depth[w] == kUnvisited) {
        depth[w] = depth[v] + 1;
        root[w] = root[v];
        frontier.push_back(w);
      }
    }
  }

  ReachabilityReport report;
  report.out_nodes.reserve(partition.out_coverage.size());
  for (std::size_t k = 0; k < partition.out_coverage.size(); ++k) {
    const std::size_t v = relay_count + k;
    const bool reached = depth[v] != kUnvisited;
    report.out_nodes.push_back(
        {partition.out_coverage[k], reached ? root[v] : kNoNode, reached ? depth[v] : 0, reached});
    report.reachable_count += reached ? 1 : 0;
  }
  report.coverage_extension_ratio =
      partition.out_coverage.empty()
          ? 1.0
          : static_cast<double>(report.reachable_count) /
                static_cast<double>(partition.out_coverage.size());
  report.direct_coverage_ratio =
      field.nodes.empty() ? 0.0
                          : static_cast<double>(partition.in_coverage.size()) /
                                static_cast<double>(field.nodes.size());
  return report;
}

}  // namespace covsim
