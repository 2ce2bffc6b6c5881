#pragma once

// Data-parallel kernels behind the sweeps and scenario analysis.
//
// Each kernel has a plain serial implementation, kept as the reference, and
// an OpenMP implementation. The two must agree bit for bit: cells are pure
// functions of their inputs and results are written in input order, so the
// thread count never changes an output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "covsim/atg_channel.hpp"
#include "covsim/d2d_capacity.hpp"

namespace covsim::kernels {

// Compressed adjacency: neighbours of i are indices[offsets[i] .. offsets[i+1]),
// ascending.
struct NeighborLists {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> indices;

  std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const std::uint32_t> of(std::size_t i) const {
    return {indices.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
  bool operator==(const NeighborLists&) const = default;
};

// Two points are adjacent iff dx^2 + dy^2 <= radius^2 (and they differ).
inline bool within_disc(GroundPoint p, GroundPoint q, double radius_sq) {
  const double dx = p.x_m - q.x_m;
  const double dy = p.y_m - q.y_m;
  return dx * dx + dy * dy <= radius_sq;
}

// Row-major [hop][lambda_r] grid of system_capacity results.
struct CapacityGrid {
  std::vector<std::int64_t> hops;
  std::vector<double> lambda_r;
  std::vector<CapacityResult> cells;

  const CapacityResult& at(std::size_t hop_index, std::size_t lr_index) const {
    return cells[hop_index * lambda_r.size() + lr_index];
  }
};

namespace serial {

NeighborLists disc_neighbors(std::span<const GroundPoint> points, double radius);

std::vector<std::uint64_t> field_node_counts(double intensity, double area_m,
                                             std::span<const std::uint64_t> seeds);

CapacityGrid capacity_grid(const CapacityParams& base, std::span<const std::int64_t> hops,
                           std::span<const double> lambda_r, double quad_tolerance,
                           IntegrandForm form);

}  // namespace serial

namespace omp {

// Bins points on a uniform grid of cell size `radius` and scans the 3x3 cell
// neighbourhood of each point in parallel.
NeighborLists disc_neighbors(std::span<const GroundPoint> points, double radius, int threads = 0);

std::vector<std::uint64_t> field_node_counts(double intensity, double area_m,
                                             std::span<const std::uint64_t> seeds,
                                             int threads = 0);

CapacityGrid capacity_grid(const CapacityParams& base, std::span<const std::int64_t> hops,
                           std::span<const double> lambda_r, double quad_tolerance,
                           IntegrandForm form, int threads = 0);

}  // namespace omp

// threads <= 1 runs the serial reference, otherwise the OpenMP kernel with
// that many threads.
NeighborLists disc_neighbors(std::span<const GroundPoint> points, double radius, int threads);
CapacityGrid capacity_grid(const CapacityParams& base, std::span<const std::int64_t> hops,
                           std::span<const double> lambda_r, double quad_tolerance,
                           IntegrandForm form, int threads);

}  // namespace covsim::kernels
