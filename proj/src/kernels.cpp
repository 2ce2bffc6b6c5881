#include "covsim/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <utility>

#include "checks.hpp"
#include "covsim/scenario.hpp"

namespace covsim::kernels {

namespace {

void check_radius(double radius) { detail::require_positive(radius, "radius"); }

void check_point_count(std::size_t n) {
  if (n > static_cast<std::size_t>(UINT32_MAX)) {
    throw std::invalid_argument("too many points for 32-bit neighbour indices");
  }
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

NeighborLists assemble(std::vector<std::vector<std::uint32_t>>& rows) {
  NeighborLists lists;
  lists.offsets.reserve(rows.size() + 1);
  lists.offsets.push_back(0);
  for (const auto& row : rows) {
    lists.offsets.push_back(lists.offsets.back() + row.size());
  }
  lists.indices.reserve(lists.offsets.back());
  for (const auto& row : rows) {
    lists.indices.insert(lists.indices.end(), row.begin(), row.end());
  }
  return lists;
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
}

void check_capacity_inputs(std::span<const std::int64_t> hops, std::span<const double> lambda_r) {
  if (hops.empty() || lambda_r.empty()) {
    throw std::invalid_argument("capacity grid axes must not be empty");
  }
}

CapacityResult capacity_cell(const CapacityParams& base, std::int64_t hops, double lambda_r,
                             double quad_tolerance, IntegrandForm form) {
  CapacityParams cell = base;
  cell.n_hops = hops;
  cell.lambda_r = lambda_r;
  return system_capacity(cell, quad_tolerance, form);
}

}  // namespace

namespace serial {

NeighborLists disc_neighbors(std::span<const GroundPoint> points, double radius) {
  check_radius(radius);
  check_point_count(points.size());
  const double radius_sq = radius * radius;
  std::vector<std::vector<std::uint32_t>> rows(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j && within_disc(points[i], points[j], radius_sq)) {
        rows[i].push_back(static_cast<std::uint32_t>(j));
      }
    }
  }
  return assemble(rows);
}

std::vector<std::uint64_t> field_node_counts(double intensity, double area_m,
                                             std::span<const std::uint64_t> seeds) {
  std::vector<std::uint64_t> counts(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    counts[i] = generate_field(intensity, area_m, seeds[i]).nodes.size();
  }
  return counts;
}

CapacityGrid capacity_grid(const CapacityParams& base, std::span<const std::int64_t> hops,
                           std::span<const double> lambda_r, double quad_tolerance,
                           IntegrandForm form) {
  check_capacity_inputs(hops, lambda_r);
  CapacityGrid grid{{hops.begin(), hops.end()}, {lambda_r.begin(), lambda_r.end()}, {}};
  grid.cells.reserve(hops.size() * lambda_r.size());
  for (const std::int64_t n : hops) {
    for (const double lr : lambda_r) {
      grid.cells.push_back(capacity_cell(base, n, lr, quad_tolerance, form));
    }
  }
  return grid;
}

}  // namespace serial

namespace omp {

NeighborLists disc_neighbors(std::span<const GroundPoint> points, double radius, int threads) {
  check_radius(radius);
  check_point_count(points.size());
  const std::size_t n = points.size();
  if (n == 0) {
    return NeighborLists{{0}, {}};
  }

  double min_x = points[0].x_m;
  double min_y = points[0].y_m;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.x_m);
    min_y = std::min(min_y, p.y_m);
  }

  // Sorted (cell, index) pairs; a cell's members are one contiguous run.
  // Cells are a hair wider than the radius so rounding in the division can
  // never put two adjacent points two cells apart.
  using CellKey = std::pair<std::int64_t, std::int64_t>;
  const double cell = radius * (1.0 + 1e-9);
  auto cell_of = [&](const GroundPoint& p) {
    return CellKey{static_cast<std::int64_t>(std::floor((p.x_m - min_x) / cell)),
                   static_cast<std::int64_t>(std::floor((p.y_m - min_y) / cell))};
  };
  std::vector<std::pair<CellKey, std::uint32_t>> binned(n);
  for (std::size_t i = 0; i < n; ++i) {
    binned[i] = {cell_of(points[i]), static_cast<std::uint32_t>(i)};
  }
  std::sort(binned.begin(), binned.end());

  const double radius_sq = radius * radius;
  std::vector<std::vector<std::uint32_t>> rows(n);
  const auto count = static_cast<std::int64_t>(n);

#pragma omp parallel for schedule(dynamic, 64) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    const GroundPoint p = points[static_cast<std::size_t>(i)];
    const CellKey home = cell_of(p);
    auto& row = rows[static_cast<std::size_t>(i)];
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const CellKey key{home.first + dx, home.second + dy};
        auto lo = std::lower_bound(binned.begin(), binned.end(), std::pair{key, std::uint32_t{0}});
        for (auto it = lo; it != binned.end() && it->first == key; ++it) {
          if (it->second != static_cast<std::uint32_t>(i) &&
              within_disc(p, points[it->second], radius_sq)) {
            row.push_back(it->second);
          }
        }
      }
    }
    std::sort(row.begin(), row.end());
  }
  return assemble(rows);
}

std::vector<std::uint64_t> field_node_counts(double intensity, double area_m,
                                             std::span<const std::uint64_t> seeds, int threads) {
  std::vector<std::uint64_t> counts(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  const auto count = static_cast<std::int64_t>(seeds.size());

#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      counts[k] = generate_field(intensity, area_m, seeds[k]).nodes.size();
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return counts;
}

CapacityGrid capacity_grid(const CapacityParams& base, std::span<const std::int64_t> hops,
                           std::span<const double> lambda_r, double quad_tolerance,
                           IntegrandForm form, int threads) {
  check_capacity_inputs(hops, lambda_r);
  CapacityGrid grid{{hops.begin(), hops.end()}, {lambda_r.begin(), lambda_r.end()}, {}};
  const std::size_t width = lambda_r.size();
  const std::size_t total = hops.size() * width;
  grid.cells.resize(total);
  std::vector<std::exception_ptr> errors(total);
  const auto count = static_cast<std::int64_t>(total);

#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
  for (std::int64_t c = 0; c < count; ++c) {
    const auto k = static_cast<std::size_t>(c);
    try {
      grid.cells[k] = capacity_cell(base, hops[k / width], lambda_r[k % width], quad_tolerance, form);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return grid;
}

}  // namespace omp

NeighborLists disc_neighbors(std::span<const GroundPoint> points, double radius, int threads) {
  return threads > 1 ? omp::disc_neighbors(points, radius, threads)
                     : serial::disc_neighbors(points, radius);
}

CapacityGrid capacity_grid(const CapacityParams& base, std::span<const std::int64_t> hops,
                           std::span<const double> lambda_r, double quad_tolerance,
                           IntegrandForm form, int threads) {
  return threads > 1 ? omp::capacity_grid(base, hops, lambda_r, quad_tolerance, form, threads)
                     : serial::capacity_grid(base, hops, lambda_r, quad_tolerance, form);
}

}  // namespace covsim::kernels
