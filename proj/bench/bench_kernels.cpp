// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "covsim/kernels.hpp"

using namespace covsim;

namespace {

std::vector<GroundPoint> uniform_points(std::size_t n, double extent) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.0, extent);
  std::vector<GroundPoint> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

// Node density of the default field, scaled so the mean degree stays fixed.
double extent_for(std::size_t n) { return std::sqrt(static_cast<double>(n) / 3.3e-4); }

void BM_DiscNeighborsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = uniform_points(n, extent_for(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::disc_neighbors(pts, 50.0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_DiscNeighborsOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = uniform_points(n, extent_for(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::omp::disc_neighbors(pts, 50.0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

std::vector<std::uint64_t> seed_range(std::int64_t n) {
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(n));
  std::iota(seeds.begin(), seeds.end(), 1);
  return seeds;
}

void BM_FieldCountsSerial(benchmark::State& state) {
  const auto seeds = seed_range(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::field_node_counts(3.3e-4, 1000.0, seeds));
  }
}

void BM_FieldCountsOmp(benchmark::State& state) {
  const auto seeds = seed_range(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::omp::field_node_counts(3.3e-4, 1000.0, seeds));
  }
}

const std::vector<std::int64_t> kHops{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
const std::vector<double> kRelayDensity{0.1, 0.2, 0.3, 0.4, 0.5};

void BM_CapacityGridSerial(benchmark::State& state) {
  const CapacityParams base;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::capacity_grid(
        base, kHops, kRelayDensity, kDefaultQuadTolerance, IntegrandForm::density_prefactor));
  }
}

void BM_CapacityGridOmp(benchmark::State& state) {
  const CapacityParams base;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::omp::capacity_grid(
        base, kHops, kRelayDensity, kDefaultQuadTolerance, IntegrandForm::density_prefactor));
  }
}

}  // namespace

BENCHMARK(BM_DiscNeighborsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscNeighborsOmp)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FieldCountsSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FieldCountsOmp)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CapacityGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CapacityGridOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
