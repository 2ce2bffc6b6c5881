#pragma once

// Reproducible random streams for scenario generation.
//
// Every attribute class of a node field draws from its own stream. A stream
// is an mt19937_64 whose seed is the first splitmix64 output of
// (seed + golden_gamma * (stream_index + 1)). Adding a new stream therefore
// never perturbs the values drawn from existing ones. Uniform and Poisson
// variates are produced here rather than through <random> distributions,
// whose algorithms differ between standard libraries.

#include <cstdint>
#include <random>

namespace covsim {

enum class StreamId : std::uint64_t {
  node_count = 0,
  position = 1,
  residual_energy = 2,
  link_quality = 3,
};

std::uint64_t splitmix64(std::uint64_t& state);

std::uint64_t derive_stream_seed(std::uint64_t seed, StreamId stream);

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, StreamId stream);

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // Exact Poisson variate by sequential inversion; means above 256 are split
  // into a sum of smaller Poisson draws.
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t poisson_small(double mean);

  std::mt19937_64 engine_;
};

}  // namespace covsim
