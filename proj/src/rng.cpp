#include "covsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace covsim {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kPoissonChunk = 256.0;
}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  state += kGoldenGamma;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, StreamId stream) {
  std::uint64_t state = seed + kGoldenGamma * (static_cast<std::uint64_t>(stream) + 1);
  return splitmix64(state);
}

RandomStream::RandomStream(std::uint64_t seed, StreamId stream)
    : engine_(derive_stream_seed(seed, stream)) {}

double RandomStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::poisson(double mean) {
  if (!std::isfinite(mean) || mean < 0.0) {
    throw std::invalid_argument("poisson mean must be finite and >= 0");
  }
  std::uint64_t total = 0;
  while (mean > kPoissonChunk) {
    total += poisson_small(kPoissonChunk);
    mean -= kPoissonChunk;
  }
  return total + poisson_small(mean);
}

std::uint64_t RandomStream::poisson_small(double mean) {
  if (mean == 0.0) {
    return 0;
  }
  const double u = uniform01();
  double p = std::exp(-mean);
  double cdf = p;
  std::uint64_t k = 0;
  // The cdf saturates near 1 in floating point; once the pmf underflows the
  // remaining mass is below double resolution.
  while (u >= cdf && p > 0.0) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

}  // namespace covsim
