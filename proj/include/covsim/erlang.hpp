#pragma once

#include <cstdint>

namespace covsim {

// Offered load on an N-channel loss system (blocked calls cleared).
struct TrafficLoad {
  double offered_erlang = 0.0;
  std::int64_t channels = 0;

  void validate() const;
};

// Erlang-B blocking probability B(N, A), evaluated with the recursion
//   B(0) = 1,  B(k) = A B(k-1) / (k + A B(k-1)),
// which stays in [0, 1] at every step and never forms A^N or N!.
double loss_probability(const TrafficLoad& load);

// Smallest channel count whose blocking probability is <= target_blocking.
std::int64_t channels_for_grade(double offered_erlang, double target_blocking);

}  // namespace covsim
