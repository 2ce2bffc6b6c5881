#include "covsim/erlang.hpp"

#include <stdexcept>

#include "checks.hpp"

namespace covsim {

void TrafficLoad::validate() const {
  detail::require_non_negative(offered_erlang, "offered_erlang");
  if (channels < 0) {
    throw std::invalid_argument("channels must be >= 0");
  }
}

double loss_probability(const TrafficLoad& load) {
  load.validate();
  const double a = load.offered_erlang;
  double blocking = 1.0;
  for (std::int64_t k = 1; k <= load.channels; ++k) {
    const double carried = a * blocking;
    blocking = carried / (static_cast<double>(k) + carried);
  }
  return blocking;
}

std::int64_t channels_for_grade(double offered_erlang, double target_blocking) {
  detail::require_positive(offered_erlang, "offered_erlang");
  detail::require_finite(target_blocking, "target_blocking");
  if (target_blocking <= 0.0 || target_blocking >= 1.0) {
    throw std::invalid_argument("target_blocking must lie in (0, 1)");
  }
  // Same recursion as loss_probability, stopping at the first N that meets
  // the grade. B(N, A) -> 0, so this terminates.
  double blocking = 1.0;
  std::int64_t n = 0;
  while (blocking > target_blocking) {
    ++n;
    const double carried = offered_erlang * blocking;
    blocking = carried / (static_cast<double>(n) + carried);
  }
  return n;
}

}  // namespace covsim
