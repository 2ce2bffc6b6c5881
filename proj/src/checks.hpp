#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace covsim::detail {

inline void require_finite(double value, std::string_view name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

inline void require_positive(double value, std::string_view name) {
  require_finite(value, name);
  if (value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be > 0");
  }
}

inline void require_non_negative(double value, std::string_view name) {
  require_finite(value, name);
  if (value < 0.0) {
    throw std::invalid_argument(std::string(name) + " must be >= 0");
  }
}

inline void require_probability(double value, std::string_view name) {
  require_finite(value, name);
  if (value < 0.0 || value > 1.0) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace covsim::detail
