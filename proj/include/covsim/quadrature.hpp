#pragma once

#include <functional>
#include <stdexcept>

namespace covsim {

// Raised when an integral cannot be brought under the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int subintervals = 0;
};

// Globally adaptive 15-point Gauss-Kronrod on a finite interval. The error
// estimate of a panel is |K15 - G7|; the panel with the largest estimate is
// bisected until the summed estimate is <= abs_tol. Throws QuadratureError if
// max_subintervals is reached first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double abs_tol, int max_subintervals = 4000);

}  // namespace covsim
