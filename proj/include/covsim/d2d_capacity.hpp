#pragma once

// Capacity of a relay-assisted multi-hop D2D system.
//
//   C = (lambda_d / N) * (lambda_d + gamma_dr * lambda_r) * I(zeta_dr)
//   I(z) = integral_0^inf exp(-z v) / (1 + v) dv            (= e^z E1(z))
//   zeta_dr  = C_alpha * R_r^2 * V_d^(2/alpha),   R_r = R_d / N
//   gamma_dr = (p_r / p_d)^(2/alpha)
//
// The density sum (lambda_d + gamma_dr lambda_r) is a prefactor. The other
// plausible reading, with the density sum multiplying zeta inside the
// exponent, is kept as IntegrandForm::density_in_exponent for comparison.

#include <cstdint>
#include <span>
#include <vector>

#include "covsim/quadrature.hpp"

namespace covsim {

// (2 pi / alpha) * Gamma(2 / alpha) * Gamma(1 - 2 / alpha); requires alpha > 2.
double interference_constant(double alpha);

struct CapacityParams {
  double lambda_d = 3.3e-4;  // D2D density, 1/m^2
  double lambda_r = 0.3;     // relay density (sweep parameter), may be 0
  double r_d_m = 50.0;       // end-to-end D2D distance
  std::int64_t n_hops = 10;
  double alpha = 3.0;
  double v_d_threshold = 1.0;  // SIR threshold, linear
  double p_relay_w = 1.0;
  double p_d2d_w = 1.0;
  double c_alpha = interference_constant(3.0);

  void validate() const;
};

enum class IntegrandForm {
  density_prefactor,
  density_in_exponent,
};

struct CapacityResult {
  double capacity = 0.0;
  double zeta_dr = 0.0;
  double gamma_dr = 0.0;
  // Absolute error bound of the integral I (quadrature estimate + tail bound).
  double quadrature_abs_error = 0.0;
};

struct HopCapacity {
  std::int64_t n_hops;
  CapacityResult result;
};

inline constexpr double kDefaultQuadTolerance = 1e-13;

double hop_distance(double r_d_m, std::int64_t n_hops);
double power_ratio_gamma(double p_relay_w, double p_d2d_w, double alpha);
double zeta_dr(double c_alpha, double r_r_m, double v_d_threshold, double alpha);

// I(zeta) to an absolute tolerance. The infinite range is truncated at
// V_max with exp(-zeta V_max) / zeta <= tol / 10, and the remaining interval
// is mapped through v = e^u - 1 so the integrand is smooth and bounded by 1.
QuadratureResult capacity_integral(double zeta, double abs_tol);

CapacityResult system_capacity(const CapacityParams& params,
                               double quad_tolerance = kDefaultQuadTolerance,
                               IntegrandForm form = IntegrandForm::density_prefactor);

// One system_capacity evaluation per hop count, with R_r = R_d / N redone for
// each; returned in ascending N.
std::vector<HopCapacity> capacity_vs_hops(const CapacityParams& params,
                                          std::span<const std::int64_t> n_range,
                                          double quad_tolerance = kDefaultQuadTolerance,
                                          IntegrandForm form = IntegrandForm::density_prefactor);

}  // namespace covsim
