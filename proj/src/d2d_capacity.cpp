#include "covsim/d2d_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "checks.hpp"

namespace covsim {

using detail::require_positive;

double interference_constant(double alpha) {
  require_positive(alpha, "alpha");
  if (alpha <= 2.0) {
    throw std::invalid_argument("alpha must be > 2");
  }
  const double delta = 2.0 / alpha;
  return (2.0 * std::numbers::pi / alpha) * std::tgamma(delta) * std::tgamma(1.0 - delta);
}

void CapacityParams::validate() const {
  require_positive(lambda_d, "lambda_d");
  detail::require_non_negative(lambda_r, "lambda_r");
  require_positive(r_d_m, "r_d_m");
  if (n_hops < 1) {
    throw std::invalid_argument("n_hops must be >= 1");
  }
  require_positive(alpha, "alpha");
  if (alpha <= 2.0) {
    throw std::invalid_argument("alpha must be > 2");
  }
  require_positive(v_d_threshold, "v_d_threshold");
  require_positive(p_relay_w, "p_relay_w");
  require_positive(p_d2d_w, "p_d2d_w");
  require_positive(c_alpha, "c_alpha");
}

double hop_distance(double r_d_m, std::int64_t n_hops) {
  require_positive(r_d_m, "r_d_m");
  if (n_hops < 1) {
    throw std::invalid_argument("n_hops must be >= 1");
  }
  return r_d_m / static_cast<double>(n_hops);
}

double power_ratio_gamma(double p_relay_w, double p_d2d_w, double alpha) {
  require_positive(p_relay_w, "p_relay_w");
  require_positive(p_d2d_w, "p_d2d_w");
  require_positive(alpha, "alpha");
  if (alpha <= 2.0) {
    throw std::invalid_argument("alpha must be > 2");
  }
  return std::pow(p_relay_w / p_d2d_w, 2.0 / alpha);
}

double zeta_dr(double c_alpha, double r_r_m, double v_d_threshold, double alpha) {
  require_positive(c_alpha, "c_alpha");
  require_positive(r_r_m, "r_r_m");
  require_positive(v_d_threshold, "v_d_threshold");
  require_positive(alpha, "alpha");
  return c_alpha * r_r_m * r_r_m * std::pow(v_d_threshold, 2.0 / alpha);
}

QuadratureResult capacity_integral(double zeta, double abs_tol) {
  require_positive(zeta, "zeta_dr");
  require_positive(abs_tol, "quad_tolerance");

  // Tail: int_V^inf e^{-zeta v}/(1+v) dv <= e^{-zeta V}/zeta, held at tol/10.
  const double tail_budget = 0.1 * abs_tol;
  double v_max = std::log(1.0 / (zeta * tail_budget)) / zeta;
  v_max = std::max(v_max, 1.0 / zeta);
  const double tail_bound = std::exp(-zeta * v_max) / zeta;

  // v = e^u - 1, dv = e^u du, 1 + v = e^u: integrand becomes exp(-zeta (e^u - 1)).
  auto integrand = [zeta](double u) { return std::exp(-zeta * std::expm1(u)); };
  QuadratureResult result =
      integrate_adaptive(integrand, 0.0, std::log1p(v_max), abs_tol - tail_bound);
  result.abs_error += tail_bound;
  return result;
}

CapacityResult system_capacity(const CapacityParams& params, double quad_tolerance,
                               IntegrandForm form) {
  params.validate();
  require_positive(quad_tolerance, "quad_tolerance");

  const double r_r = hop_distance(params.r_d_m, params.n_hops);
  const double zeta = zeta_dr(params.c_alpha, r_r, params.v_d_threshold, params.alpha);
  const double gamma = power_ratio_gamma(params.p_relay_w, params.p_d2d_w, params.alpha);
  const double density_sum = params.lambda_d + gamma * params.lambda_r;
  const double per_hop = params.lambda_d / static_cast<double>(params.n_hops);

  double prefactor = 0.0;
  double exponent = 0.0;
  switch (form) {
    case IntegrandForm::density_prefactor:
      prefactor = per_hop * density_sum;
      exponent = zeta;
      break;
    case IntegrandForm::density_in_exponent:
      prefactor = per_hop;
      exponent = zeta * density_sum;
      break;
  }

  const QuadratureResult integral = capacity_integral(exponent, quad_tolerance);
  return {prefactor * integral.value, zeta, gamma, integral.abs_error};
}

std::vector<HopCapacity> capacity_vs_hops(const CapacityParams& params,
                                          std::span<const std::int64_t> n_range,
                                          double quad_tolerance, IntegrandForm form) {
  if (n_range.empty()) {
    throw std::invalid_argument("hop range must not be empty");
  }
  std::vector<std::int64_t> hops(n_range.begin(), n_range.end());
  std::sort(hops.begin(), hops.end());

  std::vector<HopCapacity> series;
  series.reserve(hops.size());
  for (const std::int64_t n : hops) {
    if (n < 1) {
      throw std::invalid_argument("every hop count must be >= 1");
    }
    CapacityParams at_n = params;
    at_n.n_hops = n;
    series.push_back({n, system_capacity(at_n, quad_tolerance, form)});
  }
  return series;
}

}  // namespace covsim
