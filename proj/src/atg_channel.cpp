#include "covsim/atg_channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "checks.hpp"

namespace covsim {

using detail::require_non_negative;
using detail::require_positive;

void EnvironmentProfile::validate() const {
  require_positive(a, "a");
  require_positive(b, "b");
  require_non_negative(eta_los_db, "eta_los_db");
  require_non_negative(eta_nlos_db, "eta_nlos_db");
  if (eta_nlos_db < eta_los_db) {
    throw std::invalid_argument("eta_nlos_db must be >= eta_los_db");
  }
}

void UavPlacement::validate() const {
  require_positive(altitude_m, "altitude_m");
  require_positive(coverage_radius_m, "coverage_radius_m");
  detail::require_finite(ground_x_m, "ground_x_m");
  detail::require_finite(ground_y_m, "ground_y_m");
}

double uav_ground_distance(double horizontal_range_m, double altitude_m) {
  require_non_negative(horizontal_range_m, "horizontal_range_m");
  require_positive(altitude_m, "altitude_m");
  return std::sqrt(horizontal_range_m * horizontal_range_m + altitude_m * altitude_m);
}

double elevation_angle_deg(double horizontal_range_m, double altitude_m) {
  require_non_negative(horizontal_range_m, "horizontal_range_m");
  require_positive(altitude_m, "altitude_m");
  if (horizontal_range_m == 0.0) {
    return 90.0;
  }
  return (180.0 / std::numbers::pi) * std::atan(altitude_m / horizontal_range_m);
}

LinkGeometry link_geometry(double horizontal_range_m, double altitude_m) {
  return {horizontal_range_m, uav_ground_distance(horizontal_range_m, altitude_m),
          elevation_angle_deg(horizontal_range_m, altitude_m)};
}

double p_los(double horizontal_range_m, double altitude_m, const EnvironmentProfile& env) {
  env.validate();
  const double theta = elevation_angle_deg(horizontal_range_m, altitude_m);
  return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta - env.a)));
}

double p_nlos(double horizontal_range_m, double altitude_m, const EnvironmentProfile& env) {
  return 1.0 - p_los(horizontal_range_m, altitude_m, env);
}

double free_space_path_loss_db(double carrier_hz, double distance_m) {
  require_positive(carrier_hz, "carrier_hz");
  require_positive(distance_m, "distance_m");
  return 20.0 * std::log10(4.0 * std::numbers::pi * carrier_hz * distance_m / kSpeedOfLight);
}

double average_path_loss_db(double carrier_hz, double distance_m, double p_los,
                            const EnvironmentProfile& env) {
  detail::require_probability(p_los, "p_los");
  env.validate();
  return free_space_path_loss_db(carrier_hz, distance_m) + env.eta_los_db * p_los +
         env.eta_nlos_db * (1.0 - p_los);
}

double path_loss_at_relay(const UavPlacement& uav, GroundPoint relay, double carrier_hz,
                          const EnvironmentProfile& env) {
  uav.validate();
  const double range = std::hypot(relay.x_m - uav.ground_x_m, relay.y_m - uav.ground_y_m);
  const double d = uav_ground_distance(range, uav.altitude_m);
  return average_path_loss_db(carrier_hz, d, p_los(range, uav.altitude_m, env), env);
}

}  // namespace covsim
