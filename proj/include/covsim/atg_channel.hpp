#pragma once

// Air-to-ground channel between a hovering UAV and ground devices.
//
// The model is the usual average one: a sigmoid LoS probability driven by the
// elevation angle, and a path loss that is free-space loss plus the
// probability-weighted LoS/NLoS excess loss. Everything here is a pure
// function; no state, safe to call from any thread.

#include <array>

namespace covsim {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct EnvironmentProfile {
  double a = 10.0;           // sigmoid offset, degrees
  double b = 0.6;            // sigmoid steepness, 1/degree
  double eta_los_db = 1.0;   // mean excess loss on LoS links
  double eta_nlos_db = 20.0; // mean excess loss on NLoS links

  // Throws std::invalid_argument if a, b <= 0 or not eta_nlos >= eta_los >= 0.
  void validate() const;
};

// Excess-loss values used when sweeping eta_los against a fixed NLoS loss.
inline constexpr std::array<double, 4> kEtaLosPreset{0.1, 1.0, 1.6, 2.3};

struct UavPlacement {
  double altitude_m = 100.0;
  double ground_x_m = 500.0;
  double ground_y_m = 500.0;
  double coverage_radius_m = 300.0;

  void validate() const;
};

struct LinkGeometry {
  double horizontal_range_m;
  double slant_distance_m;
  double elevation_deg;
};

struct GroundPoint {
  double x_m;
  double y_m;
};

double uav_ground_distance(double horizontal_range_m, double altitude_m);

// Elevation of the UAV seen from the ground point, in degrees. A zero
// horizontal range is the nadir and yields exactly 90.
double elevation_angle_deg(double horizontal_range_m, double altitude_m);

LinkGeometry link_geometry(double horizontal_range_m, double altitude_m);

double p_los(double horizontal_range_m, double altitude_m, const EnvironmentProfile& env);
double p_nlos(double horizontal_range_m, double altitude_m, const EnvironmentProfile& env);

double free_space_path_loss_db(double carrier_hz, double distance_m);

// FSPL + eta_los * p + eta_nlos * (1 - p).
double average_path_loss_db(double carrier_hz, double distance_m, double p_los,
                            const EnvironmentProfile& env);

// UAV -> relay link: ground range from the UAV projection, slant distance,
// LoS probability and the averaged loss, composed.
double path_loss_at_relay(const UavPlacement& uav, GroundPoint relay, double carrier_hz,
                          const EnvironmentProfile& env);

}  // namespace covsim
