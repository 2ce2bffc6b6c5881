#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "covsim/atg_channel.hpp"

using namespace covsim;

namespace {
const EnvironmentProfile kUrban{10.0, 0.6, 1.0, 20.0};
}

TEST_CASE("uav_ground_distance") {
  CHECK(uav_ground_distance(3.0, 4.0) == 5.0);
  CHECK(uav_ground_distance(0.0, 120.0) == 120.0);
  CHECK(uav_ground_distance(100.0, 100.0) == doctest::Approx(141.42135623730950).epsilon(1e-15));

  SUBCASE("agrees with hypot and grows in both arguments") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 5000.0);
    for (int i = 0; i < 2000; ++i) {
      const double r = u(rng);
      const double h = u(rng) + 1.0;
      const double d = uav_ground_distance(r, h);
      CHECK(std::abs(d - std::hypot(r, h)) <= 1e-12 * d);
      CHECK(d >= h);
      CHECK(uav_ground_distance(r + 1.0, h) > d);
      CHECK(uav_ground_distance(r, h + 1.0) > d);
    }
  }

  SUBCASE("rejects bad inputs") {
    CHECK_THROWS_AS(uav_ground_distance(-1.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(uav_ground_distance(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(uav_ground_distance(std::nan(""), 10.0), std::invalid_argument);
    CHECK_THROWS_AS(uav_ground_distance(1.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
  }
}

TEST_CASE("link geometry") {
  const LinkGeometry g = link_geometry(100.0, 100.0);
  CHECK(g.elevation_deg == doctest::Approx(45.0).epsilon(1e-14));
  CHECK(g.slant_distance_m == uav_ground_distance(100.0, 100.0));
  CHECK(link_geometry(0.0, 50.0).elevation_deg == 90.0);
}

TEST_CASE("p_los examples") {
  // Nadir: theta = 90, exponent -0.6 * 80 saturates the sigmoid.
  CHECK(std::abs(p_los(0.0, 120.0, kUrban) - 1.0) < 1e-12);
  CHECK(std::abs(p_nlos(0.0, 120.0, kUrban)) < 1e-12);

  // theta == a == 10 degrees makes the exponent vanish.
  const double h = 100.0;
  const double r = h / std::tan(10.0 * std::numbers::pi / 180.0);
  CHECK(p_los(r, h, kUrban) == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
  CHECK(p_nlos(r, h, kUrban) == doctest::Approx(10.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("p_los properties") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> range(0.0, 3000.0);
  std::uniform_real_distribution<double> alt(1.0, 1000.0);
  for (int i = 0; i < 5000; ++i) {
    const double r = range(rng);
    const double h = alt(rng);
    const double p = p_los(r, h, kUrban);
    CHECK(p > 0.0);
    CHECK(p <= 1.0);
    CHECK(std::abs(p + p_nlos(r, h, kUrban) - 1.0) <= 1e-15);
    CHECK(p_los(r, h * 1.1, kUrban) >= p);
    CHECK(p_los(r * 1.1 + 1.0, h, kUrban) <= p);
  }
}

TEST_CASE("p_los rejects an invalid environment") {
  CHECK_THROWS_AS(p_los(10.0, 10.0, EnvironmentProfile{0.0, 0.6, 1.0, 20.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(p_los(10.0, 10.0, EnvironmentProfile{10.0, -1.0, 1.0, 20.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(p_los(10.0, 10.0, EnvironmentProfile{10.0, 0.6, 21.0, 20.0}),
                  std::invalid_argument);
}

TEST_CASE("free space path loss") {
  CHECK(free_space_path_loss_db(2.8e9, 100.0) == doctest::Approx(81.390943848727758).epsilon(1e-13));
  CHECK(free_space_path_loss_db(5.8e9, 250.0) - free_space_path_loss_db(2.8e9, 250.0) ==
        doctest::Approx(6.3253992444143615).epsilon(1e-12));

  SUBCASE("doubling law") {
    const double six = 20.0 * std::log10(2.0);
    for (double fc = 1e9; fc <= 10e9; fc += 0.5e9) {
      for (double d = 1.0; d <= 10000.0; d *= 1.7) {
        CHECK(std::abs(free_space_path_loss_db(fc, 2.0 * d) - free_space_path_loss_db(fc, d) - six) <
              1e-9);
      }
    }
  }

  CHECK_THROWS_AS(free_space_path_loss_db(2.8e9, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(free_space_path_loss_db(0.0, 10.0), std::invalid_argument);
}

TEST_CASE("average path loss") {
  const double fspl = free_space_path_loss_db(2.8e9, 150.0);
  CHECK(average_path_loss_db(2.8e9, 150.0, 1.0, kUrban) == fspl + 1.0);
  CHECK(average_path_loss_db(2.8e9, 150.0, 0.0, kUrban) == fspl + 20.0);
  CHECK(average_path_loss_db(2.8e9, 150.0, 0.5, kUrban) == doctest::Approx(fspl + 10.5).epsilon(1e-15));

  SUBCASE("affine in p_los") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const double p = u(rng);
      const double q = u(rng);
      if (std::abs(p - q) < 1e-3) continue;
      const double slope = (average_path_loss_db(3.5e9, 80.0, p, kUrban) -
                            average_path_loss_db(3.5e9, 80.0, q, kUrban)) /
                           (p - q);
      CHECK(std::abs(slope - (kUrban.eta_los_db - kUrban.eta_nlos_db)) < 1e-9);
    }
  }

  CHECK_THROWS_AS(average_path_loss_db(2.8e9, 10.0, 1.5, kUrban), std::invalid_argument);
  CHECK_THROWS_AS(average_path_loss_db(2.8e9, 0.0, 0.5, kUrban), std::invalid_argument);
}

TEST_CASE("path loss at relay") {
  const UavPlacement uav{120.0, 500.0, 500.0, 300.0};

  SUBCASE("relay under the UAV") {
    const double pl = path_loss_at_relay(uav, {500.0, 500.0}, 2.8e9, kUrban);
    CHECK(pl == doctest::Approx(free_space_path_loss_db(2.8e9, 120.0) + 1.0).epsilon(1e-12));
    CHECK(path_loss_at_relay(uav, {500.0, 500.0}, 3.5e9, kUrban) > pl);
  }

  SUBCASE("equals the manual composition") {
    const GroundPoint relay{730.0, 410.0};
    const double r = std::hypot(230.0, -90.0);
    const double manual = average_path_loss_db(2.8e9, uav_ground_distance(r, 120.0),
                                               p_los(r, 120.0, kUrban), kUrban);
    CHECK(std::abs(path_loss_at_relay(uav, relay, 2.8e9, kUrban) - manual) <= 1e-12);
  }
}
