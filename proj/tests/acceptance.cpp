// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covsim/atg_channel.hpp"
#include "covsim/d2d_capacity.hpp"
#include "covsim/erlang.hpp"
#include "covsim/experiments.hpp"
#include "covsim/kernels.hpp"
#include "covsim/scenario.hpp"
#include "oracles.hpp"

using namespace covsim;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const char* label, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0.0 && elapsed >= budget_s) {
    out.require(false, "runtime " + std::to_string(elapsed) + " s over budget " +
                           std::to_string(budget_s) + " s");
  }
  if (!out.pass) ++failures;
  std::printf("[%s] %s (%.3f s)%s%s\n", out.pass ? "PASS" : "FAIL", label, elapsed,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
}

ExperimentConfig defaults_for(Experiment e) {
  ExperimentConfig c = parse_config("");
  c.experiment = e;
  return c;
}

std::vector<oracle::Point> points_of(const NodeField& f, const std::vector<NodeId>& ids) {
  std::vector<oracle::Point> pts;
  for (const NodeId id : ids) pts.push_back({f.nodes[id].x_m, f.nodes[id].y_m});
  return pts;
}

std::vector<NodeId> relay_ids(const RelaySet& relays) {
  std::vector<NodeId> ids;
  for (const auto& r : relays.relays) ids.push_back(r.id);
  return ids;
}

// Compares BFS hop counts with exhaustive search for one fixture.
void check_against_brute_force(Outcome& out, const NodeField& f, const UavPlacement& uav,
                               double band, std::int64_t k_max, double radius, int n_max,
                               const std::string& name) {
  const CoveragePartition p = classify_coverage(f, uav);
  const RelaySet relays = select_relays(f, p, uav, band, {0.5, 0.5}, k_max);
  const auto expected = oracle::brute_force_hops(points_of(f, relay_ids(relays)),
                                                 points_of(f, p.out_coverage), radius, n_max);
  const ReachabilityReport report = reachability(f, p, relays, radius, n_max);
  out.require(report.out_nodes.size() == expected.size(), name + ": out-set size");
  for (std::size_t k = 0; k < expected.size() && k < report.out_nodes.size(); ++k) {
    const auto& node = report.out_nodes[k];
    out.require(node.reachable == (expected[k] >= 0) && node.hops == std::max(expected[k], 0),
                name + ": hop count of node " + std::to_string(node.id));
  }
}

}  // namespace

int main() {
  criterion("AC1 Erlang-B recursion matches the closed-form sum", 1.0, [] {
    Outcome out;
    for (const double a : {0.5, 1.0, 5.0, 10.0, 15.0, 20.0, 50.0}) {
      for (std::int64_t n = 0; n <= 30; ++n) {
        const double got = loss_probability({a, n});
        const double want = oracle::erlang_b_direct(n, a);
        out.require(std::abs(got - want) <= 1e-12 * want,
                    "A=" + std::to_string(a) + " N=" + std::to_string(n));
      }
    }
    out.require(std::abs(loss_probability({10.0, 1}) - 10.0 / 11.0) <= 1e-15, "B(1,10)");
    return out;
  });

  criterion("AC2 capacity quadrature matches the exponential-integral oracle", 1.0, [] {
    Outcome out;
    const CapacityParams defaults;
    for (const double zeta : {1e-3, 0.1, 1.0, 10.0, 1e3, 1e4}) {
      // Hit the target exponent coefficient through the full capacity path.
      CapacityParams p = defaults;
      p.n_hops = 1;
      p.lambda_r = 0.3;
      p.c_alpha = zeta / (p.r_d_m * p.r_d_m * std::pow(p.v_d_threshold, 2.0 / p.alpha));
      const CapacityResult r = system_capacity(p);
      const double prefactor = p.lambda_d * (p.lambda_d + p.lambda_r);
      const double want = prefactor * oracle::exp_e1(zeta);
      out.require(std::abs(r.zeta_dr - zeta) <= 1e-12 * zeta, "zeta mapping " + std::to_string(zeta));
      out.require(std::abs(r.capacity - want) <= 1e-9 * want, "zeta=" + std::to_string(zeta));
    }
    return out;
  });

  criterion("AC3 capacity table increases in relay density and hop count", 5.0, [] {
    Outcome out;
    const SweepTable t = run_fig6(defaults_for(Experiment::fig6));
    out.require(t.rows.size() == 10 && t.columns.size() == 6, "table shape");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (std::size_t col = 1; col < t.columns.size(); ++col) {
        if (col > 1) out.require(t.rows[i][col] > t.rows[i][col - 1], "lambda_r order at row " + std::to_string(i));
        if (i > 0) out.require(t.rows[i][col] > t.rows[i - 1][col], "hop order at row " + std::to_string(i));
      }
    }
    return out;
  });

  criterion("AC4 path loss vs distance: growth, frequency order, fixed gaps", 0.0, [] {
    Outcome out;
    const ExperimentConfig c = defaults_for(Experiment::fig3);
    const SweepTable t = run_fig3(c);
    const double gap_35 = 20.0 * std::log10(3.5 / 2.8);
    const double gap_58 = 20.0 * std::log10(5.8 / 2.8);
    out.require(t.columns.size() == 4 && !t.rows.empty(), "table shape");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto& row = t.rows[i];
      out.require(row[1] < row[2] && row[2] < row[3], "frequency order at row " + std::to_string(i));
      out.require(std::abs(row[2] - row[1] - gap_35) <= 1e-9, "3.5/2.8 gap at row " + std::to_string(i));
      out.require(std::abs(row[3] - row[1] - gap_58) <= 1e-9, "5.8/2.8 gap at row " + std::to_string(i));
      if (i > 0) {
        for (std::size_t col = 1; col <= 3; ++col) {
          out.require(row[col] > t.rows[i - 1][col], "distance growth at row " + std::to_string(i));
        }
      }
    }
    return out;
  });

  criterion("AC5 path loss vs LoS probability: affine columns, 19.9 dB span, plausible window", 0.0, [] {
    Outcome out;
    const ExperimentConfig c = defaults_for(Experiment::fig4);
    const SweepTable t = run_fig4(c);
    out.require(t.rows.size() >= 2 && t.columns.size() == c.eta_los_grid_db.size() + 1, "table shape");
    for (std::size_t col = 1; col < t.columns.size(); ++col) {
      const double slope = c.eta_los_grid_db[col - 1] - c.env.eta_nlos_db;
      for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const double predicted = t.rows[0][col] + slope * (t.rows[i][0] - t.rows[0][0]);
        out.require(std::abs(t.rows[i][col] - predicted) <= 1e-9, "affine column " + t.columns[col]);
      }
    }
    out.require(c.eta_los_grid_db[0] == 0.1 && c.env.eta_nlos_db == 20.0, "default eta values");
    out.require(std::abs(t.rows.front()[1] - t.rows.back()[1] - 19.9) <= 1e-9, "19.9 dB span");

    // Some plausible carrier and distance keeps every column within [60, 115] dB.
    bool window_found = false;
    for (const double fc : {2.0, 2.8, 3.5, 5.8}) {
      for (const double d : {100.0, 200.0, 300.0, 500.0}) {
        ExperimentConfig probe = c;
        probe.fc_ghz = fc;
        probe.distance_m = d;
        const SweepTable w = run_fig4(probe);
        bool inside = true;
        for (const auto& row : w.rows) {
          for (std::size_t col = 1; col < row.size(); ++col) {
            inside = inside && row[col] >= 60.0 && row[col] <= 115.0;
          }
        }
        window_found = window_found || inside;
      }
    }
    out.require(window_found, "no configuration inside [60, 115] dB");
    return out;
  });

  criterion("AC6 Poisson field counts over 1000 seeds", 10.0, [] {
    Outcome out;
    std::vector<std::uint64_t> seeds(1000);
    std::iota(seeds.begin(), seeds.end(), 1);
    const auto counts = kernels::omp::field_node_counts(3.3e-4, 1000.0, seeds);
    const double n = static_cast<double>(counts.size());
    double mean = 0.0;
    for (const auto k : counts) mean += static_cast<double>(k);
    mean /= n;
    double var = 0.0;
    for (const auto k : counts) var += (static_cast<double>(k) - mean) * (static_cast<double>(k) - mean);
    var /= n - 1.0;
    std::ostringstream s;
    s << "mean " << mean << ", variance " << var;
    out.require(std::abs(mean - 330.0) <= 3.0 * std::sqrt(330.0 / 1000.0), s.str());
    out.require(std::abs(var - 330.0) <= 0.2 * 330.0, s.str());
    if (out.pass) out.detail = s.str();
    return out;
  });

  criterion("AC7 reachability matches exhaustive search; monotone in hop budget and radius", 0.0, [] {
    Outcome out;
    const UavPlacement uav{30.0, 0.0, 0.0, 10.0};

    // A straight chain leaving the disc, a spur, and an isolated node.
    NodeField chain{60.0, 0.0, 0,
                    {{0, 9.5, 0.0, 0.9, 0.9},
                     {1, 15.0, 0.0, 0.5, 0.5},
                     {2, 20.0, 0.0, 0.5, 0.5},
                     {3, 25.0, 0.0, 0.5, 0.5},
                     {4, 30.0, 0.0, 0.5, 0.5},
                     {5, 20.0, 4.0, 0.5, 0.5},
                     {6, 15.0, 40.0, 0.5, 0.5},
                     {7, 2.0, 2.0, 0.5, 0.5}}};
    {
      const CoveragePartition p = classify_coverage(chain, uav);
      const RelaySet relays = select_relays(chain, p, uav, 2.0, {0.5, 0.5}, 3);
      const ReachabilityReport r = reachability(chain, p, relays, 5.5, 10);
      const std::vector<std::int64_t> hops{1, 2, 3, 4, 3, 0};
      out.require(r.out_nodes.size() == hops.size(), "chain: out-set size");
      for (std::size_t k = 0; k < hops.size() && k < r.out_nodes.size(); ++k) {
        out.require(r.out_nodes[k].hops == hops[k], "chain: hops of node " + std::to_string(r.out_nodes[k].id));
      }
      for (int n_max = 1; n_max <= 5; ++n_max) {
        check_against_brute_force(out, chain, uav, 2.0, 3, 5.5, n_max, "chain n_max=" + std::to_string(n_max));
      }
    }

    // Two relays competing over a ring of out-of-coverage nodes.
    const UavPlacement centred{30.0, 30.0, 30.0, 10.0};
    NodeField ring{60.0, 0.0, 0, {}};
    ring.nodes.push_back({0, 39.0, 30.0, 0.8, 0.8});
    ring.nodes.push_back({1, 21.0, 30.0, 0.6, 0.6});
    for (int i = 0; i < 8; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / 8.0;
      ring.nodes.push_back({i + 2, 30.0 + 16.0 * std::cos(angle), 30.0 + 16.0 * std::sin(angle), 0.5, 0.5});
    }
    ring.validate();
    chain.validate();
    for (const double radius : {6.0, 8.0, 12.5, 13.0}) {
      for (int n_max = 1; n_max <= 4; ++n_max) {
        check_against_brute_force(out, ring, centred, 2.0, 2, radius, n_max, "ring");
      }
    }

    // Random small fixtures.
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> coord(0.0, 40.0);
    for (int trial = 0; trial < 200; ++trial) {
      NodeField f{40.0, 0.0, 0, {}};
      const int count = 3 + trial % 8;
      for (int i = 0; i < count; ++i) {
        double x = coord(rng);
        double y = coord(rng);
        if (i == 0) {
          x = 9.0;
          y = 1.0;
        }
        f.nodes.push_back({i, x, y, coord(rng) / 40.0, coord(rng) / 40.0});
      }
      check_against_brute_force(out, f, uav, 3.0, 2, 6.0 + trial % 4 * 3.0, 1 + trial % 5,
                                "random fixture " + std::to_string(trial));
    }

    // Monotonicity over seeded full-size fields.
    const UavPlacement big{100.0, 500.0, 500.0, 300.0};
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const NodeField f = generate_field(3.3e-4, 1000.0, seed);
      const CoveragePartition p = classify_coverage(f, big);
      const RelaySet relays = select_relays(f, p, big, 30.0, {0.5, 0.5}, 10);
      double previous = -1.0;
      for (const std::int64_t n_max : {1, 2, 3, 5, 8, 13}) {
        const double ratio = reachability(f, p, relays, 50.0, n_max).coverage_extension_ratio;
        out.require(ratio >= previous, "n_max monotonicity, seed " + std::to_string(seed));
        previous = ratio;
      }
      previous = -1.0;
      for (const double radius : {20.0, 35.0, 50.0, 75.0, 110.0}) {
        const double ratio = reachability(f, p, relays, radius, 10).coverage_extension_ratio;
        out.require(ratio >= previous, "radius monotonicity, seed " + std::to_string(seed));
        previous = ratio;
      }
    }
    return out;
  });

  criterion("AC8 identical config and seed give byte-identical CSV bodies", 0.0, [] {
    Outcome out;
    for (const auto e : {Experiment::fig3, Experiment::fig4, Experiment::fig5, Experiment::fig6}) {
      ExperimentConfig c = defaults_for(e);
      const std::string first = run_sweep(c).body();
      out.require(first == run_sweep(c).body(), std::string(to_string(e)) + " rerun");
      c.threads = 4;
      out.require(first == run_sweep(c).body(), std::string(to_string(e)) + " with 4 threads");
    }
    for (const std::uint64_t seed : {1ULL, 42ULL, 123456789ULL}) {
      ExperimentConfig c = defaults_for(Experiment::scenario);
      c.seed = seed;
      const ScenarioOutput a = run_scenario(c);
      const ScenarioOutput b = run_scenario(c);
      out.require(a.nodes.body() == b.nodes.body() && a.summary.body() == b.summary.body(),
                  "scenario rerun, seed " + std::to_string(seed));
      c.threads = 4;
      const ScenarioOutput par = run_scenario(c);
      out.require(a.nodes.body() == par.nodes.body() && a.summary.body() == par.summary.body(),
                  "scenario with 4 threads, seed " + std::to_string(seed));
    }
    return out;
  });

  criterion("AC9 channel-model anchors", 0.0, [] {
    Outcome out;
    out.require(uav_ground_distance(3.0, 4.0) == 5.0, "3-4-5 distance");
    const EnvironmentProfile env;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> range(0.0, 5000.0);
    std::uniform_real_distribution<double> height(1.0, 1000.0);
    for (int i = 0; i < 10000; ++i) {
      const double r = range(rng);
      const double h = height(rng);
      const double sum = p_los(r, h, env) + p_nlos(r, h, env);
      out.require(std::abs(sum - 1.0) <= 1e-15, "LoS + NLoS at point " + std::to_string(i));
    }
    const double six_db = 20.0 * std::log10(2.0);
    for (const double d : {1.0, 37.0, 100.0, 1234.5, 1e5}) {
      for (const double fc : {9e8, 2.8e9, 5.8e9}) {
        const double base = free_space_path_loss_db(fc, d);
        out.require(std::abs(free_space_path_loss_db(fc, 2.0 * d) - base - six_db) <= 1e-9,
                    "distance doubling");
        out.require(std::abs(free_space_path_loss_db(2.0 * fc, d) - base - six_db) <= 1e-9,
                    "frequency doubling");
      }
    }
    return out;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
