#include "covsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "covsim/csv.hpp"

namespace covsim {

namespace {

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;
using Getter = std::function<std::string(const ExperimentConfig&)>;

struct KeySpec {
  std::string_view name;
  Setter set;
  Getter get;
};

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_uint(std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an unsigned integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> values;
  for (const auto part : split(text, ',')) {
    values.push_back(parse_double(part));
  }
  return values;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> values;
  for (const auto part : split(text, ',')) {
    values.push_back(parse_int(part));
  }
  return values;
}

template <typename T, typename Format>
std::string join(const std::vector<T>& values, Format format) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += i ? "," : "";
    out += format(values[i]);
  }
  return out;
}

std::string format_ints(const std::vector<std::int64_t>& values) {
  return join(values, [](std::int64_t v) { return std::to_string(v); });
}

std::string format_doubles(const std::vector<double>& values) {
  return join(values, [](double v) { return format_round_trip(v); });
}

KeySpec real(std::string_view name, double ExperimentConfig::*member) {
  return {name, [member](ExperimentConfig& c, std::string_view v) { c.*member = parse_double(v); },
          [member](const ExperimentConfig& c) { return format_round_trip(c.*member); }};
}

template <typename Sub>
KeySpec real(std::string_view name, Sub ExperimentConfig::*group, double Sub::*member) {
  return {name,
          [group, member](ExperimentConfig& c, std::string_view v) {
            (c.*group).*member = parse_double(v);
          },
          [group, member](const ExperimentConfig& c) {
            return format_round_trip((c.*group).*member);
          }};
}

KeySpec integer(std::string_view name, std::int64_t ExperimentConfig::*member) {
  return {name, [member](ExperimentConfig& c, std::string_view v) { c.*member = parse_int(v); },
          [member](const ExperimentConfig& c) { return std::to_string(c.*member); }};
}

KeySpec reals(std::string_view name, std::vector<double> ExperimentConfig::*member) {
  return {name,
          [member](ExperimentConfig& c, std::string_view v) { c.*member = parse_double_list(v); },
          [member](const ExperimentConfig& c) { return format_doubles(c.*member); }};
}

KeySpec integers(std::string_view name, std::vector<std::int64_t> ExperimentConfig::*member) {
  return {name,
          [member](ExperimentConfig& c, std::string_view v) { c.*member = parse_int_list(v); },
          [member](const ExperimentConfig& c) { return format_ints(c.*member); }};
}

KeySpec text(std::string_view name, std::string ExperimentConfig::*member) {
  return {name, [member](ExperimentConfig& c, std::string_view v) { c.*member = std::string(v); },
          [member](const ExperimentConfig& c) { return c.*member; }};
}

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = {
      {"experiment",
       [](ExperimentConfig& c, std::string_view v) {
         const auto e = parse_experiment(v);
         if (!e) {
           throw std::invalid_argument("unknown experiment '" + std::string(v) + "'");
         }
         c.experiment = *e;
       },
       [](const ExperimentConfig& c) { return std::string(to_string(c.experiment)); }},
      {"seed", [](ExperimentConfig& c, std::string_view v) { c.seed = parse_uint(v); },
       [](const ExperimentConfig& c) { return std::to_string(c.seed); }},
      text("out", &ExperimentConfig::output_path),
      {"threads",
       [](ExperimentConfig& c, std::string_view v) {
         const std::int64_t t = parse_int(v);
         if (t < 0 || t > 4096) {
           throw std::invalid_argument("threads must lie in [0, 4096]");
         }
         c.threads = static_cast<int>(t);
       },
       [](const ExperimentConfig& c) { return std::to_string(c.threads); }},

      real("a", &ExperimentConfig::env, &EnvironmentProfile::a),
      real("b", &ExperimentConfig::env, &EnvironmentProfile::b),
      real("eta_los_db", &ExperimentConfig::env, &EnvironmentProfile::eta_los_db),
      real("eta_nlos_db", &ExperimentConfig::env, &EnvironmentProfile::eta_nlos_db),
      real("altitude_m", &ExperimentConfig::uav, &UavPlacement::altitude_m),
      real("uav_x_m", &ExperimentConfig::uav, &UavPlacement::ground_x_m),
      real("uav_y_m", &ExperimentConfig::uav, &UavPlacement::ground_y_m),
      real("coverage_radius_m", &ExperimentConfig::uav, &UavPlacement::coverage_radius_m),

      reals("fc_grid_ghz", &ExperimentConfig::fc_grid_ghz),
      reals("distance_grid_m", &ExperimentConfig::distance_grid_m),

      real("fc_ghz", &ExperimentConfig::fc_ghz),
      real("distance_m", &ExperimentConfig::distance_m),
      reals("eta_los_grid_db", &ExperimentConfig::eta_los_grid_db),
      reals("p_los_grid", &ExperimentConfig::p_los_grid),

      integers("channel_grid", &ExperimentConfig::channel_grid),
      reals("erlang_grid", &ExperimentConfig::erlang_grid),

      real("lambda_d_per_m2", &ExperimentConfig::capacity, &CapacityParams::lambda_d),
      real("r_d_m", &ExperimentConfig::capacity, &CapacityParams::r_d_m),
      real("alpha", &ExperimentConfig::capacity, &CapacityParams::alpha),
      real("v_d_threshold", &ExperimentConfig::capacity, &CapacityParams::v_d_threshold),
      real("p_relay_w", &ExperimentConfig::capacity, &CapacityParams::p_relay_w),
      real("p_d2d_w", &ExperimentConfig::capacity, &CapacityParams::p_d2d_w),
      real("c_alpha", &ExperimentConfig::capacity, &CapacityParams::c_alpha),
      integers("hop_grid", &ExperimentConfig::hop_grid),
      reals("lambda_r_grid", &ExperimentConfig::lambda_r_grid),
      {"integrand",
       [](ExperimentConfig& c, std::string_view v) {
         if (v == "prefactor") {
           c.integrand = IntegrandForm::density_prefactor;
         } else if (v == "exponent") {
           c.integrand = IntegrandForm::density_in_exponent;
         } else {
           throw std::invalid_argument("expected 'prefactor' or 'exponent'");
         }
       },
       [](const ExperimentConfig& c) {
         return std::string(c.integrand == IntegrandForm::density_prefactor ? "prefactor"
                                                                             : "exponent");
       }},
      real("quad_tol", &ExperimentConfig::quad_tol),

      real("area_m", &ExperimentConfig::area_m),
      real("edge_band_m", &ExperimentConfig::edge_band_m),
      real("w_energy", &ExperimentConfig::weights, &SelectionWeights::energy),
      real("w_quality", &ExperimentConfig::weights, &SelectionWeights::quality),
      integer("relay_k_max", &ExperimentConfig::relay_k_max),
      integer("n_max_hops", &ExperimentConfig::n_max_hops),
      {"hop_radius",
       [](ExperimentConfig& c, std::string_view v) {
         if (v == "r_d") {
           c.hop_radius = HopRadius::r_d;
         } else if (v == "r_r") {
           c.hop_radius = HopRadius::r_r;
         } else {
           throw std::invalid_argument("expected 'r_d' or 'r_r'");
         }
       },
       [](const ExperimentConfig& c) {
         return std::string(c.hop_radius == HopRadius::r_d ? "r_d" : "r_r");
       }},
      text("field_csv", &ExperimentConfig::field_csv),
      text("field_out", &ExperimentConfig::field_out),
  };
  return table;
}

void require(bool ok, std::string_view field, const std::string& message) {
  if (!ok) {
    throw ConfigError(std::string(field), message);
  }
}

template <typename T>
void require_grid(const std::vector<T>& grid, std::string_view field) {
  require(!grid.empty(), field, "grid must not be empty");
  require(std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<T>()) == grid.end(),
          field, "grid must be strictly ascending");
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
bool finite_non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::string_view to_string(Experiment experiment) {
  switch (experiment) {
    case Experiment::fig3: return "fig3";
    case Experiment::fig4: return "fig4";
    case Experiment::fig5: return "fig5";
    case Experiment::fig6: return "fig6";
    case Experiment::scenario: return "scenario";
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto e : {Experiment::fig3, Experiment::fig4, Experiment::fig5, Experiment::fig6,
                       Experiment::scenario}) {
    if (name == to_string(e)) {
      return e;
    }
  }
  return std::nullopt;
}

ExperimentConfig::ExperimentConfig() {
  for (int d = 100; d <= 500; d += 10) {
    distance_grid_m.push_back(d);
  }
  for (int i = 0; i <= 20; ++i) {
    p_los_grid.push_back(i / 20.0);
  }
  for (std::int64_t n = 1; n <= 10; ++n) {
    channel_grid.push_back(n);
    hop_grid.push_back(n);
  }
  edge_band_m = 0.1 * uav.coverage_radius_m;
}

double ExperimentConfig::hop_radius_m() const {
  return hop_radius == HopRadius::r_d ? capacity.r_d_m
                                      : hop_distance(capacity.r_d_m, n_max_hops);
}

void ExperimentConfig::validate() const {
  require(threads >= 0, "threads", "must be >= 0");

  require(finite_positive(env.a), "a", "must be > 0");
  require(finite_positive(env.b), "b", "must be > 0");
  require(finite_non_negative(env.eta_los_db), "eta_los_db", "must be >= 0");
  require(std::isfinite(env.eta_nlos_db) && env.eta_nlos_db >= env.eta_los_db, "eta_nlos_db",
          "must be >= eta_los_db");
  require(finite_positive(uav.altitude_m), "altitude_m", "must be > 0");
  require(std::isfinite(uav.ground_x_m), "uav_x_m", "must be finite");
  require(std::isfinite(uav.ground_y_m), "uav_y_m", "must be finite");
  require(finite_positive(uav.coverage_radius_m), "coverage_radius_m", "must be > 0");

  require_grid(fc_grid_ghz, "fc_grid_ghz");
  require(std::all_of(fc_grid_ghz.begin(), fc_grid_ghz.end(), finite_positive), "fc_grid_ghz",
          "carriers must be > 0");
  require_grid(distance_grid_m, "distance_grid_m");
  require(std::isfinite(distance_grid_m.back()) && distance_grid_m.front() >= uav.altitude_m,
          "distance_grid_m", "slant distances must be >= altitude_m");

  require(finite_positive(fc_ghz), "fc_ghz", "must be > 0");
  require(finite_positive(distance_m), "distance_m", "must be > 0");
  require_grid(eta_los_grid_db, "eta_los_grid_db");
  require(eta_los_grid_db.front() >= 0.0 && eta_los_grid_db.back() <= env.eta_nlos_db,
          "eta_los_grid_db", "values must lie in [0, eta_nlos_db]");
  require_grid(p_los_grid, "p_los_grid");
  require(p_los_grid.front() >= 0.0 && p_los_grid.back() <= 1.0, "p_los_grid",
          "values must lie in [0, 1]");

  require_grid(channel_grid, "channel_grid");
  require(channel_grid.front() >= 0, "channel_grid", "channel counts must be >= 0");
  require_grid(erlang_grid, "erlang_grid");
  require(erlang_grid.front() >= 0.0 && std::isfinite(erlang_grid.back()), "erlang_grid",
          "offered loads must be finite and >= 0");

  require(finite_positive(capacity.lambda_d), "lambda_d_per_m2", "must be > 0");
  require(finite_positive(capacity.r_d_m), "r_d_m", "must be > 0");
  require(std::isfinite(capacity.alpha) && capacity.alpha > 2.0, "alpha", "must be > 2");
  require(finite_positive(capacity.v_d_threshold), "v_d_threshold", "must be > 0");
  require(finite_positive(capacity.p_relay_w), "p_relay_w", "must be > 0");
  require(finite_positive(capacity.p_d2d_w), "p_d2d_w", "must be > 0");
  require(finite_positive(capacity.c_alpha), "c_alpha", "must be > 0");
  require_grid(hop_grid, "hop_grid");
  require(hop_grid.front() >= 1, "hop_grid", "hop counts must be >= 1");
  require_grid(lambda_r_grid, "lambda_r_grid");
  require(lambda_r_grid.front() > 0.0 && std::isfinite(lambda_r_grid.back()), "lambda_r_grid",
          "relay densities must be > 0");
  require(finite_positive(quad_tol), "quad_tol", "must be > 0");

  require(finite_positive(area_m), "area_m", "must be > 0");
  require(finite_positive(edge_band_m) && edge_band_m < uav.coverage_radius_m, "edge_band_m",
          "must lie in (0, coverage_radius_m)");
  require(finite_non_negative(weights.energy), "w_energy", "must be >= 0");
  require(finite_non_negative(weights.quality), "w_quality", "must be >= 0");
  require(std::abs(weights.energy + weights.quality - 1.0) <= 1e-12, "w_quality",
          "w_energy + w_quality must equal 1");
  require(relay_k_max >= 1, "relay_k_max", "must be >= 1");
  require(n_max_hops >= 1, "n_max_hops", "must be >= 1");
}

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
    }
    if (!entries.emplace(key, value).second) {
      throw ConfigError(key, "given more than once");
    }
  }

  ExperimentConfig config;
  const auto& table = key_table();
  for (const auto& [key, value] : entries) {
    const auto spec = std::find_if(table.begin(), table.end(),
                                   [&](const KeySpec& s) { return s.name == key; });
    if (spec == table.end()) {
      throw ConfigError(key, "unknown key");
    }
    try {
      spec->set(config, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }
  }

  if (!entries.contains("c_alpha")) {
    require(std::isfinite(config.capacity.alpha) && config.capacity.alpha > 2.0, "alpha",
            "must be > 2");
    config.capacity.c_alpha = interference_constant(config.capacity.alpha);
  }
  if (!entries.contains("edge_band_m")) {
    config.edge_band_m = 0.1 * config.uav.coverage_radius_m;
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("", "cannot open config file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::vector<std::string> config_echo(const ExperimentConfig& config) {
  std::vector<std::string> lines;
  for (const auto& spec : key_table()) {
    lines.push_back(std::string(spec.name) + " = " + spec.get(config));
  }
  return lines;
}

ExperimentConfig parse_config_echo(std::istream& csv) {
  std::string text;
  std::string line;
  while (std::getline(csv, line)) {
    if (line.rfind("# ", 0) != 0) {
      continue;
    }
    const std::string_view content = std::string_view(line).substr(2);
    if (content.find(" = ") != std::string_view::npos) {
      text.append(content);
      text += '\n';
    }
  }
  return parse_config(text);
}

}  // namespace covsim
