#pragma once

#include <string>
#include <vector>

#include "abf/scenario.hpp"

namespace abf {

/// Parsed scenario document. `cn_dbhz` holds the sweep points (a single
/// entry for scalar inputs).
struct ScenarioFile {
  Band band;
  double theta_c_deg = 60.0;
  std::vector<double> cn_dbhz{100.0};
  GridConfig grid;
  Tolerances tol;
  int max_iterations = 50;
};

/// Parses the JSON scenario document; throws InvalidArgumentError with a
/// diagnostic on malformed input. Schema:
///   band: "28ghz" | "60ghz" | {f_min_hz, f_max_hz}
///   theta_c_deg: number
///   cn_dbhz: number | {start, stop, step}
///   grid: {freq_bins, u_nodes, phi_nodes}          (optional)
///   tolerances: {power_rel, mu_rel, rate_rel}      (optional)
///   max_iterations: integer                        (optional)
ScenarioFile parse_scenario_json(const std::string& text);

ScenarioFile load_scenario_file(const std::string& path);

/// Scenario for one sweep point: p_r = 10^(cn_dbhz/10) W with g_c = n0 = 1.
Scenario make_scenario(const ScenarioFile& file, double cn_dbhz);

/// Expands "start:stop:step" or a plain number into dB-Hz sweep points.
/// Accepts "-inf" for a zero-power point.
std::vector<double> parse_cn_sweep(const std::string& text);

double dbhz_to_hz(double dbhz);

}  // namespace abf
