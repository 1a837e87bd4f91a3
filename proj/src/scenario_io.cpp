#include "abf/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "abf/errors.hpp"

namespace abf {

namespace {

using nlohmann::json;

std::vector<double> expand_sweep(double start, double stop, double step) {
  if (!(step > 0.0)) throw InvalidArgumentError("cn sweep: step must be positive");
  if (stop < start) throw InvalidArgumentError("cn sweep: stop must not precede start");
  std::vector<double> points;
  const double slack = 1e-9 * step;
  for (double v = start; v <= stop + slack; v += step) points.push_back(std::min(v, stop));
  if (points.empty()) throw InvalidArgumentError("cn sweep: empty sweep");
  return points;
}

Band parse_band(const json& j) {
  if (j.is_string()) return preset_band(j.get<std::string>());
  if (j.is_object()) {
    if (!j.contains("f_min_hz") || !j.contains("f_max_hz")) {
      throw InvalidArgumentError("scenario: band object needs f_min_hz and f_max_hz");
    }
    return {j.at("f_min_hz").get<double>(), j.at("f_max_hz").get<double>()};
  }
  throw InvalidArgumentError("scenario: band must be a preset name or {f_min_hz, f_max_hz}");
}

}  // namespace

ScenarioFile parse_scenario_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("scenario: JSON parse failure: ") + e.what());
  }
  try {
    ScenarioFile f;
    if (!j.contains("band")) throw InvalidArgumentError("scenario: missing band");
    f.band = parse_band(j.at("band"));
    if (j.contains("theta_c_deg")) f.theta_c_deg = j.at("theta_c_deg").get<double>();
    if (j.contains("cn_dbhz")) {
      const json& cn = j.at("cn_dbhz");
      if (cn.is_number()) {
        f.cn_dbhz = {cn.get<double>()};
      } else if (cn.is_object()) {
        f.cn_dbhz = expand_sweep(cn.at("start").get<double>(), cn.at("stop").get<double>(),
                                 cn.at("step").get<double>());
      } else {
        throw InvalidArgumentError("scenario: cn_dbhz must be a number or {start, stop, step}");
      }
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      if (g.contains("freq_bins")) f.grid.freq_bins = g.at("freq_bins").get<int>();
      if (g.contains("u_nodes")) f.grid.u_nodes = g.at("u_nodes").get<int>();
      if (g.contains("phi_nodes")) f.grid.phi_nodes = g.at("phi_nodes").get<int>();
    }
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      if (t.contains("power_rel")) f.tol.power_rel = t.at("power_rel").get<double>();
      if (t.contains("mu_rel")) f.tol.mu_rel = t.at("mu_rel").get<double>();
      if (t.contains("rate_rel")) f.tol.rate_rel = t.at("rate_rel").get<double>();
    }
    if (j.contains("max_iterations")) f.max_iterations = j.at("max_iterations").get<int>();
    if (f.max_iterations < 1) throw InvalidArgumentError("scenario: max_iterations must be >= 1");
    make_scenario(f, f.cn_dbhz.front());  // validates band/angle/grid/tolerances
    return f;
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string("scenario: ") + e.what());
  }
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("scenario: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_json(buf.str());
}

Scenario make_scenario(const ScenarioFile& file, double cn_dbhz) {
  Scenario sc = Scenario::from_band(file.band.f_min, file.band.f_max,
                                    file.theta_c_deg * std::numbers::pi / 180.0,
                                    dbhz_to_hz(cn_dbhz));
  sc.grid = file.grid;
  sc.tol = file.tol;
  sc.validate();
  return sc;
}

std::vector<double> parse_cn_sweep(const std::string& text) {
  const size_t c1 = text.find(':');
  if (c1 == std::string::npos) {
    if (text == "-inf") return {-std::numeric_limits<double>::infinity()};
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw InvalidArgumentError("cn sweep: trailing characters");
    return {v};
  }
  const size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw InvalidArgumentError("cn sweep: expected start:stop:step");
  }
  try {
    const double start = std::stod(text.substr(0, c1));
    const double stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    return expand_sweep(start, stop, step);
  } catch (const std::logic_error&) {
    throw InvalidArgumentError("cn sweep: expected numeric start:stop:step");
  }
}

double dbhz_to_hz(double dbhz) {
  if (std::isinf(dbhz) && dbhz < 0.0) return 0.0;
  return std::pow(10.0, dbhz / 10.0);
}

}  // namespace abf
