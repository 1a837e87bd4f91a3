#include "abf/scenario.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "abf/errors.hpp"

namespace abf {

Scenario Scenario::from_band(double f_min_hz, double f_max_hz, double theta_c_rad, double cn_hz) {
  Scenario sc;
  sc.f_min = f_min_hz;
  sc.f_max = f_max_hz;
  sc.f_c = 0.5 * (f_min_hz + f_max_hz);
  sc.theta_c = theta_c_rad;
  sc.p_r = cn_hz;  // with g_c = n0 = 1, cn() == p_r
  sc.n0 = 1.0;
  sc.g_c = 1.0;
  sc.validate();
  return sc;
}

void Scenario::validate() const {
  if (!(f_min > 0.0) || !(f_min < f_max)) {
    throw InvalidArgumentError("Scenario: need 0 < f_min < f_max");
  }
  if (std::abs(f_c - 0.5 * (f_min + f_max)) > 1e-6 * f_c) {
    throw InvalidArgumentError("Scenario: f_c must equal (f_min + f_max) / 2");
  }
  if (!(theta_c >= 0.0 && theta_c <= std::numbers::pi)) {
    throw InvalidArgumentError("Scenario: theta_c must lie in [0, pi]");
  }
  if (!(p_r >= 0.0)) throw InvalidArgumentError("Scenario: p_r must be nonnegative");
  if (!(n0 > 0.0)) throw InvalidArgumentError("Scenario: n0 must be positive");
  if (!(g_c > 0.0)) throw InvalidArgumentError("Scenario: g_c must be positive");
  if (grid.freq_bins < 2 || grid.u_nodes < 1 || grid.phi_nodes < 1) {
    throw InvalidArgumentError("Scenario: invalid grid configuration");
  }
  if (!(tol.power_rel > 0.0) || !(tol.mu_rel > 0.0) || !(tol.rate_rel > 0.0)) {
    throw InvalidArgumentError("Scenario: tolerances must be positive");
  }
}

double Scenario::cos_theta() const { return std::cos(theta_c); }

double Scenario::cos_abs() const { return std::abs(std::cos(theta_c)); }

bool Scenario::broadside_regime() const {
  const double c = cos_abs();
  return c >= min_cos_theta && c <= f_min / f_max;
}

Band preset_band(std::string_view name) {
  if (name == "28ghz") return {27.5e9, 28.35e9};
  if (name == "60ghz") return {57.0e9, 66.0e9};
  throw InvalidArgumentError("unknown band preset: " + std::string(name));
}

}  // namespace abf
