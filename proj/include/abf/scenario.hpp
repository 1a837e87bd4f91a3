#pragma once

#include <string_view>

namespace abf {

struct GridConfig {
  int freq_bins = 2048;  // frequency samples per band
  int u_nodes = 64;      // Gauss-Legendre nodes in u = cos(theta)
  int phi_nodes = 128;   // uniform azimuth nodes (non-axisymmetric arrays)
};

struct Tolerances {
  double power_rel = 1e-9;  // relative power-constraint equality
  double mu_rel = 1e-12;    // relative width of the multiplier bisection
  double rate_rel = 1e-6;   // relative rate change declaring convergence
};

/// Problem description: band, steering direction, link budget and the
/// numerical knobs. The rate depends on (C/N, band, theta_c) only; p_r, n0
/// and g_c enter through the carrier-to-noise density ratio g_c * p_r / n0.
struct Scenario {
  double f_min = 0.0;    // Hz
  double f_max = 0.0;    // Hz
  double f_c = 0.0;      // Hz, (f_min + f_max) / 2
  double theta_c = 0.0;  // radians in [0, pi]
  double p_r = 1.0;      // radiated power budget, W
  double n0 = 1.0;       // noise power spectral density, W/Hz
  double g_c = 1.0;      // channel power gain
  GridConfig grid;
  Tolerances tol;

  /// Below this |cos(theta_c)| the flat-gain bound diverges and the
  /// optimizer refuses to run.
  static constexpr double min_cos_theta = 1e-6;

  static Scenario from_band(double f_min_hz, double f_max_hz, double theta_c_rad, double cn_hz);

  void validate() const;

  double bandwidth() const { return f_max - f_min; }
  double cn() const { return g_c * p_r / n0; }  // carrier-to-noise density ratio, Hz
  double cos_theta() const;                     // signed cos(theta_c)
  double cos_abs() const;

  /// True when |cos(theta_c)| <= f_min / f_max and the gain bound is finite,
  /// i.e. the around-broadside closed forms apply.
  bool broadside_regime() const;

  bool endfire() const { return theta_c == 0.0; }
};

struct Band {
  double f_min = 0.0;
  double f_max = 0.0;
};

/// Named band presets: "28ghz" is 27.5-28.35 GHz, "60ghz" is 57-66 GHz.
Band preset_band(std::string_view name);

}  // namespace abf
