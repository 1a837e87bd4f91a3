#pragma once

#include <optional>

#include "abf/scenario.hpp"
#include "abf/spectrum.hpp"

namespace abf {

/// Largest in-band gain a frequency-flat beamformer can hold toward theta_c
/// under the radiated-power constraint:
///   1 / (|cos(theta_c)| ln sqrt(f_max / f_min)).
/// Finite for every array size; diverges only at broadside.
double max_flat_gain(double theta_c, double f_min, double f_max);

struct FlatSolution {
  AngularSpectrum g;   // brick wall at the max_flat_gain level on the band image
  SampledSpectrum s0;  // flat p_r / B on the band
};

/// The stationary flat pair: S0 = p_r / B and G the brick wall at the
/// max_flat_gain level, radiating exactly p_r.
FlatSolution flat_solution(const Scenario& sc);

/// Rate of the flat pair in closed form,
///   B log2(1 + C/N * G_flat(B) / B),
/// optionally for a bandwidth other than the scenario's (same f_c).
double flat_rate(const Scenario& sc, std::optional<double> bandwidth_override = std::nullopt);

/// Largest bandwidth for which the around-broadside regime holds at f_c:
///   2 f_c (1 - |cos|) / (1 + |cos|).
double max_regime_bandwidth(double f_c, double theta_c);

struct EndfireSolution {
  AngularSpectrum g;
  double mu = 0.0;  // dimensionless water level against L(f)
};

/// End-fire (theta_c = 0) gain profile for a flat transmit spectrum:
///   G(f) = (B N0 / (g_c p_r)) (mu / L(f) - 1)_+ ,
///   L(f) = ln(f_max / sqrt(f (2 f_c - f))),
/// with mu bisected so the radiated power equals p_r.
EndfireSolution endfire_solution(const Scenario& sc);

/// End-fire rate Integral (log2 mu - log2 L(f))_+ df over the band.
double endfire_rate(const Scenario& sc);

struct BandwidthOptimum {
  double bandwidth_hz = 0.0;
  double rate_bps = 0.0;
};

/// Maximizes the flat-pair rate over the usable bandwidth (0, B_max] for a
/// given center frequency, direction and C/N: golden-section on the log-B
/// axis seeded by a coarse scan. cn_hz = 0 returns (0, 0).
BandwidthOptimum optimal_bandwidth(double f_c, double theta_c, double cn_hz);

}  // namespace abf
