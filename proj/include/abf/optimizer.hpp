#pragma once

#include "abf/scenario.hpp"
#include "abf/spectrum.hpp"

namespace abf {

struct WaterfillResult {
  SampledSpectrum s0;
  double mu = 0.0;  // multiplier of the power constraint, Hz/W
};

struct GainStepResult {
  AngularSpectrum g;
  double mu = 0.0;  // multiplier of the power constraint, Hz/W
};

struct OptimizationResult {
  AngularSpectrum g;
  SampledSpectrum s0;
  double rate_bps = 0.0;
  double mu = 0.0;            // multiplier from the final gain step
  double kkt_residual = 0.0;  // stationarity residual at the final iterate
  double power_gap = 0.0;     // relative power-constraint violation
  int iterations = 0;
};

/// Achievable rate Integral log2(1 + g_c G(cos(theta_c) f) S0(f) / N0) df
/// over the band, by composite trapezoid on the union of both sample grids.
double achievable_rate(const AngularSpectrum& g, const SampledSpectrum& s0, const Scenario& sc);

/// Water-filling update of S0 given G:
///   S0(f) = (1 / (mu D(f)) - N0 / (g_c G(cos(theta_c) f)))_+
/// with D the angular power density and mu bisected so the radiated power
/// meets p_r. Throws InfeasibleError when G vanishes along the whole band
/// image. p_r = 0 yields the zero spectrum and an infinite mu.
WaterfillResult waterfill_s0(const AngularSpectrum& g, const Scenario& sc);

/// Closed-form update of G given S0, valid around broadside
/// (|cos(theta_c)| <= f_min/f_max):
///   G(cos(theta_c) f) = (2 / (mu W) - N0 / (g_c S0(f)))_+ ,
///   W = Integral S0(w)/w dw over the band,
/// zero outside the band image, mu bisected to power equality.
GainStepResult optimal_g_given_s0(const SampledSpectrum& s0, const Scenario& sc);

/// Largest absolute stationarity residual of the gain condition over band
/// frequencies with G * S0 > 0:
///   (g_c/N0) S0 / (1 + (g_c/N0) G S0) - mu (T1 + T2),
/// where T1/T2 are the two u-integrals of S0(w)/w (the second vanishes in
/// the around-broadside regime). Zero on an empty active set. `mu` is the
/// gain-step multiplier.
double kkt_residual(const AngularSpectrum& g, const SampledSpectrum& s0, double mu,
                    const Scenario& sc);

/// Alternates waterfill_s0 and optimal_g_given_s0 from `init_g` until the
/// relative rate change drops below `rate_tol` (sc.tol.rate_rel when <= 0)
/// or `max_iter` alternations. The rate sequence is nondecreasing.
OptimizationResult alternating_optimize(const AngularSpectrum& init_g, const Scenario& sc,
                                        int max_iter = 50, double rate_tol = 0.0);

}  // namespace abf
