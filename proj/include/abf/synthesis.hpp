#pragma once

#include "abf/geometry.hpp"
#include "abf/scenario.hpp"

namespace abf {

struct SynthesisReport {
  int n = 0;
  double achieved_min_gain = 0.0;  // over the band toward theta_c, power-normalized
  double achieved_max_gain = 0.0;
  double bound = 0.0;  // max_flat_gain value
  double gap_db = 0.0; // 10 log10(bound / achieved_min_gain)
};

/// Frequency-independent weights approximating the ideal brick-wall angular
/// spectrum on the band image: windowed Fourier-series coefficients of the
/// target amplitude (Kaiser window) with linear phase. Half-wavelength ULA.
Beamformer synthesize_flat_beamformer(int n, double theta_c, double f_min, double f_max,
                                      double f_c, double kaiser_beta = 8.0);

/// Same weights rescaled so that the exact radiated power with the flat
/// spectrum S0 = p_r / B equals p_r.
Beamformer synthesize_normalized_beamformer(int n, const Scenario& sc, double kaiser_beta = 8.0);

/// Band gain statistics of the normalized finite-N beamformer against the
/// infinite-array flat-gain bound.
SynthesisReport finite_n_report(int n, const Scenario& sc, double kaiser_beta = 8.0);

}  // namespace abf
