#include "abf/synthesis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "abf/closed_form.hpp"
#include "abf/errors.hpp"
#include "abf/quadrature.hpp"
#include "abf/radiated_power.hpp"
#include "abf/spectrum.hpp"

namespace abf {

namespace {

// Modified Bessel function I0 by its power series; converges quickly for
// the window-shape arguments used here.
double bessel_i0(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

double sinc(double x) { return (std::abs(x) < 1e-8) ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

}  // namespace

Beamformer synthesize_flat_beamformer(int n, double theta_c, double f_min, double f_max,
                                      double f_c, double kaiser_beta) {
  if (n < 2) throw InvalidArgumentError("synthesize_flat_beamformer: need n >= 2");
  if (!(kaiser_beta >= 0.0)) {
    throw InvalidArgumentError("synthesize_flat_beamformer: window beta must be nonnegative");
  }
  const double level = max_flat_gain(theta_c, f_min, f_max);  // validates the regime
  const double amplitude = std::sqrt(level);
  const double c = std::cos(theta_c);
  const double period = 2.0 * f_c;
  const double omega_lo = std::min(c * f_min, c * f_max);
  const double omega_hi = std::max(c * f_min, c * f_max);
  const double center = 0.5 * (omega_lo + omega_hi);
  // The pass band is widened by half the window transition width per side so
  // that the roll-off lands outside the band image; the Kaiser p.-of-design
  // width for beta = 8 is about 5.1 periods over n taps.
  const double kaiser_transition = 5.108;
  double guard = 0.5 * period * kaiser_transition / n;
  guard = std::min(guard, 0.499 * (period - (omega_hi - omega_lo)));
  const double width = (omega_hi - omega_lo) + 2.0 * guard;

  // Fourier coefficient of the target amplitude at (possibly half-integer)
  // index k: (1 / period) * Integral_{support} A exp(j pi k w / f_c) dw.
  auto coefficient = [&](double k) {
    const double arg = std::numbers::pi * k / f_c;
    const cplx phase = std::polar(1.0, arg * center);
    return amplitude * (width / period) * phase * sinc(0.5 * arg * width);
  };

  const double mid = 0.5 * (n - 1);
  const double i0_beta = bessel_i0(kaiser_beta);
  Beamformer b;
  b.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double t = (n > 1) ? 2.0 * i / (n - 1) - 1.0 : 0.0;
    const double window = bessel_i0(kaiser_beta * std::sqrt(std::max(1.0 - t * t, 0.0))) / i0_beta;
    b.weights[i] = window * coefficient(i - mid);
  }
  return b;
}

Beamformer synthesize_normalized_beamformer(int n, const Scenario& sc, double kaiser_beta) {
  sc.validate();
  if (!(sc.p_r > 0.0)) {
    throw InvalidArgumentError("synthesize_normalized_beamformer: needs positive p_r");
  }
  Beamformer b = synthesize_flat_beamformer(n, sc.theta_c, sc.f_min, sc.f_max, sc.f_c,
                                            kaiser_beta);
  const ArrayGeometry geom = ArrayGeometry::ula(n, 0.5, sc.f_c);
  const SampledSpectrum s0 = SampledSpectrum::constant(sc.f_min, sc.f_max, sc.grid.freq_bins,
                                                       sc.p_r / sc.bandwidth());
  const SphereQuadrature q{sc.grid.u_nodes, sc.grid.phi_nodes};
  const double power = radiated_power_exact(geom, b, s0, sc.f_min, sc.f_max, q);
  if (!(power > 0.0)) {
    throw InfeasibleError("synthesize_normalized_beamformer: synthesized pattern radiates nothing");
  }
  const double scale = std::sqrt(sc.p_r / power);
  for (cplx& w : b.weights) w *= scale;
  return b;
}

SynthesisReport finite_n_report(int n, const Scenario& sc, double kaiser_beta) {
  const Beamformer b = synthesize_normalized_beamformer(n, sc, kaiser_beta);
  const ArrayGeometry geom = ArrayGeometry::ula(n, 0.5, sc.f_c);
  const Direction toward(sc.theta_c, 0.0);
  const std::vector<double> f_grid = uniform_grid(sc.f_min, sc.f_max, sc.grid.freq_bins);
  SynthesisReport rep;
  rep.n = n;
  rep.achieved_min_gain = std::numeric_limits<double>::infinity();
  rep.achieved_max_gain = 0.0;
  for (double f : f_grid) {
    const double gain = radiation_intensity(geom, b, f, toward);
    rep.achieved_min_gain = std::min(rep.achieved_min_gain, gain);
    rep.achieved_max_gain = std::max(rep.achieved_max_gain, gain);
  }
  rep.bound = max_flat_gain(sc.theta_c, sc.f_min, sc.f_max);
  rep.gap_db = 10.0 * std::log10(rep.bound / rep.achieved_min_gain);
  return rep;
}

}  // namespace abf
