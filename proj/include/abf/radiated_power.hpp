#pragma once

#include "abf/geometry.hpp"
#include "abf/scenario.hpp"
#include "abf/spectrum.hpp"

namespace abf {

struct SphereQuadrature {
  int u_nodes = 64;
  int phi_nodes = 128;
};

/// Radiation intensity averaged over the sphere, (1/4pi) * surface integral
/// of |a(f,.)^T b|^2. Uses Gauss-Legendre in u = cos(theta); the azimuth
/// integral is skipped analytically for the axisymmetric ULA.
double sphere_average_intensity(const ArrayGeometry& g, const Beamformer& b, double f_hz,
                                const SphereQuadrature& q = {});

/// Physically consistent radiated power of the finite array: the sphere
/// average of the radiation intensity weighted by S0 and integrated over
/// [f_min, f_max].
double radiated_power_exact(const ArrayGeometry& g, const Beamformer& b,
                            const SampledSpectrum& s0, double f_min, double f_max,
                            const SphereQuadrature& q = {});

/// Angular power density of the infinite-array model:
///   D(f) = (1/2) Integral_0^pi G(cos(theta) f) sin(theta) dtheta
///        = (1/(2f)) Integral_{-f}^{f} G(w) dw,
/// evaluated exactly from the periodic piecewise-linear G.
double angular_power_density(const AngularSpectrum& g, double f_hz);

/// Infinite-array radiated power, Integral D(f) S0(f) df over the band.
double radiated_power_asymptotic(const AngularSpectrum& g, const SampledSpectrum& s0,
                                 double f_min, double f_max);

/// Same power via the change of variables to the angular-frequency axis:
///   Integral_0^{2 f_c} (G(w) + G(2 f_c - w))/2 * K(w) dw,
/// with K(w) the u-integral of S0(w/u)/u. Agrees with
/// radiated_power_asymptotic; kept as an independent route.
double radiated_power_omega_form(const AngularSpectrum& g, const SampledSpectrum& s0,
                                 double f_min, double f_max);

/// Conventional beamformer-norm power metric ||b||^2 * Integral S0 df. Not
/// physically consistent for broadband arrays; exposed for comparisons.
double norm_power(const Beamformer& b, const SampledSpectrum& s0, double f_min, double f_max);

}  // namespace abf
