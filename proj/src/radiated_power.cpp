#include "abf/radiated_power.hpp"

#include <cmath>
#include <numbers>

#include "abf/errors.hpp"
#include "abf/quadrature.hpp"

namespace abf {

namespace {

void check_band(double f_min, double f_max, const char* who) {
  if (!(f_min > 0.0) || !(f_min < f_max)) {
    throw InvalidArgumentError(std::string(who) + ": need 0 < f_min < f_max");
  }
}

// Frequencies in [f_min, f_max] at which some node of G lands on +-f modulo
// the period; the angular power density has derivative breaks there.
std::vector<double> density_breakpoints(const AngularSpectrum& g, double f_min, double f_max) {
  std::vector<double> bps;
  const double period = g.period();
  for (double node : g.grid()) {
    for (int sign : {1, -1}) {
      const double base = sign * node;
      const double k_lo = std::ceil((f_min - base) / period);
      const double k_hi = std::floor((f_max - base) / period);
      for (double k = k_lo; k <= k_hi; k += 1.0) {
        const double f = base + period * k;
        if (f > f_min && f < f_max) bps.push_back(f);
      }
    }
  }
  return bps;
}

}  // namespace

double sphere_average_intensity(const ArrayGeometry& g, const Beamformer& b, double f_hz,
                                const SphereQuadrature& q) {
  if (static_cast<int>(b.weights.size()) != g.size()) {
    throw InvalidArgumentError("sphere_average_intensity: beamformer length mismatch");
  }
  double acc = 0.0;
  if (g.kind() == ArrayKind::ula) {
    // Axisymmetric: (1/4pi) * 2pi * Integral du = (1/2) Integral du. The
    // integrand is a trigonometric polynomial in u whose highest harmonic
    // grows with the aperture, so the node count is floored at the value
    // that keeps the rule exact for the requested array and frequency.
    const double x_max = 2.0 * std::numbers::pi * g.spacing_wavelengths() * (g.size() - 1) *
                         f_hz / g.f_c();
    const int n_exact = static_cast<int>(0.6 * x_max) + 16;
    const int n = std::max(q.u_nodes, n_exact);
    const GaussLegendre gl = gauss_legendre(n);
    const double rate = -2.0 * std::numbers::pi * g.spacing_wavelengths() * f_hz / g.f_c();
    for (int i = 0; i < n; ++i) {
      // |sum_n b_n rho^n|^2 with rho = exp(j rate u), by phase recurrence.
      const cplx rho = std::polar(1.0, rate * gl.nodes[i]);
      cplx phase = 1.0;
      cplx dot = 0.0;
      for (const cplx& w : b.weights) {
        dot += w * phase;
        phase *= rho;
      }
      acc += 0.5 * gl.weights[i] * std::norm(dot);
    }
    return acc;
  }
  const GaussLegendre gl = gauss_legendre(q.u_nodes);
  const double dphi = 2.0 * std::numbers::pi / q.phi_nodes;
  for (int i = 0; i < q.u_nodes; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    double ring = 0.0;
    for (int j = 0; j < q.phi_nodes; ++j) {
      ring += radiation_intensity(g, b, f_hz, Direction(theta, j * dphi));
    }
    acc += 0.5 * gl.weights[i] * ring * (dphi / (2.0 * std::numbers::pi));
  }
  return acc;
}

double radiated_power_exact(const ArrayGeometry& g, const Beamformer& b,
                            const SampledSpectrum& s0, double f_min, double f_max,
                            const SphereQuadrature& q) {
  check_band(f_min, f_max, "radiated_power_exact");
  if (static_cast<int>(b.weights.size()) != g.size()) {
    throw InvalidArgumentError("radiated_power_exact: beamformer length mismatch");
  }
  return s0.integrate_product([&](double f) { return sphere_average_intensity(g, b, f, q); },
                              f_min, f_max);
}

double angular_power_density(const AngularSpectrum& g, double f_hz) {
  if (!(f_hz > 0.0)) throw InvalidArgumentError("angular_power_density: f must be positive");
  return g.integrate(-f_hz, f_hz) / (2.0 * f_hz);
}

double radiated_power_asymptotic(const AngularSpectrum& g, const SampledSpectrum& s0,
                                 double f_min, double f_max) {
  check_band(f_min, f_max, "radiated_power_asymptotic");
  const std::vector<double> bps = density_breakpoints(g, f_min, f_max);
  return s0.integrate_product([&](double f) { return angular_power_density(g, f); }, f_min, f_max,
                              bps);
}

double radiated_power_omega_form(const AngularSpectrum& g, const SampledSpectrum& s0,
                                 double f_min, double f_max) {
  check_band(f_min, f_max, "radiated_power_omega_form");
  const double period = g.period();

  // K(w) = Integral of S0(x)/x over [max(f_min, w), max(f_max, w)]; constant
  // below f_min and zero above f_max.
  auto k_weight = [&](double w) {
    const double lo = std::max(f_min, w);
    const double hi = std::max(f_max, w);
    return s0.integrate_over_w(lo, hi);
  };
  auto integrand = [&](double w) {
    return 0.5 * (g(w) + g(period - w)) * k_weight(w);
  };

  // Cut at every breakpoint of the integrand: G nodes and their mirror
  // images, S0 grid nodes, and the band edges.
  std::vector<double> cuts{0.0, std::min(f_max, period), period};
  for (double node : g.grid()) {
    cuts.push_back(node);
    cuts.push_back(period - node);
  }
  for (double node : s0.grid()) cuts.push_back(node);
  cuts.push_back(f_min);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  constexpr double offset = 0.28867513459481287;  // 1 / (2 sqrt(3))
  double acc = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (b <= 0.0 || a >= period) continue;
    if (a >= f_max) break;  // K vanishes beyond the band
    const double h = b - a;
    const double mid = 0.5 * (a + b);
    acc += 0.5 * h *
           (integrand(mid - offset * h) + integrand(mid + offset * h));
  }
  return acc;
}

double norm_power(const Beamformer& b, const SampledSpectrum& s0, double f_min, double f_max) {
  check_band(f_min, f_max, "norm_power");
  return b.norm_squared() * s0.integrate(f_min, f_max);
}

}  // namespace abf
