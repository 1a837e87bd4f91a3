#include "abf/geometry.hpp"

#include <cmath>
#include <numbers>

#include "abf/constants.hpp"
#include "abf/errors.hpp"

namespace abf {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_finite(const Vec3& p) {
  for (double v : p) {
    if (!std::isfinite(v)) throw InvalidArgumentError("element position must be finite");
  }
}

}  // namespace

Direction::Direction(double theta_rad, double phi_rad) : theta(theta_rad), phi(phi_rad) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw InvalidArgumentError("Direction: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < two_pi)) {
    throw InvalidArgumentError("Direction: phi must lie in [0, 2 pi)");
  }
}

Vec3 Direction::unit() const {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

ArrayGeometry::ArrayGeometry(std::vector<Vec3> elements, double f_c_hz, ArrayKind kind,
                             double spacing_wl)
    : elements_(std::move(elements)), f_c_(f_c_hz), kind_(kind), spacing_wl_(spacing_wl) {
  if (elements_.empty()) throw InvalidArgumentError("ArrayGeometry: need at least one element");
  if (!(f_c_ > 0.0)) throw InvalidArgumentError("ArrayGeometry: f_c must be positive");
  for (const auto& p : elements_) check_finite(p);
}

ArrayGeometry ArrayGeometry::ula(int n, double spacing_wavelengths, double f_c_hz) {
  if (n < 1) throw InvalidArgumentError("ula: need at least one element");
  if (!(spacing_wavelengths > 0.0)) throw InvalidArgumentError("ula: spacing must be positive");
  if (!(f_c_hz > 0.0)) throw InvalidArgumentError("ula: f_c must be positive");
  const double step = spacing_wavelengths * speed_of_light / f_c_hz;
  std::vector<Vec3> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = {0.0, 0.0, step * i};
  return ArrayGeometry(std::move(pos), f_c_hz, ArrayKind::ula, spacing_wavelengths);
}

ArrayGeometry ArrayGeometry::uca(int n, double radius_m, double f_c_hz) {
  if (n < 1) throw InvalidArgumentError("uca: need at least one element");
  if (radius_m < 0.0) throw InvalidArgumentError("uca: radius must be nonnegative");
  if (!(f_c_hz > 0.0)) throw InvalidArgumentError("uca: f_c must be positive");
  std::vector<Vec3> pos(n);
  for (int i = 0; i < n; ++i) {
    const double psi = two_pi * i / n;
    pos[i] = {radius_m * std::cos(psi), radius_m * std::sin(psi), 0.0};
  }
  return ArrayGeometry(std::move(pos), f_c_hz, ArrayKind::uca, 0.0);
}

ArrayGeometry ArrayGeometry::generic(std::vector<Vec3> elements, double f_c_hz) {
  return ArrayGeometry(std::move(elements), f_c_hz, ArrayKind::generic, 0.0);
}

double ArrayGeometry::uca_arc_radius(int n, double f_c_hz) {
  if (n < 1) throw InvalidArgumentError("uca_arc_radius: need at least one element");
  if (!(f_c_hz > 0.0)) throw InvalidArgumentError("uca_arc_radius: f_c must be positive");
  const double lambda_c = speed_of_light / f_c_hz;
  return n * lambda_c / (4.0 * std::numbers::pi);
}

double Beamformer::norm_squared() const {
  double s = 0.0;
  for (const cplx& w : weights) s += std::norm(w);
  return s;
}

std::vector<cplx> steering_vector(const ArrayGeometry& g, double f_hz, const Direction& dir) {
  if (!(f_hz > 0.0)) throw InvalidArgumentError("steering_vector: frequency must be positive");
  const Vec3 u = dir.unit();
  std::vector<cplx> a(g.size());
  for (int n = 0; n < g.size(); ++n) {
    const Vec3& p = g.elements()[n];
    const double tau = (p[0] * u[0] + p[1] * u[1] + p[2] * u[2]) / speed_of_light;
    a[n] = std::polar(1.0, -two_pi * f_hz * tau);
  }
  return a;
}

Beamformer matched_beamformer(const ArrayGeometry& g, double f_hz, const Direction& dir) {
  std::vector<cplx> a = steering_vector(g, f_hz, dir);
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));
  Beamformer b;
  b.weights.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) b.weights[i] = std::conj(a[i]) * scale;
  return b;
}

double radiation_intensity(const ArrayGeometry& g, const Beamformer& b, double f_hz,
                           const Direction& dir) {
  if (static_cast<int>(b.weights.size()) != g.size()) {
    throw InvalidArgumentError("radiation_intensity: beamformer length does not match geometry");
  }
  const std::vector<cplx> a = steering_vector(g, f_hz, dir);
  cplx acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b.weights[i];
  return std::norm(acc);
}

double angular_spectrum_finite(const Beamformer& b, double spacing_wavelengths, double f_c_hz,
                               double omega_hz) {
  if (!(spacing_wavelengths > 0.0)) {
    throw InvalidArgumentError("angular_spectrum_finite: spacing must be positive");
  }
  if (!(f_c_hz > 0.0)) throw InvalidArgumentError("angular_spectrum_finite: f_c must be positive");
  cplx acc = 0.0;
  const double rate = -two_pi * spacing_wavelengths * omega_hz / f_c_hz;
  for (size_t n = 0; n < b.weights.size(); ++n) {
    acc += b.weights[n] * std::polar(1.0, rate * static_cast<double>(n));
  }
  return std::norm(acc);
}

}  // namespace abf
