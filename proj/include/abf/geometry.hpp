#pragma once

#include <array>
#include <complex>
#include <vector>

namespace abf {

using Vec3 = std::array<double, 3>;
using cplx = std::complex<double>;

/// Departure direction in spherical coordinates: `theta` is the polar angle
/// measured from the z axis (the ULA axis), `phi` the azimuth in the x-y
/// plane (the UCA plane).
struct Direction {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi)

  Direction() = default;
  Direction(double theta_rad, double phi_rad);

  /// Unit propagation vector (sin t cos p, sin t sin p, cos t).
  Vec3 unit() const;
};

enum class ArrayKind { ula, uca, generic };

/// Antenna element positions in meters together with the center frequency
/// that fixes the wavelength used by spacing conventions. Elements are
/// isotropic; the first element of a ULA sits at the origin.
class ArrayGeometry {
 public:
  /// ULA along the z axis, spacing given in wavelengths at f_c.
  static ArrayGeometry ula(int n, double spacing_wavelengths, double f_c_hz);

  /// UCA in the x-y plane, first element at azimuth 0.
  static ArrayGeometry uca(int n, double radius_m, double f_c_hz);

  static ArrayGeometry generic(std::vector<Vec3> elements, double f_c_hz);

  /// Radius giving half-wavelength element spacing along the circle arc,
  /// n * lambda_c / (4 pi). Used as the UCA default.
  static double uca_arc_radius(int n, double f_c_hz);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Vec3>& elements() const { return elements_; }
  double f_c() const { return f_c_; }
  ArrayKind kind() const { return kind_; }

  /// ULA element spacing in wavelengths at f_c (zero for other kinds).
  double spacing_wavelengths() const { return spacing_wl_; }

 private:
  ArrayGeometry(std::vector<Vec3> elements, double f_c_hz, ArrayKind kind, double spacing_wl);

  std::vector<Vec3> elements_;
  double f_c_ = 0.0;
  ArrayKind kind_ = ArrayKind::generic;
  double spacing_wl_ = 0.0;
};

/// Frequency-independent complex element weights.
struct Beamformer {
  std::vector<cplx> weights;

  double norm_squared() const;
};

/// Conjugate of the steering vector at (f, dir), scaled by 1/sqrt(N).
Beamformer matched_beamformer(const ArrayGeometry& g, double f_hz, const Direction& dir);

/// Broadband steering vector: entry n is exp(-j 2 pi f tau_n) with tau_n the
/// plane-wave delay of element n toward `dir` relative to the phase origin.
/// For a ULA this is exp(-j 2 pi d cos(theta) n f / f_c). Every entry has
/// unit modulus.
std::vector<cplx> steering_vector(const ArrayGeometry& g, double f_hz, const Direction& dir);

/// Radiation intensity |a(f, dir)^T b|^2.
double radiation_intensity(const ArrayGeometry& g, const Beamformer& b, double f_hz,
                           const Direction& dir);

/// Squared magnitude of the beamformer's spatial transform at the angular
/// frequency variable `omega`:
///   |sum_n b_n exp(-j 2 pi d n omega / f_c)|^2.
/// For half-wavelength spacing (d = 1/2) this is periodic in omega with
/// period 2 f_c and equals radiation_intensity at omega = cos(theta) * f.
double angular_spectrum_finite(const Beamformer& b, double spacing_wavelengths, double f_c_hz,
                               double omega_hz);

}  // namespace abf
