#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "abf/constants.hpp"
#include "abf/errors.hpp"
#include "abf/geometry.hpp"

using namespace abf;

namespace {

constexpr double pi = std::numbers::pi;

// Reference ULA steering vector straight from the linear-phase formula,
// independent of the plane-wave delay path used by the library.
std::vector<cplx> ula_reference_steering(int n, double d, double f_c, double f, double theta) {
  std::vector<cplx> a(n);
  for (int k = 0; k < n; ++k) {
    a[k] = std::polar(1.0, -2.0 * pi * d * std::cos(theta) * k * f / f_c);
  }
  return a;
}

}  // namespace

TEST_CASE("ula geometry placement and validation") {
  const ArrayGeometry g = ArrayGeometry::ula(4, 0.5, 60e9);
  CHECK(g.size() == 4);
  CHECK(g.kind() == ArrayKind::ula);
  const double expected_step = speed_of_light / (2.0 * 60e9);  // 2.49827 mm
  CHECK(expected_step == doctest::Approx(2.49827048333e-3).epsilon(1e-9));
  for (int i = 0; i < 4; ++i) {
    CHECK(g.elements()[i][2] == doctest::Approx(expected_step * i).epsilon(1e-15));
    CHECK(g.elements()[i][0] == 0.0);
    CHECK(g.elements()[i][1] == 0.0);
  }

  const ArrayGeometry single = ArrayGeometry::ula(1, 0.5, 60e9);
  CHECK(single.size() == 1);
  CHECK(single.elements()[0] == Vec3{0.0, 0.0, 0.0});

  CHECK_THROWS_AS(ArrayGeometry::ula(0, 0.5, 60e9), InvalidArgumentError);
  CHECK_THROWS_AS(ArrayGeometry::ula(4, -0.5, 60e9), InvalidArgumentError);
  CHECK_THROWS_AS(ArrayGeometry::ula(4, 0.5, 0.0), InvalidArgumentError);
}

TEST_CASE("uca geometry placement and arc-rule radius") {
  CHECK_THROWS_AS(ArrayGeometry::uca(3, -1.0, 60e9), InvalidArgumentError);

  const ArrayGeometry one = ArrayGeometry::uca(1, 0.0, 60e9);
  CHECK(one.elements()[0] == Vec3{0.0, 0.0, 0.0});

  const double r = 0.01;
  const ArrayGeometry g = ArrayGeometry::uca(3, r, 60e9);
  for (int i = 0; i < 3; ++i) {
    const double psi = 2.0 * pi * i / 3.0;
    CHECK(g.elements()[i][0] == doctest::Approx(r * std::cos(psi)).epsilon(1e-14));
    CHECK(g.elements()[i][1] == doctest::Approx(r * std::sin(psi)).epsilon(1e-14));
    CHECK(g.elements()[i][2] == 0.0);
  }

  // Half-wavelength spacing along the arc: r = n lambda_c / (4 pi).
  const double lambda_c = speed_of_light / 60e9;
  const double arc_r = ArrayGeometry::uca_arc_radius(16, 60e9);
  CHECK(arc_r == doctest::Approx(16.0 * lambda_c / (4.0 * pi)).epsilon(1e-14));
  const ArrayGeometry uca16 = ArrayGeometry::uca(16, arc_r, 60e9);
  const auto& p0 = uca16.elements()[0];
  const auto& p1 = uca16.elements()[1];
  const double chord = std::hypot(p1[0] - p0[0], p1[1] - p0[1]);
  const double arc = arc_r * (2.0 * pi / 16.0);
  CHECK(arc == doctest::Approx(lambda_c / 2.0).epsilon(1e-12));
  CHECK(chord < arc);  // chord slightly shorter than the arc
}

TEST_CASE("steering vector closed-form values") {
  const double fc = 60e9;

  SUBCASE("broadside gives the all-ones vector") {
    const ArrayGeometry g = ArrayGeometry::ula(6, 0.5, fc);
    const auto a = steering_vector(g, 1.3 * fc, Direction(pi / 2, 0.0));
    for (const auto& v : a) {
      CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(v.imag()) < 1e-12);
    }
  }

  SUBCASE("end-fire alternates sign at f_c") {
    const ArrayGeometry g = ArrayGeometry::ula(4, 0.5, fc);
    const auto a = steering_vector(g, fc, Direction(0.0, 0.0));
    const double expected[] = {1.0, -1.0, 1.0, -1.0};
    for (int i = 0; i < 4; ++i) {
      CHECK(a[i].real() == doctest::Approx(expected[i]).epsilon(1e-9));
      CHECK(std::abs(a[i].imag()) < 1e-9);
    }
  }

  SUBCASE("out-of-band sample N=2, f=1.5 f_c, end-fire") {
    const ArrayGeometry g = ArrayGeometry::ula(2, 0.5, fc);
    const auto a = steering_vector(g, 1.5 * fc, Direction(0.0, 0.0));
    CHECK(a[0] == cplx(1.0, 0.0));
    const cplx expected = std::polar(1.0, -1.5 * pi);
    CHECK(std::abs(a[1] - expected) < 1e-9);
  }

  SUBCASE("rejects nonpositive frequency") {
    const ArrayGeometry g = ArrayGeometry::ula(2, 0.5, fc);
    CHECK_THROWS_AS(steering_vector(g, 0.0, Direction(0.0, 0.0)), InvalidArgumentError);
  }
}

TEST_CASE("steering entries have unit modulus everywhere") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uth(0.0, pi);
  std::uniform_real_distribution<double> uph(0.0, 2.0 * pi - 1e-9);
  std::uniform_real_distribution<double> uf(0.1e9, 200e9);
  const ArrayGeometry ula = ArrayGeometry::ula(9, 0.7, 28e9);
  const ArrayGeometry uca = ArrayGeometry::uca(5, 0.02, 28e9);
  for (int trial = 0; trial < 200; ++trial) {
    const Direction dir(uth(rng), uph(rng));
    const double f = uf(rng);
    for (const ArrayGeometry* g : {&ula, &uca}) {
      for (const auto& v : steering_vector(*g, f, dir)) {
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-14);
      }
    }
  }
}

TEST_CASE("generic plane-wave delays reproduce the ULA formula") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uth(0.0, pi);
  std::uniform_real_distribution<double> uf(20e9, 40e9);
  const int n = 8;
  const double d = 0.5;
  const double fc = 28e9;
  const ArrayGeometry g = ArrayGeometry::ula(n, d, fc);
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = uth(rng);
    const double f = uf(rng);
    const auto a = steering_vector(g, f, Direction(theta, 0.0));
    const auto ref = ula_reference_steering(n, d, fc, f, theta);
    for (int i = 0; i < n; ++i) {
      const double phase_diff = std::arg(a[i] * std::conj(ref[i]));
      CHECK(std::abs(phase_diff) < 1e-12);
    }
  }
}

TEST_CASE("radiation intensity") {
  const double fc = 60e9;

  SUBCASE("matched beamformer attains N at the design point") {
    const ArrayGeometry g = ArrayGeometry::ula(8, 0.5, fc);
    const Direction dir(pi / 3, 0.0);
    const Beamformer b = matched_beamformer(g, fc, dir);
    CHECK(radiation_intensity(g, b, fc, dir) == doctest::Approx(8.0).epsilon(1e-12));
  }

  SUBCASE("single active element is isotropic") {
    const ArrayGeometry g = ArrayGeometry::ula(5, 0.5, fc);
    Beamformer b;
    b.weights.assign(5, cplx(0.0, 0.0));
    b.weights[0] = 1.0;
    for (double f : {0.5 * fc, fc, 1.4 * fc}) {
      for (double th : {0.0, 0.9, pi / 2, 2.3}) {
        CHECK(radiation_intensity(g, b, f, Direction(th, 0.3)) ==
              doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  SUBCASE("UCA matched at f_c loses coherence off the design frequency") {
    const double r = ArrayGeometry::uca_arc_radius(16, fc);
    const ArrayGeometry g = ArrayGeometry::uca(16, r, fc);
    const Direction dir(pi / 2, 0.0);
    const Beamformer b = matched_beamformer(g, fc, dir);
    CHECK(radiation_intensity(g, b, fc, dir) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(radiation_intensity(g, b, 66e9, dir) < 16.0 * (1.0 - 1e-6));
  }

  SUBCASE("length mismatch rejected") {
    const ArrayGeometry g = ArrayGeometry::ula(4, 0.5, fc);
    Beamformer b;
    b.weights.assign(3, cplx(1.0, 0.0));
    CHECK_THROWS_AS(radiation_intensity(g, b, fc, Direction(0.0, 0.0)), InvalidArgumentError);
  }

  SUBCASE("Cauchy-Schwarz ceiling N ||b||^2") {
    std::mt19937 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = 7;
    const ArrayGeometry g = ArrayGeometry::ula(n, 0.5, fc);
    Beamformer b;
    for (int i = 0; i < n; ++i) b.weights.emplace_back(gauss(rng), gauss(rng));
    const double cap = n * b.norm_squared() * (1.0 + 1e-12);
    std::uniform_real_distribution<double> uth(0.0, pi);
    std::uniform_real_distribution<double> uf(30e9, 90e9);
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(radiation_intensity(g, b, uf(rng), Direction(uth(rng), 0.0)) <= cap);
    }
  }
}

TEST_CASE("finite angular spectrum") {
  const double fc = 28e9;

  SUBCASE("coherent and destructive two-element sums") {
    Beamformer sum, diff;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    sum.weights = {inv_sqrt2, inv_sqrt2};
    diff.weights = {inv_sqrt2, -inv_sqrt2};
    CHECK(angular_spectrum_finite(sum, 0.5, fc, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(angular_spectrum_finite(diff, 0.5, fc, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("periodic with period 2 f_c at half-wavelength spacing") {
    std::mt19937 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Beamformer b;
    for (int i = 0; i < 6; ++i) b.weights.emplace_back(gauss(rng), gauss(rng));
    std::uniform_real_distribution<double> uo(-3.0 * fc, 3.0 * fc);
    for (int trial = 0; trial < 100; ++trial) {
      const double omega = uo(rng);
      const double a = angular_spectrum_finite(b, 0.5, fc, omega);
      const double b2 = angular_spectrum_finite(b, 0.5, fc, omega + 2.0 * fc);
      CHECK(b2 == doctest::Approx(a).epsilon(1e-10));
    }
  }

  SUBCASE("matches radiation intensity on the ULA at omega = cos(theta) f") {
    std::mt19937 rng(9);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uth(0.0, pi);
    std::uniform_real_distribution<double> uf(20e9, 40e9);
    for (double d : {0.5, 0.7, 0.25}) {
      const int n = 5;
      const ArrayGeometry g = ArrayGeometry::ula(n, d, fc);
      Beamformer b;
      b.weights.clear();
      for (int i = 0; i < n; ++i) b.weights.emplace_back(gauss(rng), gauss(rng));
      for (int trial = 0; trial < 50; ++trial) {
        const double theta = uth(rng);
        const double f = uf(rng);
        const double via_intensity = radiation_intensity(g, b, f, Direction(theta, 0.0));
        const double via_spectrum =
            angular_spectrum_finite(b, d, fc, std::cos(theta) * f);
        CHECK(via_spectrum == doctest::Approx(via_intensity).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("direction validation") {
  CHECK_THROWS_AS(Direction(-0.1, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(Direction(pi + 0.1, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(Direction(1.0, -0.2), InvalidArgumentError);
  CHECK_THROWS_AS(Direction(1.0, 2.0 * pi), InvalidArgumentError);
}
