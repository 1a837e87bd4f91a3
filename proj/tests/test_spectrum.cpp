#include <cmath>
#include <random>

#include <doctest.h>

#include "abf/errors.hpp"
#include "abf/spectrum.hpp"

using namespace abf;

TEST_CASE("sampled spectrum construction rules") {
  CHECK_THROWS_AS(SampledSpectrum({1.0}, {2.0}), InvalidArgumentError);
  CHECK_THROWS_AS(SampledSpectrum({1.0, 1.0}, {2.0, 2.0}), InvalidArgumentError);
  CHECK_THROWS_AS(SampledSpectrum({2.0, 1.0}, {2.0, 2.0}), InvalidArgumentError);
  CHECK_THROWS_AS(SampledSpectrum({1.0, 2.0}, {-1.0, 2.0}), InvalidArgumentError);
  CHECK_THROWS_AS(SampledSpectrum({1.0, 2.0}, {2.0}), InvalidArgumentError);
}

TEST_CASE("sampled spectrum evaluation") {
  SUBCASE("constant spectrum returns the constant inside the span") {
    const SampledSpectrum s = SampledSpectrum::constant(1e9, 2e9, 11, 3.5);
    CHECK(s(1e9) == doctest::Approx(3.5));
    CHECK(s(1.37e9) == doctest::Approx(3.5));
    CHECK(s(2e9) == doctest::Approx(3.5));
  }

  SUBCASE("midpoint of (0, 2) interpolates to 1") {
    const SampledSpectrum s({1.0, 2.0}, {0.0, 2.0});
    CHECK(s(1.5) == doctest::Approx(1.0));
  }

  SUBCASE("zero outside the span") {
    const SampledSpectrum s({1.0, 2.0}, {5.0, 5.0});
    CHECK(s(0.999) == 0.0);
    CHECK(s(2.001) == 0.0);
  }
}

TEST_CASE("sampled spectrum integration") {
  SUBCASE("constant times width") {
    const SampledSpectrum s = SampledSpectrum::constant(10.0, 14.0, 9, 2.5);
    CHECK(s.integrate(10.0, 14.0) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(s.integrate(11.0, 12.0) == doctest::Approx(2.5).epsilon(1e-14));
  }

  SUBCASE("empty interval and bad order") {
    const SampledSpectrum s = SampledSpectrum::constant(1.0, 2.0, 5, 1.0);
    CHECK(s.integrate(1.4, 1.4) == 0.0);
    CHECK_THROWS_AS(s.integrate(2.0, 1.0), InvalidArgumentError);
  }

  SUBCASE("unit triangle has area one") {
    const SampledSpectrum s({0.0, 0.5, 1.0}, {0.0, 2.0, 0.0});
    CHECK(s.integrate(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("additive over subintervals") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> uval(0.0, 4.0);
    std::vector<double> grid, vals;
    for (int i = 0; i <= 40; ++i) {
      grid.push_back(2.0 + 0.1 * i);
      vals.push_back(uval(rng));
    }
    const SampledSpectrum s(grid, vals);
    std::uniform_real_distribution<double> ux(2.0, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
      double a = ux(rng), b = ux(rng), c = ux(rng);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      const double whole = s.integrate(a, c);
      const double split = s.integrate(a, b) + s.integrate(b, c);
      CHECK(split == doctest::Approx(whole).epsilon(1e-12));
    }
  }

  SUBCASE("refinement is second order on a smooth function") {
    auto fn = [](double x) { return 2.0 + std::sin(3.0 * x); };
    const double exact = 2.0 * 2.0 + (std::cos(3.0) - std::cos(9.0)) / 3.0;  // over [1, 3]
    const double e1 = std::abs(SampledSpectrum::from_function(1.0, 3.0, 257, fn).integrate(1.0, 3.0) - exact);
    const double e2 = std::abs(SampledSpectrum::from_function(1.0, 3.0, 513, fn).integrate(1.0, 3.0) - exact);
    CHECK(e1 / e2 > 3.5);  // halving h divides the error by about 4
    CHECK(e1 / e2 < 4.5);
  }
}

TEST_CASE("integral of value(w)/w") {
  SUBCASE("flat spectrum gives v log(b/a)") {
    const SampledSpectrum s = SampledSpectrum::constant(2.0, 8.0, 33, 1.7);
    CHECK(s.integrate_over_w(2.0, 8.0) == doctest::Approx(1.7 * std::log(4.0)).epsilon(1e-14));
    CHECK(s.integrate_over_w(3.0, 5.0) ==
          doctest::Approx(1.7 * std::log(5.0 / 3.0)).epsilon(1e-14));
  }

  SUBCASE("linear ramp matches the closed form") {
    // v(w) = w on [1, 4]: integral of v/w = 3.
    const SampledSpectrum s({1.0, 4.0}, {1.0, 4.0});
    CHECK(s.integrate_over_w(1.0, 4.0) == doctest::Approx(3.0).epsilon(1e-14));
  }

  SUBCASE("clips to the span") {
    const SampledSpectrum s = SampledSpectrum::constant(2.0, 4.0, 5, 1.0);
    CHECK(s.integrate_over_w(1.0, 8.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  }
}

TEST_CASE("weighted product quadrature") {
  SUBCASE("recovers the plain integral for unit weight") {
    const SampledSpectrum s({0.0, 0.5, 1.0}, {0.0, 2.0, 0.0});
    const double plain = s.integrate(0.1, 0.9);
    const double product = s.integrate_product([](double) { return 1.0; }, 0.1, 0.9);
    CHECK(product == doctest::Approx(plain).epsilon(1e-14));
  }

  SUBCASE("smooth weight against a flat spectrum") {
    const SampledSpectrum s = SampledSpectrum::constant(1.0, 3.0, 513, 2.0);
    const double got = s.integrate_product([](double x) { return std::exp(-x); }, 1.0, 3.0);
    const double exact = 2.0 * (std::exp(-1.0) - std::exp(-3.0));
    CHECK(got == doctest::Approx(exact).epsilon(1e-10));
  }

  SUBCASE("breakpoints remove kinks from the weight") {
    const SampledSpectrum s = SampledSpectrum::constant(0.0, 2.0, 3, 1.0);
    auto kinked = [](double x) { return std::abs(x - 0.7317); };
    const double bp[] = {0.7317};
    const double got = s.integrate_product(kinked, 0.0, 2.0, bp);
    const double exact = 0.5 * (0.7317 * 0.7317 + (2.0 - 0.7317) * (2.0 - 0.7317));
    CHECK(got == doctest::Approx(exact).epsilon(1e-14));
  }
}

TEST_CASE("angular spectrum wrapping and integration") {
  const double fc = 10.0;  // period 20

  SUBCASE("constructor validation") {
    CHECK_THROWS_AS(AngularSpectrum({-1.0, 5.0}, {1.0, 1.0}, fc), InvalidArgumentError);
    CHECK_THROWS_AS(AngularSpectrum({0.0, 20.0}, {1.0, 1.0}, fc), InvalidArgumentError);
    CHECK_THROWS_AS(AngularSpectrum({0.0, 5.0}, {1.0, -1.0}, fc), InvalidArgumentError);
  }

  SUBCASE("evaluation wraps modulo the period") {
    const AngularSpectrum g({2.0, 6.0, 10.0}, {1.0, 3.0, 2.0}, fc);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ux(-60.0, 60.0);
    for (int trial = 0; trial < 200; ++trial) {
      const double x = ux(rng);
      CHECK(g(x) == doctest::Approx(g(x + 20.0)).epsilon(1e-12));
      CHECK(g(x) == doctest::Approx(g(x - 40.0)).epsilon(1e-12));
    }
    CHECK(g(6.0) == doctest::Approx(3.0));
    CHECK(g(4.0) == doctest::Approx(2.0));   // midpoint of (1, 3)
    // Wrap cell from (10, 2) back to (22, 1): width 12.
    CHECK(g(16.0) == doctest::Approx(2.0 - (16.0 - 10.0) / 12.0).epsilon(1e-12));
  }

  SUBCASE("constant function integrates to value times length") {
    const AngularSpectrum g = AngularSpectrum::constant(fc, 2.5);
    CHECK(g(123.456) == doctest::Approx(2.5));
    CHECK(g.integrate(-7.0, 13.0) == doctest::Approx(2.5 * 20.0).epsilon(1e-14));
    CHECK(g.period_integral() == doctest::Approx(50.0).epsilon(1e-14));
  }

  SUBCASE("integration is additive and period-consistent") {
    const AngularSpectrum g({0.0, 4.0, 9.0, 15.0}, {1.0, 0.5, 2.0, 0.0}, fc);
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ux(-50.0, 50.0);
    for (int trial = 0; trial < 200; ++trial) {
      double a = ux(rng), b = ux(rng), c = ux(rng);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      CHECK(g.integrate(a, c) ==
            doctest::Approx(g.integrate(a, b) + g.integrate(b, c)).epsilon(1e-12));
      CHECK(g.integrate(a, a + 20.0) == doctest::Approx(g.period_integral()).epsilon(1e-12));
    }
  }
}
