#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace abf {

/// Nonnegative function of frequency sampled on a strictly increasing grid
/// and evaluated by linear interpolation. Evaluates to zero outside the grid
/// span (spectra are band-limited by construction). Immutable once built.
class SampledSpectrum {
 public:
  SampledSpectrum(std::vector<double> f_grid_hz, std::vector<double> values);

  static SampledSpectrum constant(double f_lo, double f_hi, int points, double value);

  template <class F>
  static SampledSpectrum from_function(double f_lo, double f_hi, int points, F&& fn);

  double operator()(double f_hz) const;

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double f_lo() const { return grid_.front(); }
  double f_hi() const { return grid_.back(); }

  /// Integral of the interpolant over [a, b]; exact for the piecewise-linear
  /// representation and exactly additive over subintervals.
  double integrate(double a, double b) const;

  /// Exact integral of value(w)/w over [a, b] intersected with the span.
  /// The grid must be strictly positive.
  double integrate_over_w(double a, double b) const;

  /// Composite quadrature of weight(f) * value(f) over [a, b]: the grid
  /// cells are cut at `extra_breakpoints` and every piece is integrated with
  /// a two-point Gauss rule, which is exact whenever the weight is
  /// polynomial of degree <= 2 on each piece and very accurate for smooth
  /// weights.
  template <class F>
  double integrate_product(F&& weight, double a, double b,
                           std::span<const double> extra_breakpoints = {}) const;

 private:
  // Largest i with grid_[i] <= x, clamped to [0, size-2].
  size_t cell_index(double x) const;

  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> prefix_;         // integral from grid_[0] to grid_[i]
  std::vector<double> prefix_over_w_;  // same for value(w)/w
  bool positive_grid_ = false;
};

/// Nonnegative periodic function of the angular-frequency variable, sampled
/// on [0, 2 f_c) and interpolated linearly around the circle. Evaluation at
/// any real argument wraps modulo the period 2 f_c.
class AngularSpectrum {
 public:
  AngularSpectrum(std::vector<double> omega_grid_hz, std::vector<double> values, double f_c_hz);

  static AngularSpectrum constant(double f_c_hz, double value);

  double f_c() const { return f_c_; }
  double period() const { return period_; }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

  double operator()(double omega_hz) const;

  /// Exact integral of the periodic interpolant over [a, b] for any real
  /// a <= b, including intervals spanning several periods.
  double integrate(double a, double b) const;

  /// Integral over one full period.
  double period_integral() const { return total_; }

 private:
  // Cumulative integral from grid_[0], unrolled over periods; monotone in x.
  double unrolled_cumulative(double x) const;

  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> prefix_;  // integral from grid_[0] to grid_[i]
  double f_c_ = 0.0;
  double period_ = 0.0;
  double total_ = 0.0;
};

template <class F>
SampledSpectrum SampledSpectrum::from_function(double f_lo, double f_hi, int points, F&& fn) {
  std::vector<double> g(points), v(points);
  const double h = (f_hi - f_lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    g[i] = (i + 1 == points) ? f_hi : f_lo + h * i;
    v[i] = fn(g[i]);
  }
  return SampledSpectrum(std::move(g), std::move(v));
}

template <class F>
double SampledSpectrum::integrate_product(F&& weight, double a, double b,
                                          std::span<const double> extra_breakpoints) const {
  const double lo = std::max(a, grid_.front());
  const double hi = std::min(b, grid_.back());
  if (!(lo < hi)) return 0.0;

  std::vector<double> cuts;
  cuts.reserve(grid_.size() + extra_breakpoints.size() + 2);
  cuts.push_back(lo);
  for (double x : grid_) {
    if (x > lo && x < hi) cuts.push_back(x);
  }
  for (double x : extra_breakpoints) {
    if (x > lo && x < hi) cuts.push_back(x);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // 2-point Gauss per piece.
  constexpr double offset = 0.28867513459481287;  // 1 / (2 sqrt(3))
  double acc = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double h = cuts[i + 1] - cuts[i];
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double x1 = mid - offset * h;
    const double x2 = mid + offset * h;
    acc += 0.5 * h * (weight(x1) * (*this)(x1) + weight(x2) * (*this)(x2));
  }
  return acc;
}

}  // namespace abf
