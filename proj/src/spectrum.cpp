#include "abf/spectrum.hpp"

#include <cmath>

#include "abf/errors.hpp"
#include "abf/quadrature.hpp"

namespace abf {

namespace {

void check_grid_and_values(const std::vector<double>& grid, const std::vector<double>& values,
                           size_t min_points, const char* who) {
  if (grid.size() < min_points) {
    throw InvalidArgumentError(std::string(who) + ": grid too small");
  }
  if (grid.size() != values.size()) {
    throw InvalidArgumentError(std::string(who) + ": grid/value size mismatch");
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw InvalidArgumentError(std::string(who) + ": non-finite grid");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw InvalidArgumentError(std::string(who) + ": grid must be strictly increasing");
    }
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw InvalidArgumentError(std::string(who) + ": values must be finite and nonnegative");
    }
  }
}

// Exact integral of the linear function through (x1,v1),(x2,v2) divided by w,
// over [x1, x2] with 0 < x1 <= x2.
double linear_over_w(double x1, double v1, double x2, double v2) {
  if (x2 <= x1) return 0.0;
  const double slope = (v2 - v1) / (x2 - x1);
  const double intercept = v1 - slope * x1;
  return intercept * std::log(x2 / x1) + slope * (x2 - x1);
}

}  // namespace

SampledSpectrum::SampledSpectrum(std::vector<double> f_grid_hz, std::vector<double> values)
    : grid_(std::move(f_grid_hz)), values_(std::move(values)) {
  check_grid_and_values(grid_, values_, 2, "SampledSpectrum");
  positive_grid_ = grid_.front() > 0.0;
  prefix_.resize(grid_.size(), 0.0);
  prefix_over_w_.resize(grid_.size(), 0.0);
  for (size_t i = 1; i < grid_.size(); ++i) {
    const double h = grid_[i] - grid_[i - 1];
    prefix_[i] = prefix_[i - 1] + 0.5 * h * (values_[i] + values_[i - 1]);
    if (positive_grid_) {
      prefix_over_w_[i] =
          prefix_over_w_[i - 1] + linear_over_w(grid_[i - 1], values_[i - 1], grid_[i], values_[i]);
    }
  }
}

SampledSpectrum SampledSpectrum::constant(double f_lo, double f_hi, int points, double value) {
  std::vector<double> g = uniform_grid(f_lo, f_hi, points);
  std::vector<double> v(g.size(), value);
  return SampledSpectrum(std::move(g), std::move(v));
}

size_t SampledSpectrum::cell_index(double x) const {
  auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  size_t i = (it == grid_.begin()) ? 0 : static_cast<size_t>(it - grid_.begin()) - 1;
  return std::min(i, grid_.size() - 2);
}

double SampledSpectrum::operator()(double f_hz) const {
  if (f_hz < grid_.front() || f_hz > grid_.back()) return 0.0;
  const size_t i = cell_index(f_hz);
  const double h = grid_[i + 1] - grid_[i];
  const double t = (f_hz - grid_[i]) / h;
  return values_[i] + t * (values_[i + 1] - values_[i]);
}

double SampledSpectrum::integrate(double a, double b) const {
  if (a > b) throw InvalidArgumentError("SampledSpectrum::integrate: a must not exceed b");
  const double lo = std::max(a, grid_.front());
  const double hi = std::min(b, grid_.back());
  if (!(lo < hi)) return 0.0;
  const size_t il = cell_index(lo);
  const size_t ih = cell_index(hi);
  // Partial cells handled by the exact trapezoid of the interpolant.
  auto partial = [&](size_t i, double x1, double x2) {
    const double h = grid_[i + 1] - grid_[i];
    auto at = [&](double x) {
      return values_[i] + (x - grid_[i]) / h * (values_[i + 1] - values_[i]);
    };
    return 0.5 * (x2 - x1) * (at(x1) + at(x2));
  };
  if (il == ih) return partial(il, lo, hi);
  double acc = partial(il, lo, grid_[il + 1]);
  acc += prefix_[ih] - prefix_[il + 1];
  acc += partial(ih, grid_[ih], hi);
  return acc;
}

double SampledSpectrum::integrate_over_w(double a, double b) const {
  if (a > b) throw InvalidArgumentError("SampledSpectrum::integrate_over_w: a must not exceed b");
  if (!positive_grid_) {
    throw InvalidArgumentError("SampledSpectrum::integrate_over_w: grid must be positive");
  }
  const double lo = std::max(a, grid_.front());
  const double hi = std::min(b, grid_.back());
  if (!(lo < hi)) return 0.0;
  const size_t il = cell_index(lo);
  const size_t ih = cell_index(hi);
  auto partial = [&](size_t i, double x1, double x2) {
    const double h = grid_[i + 1] - grid_[i];
    auto at = [&](double x) {
      return values_[i] + (x - grid_[i]) / h * (values_[i + 1] - values_[i]);
    };
    return linear_over_w(x1, at(x1), x2, at(x2));
  };
  if (il == ih) return partial(il, lo, hi);
  double acc = partial(il, lo, grid_[il + 1]);
  acc += prefix_over_w_[ih] - prefix_over_w_[il + 1];
  acc += partial(ih, grid_[ih], hi);
  return acc;
}

AngularSpectrum::AngularSpectrum(std::vector<double> omega_grid_hz, std::vector<double> values,
                                 double f_c_hz)
    : grid_(std::move(omega_grid_hz)), values_(std::move(values)), f_c_(f_c_hz) {
  if (!(f_c_ > 0.0)) throw InvalidArgumentError("AngularSpectrum: f_c must be positive");
  period_ = 2.0 * f_c_;
  check_grid_and_values(grid_, values_, 1, "AngularSpectrum");
  if (grid_.front() < 0.0 || grid_.back() >= period_) {
    throw InvalidArgumentError("AngularSpectrum: grid must lie within [0, 2 f_c)");
  }
  // Prefix over the sample range plus the closing wrap cell back to the
  // first node one period up.
  prefix_.resize(grid_.size(), 0.0);
  for (size_t i = 1; i < grid_.size(); ++i) {
    const double h = grid_[i] - grid_[i - 1];
    prefix_[i] = prefix_[i - 1] + 0.5 * h * (values_[i] + values_[i - 1]);
  }
  const double wrap_h = period_ - grid_.back() + grid_.front();
  total_ = prefix_.back() + 0.5 * wrap_h * (values_.back() + values_.front());
}

AngularSpectrum AngularSpectrum::constant(double f_c_hz, double value) {
  return AngularSpectrum({0.0}, {value}, f_c_hz);
}

double AngularSpectrum::operator()(double omega_hz) const {
  if (grid_.size() == 1) return values_.front();
  // Wrap into [grid_[0], grid_[0] + period).
  double y = omega_hz - period_ * std::floor((omega_hz - grid_.front()) / period_);
  if (y >= grid_.front() + period_) y = grid_.front();  // guard against roundoff
  if (y <= grid_.back()) {
    auto it = std::upper_bound(grid_.begin(), grid_.end(), y);
    size_t i = (it == grid_.begin()) ? 0 : static_cast<size_t>(it - grid_.begin()) - 1;
    i = std::min(i, grid_.size() - 2);
    const double h = grid_[i + 1] - grid_[i];
    const double t = (y - grid_[i]) / h;
    return values_[i] + t * (values_[i + 1] - values_[i]);
  }
  // Wrap cell between the last node and the first node one period up.
  const double h = period_ - grid_.back() + grid_.front();
  const double t = (y - grid_.back()) / h;
  return values_.back() + t * (values_.front() - values_.back());
}

double AngularSpectrum::unrolled_cumulative(double x) const {
  const double k = std::floor((x - grid_.front()) / period_);
  double y = x - period_ * k;
  if (y >= grid_.front() + period_) y = grid_.front();
  double part;
  if (grid_.size() == 1) {
    part = values_.front() * (y - grid_.front());
  } else if (y <= grid_.back()) {
    auto it = std::upper_bound(grid_.begin(), grid_.end(), y);
    size_t i = (it == grid_.begin()) ? 0 : static_cast<size_t>(it - grid_.begin()) - 1;
    i = std::min(i, grid_.size() - 2);
    const double h = grid_[i + 1] - grid_[i];
    auto at = [&](double z) {
      return values_[i] + (z - grid_[i]) / h * (values_[i + 1] - values_[i]);
    };
    part = prefix_[i] + 0.5 * (y - grid_[i]) * (values_[i] + at(y));
  } else {
    const double h = period_ - grid_.back() + grid_.front();
    auto at = [&](double z) {
      return values_.back() + (z - grid_.back()) / h * (values_.front() - values_.back());
    };
    part = prefix_.back() + 0.5 * (y - grid_.back()) * (values_.back() + at(y));
  }
  return total_ * k + part;
}

double AngularSpectrum::integrate(double a, double b) const {
  if (a > b) throw InvalidArgumentError("AngularSpectrum::integrate: a must not exceed b");
  return unrolled_cumulative(b) - unrolled_cumulative(a);
}

}  // namespace abf
