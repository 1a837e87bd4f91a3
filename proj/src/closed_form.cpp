#include "abf/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "abf/errors.hpp"
#include "abf/optimizer.hpp"
#include "abf/quadrature.hpp"
#include "abf/radiated_power.hpp"

namespace abf {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double wrap_into_period(double x, double period) {
  double y = x - period * std::floor(x / period);
  if (y >= period) y = 0.0;
  return y;
}

// Flat-pair rate for bandwidth b at center frequency f_c; cn is the
// carrier-to-noise density ratio in Hz.
double flat_rate_for_bandwidth(double f_c, double cos_abs, double cn, double b) {
  const double gain = 1.0 / (cos_abs * std::log(std::sqrt((f_c + 0.5 * b) / (f_c - 0.5 * b))));
  return b * std::log1p(cn * gain / b) / kLn2;
}

AngularSpectrum brick_on_band_image(const Scenario& sc, double level) {
  const double c = sc.cos_theta();
  const double period = 2.0 * sc.f_c;
  std::vector<double> f_grid = uniform_grid(sc.f_min, sc.f_max, sc.grid.freq_bins);
  const size_t n = f_grid.size();
  std::vector<double> omega(n), v(n, level);
  for (size_t i = 0; i < n; ++i) {
    const size_t src = (c >= 0.0) ? i : (n - 1 - i);
    omega[i] = wrap_into_period(c * f_grid[src], period);
  }
  double pad = period * 1e-12;
  pad = std::min(pad, 0.5 * omega.front());
  pad = std::min(pad, 0.49 * (period - omega.back()));
  omega.insert(omega.begin(), omega.front() - pad);
  v.insert(v.begin(), 0.0);
  omega.push_back(omega.back() + pad);
  v.push_back(0.0);
  return AngularSpectrum(std::move(omega), std::move(v), sc.f_c);
}

}  // namespace

double max_flat_gain(double theta_c, double f_min, double f_max) {
  if (!(f_min > 0.0) || !(f_min < f_max)) {
    throw InvalidArgumentError("max_flat_gain: need 0 < f_min < f_max");
  }
  const double c = std::abs(std::cos(theta_c));
  if (c < Scenario::min_cos_theta) {
    throw DivergentGainError("max_flat_gain: divergent gain at broadside");
  }
  if (c > f_min / f_max) {
    throw RegimeError("max_flat_gain: cos(theta_c) exceeds f_min/f_max");
  }
  return 1.0 / (c * std::log(std::sqrt(f_max / f_min)));
}

FlatSolution flat_solution(const Scenario& sc) {
  sc.validate();
  const double level = max_flat_gain(sc.theta_c, sc.f_min, sc.f_max);
  SampledSpectrum s0 = SampledSpectrum::constant(sc.f_min, sc.f_max, sc.grid.freq_bins,
                                                 sc.p_r / sc.bandwidth());
  return {brick_on_band_image(sc, level), std::move(s0)};
}

double max_regime_bandwidth(double f_c, double theta_c) {
  if (!(f_c > 0.0)) throw InvalidArgumentError("max_regime_bandwidth: f_c must be positive");
  const double c = std::abs(std::cos(theta_c));
  return 2.0 * f_c * (1.0 - c) / (1.0 + c);
}

double flat_rate(const Scenario& sc, std::optional<double> bandwidth_override) {
  sc.validate();
  const double c = sc.cos_abs();
  if (c < Scenario::min_cos_theta) {
    throw DivergentGainError("flat_rate: divergent gain at broadside");
  }
  const double b = bandwidth_override.value_or(sc.bandwidth());
  const double b_max = max_regime_bandwidth(sc.f_c, sc.theta_c);
  if (!(b > 0.0) || b > b_max * (1.0 + 1e-12)) {
    throw RegimeError("flat_rate: bandwidth outside the around-broadside regime");
  }
  return flat_rate_for_bandwidth(sc.f_c, c, sc.cn(), std::min(b, b_max));
}

EndfireSolution endfire_solution(const Scenario& sc) {
  sc.validate();
  if (std::abs(sc.theta_c) > 1e-12) {
    throw InvalidArgumentError("endfire_solution: requires theta_c = 0");
  }
  const double b = sc.bandwidth();
  const double period = 2.0 * sc.f_c;
  std::vector<double> f_grid = uniform_grid(sc.f_min, sc.f_max, sc.grid.freq_bins);
  const size_t n = f_grid.size();
  std::vector<double> l_of_f(n);
  for (size_t i = 0; i < n; ++i) {
    l_of_f[i] = std::log(sc.f_max / std::sqrt(f_grid[i] * (period - f_grid[i])));
  }
  const double l_min = *std::min_element(l_of_f.begin(), l_of_f.end());

  auto gain_for = [&](double mu) {
    const double prefactor = b * sc.n0 / (sc.g_c * sc.p_r);
    std::vector<double> omega(f_grid), v(n);
    for (size_t i = 0; i < n; ++i) v[i] = prefactor * std::max(mu / l_of_f[i] - 1.0, 0.0);
    double pad = period * 1e-12;
    pad = std::min(pad, 0.5 * omega.front());
    pad = std::min(pad, 0.49 * (period - omega.back()));
    omega.insert(omega.begin(), omega.front() - pad);
    v.insert(v.begin(), 0.0);
    omega.push_back(omega.back() + pad);
    v.push_back(0.0);
    return AngularSpectrum(std::move(omega), std::move(v), sc.f_c);
  };

  if (sc.p_r == 0.0) {
    // No power to radiate; the water level sits at the bottom of L.
    std::vector<double> zeros(n, 0.0);
    return {AngularSpectrum(std::move(f_grid), std::move(zeros), sc.f_c), l_min};
  }

  SampledSpectrum s0_flat = SampledSpectrum::constant(sc.f_min, sc.f_max, sc.grid.freq_bins,
                                                      sc.p_r / b);
  auto power_of = [&](double mu) {
    return radiated_power_omega_form(gain_for(mu), s0_flat, sc.f_min, sc.f_max);
  };

  // Power grows with the water level mu; bracket above l_min and bisect.
  double lo = l_min, hi = l_min;
  for (int i = 0; i < 1100 && power_of(hi) < sc.p_r; ++i) {
    hi = (hi > 0.0) ? hi * 2.0 : l_min + 1.0;
  }
  if (power_of(hi) < sc.p_r) {
    throw ConvergenceError("endfire_solution: failed to bracket the power constraint");
  }
  for (int i = 0; i < 400 && (hi - lo) > sc.tol.mu_rel * std::abs(hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (power_of(mid) < sc.p_r) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mu = 0.5 * (lo + hi);
  AngularSpectrum g = gain_for(mu);
  const double gap =
      std::abs(radiated_power_omega_form(g, s0_flat, sc.f_min, sc.f_max) - sc.p_r) / sc.p_r;
  if (gap > sc.tol.power_rel) {
    throw ConvergenceError("endfire_solution: power constraint not met to tolerance");
  }
  return {std::move(g), mu};
}

double endfire_rate(const Scenario& sc) {
  EndfireSolution sol = endfire_solution(sc);
  if (sc.p_r == 0.0) return 0.0;
  const double period = 2.0 * sc.f_c;
  const std::vector<double> f_grid = uniform_grid(sc.f_min, sc.f_max, sc.grid.freq_bins);
  auto integrand = [&](double f) {
    const double l = std::log(sc.f_max / std::sqrt(f * (period - f)));
    return std::max((std::log(sol.mu) - std::log(l)) / kLn2, 0.0);
  };
  double acc = 0.0;
  double prev = integrand(f_grid.front());
  for (size_t i = 1; i < f_grid.size(); ++i) {
    const double cur = integrand(f_grid[i]);
    acc += 0.5 * (f_grid[i] - f_grid[i - 1]) * (prev + cur);
    prev = cur;
  }
  return acc;
}

BandwidthOptimum optimal_bandwidth(double f_c, double theta_c, double cn_hz) {
  if (!(f_c > 0.0)) throw InvalidArgumentError("optimal_bandwidth: f_c must be positive");
  if (!(cn_hz >= 0.0)) throw InvalidArgumentError("optimal_bandwidth: cn must be nonnegative");
  const double c = std::abs(std::cos(theta_c));
  if (c < Scenario::min_cos_theta) {
    throw DivergentGainError("optimal_bandwidth: divergent gain at broadside");
  }
  const double b_max = max_regime_bandwidth(f_c, theta_c);
  if (!(b_max > 0.0)) {
    throw RegimeError("optimal_bandwidth: no usable bandwidth toward end-fire");
  }
  if (cn_hz == 0.0) return {0.0, 0.0};

  auto rate_of = [&](double b) { return flat_rate_for_bandwidth(f_c, c, cn_hz, b); };

  // Coarse log-spaced scan guards against non-unimodality, then
  // golden-section refines within the bracketing cells.
  const double b_lo = std::min(1e6, 1e-6 * b_max);
  const int scan_points = 256;
  const double ratio = std::log(b_max / b_lo) / (scan_points - 1);
  int best = 0;
  double best_rate = -1.0;
  std::vector<double> scan(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    scan[i] = b_lo * std::exp(ratio * i);
    const double r = rate_of(scan[i]);
    if (r > best_rate) {
      best_rate = r;
      best = i;
    }
  }
  double lo = std::log(scan[std::max(best - 1, 0)]);
  double hi = std::log(scan[std::min(best + 1, scan_points - 1)]);
  const double gr = 0.6180339887498949;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double r1 = rate_of(std::exp(x1));
  double r2 = rate_of(std::exp(x2));
  for (int i = 0; i < 200 && (hi - lo) > 1e-7; ++i) {
    if (r1 < r2) {
      lo = x1;
      x1 = x2;
      r1 = r2;
      x2 = lo + gr * (hi - lo);
      r2 = rate_of(std::exp(x2));
    } else {
      hi = x2;
      x2 = x1;
      r2 = r1;
      x1 = hi - gr * (hi - lo);
      r1 = rate_of(std::exp(x1));
    }
  }
  double b_star = std::exp(0.5 * (lo + hi));
  // The optimum may sit on the regime boundary.
  if (rate_of(b_max) >= rate_of(b_star)) b_star = b_max;
  return {b_star, rate_of(b_star)};
}

}  // namespace abf
