#include "abf/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "abf/errors.hpp"
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

// Band frequencies whose image cos(theta_c) f coincides with a node of G
// modulo the period; integrands built from G have breakpoints there.
std::vector<double> image_breakpoints(const AngularSpectrum& g, const Scenario& sc) {
  std::vector<double> bps;
  const double c = sc.cos_theta();
  if (std::abs(c) < 1e-300) return bps;
  const double period = g.period();
  for (double node : g.grid()) {
    // Solve c f = node + period k for f in (f_min, f_max).
    double k_lo = (c > 0.0) ? std::ceil((c * sc.f_min - node) / period)
                            : std::ceil((c * sc.f_max - node) / period);
    double k_hi = (c > 0.0) ? std::floor((c * sc.f_max - node) / period)
                            : std::floor((c * sc.f_min - node) / period);
    for (double k = k_lo; k <= k_hi; k += 1.0) {
      const double f = (node + period * k) / c;
      if (f > sc.f_min && f < sc.f_max) bps.push_back(f);
    }
  }
  return bps;
}

std::vector<double> merged_band_nodes(const AngularSpectrum& g, const SampledSpectrum& s0,
                                      const Scenario& sc) {
  std::vector<double> nodes{sc.f_min, sc.f_max};
  for (double x : s0.grid()) {
    if (x > sc.f_min && x < sc.f_max) nodes.push_back(x);
  }
  std::vector<double> bps = image_breakpoints(g, sc);
  nodes.insert(nodes.end(), bps.begin(), bps.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

// Builds the angular spectrum supported on the band image: sampled values on
// the wrapped image nodes plus a zero-padding node just outside each end of
// the support so that the interpolant vanishes everywhere else.
AngularSpectrum band_image_spectrum(const std::vector<double>& f_grid,
                                    const std::vector<double>& values, const Scenario& sc) {
  const double c = sc.cos_theta();
  const double period = 2.0 * sc.f_c;
  const size_t n = f_grid.size();
  std::vector<double> omega(n), v(n);
  for (size_t i = 0; i < n; ++i) {
    const size_t src = (c >= 0.0) ? i : (n - 1 - i);  // keep omega increasing
    omega[i] = wrap_into_period(c * f_grid[src], period);
    v[i] = values[src];
  }
  double pad = period * 1e-12;
  pad = std::min(pad, 0.5 * omega.front());
  pad = std::min(pad, 0.49 * (period - omega.back()));
  if (pad > 0.0 && omega.front() - pad > 0.0) {
    omega.insert(omega.begin(), omega.front() - pad);
    v.insert(v.begin(), 0.0);
    omega.push_back(omega.back() + pad);
    v.push_back(0.0);
  }
  return AngularSpectrum(std::move(omega), std::move(v), sc.f_c);
}

// Bisects a nonincreasing function to fn(mu) = target. The bracket is grown
// by doubling/halving from mu0; the loop stops at relative width mu_rel.
double solve_decreasing(const std::function<double(double)>& fn, double target, double mu0,
                        double mu_rel, const char* who) {
  double lo = mu0, hi = mu0;
  double f_lo = fn(lo);
  double f_hi = f_lo;
  if (f_lo >= target) {
    for (int i = 0; i < 1100 && f_hi > target; ++i) {
      hi *= 2.0;
      f_hi = fn(hi);
    }
  } else {
    for (int i = 0; i < 1100 && f_lo < target; ++i) {
      lo *= 0.5;
      f_lo = fn(lo);
    }
  }
  if (f_lo < target || f_hi > target) {
    throw ConvergenceError(std::string(who) + ": failed to bracket the power constraint");
  }
  for (int i = 0; i < 400 && (hi - lo) > mu_rel * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (fn(mid) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double achievable_rate(const AngularSpectrum& g, const SampledSpectrum& s0, const Scenario& sc) {
  sc.validate();
  const double c = sc.cos_theta();
  const double snr_scale = sc.g_c / sc.n0;
  const std::vector<double> nodes = merged_band_nodes(g, s0, sc);
  auto integrand = [&](double f) {
    return std::log1p(snr_scale * g(c * f) * s0(f)) / kLn2;
  };
  double acc = 0.0;
  double prev = integrand(nodes.front());
  for (size_t i = 1; i < nodes.size(); ++i) {
    const double cur = integrand(nodes[i]);
    acc += 0.5 * (nodes[i] - nodes[i - 1]) * (prev + cur);
    prev = cur;
  }
  return acc;
}

WaterfillResult waterfill_s0(const AngularSpectrum& g, const Scenario& sc) {
  sc.validate();
  const double c = sc.cos_theta();
  const std::vector<double> f_grid = uniform_grid(sc.f_min, sc.f_max, sc.grid.freq_bins);
  const size_t n = f_grid.size();

  std::vector<double> gain(n), density(n);
  double gain_max = 0.0;
  for (size_t i = 0; i < n; ++i) {
    gain[i] = g(c * f_grid[i]);
    density[i] = angular_power_density(g, f_grid[i]);
    gain_max = std::max(gain_max, gain[i]);
  }
  if (!(gain_max > 0.0)) {
    throw InfeasibleError("waterfill_s0: G vanishes along the target direction");
  }

  if (sc.p_r == 0.0) {
    std::vector<double> zeros(n, 0.0);
    return {SampledSpectrum(f_grid, zeros), std::numeric_limits<double>::infinity()};
  }

  auto spectrum_for = [&](double mu) {
    std::vector<double> v(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      if (gain[i] <= 0.0) continue;
      const double level = 1.0 / (mu * density[i]) - sc.n0 / (sc.g_c * gain[i]);
      // Clamped so extreme bracket probes stay finite.
      v[i] = std::clamp(level, 0.0, 1e300);
    }
    return SampledSpectrum(f_grid, std::move(v));
  };
  auto power_of = [&](double mu) {
    return radiated_power_asymptotic(g, spectrum_for(mu), sc.f_min, sc.f_max);
  };

  const double mu = solve_decreasing(power_of, sc.p_r, 1.0, sc.tol.mu_rel, "waterfill_s0");
  SampledSpectrum s0 = spectrum_for(mu);
  const double gap =
      std::abs(radiated_power_asymptotic(g, s0, sc.f_min, sc.f_max) - sc.p_r) / sc.p_r;
  if (gap > sc.tol.power_rel) {
    throw ConvergenceError("waterfill_s0: power constraint not met to tolerance");
  }
  return {std::move(s0), mu};
}

GainStepResult optimal_g_given_s0(const SampledSpectrum& s0, const Scenario& sc) {
  sc.validate();
  if (sc.cos_abs() < Scenario::min_cos_theta) {
    throw DivergentGainError("optimal_g_given_s0: divergent gain at broadside");
  }
  if (!sc.broadside_regime()) {
    throw RegimeError(
        "optimal_g_given_s0: cos(theta_c) > f_min/f_max; use the end-fire solution instead");
  }
  if (!(s0.integrate(sc.f_min, sc.f_max) > 0.0)) {
    throw InfeasibleError("optimal_g_given_s0: S0 vanishes on the band, nothing to allocate");
  }
  const double w_int = s0.integrate_over_w(sc.f_min, sc.f_max);
  const std::vector<double> f_grid = uniform_grid(sc.f_min, sc.f_max, sc.grid.freq_bins);
  const size_t n = f_grid.size();
  std::vector<double> floor_term(n);
  for (size_t i = 0; i < n; ++i) {
    const double s = s0(f_grid[i]);
    floor_term[i] = (s > 0.0) ? sc.n0 / (sc.g_c * s) : std::numeric_limits<double>::infinity();
  }

  auto gain_for = [&](double mu) {
    const double level = 2.0 / (mu * w_int);
    std::vector<double> v(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      if (std::isfinite(floor_term[i])) v[i] = std::clamp(level - floor_term[i], 0.0, 1e300);
    }
    return band_image_spectrum(f_grid, v, sc);
  };
  auto power_of = [&](double mu) {
    return radiated_power_asymptotic(gain_for(mu), s0, sc.f_min, sc.f_max);
  };

  const double mu = solve_decreasing(power_of, sc.p_r, 1.0, sc.tol.mu_rel, "optimal_g_given_s0");
  AngularSpectrum g = gain_for(mu);
  const double gap =
      std::abs(radiated_power_asymptotic(g, s0, sc.f_min, sc.f_max) - sc.p_r) / sc.p_r;
  if (gap > sc.tol.power_rel) {
    throw ConvergenceError("optimal_g_given_s0: power constraint not met to tolerance");
  }
  return {std::move(g), mu};
}

double kkt_residual(const AngularSpectrum& g, const SampledSpectrum& s0, double mu,
                    const Scenario& sc) {
  sc.validate();
  const double c = sc.cos_theta();
  const double period = 2.0 * sc.f_c;
  const double snr_scale = sc.g_c / sc.n0;
  const std::vector<double> nodes = merged_band_nodes(g, s0, sc);
  double worst = 0.0;
  for (double f : nodes) {
    const double gv = g(c * f);
    const double sv = s0(f);
    if (!(gv > 0.0) || !(sv > 0.0)) continue;
    const double omega = wrap_into_period(c * f, period);
    const double mirror = period - omega;
    const double t1 = 0.5 * s0.integrate_over_w(std::max(sc.f_min, omega),
                                                std::max(sc.f_max, omega));
    const double t2 = 0.5 * s0.integrate_over_w(std::max(sc.f_min, mirror),
                                                std::max(sc.f_max, mirror));
    const double x = snr_scale * sv;
    const double resid = x / (1.0 + x * gv) - mu * (t1 + t2);
    worst = std::max(worst, std::abs(resid));
  }
  return worst;
}

OptimizationResult alternating_optimize(const AngularSpectrum& init_g, const Scenario& sc,
                                        int max_iter, double rate_tol) {
  sc.validate();
  if (max_iter < 1) throw InvalidArgumentError("alternating_optimize: max_iter must be >= 1");
  if (sc.cos_abs() < Scenario::min_cos_theta) {
    throw DivergentGainError("alternating_optimize: divergent gain at broadside");
  }
  if (!sc.broadside_regime()) {
    throw RegimeError("alternating_optimize: outside the around-broadside regime");
  }
  const double tol = (rate_tol > 0.0) ? rate_tol : sc.tol.rate_rel;

  if (sc.p_r == 0.0) {
    WaterfillResult wf = waterfill_s0(init_g, sc);
    SampledSpectrum s0 = wf.s0;
    return {init_g, std::move(s0), 0.0, wf.mu, 0.0, 0.0, 1};
  }

  AngularSpectrum g = init_g;
  SampledSpectrum s0 = SampledSpectrum::constant(sc.f_min, sc.f_max, 2, 0.0);
  double mu_g = 0.0;
  double rate = 0.0;
  int used = 0;
  for (int k = 1; k <= max_iter; ++k) {
    WaterfillResult wf = waterfill_s0(g, sc);
    s0 = std::move(wf.s0);
    GainStepResult gs = optimal_g_given_s0(s0, sc);
    g = std::move(gs.g);
    mu_g = gs.mu;
    const double new_rate = achievable_rate(g, s0, sc);
    used = k;
    const bool converged = k > 1 && std::abs(new_rate - rate) <= tol * std::max(new_rate, 1e-300);
    rate = new_rate;
    if (converged) break;
  }
  const double power = radiated_power_asymptotic(g, s0, sc.f_min, sc.f_max);
  OptimizationResult out{std::move(g), std::move(s0), rate, mu_g, 0.0,
                         std::abs(power - sc.p_r) / sc.p_r, used};
  out.kkt_residual = kkt_residual(out.g, out.s0, mu_g, sc);
  return out;
}

}  // namespace abf
