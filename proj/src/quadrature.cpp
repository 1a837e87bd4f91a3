#include "abf/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "abf/errors.hpp"

namespace abf {

namespace {

GaussLegendre compute_gauss_legendre(int n);

std::mutex cache_mutex;
std::map<int, GaussLegendre>& rule_cache() {
  static std::map<int, GaussLegendre> cache;
  return cache;
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw InvalidArgumentError("gauss_legendre: need at least one node");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = rule_cache().find(n);
    if (it != rule_cache().end()) return it->second;
  }
  GaussLegendre rule = compute_gauss_legendre(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  rule_cache().emplace(n, rule);
  return rule;
}

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-based initial guess; the rule
  // is symmetric so only half the roots are computed.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) throw InvalidArgumentError("uniform_grid: need at least two points");
  if (!(lo < hi)) throw InvalidArgumentError("uniform_grid: lo must be below hi");
  std::vector<double> g(points);
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo + h * i;
  g.back() = hi;  // exact endpoint
  return g;
}

}  // namespace abf
