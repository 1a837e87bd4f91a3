#pragma once

#include <vector>

namespace abf {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Uniform grid of `points` nodes on [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, int points);

}  // namespace abf
