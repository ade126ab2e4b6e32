#pragma once

#include <vector>

namespace coherentlab {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1 - x)^a (1 + x)^b,
/// a, b > -1, via Golub-Welsch. Weights are scaled to sum to 1.
GaussRule gauss_jacobi(int n, double a, double b);

/// n-point Gauss-Legendre rule on [lo, hi]; weights sum to hi - lo.
GaussRule gauss_legendre(int n, double lo, double hi);

}  // namespace coherentlab
