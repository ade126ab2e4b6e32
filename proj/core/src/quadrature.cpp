#include "coherentlab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "coherentlab/error.hpp"

namespace coherentlab {

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw ValidationError("quadrature order must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw ValidationError("Jacobi exponents must exceed -1");

  // Recurrence coefficients of the monic Jacobi polynomials.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    off(k - 1) = std::sqrt(beta);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) throw NumericalError("Golub-Welsch eigensolve failed");

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = eig.eigenvalues()(i);
    const double v0 = eig.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;
    total += rule.weights[i];
  }
  for (double& w : rule.weights) w /= total;
  return rule;
}

GaussRule gauss_legendre(int n, double lo, double hi) {
  GaussRule rule = gauss_jacobi(n, 0.0, 0.0);
  const double half = (hi - lo) / 2.0;
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = lo + half * (rule.nodes[i] + 1.0);
    rule.weights[i] *= 2.0 * half;
  }
  return rule;
}

}  // namespace coherentlab
