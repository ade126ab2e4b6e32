#pragma once

// The weighted Bergman space A^2_alpha of the unit disk with the probability
// measure d mu_alpha = (alpha - 1)(1 - |w|^2)^{alpha - 2} dA(w) / pi, its
// reproducing kernel (1 - z conj(w))^{-alpha}, and the holomorphic discrete
// series pi_alpha(g) f(w) = J_{g^{-1}}(w)^{alpha/2} f(g^{-1}.w).
//
// Vectors are stored as coordinates in the orthonormal monomial basis
//   e_n(w) = sqrt(Gamma(alpha + n) / (n! Gamma(alpha))) w^n.

#include <Eigen/Dense>
#include <vector>

#include "coherentlab/moebius.hpp"

namespace coherentlab {

struct BergmanParams {
  double alpha = 4.0;
  int N = 80;

  /// Throws ValidationError unless alpha > 1 and N >= 1.
  void validate() const;
};

inline constexpr int kDefaultTruncation = 80;

/// log(Gamma(alpha + n) / (n! Gamma(alpha))), the log squared norm of k_0's
/// n-th Taylor weight.
double log_basis_weight(double alpha, int n);

/// e_n(w).
Complex basis_value(double alpha, int n, Complex w);

struct CoeffVector {
  Eigen::VectorXcd coeffs;

  int size() const { return static_cast<int>(coeffs.size()); }
  double norm_sq() const { return coeffs.squaredNorm(); }
};

/// <f, g> = sum f_n conj(g_n).
Complex inner(const CoeffVector& f, const CoeffVector& g);

/// f(w) from basis coordinates.
Complex evaluate(double alpha, const CoeffVector& f, Complex w);

/// (1 - z conj(w))^{-alpha} on the principal branch.
Complex kernel(double alpha, Complex z, Complex w);

struct KernelCoeffs {
  CoeffVector vector;
  /// ||k_z||^2 - sum_{n<N} |coeff_n|^2, the squared norm left out.
  double tail;
};

/// Coordinates of k_z(w) = conj(kernel(z, w)): coeff_n = conj(e_n(z)).
KernelCoeffs kernel_coeffs(double alpha, Complex z, int N);

/// Tensor rule for mu_alpha: Gauss-Jacobi in t = r^2 times a uniform
/// trapezoid in angle. Node order is ring-major.
struct Quadrature {
  double alpha = 0.0;
  int n_radial = 0;
  int n_angular = 0;
  std::vector<Complex> nodes;
  std::vector<double> weights;

  /// |w|^{2n} is integrated exactly for n <= radial_exactness.
  int radial_exactness() const { return 2 * n_radial - 1; }
  /// e^{i k phi} is integrated exactly for |k| <= angular_exactness.
  int angular_exactness() const { return n_angular - 1; }
};

Quadrature mu_alpha_quadrature(double alpha, int n_radial, int n_angular);

/// Default resolution (2N, 4N).
Quadrature default_quadrature(double alpha, int N);

/// <f, g> computed by quadrature on function values.
Complex quadrature_inner(const Quadrature& quad, const CoeffVector& f, const CoeffVector& g);

struct PiResult {
  CoeffVector image;
  /// sqrt(| ||f||^2 - ||image||^2 |) / ||f||: mass pushed past degree N.
  double leak = 0.0;
};

/// Coordinates of pi_alpha(g) f projected onto degrees < f.size(). Throws
/// NumericalError when the leak exceeds leak_bound.
PiResult apply_pi(double alpha, const GroupElement& g, const CoeffVector& f, const Quadrature& quad,
                  const BranchRule& rule = {}, double leak_bound = 1e-6);

/// Matrix of pi_alpha(g) compressed to degrees < N (column n = image of e_n).
Eigen::MatrixXcd pi_matrix(double alpha, const GroupElement& g, int N, const Quadrature& quad,
                           const BranchRule& rule = {});

struct KernelTransform {
  DiskPoint point;  // gamma . z
  Complex scalar;   // pi(gamma) k_z = scalar * k_{gamma . z}
};

/// scalar = sigma(gamma, gamma^{-1}) conj(J_gamma(z)^{alpha/2}); its modulus
/// squared is ((1 - |gamma.z|^2) / (1 - |z|^2))^alpha.
KernelTransform transform_kernel(double alpha, const GroupElement& gamma, const DiskPoint& z,
                                 const BranchRule& rule = {});

struct FormalDimensionEstimate {
  double estimate = 0.0;     // 1 / (integral over the ball of radius R)
  double lower = 0.0;        // 1 / (integral + tail)
  double integral = 0.0;
  double tail_bound = 0.0;   // integral over G outside the ball
  bool tail_warning = false; // tail_bound > 1% of integral
};

/// Estimates d_pi from int_G |<k_0, pi(x) k_0>|^2 dx = d_pi^{-1} ||k_0||^4 with
/// Haar measure (1/pi)(1 - |w|^2)^{-2} dA(w) times the unit-mass circle,
/// integrated over the hyperbolic ball of radius R about 0. Exact value
/// under this normalization: alpha - 1.
FormalDimensionEstimate estimate_formal_dimension(double alpha, double R, int n_radial = 160,
                                                  int n_angular = 64);

}  // namespace coherentlab
