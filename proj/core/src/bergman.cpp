#include "coherentlab/bergman.hpp"

#include <cmath>

#include "coherentlab/error.hpp"
#include "coherentlab/quadrature.hpp"

namespace coherentlab {

namespace {

std::vector<double> sqrt_weights(double alpha, int N) {
  std::vector<double> s(N);
  for (int n = 0; n < N; ++n) s[n] = std::exp(0.5 * log_basis_weight(alpha, n));
  return s;
}

void require_alpha(double alpha) {
  if (!(alpha > 1.0)) throw ValidationError("alpha must exceed 1");
}

}  // namespace

void BergmanParams::validate() const {
  require_alpha(alpha);
  if (N < 1) throw ValidationError("truncation degree N must be >= 1");
}

double log_basis_weight(double alpha, int n) {
  return std::lgamma(alpha + n) - std::lgamma(n + 1.0) - std::lgamma(alpha);
}

Complex basis_value(double alpha, int n, Complex w) {
  return std::exp(0.5 * log_basis_weight(alpha, n)) * std::pow(w, n);
}

Complex inner(const CoeffVector& f, const CoeffVector& g) {
  if (f.size() != g.size()) throw ValidationError("coefficient vectors differ in length");
  // Eigen's dot conjugates the first argument.
  return g.coeffs.dot(f.coeffs);
}

Complex evaluate(double alpha, const CoeffVector& f, Complex w) {
  const int N = f.size();
  const std::vector<double> s = sqrt_weights(alpha, N);
  Complex acc{0.0, 0.0};
  for (int n = N - 1; n >= 0; --n) acc = acc * w + f.coeffs(n) * s[n];
  return acc;
}

Complex kernel(double alpha, Complex z, Complex w) {
  return std::exp(-alpha * std::log(1.0 - z * std::conj(w)));
}

KernelCoeffs kernel_coeffs(double alpha, Complex z, int N) {
  require_alpha(alpha);
  if (N < 1) throw ValidationError("truncation degree N must be >= 1");
  KernelCoeffs out;
  out.vector.coeffs.resize(N);
  const std::vector<double> s = sqrt_weights(alpha, N);
  Complex zc_pow{1.0, 0.0};
  for (int n = 0; n < N; ++n) {
    out.vector.coeffs(n) = s[n] * zc_pow;
    zc_pow *= std::conj(z);
  }
  const double full = std::pow(1.0 - std::norm(z), -alpha);
  out.tail = std::max(0.0, full - out.vector.norm_sq());
  return out;
}

Quadrature mu_alpha_quadrature(double alpha, int n_radial, int n_angular) {
  require_alpha(alpha);
  if (n_radial < 2) throw ValidationError("n_radial must be >= 2");
  if (n_angular < 1) throw ValidationError("n_angular must be >= 1");

  // In t = r^2 the radial measure is (alpha - 1)(1 - t)^{alpha - 2} dt on (0, 1);
  // with x = 2t - 1 that is the Jacobi weight (1 - x)^{alpha - 2}.
  const GaussRule radial = gauss_jacobi(n_radial, alpha - 2.0, 0.0);

  Quadrature q;
  q.alpha = alpha;
  q.n_radial = n_radial;
  q.n_angular = n_angular;
  q.nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
  q.weights.reserve(q.nodes.capacity());
  for (int i = 0; i < n_radial; ++i) {
    const double r = std::sqrt((radial.nodes[i] + 1.0) / 2.0);
    for (int k = 0; k < n_angular; ++k) {
      q.nodes.push_back(std::polar(r, 2.0 * kPi * k / n_angular));
      q.weights.push_back(radial.weights[i] / n_angular);
    }
  }
  return q;
}

Quadrature default_quadrature(double alpha, int N) { return mu_alpha_quadrature(alpha, 2 * N, 4 * N); }

Complex quadrature_inner(const Quadrature& quad, const CoeffVector& f, const CoeffVector& g) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
    acc += quad.weights[k] * evaluate(quad.alpha, f, quad.nodes[k]) *
           std::conj(evaluate(quad.alpha, g, quad.nodes[k]));
  }
  return acc;
}

PiResult apply_pi(double alpha, const GroupElement& g, const CoeffVector& f, const Quadrature& quad,
                  const BranchRule& rule, double leak_bound) {
  require_alpha(alpha);
  const int N = f.size();
  if (N < 1) throw ValidationError("empty coefficient vector");
  if (quad.alpha != alpha) throw ValidationError("quadrature was built for a different alpha");
  if (quad.n_radial < N || quad.n_angular < 2 * N) {
    throw ValidationError("quadrature resolution must be at least (N, 2N)");
  }

  const std::vector<double> s = sqrt_weights(alpha, N);
  std::vector<Complex> mono(N);
  for (int n = 0; n < N; ++n) mono[n] = f.coeffs(n) * s[n];

  const GroupElement gi = g.inverse();
  std::vector<Complex> acc(N, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < quad.nodes.size(); ++k) {
    const Complex x = quad.nodes[k];
    const Complex u = act(gi, x);
    Complex fu{0.0, 0.0};
    for (int n = N - 1; n >= 0; --n) fu = fu * u + mono[n];
    Complex term = quad.weights[k] * jacobian_power(gi, x, alpha, rule) * fu;
    const Complex xc = std::conj(x);
    for (int m = 0; m < N; ++m) {
      acc[m] += term;
      term *= xc;
    }
  }

  PiResult out;
  out.image.coeffs.resize(N);
  for (int m = 0; m < N; ++m) out.image.coeffs(m) = acc[m] * s[m];
  const double in = f.norm_sq();
  out.leak = in > 0.0 ? std::sqrt(std::abs(in - out.image.norm_sq()) / in) : 0.0;
  if (!std::isfinite(out.leak)) throw NumericalError("apply_pi produced non-finite values");
  if (out.leak > leak_bound) {
    throw NumericalError("apply_pi truncation leak " + std::to_string(out.leak) +
                         " exceeds bound " + std::to_string(leak_bound));
  }
  return out;
}

Eigen::MatrixXcd pi_matrix(double alpha, const GroupElement& g, int N, const Quadrature& quad,
                           const BranchRule& rule) {
  require_alpha(alpha);
  if (quad.alpha != alpha) throw ValidationError("quadrature was built for a different alpha");
  if (quad.n_radial < N || quad.n_angular < 2 * N) {
    throw ValidationError("quadrature resolution must be at least (N, 2N)");
  }
  const std::vector<double> s = sqrt_weights(alpha, N);
  const auto K = static_cast<Eigen::Index>(quad.nodes.size());
  Eigen::MatrixXcd basis(K, N);
  Eigen::MatrixXcd moved(K, N);
  const GroupElement gi = g.inverse();
  for (Eigen::Index k = 0; k < K; ++k) {
    const Complex x = quad.nodes[k];
    const Complex u = act(gi, x);
    const double sw = std::sqrt(quad.weights[k]);
    const Complex j = jacobian_power(gi, x, alpha, rule);
    Complex xp{1.0, 0.0};
    Complex up{1.0, 0.0};
    for (int n = 0; n < N; ++n) {
      basis(k, n) = sw * s[n] * xp;
      moved(k, n) = sw * s[n] * j * up;
      xp *= x;
      up *= u;
    }
  }
  return basis.adjoint() * moved;
}

KernelTransform transform_kernel(double alpha, const GroupElement& gamma, const DiskPoint& z,
                                 const BranchRule& rule) {
  require_alpha(alpha);
  const Complex sigma =
      cocycle(gamma, gamma.inverse(), GroupElement::identity(), alpha, rule);
  const Complex jp = jacobian_power(gamma, z.value(), alpha, rule);
  return {act(gamma, z), sigma * std::conj(jp)};
}

FormalDimensionEstimate estimate_formal_dimension(double alpha, double R, int n_radial,
                                                  int n_angular) {
  require_alpha(alpha);
  if (!(R > 0.0) || R > 30.0) throw ValidationError("R must lie in (0, 30]");
  if (n_radial < 2 || n_angular < 1) throw ValidationError("quadrature sizes too small");

  // Haar density in geodesic polar coordinates: (1 / (4 pi)) sinh(rho) d rho d phi.
  const GaussRule radial = gauss_legendre(n_radial, 0.0, R);
  const DiskPoint origin{Complex{0.0, 0.0}};
  double integral = 0.0;
  for (int i = 0; i < n_radial; ++i) {
    const double rho = radial.nodes[i];
    const double t = std::tanh(rho / 2.0);
    double ring = 0.0;
    for (int k = 0; k < n_angular; ++k) {
      const GroupElement x = GroupElement::translation_to(std::polar(t, 2.0 * kPi * k / n_angular));
      ring += std::norm(transform_kernel(alpha, x, origin).scalar);
    }
    integral += radial.weights[i] * std::sinh(rho) * (2.0 * kPi / n_angular) * ring / (4.0 * kPi);
  }

  FormalDimensionEstimate out;
  out.integral = integral;
  out.tail_bound = std::pow(std::cosh(R / 2.0), 2.0 - 2.0 * alpha) / (alpha - 1.0);
  out.estimate = 1.0 / integral;
  out.lower = 1.0 / (integral + out.tail_bound);
  out.tail_warning = out.tail_bound > 0.01 * integral;
  return out;
}

}  // namespace coherentlab
