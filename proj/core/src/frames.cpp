#include "coherentlab/frames.hpp"

#include <cmath>

#include "coherentlab/error.hpp"

namespace coherentlab {

const char* to_string(IndexSet s) { return s == IndexSet::Full ? "full" : "reduced"; }

CoherentSystem make_coherent_system(double alpha, const DiskPoint& z,
                                    std::shared_ptr<const LatticeBall> ball, bool normalized,
                                    const BranchRule& rule, double stabilizer_tol) {
  if (!(alpha > 1.0)) throw ValidationError("alpha must exceed 1");
  if (!ball) throw ValidationError("coherent system needs a lattice ball");
  CoherentSystem s;
  s.alpha = alpha;
  s.z = z;
  s.stabilizer = stabilizer_of(*ball, z, stabilizer_tol);
  s.representatives = coset_representatives(*ball, s.stabilizer);
  s.ball = std::move(ball);
  s.normalized = normalized;
  s.rule = rule;
  return s;
}

std::vector<Complex> stabilizer_phases(double alpha, const Stabilizer& stab, const BranchRule& rule,
                                       double tol) {
  std::vector<Complex> u;
  u.reserve(stab.order());
  for (const GroupElement& g : stab.elements) {
    const KernelTransform t = transform_kernel(alpha, g, stab.fixed_point, rule);
    if (std::abs(t.point.value() - stab.fixed_point.value()) > tol) {
      throw ValidationError("stabilizer element does not fix the base point");
    }
    u.push_back(t.scalar);
  }
  return u;
}

GramMatrix gram_matrix(const CoherentSystem& system, const std::vector<std::size_t>& indices) {
  const auto n = static_cast<Eigen::Index>(indices.size());
  std::vector<Complex> c(n);
  std::vector<Complex> w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const KernelTransform t =
        transform_kernel(system.alpha, (*system.ball)[indices[i]].g, system.z, system.rule);
    c[i] = t.scalar;
    w[i] = t.point.value();
  }
  const double scale = system.normalized ? std::pow(1.0 - system.z.norm_sq(), system.alpha) : 1.0;

  GramMatrix gram;
  gram.alpha = system.alpha;
  gram.z = system.z.value();
  gram.indices = indices;
  gram.entries.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      // <k_{w_j}, k_{w_i}> = k_{w_j}(w_i) = kernel(w_i, w_j)
      const Complex g = c[j] * std::conj(c[i]) * kernel(system.alpha, w[i], w[j]) * scale;
      gram.entries(i, j) = g;
      gram.entries(j, i) = std::conj(g);
    }
    gram.entries(j, j) = Complex{gram.entries(j, j).real(), 0.0};
  }
  return gram;
}

GramMatrix gram_matrix(const CoherentSystem& system, bool use_representatives) {
  std::vector<std::size_t> indices;
  if (use_representatives) {
    indices = system.representatives;
  } else {
    indices.resize(system.ball->size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  }
  GramMatrix g = gram_matrix(system, indices);
  g.index_set = use_representatives ? IndexSet::Reduced : IndexSet::Full;
  return g;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw ValidationError("matrix must be square");
  if (m.rows() == 0) throw ValidationError("empty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  const Eigen::VectorXd& ev = eig.eigenvalues();
  if (!ev.allFinite()) throw NumericalError("Hermitian eigensolver returned non-finite values");
  return ev;
}

SpectralBounds riesz_bounds_finite_section(const GramMatrix& gram) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(gram.entries);
  return {ev(0), ev(ev.size() - 1)};
}

Eigen::MatrixXcd frame_operator(const CoherentSystem& system, int N,
                                const std::vector<GroupElement>& elements) {
  if (N < 1) throw ValidationError("truncation degree N must be >= 1");
  const double alpha = system.alpha;
  const double scale =
      system.normalized ? std::pow(1.0 - system.z.norm_sq(), alpha / 2.0) : 1.0;
  std::vector<double> s(N);
  for (int m = 0; m < N; ++m) s[m] = std::exp(0.5 * log_basis_weight(alpha, m));

  // Column g holds the coordinates <v_g, e_m> = c_g conj(e_m(g.z)) (times 1/||k_z||).
  Eigen::MatrixXcd V(N, static_cast<Eigen::Index>(elements.size()));
  for (std::size_t col = 0; col < elements.size(); ++col) {
    const KernelTransform t = transform_kernel(alpha, elements[col], system.z, system.rule);
    const Complex w = std::conj(t.point.value());
    Complex coeff = t.scalar * scale;
    for (int m = 0; m < N; ++m) {
      V(m, static_cast<Eigen::Index>(col)) = coeff * s[m];
      coeff *= w;
    }
  }
  return V * V.adjoint();
}

Eigen::MatrixXcd frame_operator(const CoherentSystem& system, int N, IndexSet index_set) {
  std::vector<GroupElement> elements;
  if (index_set == IndexSet::Reduced) {
    for (std::size_t i : system.representatives) elements.push_back((*system.ball)[i].g);
  } else {
    for (const auto& e : system.ball->elements()) elements.push_back(e.g);
  }
  return frame_operator(system, N, elements);
}

SpectralBounds frame_bounds_truncated(const CoherentSystem& system, int N) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(frame_operator(system, N, IndexSet::Full));
  return {ev(0), ev(ev.size() - 1)};
}

Eigen::MatrixXcd projection_pz_matrix(double alpha, const Stabilizer& stab, int N,
                                      const BranchRule& rule) {
  if (N < 1) throw ValidationError("truncation degree N must be >= 1");
  if (stab.order() == 0) throw ValidationError("empty stabilizer");
  const std::vector<Complex> u = stabilizer_phases(alpha, stab, rule);
  const Quadrature quad = default_quadrature(alpha, N);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(N, N);
  for (std::size_t i = 0; i < stab.order(); ++i) {
    p += std::conj(u[i]) * pi_matrix(alpha, stab.elements[i], N, quad, rule);
  }
  p /= static_cast<double>(stab.order());

  const double idem = (p * p - p).norm();
  const double herm = (p - p.adjoint()).norm();
  if (idem > 1e-6 || herm > 1e-6) {
    throw NumericalError("p_z fails the projection identities (residuals " + std::to_string(idem) +
                         ", " + std::to_string(herm) + "); check the stabilizer phases");
  }
  return p;
}

}  // namespace coherentlab
