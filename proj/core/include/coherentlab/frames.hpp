#pragma once

// Coherent systems (pi_alpha(gamma) k_z)_{gamma in Gamma}: Gram matrices and
// their finite-section Riesz bounds, truncated frame operators, stabilizer
// phases u(gamma), and the averaging projection p_z.

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "coherentlab/bergman.hpp"
#include "coherentlab/lattice.hpp"

namespace coherentlab {

enum class IndexSet { Full, Reduced };

const char* to_string(IndexSet s);

struct CoherentSystem {
  double alpha = 0.0;
  DiskPoint z;
  std::shared_ptr<const LatticeBall> ball;
  Stabilizer stabilizer;
  std::vector<std::size_t> representatives;
  /// Use kappa_z = k_z / ||k_z|| (default) instead of k_z.
  bool normalized = true;
  BranchRule rule;
};

CoherentSystem make_coherent_system(double alpha, const DiskPoint& z,
                                    std::shared_ptr<const LatticeBall> ball, bool normalized = true,
                                    const BranchRule& rule = {}, double stabilizer_tol = 1e-9);

/// u(gamma) with pi(gamma) k_z = u(gamma) k_z for gamma in the stabilizer.
/// Throws ValidationError if some element moves z by more than tol.
std::vector<Complex> stabilizer_phases(double alpha, const Stabilizer& stab,
                                       const BranchRule& rule = {}, double tol = 1e-9);

struct GramMatrix {
  Eigen::MatrixXcd entries;  // entries(i, j) = <v_j, v_i>
  double alpha = 0.0;
  Complex z;
  IndexSet index_set = IndexSet::Reduced;
  std::vector<std::size_t> indices;  // ball indices of the rows
};

/// Gram matrix of v_i = pi(gamma_i) kappa_z over the representatives (or the
/// whole ball), assembled in closed form from transform_kernel.
GramMatrix gram_matrix(const CoherentSystem& system, bool use_representatives);

/// Same, over an explicit list of ball indices.
GramMatrix gram_matrix(const CoherentSystem& system, const std::vector<std::size_t>& indices);

struct SpectralBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Ascending eigenvalues of a Hermitian matrix; throws NumericalError on
/// solver failure or non-finite output.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/// Extreme eigenvalues of the finite section. The lower value bounds the
/// true lower Riesz bound of any superset from above; the upper value bounds
/// the true upper bound from below.
SpectralBounds riesz_bounds_finite_section(const GramMatrix& gram);

/// P_N S P_N for S = sum over the given elements of |v_g><v_g|, in the basis
/// e_0..e_{N-1}. Elements need not belong to the ball.
Eigen::MatrixXcd frame_operator(const CoherentSystem& system, int N,
                                const std::vector<GroupElement>& elements);

/// Frame operator over the full ball or the coset representatives.
Eigen::MatrixXcd frame_operator(const CoherentSystem& system, int N, IndexSet index_set);

/// Extreme eigenvalues of the truncated frame operator over the full ball.
SpectralBounds frame_bounds_truncated(const CoherentSystem& system, int N);

/// |Gamma_z|^{-1} sum conj(u(gamma)) Mat(pi(gamma)) on degrees < N. Throws
/// NumericalError if p^2 = p or p = p* fails by more than 1e-6.
Eigen::MatrixXcd projection_pz_matrix(double alpha, const Stabilizer& stab, int N,
                                      const BranchRule& rule = {});

}  // namespace coherentlab
