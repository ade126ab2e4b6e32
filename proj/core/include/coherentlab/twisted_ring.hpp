#pragma once

// Finitely supported model of the twisted group algebra C_sigma[Gamma] on an
// enumerated lattice ball: twisted convolution, involution, trace,
// center-valued trace, the averaging projection p_0 and the coefficient fold
// c -> c' it induces, and the dimension kernel phi.

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "coherentlab/lattice.hpp"
#include "coherentlab/moebius.hpp"

namespace coherentlab {

/// sigma_alpha on pairs of ball elements, relative to the stored sign
/// representatives, memoized. Safe for concurrent use.
class CocycleTable {
 public:
  CocycleTable(std::shared_ptr<const LatticeBall> ball, double alpha, BranchRule rule = {});

  const LatticeBall& ball() const { return *ball_; }
  std::shared_ptr<const LatticeBall> ball_ptr() const { return ball_; }
  double alpha() const { return alpha_; }

  /// sigma(g_i, g_j); throws BallUnderflow if g_i g_j is not in the ball.
  Complex operator()(std::size_t i, std::size_t j) const;
  /// Index of g_i g_j; throws BallUnderflow.
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

  /// |sigma(i,j) sigma(ij,k) - sigma(i,jk) sigma(j,k)|.
  double identity_residual(std::size_t i, std::size_t j, std::size_t k) const;
  /// Largest identity residual over triples built from cached pairs.
  double max_cached_residual() const;
  std::size_t cached_pairs() const;

 private:
  struct Entry {
    std::size_t product;
    Complex value;
  };
  const Entry& lookup(std::size_t i, std::size_t j) const;

  std::shared_ptr<const LatticeBall> ball_;
  double alpha_;
  BranchRule rule_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, Entry> memo_;
  mutable std::unordered_map<std::size_t, std::size_t> inverses_;
};

/// sum_g x(g) lambda_sigma(g) with finite support, keyed by ball index.
class TwistedRingElement {
 public:
  TwistedRingElement() = default;
  explicit TwistedRingElement(std::map<std::size_t, Complex> coeffs);

  static TwistedRingElement delta(std::size_t index, Complex value = {1.0, 0.0});

  const std::map<std::size_t, Complex>& coeffs() const { return coeffs_; }
  Complex at(std::size_t index) const;
  void add(std::size_t index, Complex value);
  std::size_t support_size() const { return coeffs_.size(); }

  TwistedRingElement operator+(const TwistedRingElement& other) const;
  TwistedRingElement operator-(const TwistedRingElement& other) const;
  TwistedRingElement operator*(Complex s) const;

  /// Largest coefficient modulus.
  double max_abs() const;
  /// Sequence over the whole ball.
  Eigen::VectorXcd to_sequence(std::size_t ball_size) const;
  static TwistedRingElement from_sequence(const Eigen::VectorXcd& c, double drop_below = 0.0);

 private:
  std::map<std::size_t, Complex> coeffs_;
};

/// (lambda(gamma) c)_{g} = sigma(gamma, gamma^{-1} g) c_{gamma^{-1} g}. Throws
/// BallUnderflow when mass would leave the ball.
Eigen::VectorXcd left_regular_apply(std::size_t gamma, const Eigen::VectorXcd& c,
                                    const CocycleTable& sigma);

/// (x * y)(g) = sum_{g1 g2 = g} x(g1) y(g2) sigma(g1, g2).
TwistedRingElement twisted_convolve(const TwistedRingElement& x, const TwistedRingElement& y,
                                    const CocycleTable& sigma);

/// x*(g) = conj(x(g^{-1})) conj(sigma(g^{-1}, g)).
TwistedRingElement star(const TwistedRingElement& x, const CocycleTable& sigma);

/// tau(x) = <x delta_e, delta_e> = x(e).
Complex trace(const TwistedRingElement& x);

/// Restriction of the coefficients to the central subgroup.
TwistedRingElement center_valued_trace(const TwistedRingElement& x,
                                       const std::vector<std::size_t>& central);

/// Largest |sigma(g, h) - u(g) u(h) conj(u(gh))| over the finite subgroup.
/// Throws BallUnderflow / ValidationError if the subgroup is not closed.
double coboundary_residual(const std::vector<std::size_t>& subgroup, const std::vector<Complex>& u,
                           const CocycleTable& sigma);

/// p_0 = |L|^{-1} sum_{g in L} conj(u(g)) lambda(g). Rejects u that fail the
/// coboundary condition by more than 1e-9.
TwistedRingElement projection_p0(const std::vector<std::size_t>& subgroup,
                                 const std::vector<Complex>& u, const CocycleTable& sigma);

/// c'_g = |L|^{-1} sum_{l in L} c_{g l} conj(u(l^{-1})) sigma(g l, l^{-1}),
/// the coefficients of x * p_0 when x has coefficients c.
Eigen::VectorXcd fold_by_projection(const Eigen::VectorXcd& c,
                                    const std::vector<std::size_t>& subgroup,
                                    const std::vector<Complex>& u, const CocycleTable& sigma);

/// phi = vol(G/Gamma) d_pi conj(u(g)) on the central elements, 0 elsewhere.
TwistedRingElement cdim_kernel(double alpha, const LatticePreset& preset,
                               const std::vector<std::size_t>& central,
                               const std::vector<Complex>& u_central);

}  // namespace coherentlab
