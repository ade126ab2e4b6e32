#pragma once

// SU(1,1) acting on the unit disk by Moebius maps, the automorphy factor
// with a fixed logarithm branch, and the projective multiplier sigma_alpha
// of the holomorphic discrete series.

#include <complex>
#include <cstdint>

namespace coherentlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// A point strictly inside the unit disk.
class DiskPoint {
 public:
  DiskPoint() = default;
  /// Throws ValidationError unless |w| < 1.
  explicit DiskPoint(Complex w);

  Complex value() const { return w_; }
  double norm_sq() const { return std::norm(w_); }

 private:
  Complex w_{0.0, 0.0};
};

/// The SU(1,1) matrix [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.
/// g and -g are the same element of PSU(1,1); see same_element().
struct GroupElement {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  static GroupElement identity() { return {}; }
  /// Rotation w -> e^{i theta} w, stored as a = e^{i theta / 2}, b = 0.
  static GroupElement rotation(double theta);
  /// Hyperbolic translation along the real axis taking 0 to t, |t| < 1.
  static GroupElement translation(double t);
  /// The boost taking 0 to w (b/conj(a) = w, a real positive).
  static GroupElement translation_to(Complex w);

  double det() const { return std::norm(a) - std::norm(b); }
  GroupElement inverse() const { return {std::conj(a), -b}; }
  GroupElement negated() const { return {-a, -b}; }
  /// Sign representative with Re(a) > 0 (Im(a) > 0 on the tie).
  GroupElement canonical() const;
  /// Rescale so that det() == 1 at working precision.
  GroupElement renormalized() const;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Entrywise distance of the matrices, scaled by max(1, |a|).
double matrix_distance(const GroupElement& g, const GroupElement& h);
/// Equality in PSU(1,1): matrix_distance to g or -g below tol.
bool same_element(const GroupElement& g, const GroupElement& h, double tol = 1e-9);

Complex act(const GroupElement& g, Complex w);
DiskPoint act(const GroupElement& g, const DiskPoint& w);

/// Complex Jacobian of w -> g.w, i.e. (conj(b) w + conj(a))^{-2}.
Complex jacobian(const GroupElement& g, Complex w);

/// Selects the logarithm of the automorphy factor. The default is the
/// principal rule log(conj(a)) + Log(1 + (conj(b)/conj(a)) w). A nonzero
/// twist_seed adds i*pi*s(g), s(g) in {-1, 0, 1} drawn from a hash of the
/// matrix, which changes every phase by a coboundary.
struct BranchRule {
  std::uint64_t twist_seed = 0;

  int twist(const GroupElement& g) const;
};

/// A chosen logarithm of conj(b) w + conj(a); exp(-2 value) = J_g(w).
struct BranchLog {
  Complex value;
};

BranchLog branch_log(const GroupElement& g, Complex w, const BranchRule& rule = {});

/// exp(-alpha * branch_log(g, w)): a branch of J_g(w)^{alpha/2}.
Complex jacobian_power(const GroupElement& g, Complex w, double alpha,
                       const BranchRule& rule = {});

/// Multiplier sigma_alpha(g, h) with pi(g) pi(h) = sigma(g, h) pi(gh), where
/// pi(g) f(w) = jacobian_power(g^{-1}, w) f(g^{-1}.w). Evaluated as
/// exp(-alpha [l(g^{-1}, 0) + l(h^{-1}, g^{-1}.0) - l((gh)^{-1}, 0)]); under the
/// principal rule this equals exp(-alpha [l(g, h.0) + l(h, 0) - l(gh, 0)]).
Complex cocycle(const GroupElement& g, const GroupElement& h, double alpha,
                const BranchRule& rule = {});

/// Same multiplier, but relative to a given representative `product` of
/// g h (either sign). Needed when group elements are stored as sign
/// representatives and pi is evaluated on the stored matrix.
Complex cocycle(const GroupElement& g, const GroupElement& h, const GroupElement& product,
                double alpha, const BranchRule& rule = {});

/// The same multiplier at an arbitrary base point w; it does not depend on w.
Complex cocycle_at(const GroupElement& g, const GroupElement& h, Complex w, double alpha,
                   const BranchRule& rule = {});

/// Poincare distance for curvature -1.
double hyperbolic_distance(Complex w1, Complex w2);

}  // namespace coherentlab
