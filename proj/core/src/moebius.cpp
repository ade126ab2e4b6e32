#include "coherentlab/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "coherentlab/error.hpp"

namespace coherentlab {

DiskPoint::DiskPoint(Complex w) : w_(w) {
  if (!(std::abs(w) < 1.0)) {
    throw ValidationError("disk point must satisfy |w| < 1");
  }
}

GroupElement GroupElement::rotation(double theta) {
  return {std::polar(1.0, theta / 2.0), Complex{0.0, 0.0}};
}

GroupElement GroupElement::translation(double t) {
  if (!(std::abs(t) < 1.0)) throw ValidationError("translation parameter must satisfy |t| < 1");
  const double s = 1.0 / std::sqrt(1.0 - t * t);
  return {Complex{s, 0.0}, Complex{s * t, 0.0}};
}

GroupElement GroupElement::translation_to(Complex w) {
  if (!(std::abs(w) < 1.0)) throw ValidationError("translation target must satisfy |w| < 1");
  const double s = 1.0 / std::sqrt(1.0 - std::norm(w));
  return {Complex{s, 0.0}, s * w};
}

GroupElement GroupElement::canonical() const {
  constexpr double kTie = 1e-12;
  const bool flip = a.real() < -kTie || (std::abs(a.real()) <= kTie && a.imag() < 0.0);
  return flip ? negated() : *this;
}

GroupElement GroupElement::renormalized() const {
  const double d = det();
  if (!(d > 0.0)) throw NumericalError("group element lost the SU(1,1) determinant");
  const double s = 1.0 / std::sqrt(d);
  return {a * s, b * s};
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  // [[a, b], [b*, a*]] [[c, d], [d*, c*]]
  const GroupElement p{g.a * h.a + g.b * std::conj(h.b), g.a * h.b + g.b * std::conj(h.a)};
  return p.renormalized();
}

double matrix_distance(const GroupElement& g, const GroupElement& h) {
  const double scale = std::max({1.0, std::abs(g.a), std::abs(h.a)});
  return std::max(std::abs(g.a - h.a), std::abs(g.b - h.b)) / scale;
}

bool same_element(const GroupElement& g, const GroupElement& h, double tol) {
  return matrix_distance(g, h) < tol || matrix_distance(g, h.negated()) < tol;
}

Complex act(const GroupElement& g, Complex w) {
  return (g.a * w + g.b) / (std::conj(g.b) * w + std::conj(g.a));
}

DiskPoint act(const GroupElement& g, const DiskPoint& w) { return DiskPoint{act(g, w.value())}; }

Complex jacobian(const GroupElement& g, Complex w) {
  const Complex f = std::conj(g.b) * w + std::conj(g.a);
  return 1.0 / (f * f);
}

int BranchRule::twist(const GroupElement& g) const {
  if (twist_seed == 0) return 0;
  // Hash the matrix at a resolution coarse enough to be stable under rounding.
  auto q = [](double x) { return static_cast<std::int64_t>(std::llround(x * 1e6)); };
  std::uint64_t h = twist_seed * 0x9E3779B97F4A7C15ULL;
  for (std::int64_t v : {q(g.a.real()), q(g.a.imag()), q(g.b.real()), q(g.b.imag())}) {
    h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 31;
  }
  return static_cast<int>(h % 3) - 1;
}

BranchLog branch_log(const GroupElement& g, Complex w, const BranchRule& rule) {
  const Complex ca = std::conj(g.a);
  Complex value = std::log(ca) + std::log(1.0 + (std::conj(g.b) / ca) * w);
  if (const int s = rule.twist(g); s != 0) value += Complex{0.0, kPi * s};
  return {value};
}

Complex jacobian_power(const GroupElement& g, Complex w, double alpha, const BranchRule& rule) {
  return std::exp(-alpha * branch_log(g, w, rule).value);
}

Complex cocycle_at(const GroupElement& g, const GroupElement& h, Complex w, double alpha,
                   const BranchRule& rule) {
  const GroupElement product = compose(g, h);
  const GroupElement gi = g.inverse();
  const Complex e = branch_log(gi, w, rule).value +
                    branch_log(h.inverse(), act(gi, w), rule).value -
                    branch_log(product.inverse(), w, rule).value;
  return std::exp(-alpha * e);
}

Complex cocycle(const GroupElement& g, const GroupElement& h, const GroupElement& product,
                double alpha, const BranchRule& rule) {
  const GroupElement gi = g.inverse();
  const Complex e = branch_log(gi, 0.0, rule).value +
                    branch_log(h.inverse(), gi.b / std::conj(gi.a), rule).value -
                    branch_log(product.inverse(), 0.0, rule).value;
  // e lies in i*pi*Z; snapping removes rounding from the real part.
  return std::exp(Complex{0.0, -alpha * e.imag()});
}

Complex cocycle(const GroupElement& g, const GroupElement& h, double alpha,
                const BranchRule& rule) {
  return cocycle(g, h, compose(g, h), alpha, rule);
}

double hyperbolic_distance(Complex w1, Complex w2) {
  const double rho = std::abs((w1 - w2) / (1.0 - w1 * std::conj(w2)));
  return 2.0 * std::atanh(std::min(rho, 1.0));
}

}  // namespace coherentlab
