#include "coherentlab/twisted_ring.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "coherentlab/error.hpp"

namespace coherentlab {

namespace {

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

std::unordered_map<std::size_t, Complex> phase_map(const std::vector<std::size_t>& subgroup,
                                                   const std::vector<Complex>& u) {
  if (subgroup.size() != u.size()) throw ValidationError("subgroup and phases differ in length");
  if (subgroup.empty()) throw ValidationError("empty subgroup");
  std::unordered_map<std::size_t, Complex> m;
  for (std::size_t i = 0; i < subgroup.size(); ++i) m.emplace(subgroup[i], u[i]);
  return m;
}

}  // namespace

CocycleTable::CocycleTable(std::shared_ptr<const LatticeBall> ball, double alpha, BranchRule rule)
    : ball_(std::move(ball)), alpha_(alpha), rule_(rule) {
  if (!ball_) throw ValidationError("cocycle table needs a lattice ball");
  if (!(alpha > 1.0)) throw ValidationError("alpha must exceed 1");
}

const CocycleTable::Entry& CocycleTable::lookup(std::size_t i, std::size_t j) const {
  const std::uint64_t key = pair_key(i, j);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const std::size_t p = ball_->product_index(i, j);
  const Entry e{p, cocycle((*ball_)[i].g, (*ball_)[j].g, (*ball_)[p].g, alpha_, rule_)};
  std::unique_lock lock(mutex_);
  return memo_.emplace(key, e).first->second;
}

Complex CocycleTable::operator()(std::size_t i, std::size_t j) const { return lookup(i, j).value; }

std::size_t CocycleTable::product(std::size_t i, std::size_t j) const { return lookup(i, j).product; }

std::size_t CocycleTable::inverse(std::size_t i) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = inverses_.find(i); it != inverses_.end()) return it->second;
  }
  const std::size_t inv = ball_->inverse_index(i);
  std::unique_lock lock(mutex_);
  inverses_.emplace(i, inv);
  return inv;
}

double CocycleTable::identity_residual(std::size_t i, std::size_t j, std::size_t k) const {
  const Complex lhs = (*this)(i, j) * (*this)(product(i, j), k);
  const Complex rhs = (*this)(i, product(j, k)) * (*this)(j, k);
  return std::abs(lhs - rhs);
}

double CocycleTable::max_cached_residual() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [key, entry] : memo_) {
      pairs.emplace_back(static_cast<std::size_t>(key >> 32),
                         static_cast<std::size_t>(key & 0xFFFFFFFFULL));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  double worst = 0.0;
  for (const auto& [i, j] : pairs) {
    for (const auto& [j2, k] : pairs) {
      if (j2 != j) continue;
      try {
        worst = std::max(worst, identity_residual(i, j, k));
      } catch (const BallUnderflow&) {
      }
    }
  }
  return worst;
}

std::size_t CocycleTable::cached_pairs() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

TwistedRingElement::TwistedRingElement(std::map<std::size_t, Complex> coeffs)
    : coeffs_(std::move(coeffs)) {}

TwistedRingElement TwistedRingElement::delta(std::size_t index, Complex value) {
  return TwistedRingElement({{index, value}});
}

Complex TwistedRingElement::at(std::size_t index) const {
  const auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void TwistedRingElement::add(std::size_t index, Complex value) { coeffs_[index] += value; }

TwistedRingElement TwistedRingElement::operator+(const TwistedRingElement& other) const {
  TwistedRingElement out = *this;
  for (const auto& [i, v] : other.coeffs_) out.add(i, v);
  return out;
}

TwistedRingElement TwistedRingElement::operator-(const TwistedRingElement& other) const {
  return *this + other * Complex{-1.0, 0.0};
}

TwistedRingElement TwistedRingElement::operator*(Complex s) const {
  TwistedRingElement out = *this;
  for (auto& [i, v] : out.coeffs_) v *= s;
  return out;
}

double TwistedRingElement::max_abs() const {
  double m = 0.0;
  for (const auto& [i, v] : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

Eigen::VectorXcd TwistedRingElement::to_sequence(std::size_t ball_size) const {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ball_size));
  for (const auto& [i, v] : coeffs_) {
    if (i >= ball_size) throw ValidationError("ring element support exceeds the ball");
    c(static_cast<Eigen::Index>(i)) = v;
  }
  return c;
}

TwistedRingElement TwistedRingElement::from_sequence(const Eigen::VectorXcd& c, double drop_below) {
  TwistedRingElement out;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (std::abs(c(i)) > drop_below) out.coeffs_.emplace(static_cast<std::size_t>(i), c(i));
  }
  return out;
}

Eigen::VectorXcd left_regular_apply(std::size_t gamma, const Eigen::VectorXcd& c,
                                    const CocycleTable& sigma) {
  if (static_cast<std::size_t>(c.size()) != sigma.ball().size()) {
    throw ValidationError("sequence length must equal the ball size");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(c.size());
  for (Eigen::Index s = 0; s < c.size(); ++s) {
    if (c(s) == Complex{0.0, 0.0}) continue;
    const auto src = static_cast<std::size_t>(s);
    out(static_cast<Eigen::Index>(sigma.product(gamma, src))) += sigma(gamma, src) * c(s);
  }
  return out;
}

TwistedRingElement twisted_convolve(const TwistedRingElement& x, const TwistedRingElement& y,
                                    const CocycleTable& sigma) {
  TwistedRingElement out;
  for (const auto& [i, xv] : x.coeffs()) {
    for (const auto& [j, yv] : y.coeffs()) {
      out.add(sigma.product(i, j), xv * yv * sigma(i, j));
    }
  }
  return out;
}

TwistedRingElement star(const TwistedRingElement& x, const CocycleTable& sigma) {
  TwistedRingElement out;
  for (const auto& [i, v] : x.coeffs()) {
    // The coefficient at g = i^{-1} is conj(x(i)) conj(sigma(i, i^{-1})).
    const std::size_t g = sigma.inverse(i);
    out.add(g, std::conj(v) * std::conj(sigma(i, g)));
  }
  return out;
}

Complex trace(const TwistedRingElement& x) { return x.at(LatticeBall::identity_index()); }

TwistedRingElement center_valued_trace(const TwistedRingElement& x,
                                       const std::vector<std::size_t>& central) {
  TwistedRingElement out;
  for (std::size_t c : central) {
    const Complex v = x.at(c);
    if (v != Complex{0.0, 0.0}) out.add(c, v);
  }
  return out;
}

double coboundary_residual(const std::vector<std::size_t>& subgroup, const std::vector<Complex>& u,
                           const CocycleTable& sigma) {
  const auto phase = phase_map(subgroup, u);
  double worst = 0.0;
  for (std::size_t g : subgroup) {
    for (std::size_t h : subgroup) {
      const auto it = phase.find(sigma.product(g, h));
      if (it == phase.end()) throw ValidationError("subgroup is not closed under products");
      worst = std::max(worst, std::abs(sigma(g, h) - phase.at(g) * phase.at(h) * std::conj(it->second)));
    }
  }
  return worst;
}

TwistedRingElement projection_p0(const std::vector<std::size_t>& subgroup,
                                 const std::vector<Complex>& u, const CocycleTable& sigma) {
  const double residual = coboundary_residual(subgroup, u, sigma);
  if (residual > 1e-9) {
    throw ValidationError("phases do not split the cocycle on the subgroup (residual " +
                          std::to_string(residual) + ")");
  }
  TwistedRingElement p;
  const double w = 1.0 / static_cast<double>(subgroup.size());
  for (std::size_t i = 0; i < subgroup.size(); ++i) p.add(subgroup[i], std::conj(u[i]) * w);
  return p;
}

Eigen::VectorXcd fold_by_projection(const Eigen::VectorXcd& c,
                                    const std::vector<std::size_t>& subgroup,
                                    const std::vector<Complex>& u, const CocycleTable& sigma) {
  if (static_cast<std::size_t>(c.size()) != sigma.ball().size()) {
    throw ValidationError("sequence length must equal the ball size");
  }
  const auto phase = phase_map(subgroup, u);
  const double w = 1.0 / static_cast<double>(subgroup.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(c.size());
  for (Eigen::Index s = 0; s < c.size(); ++s) {
    if (c(s) == Complex{0.0, 0.0}) continue;
    const auto src = static_cast<std::size_t>(s);
    for (std::size_t l : subgroup) {
      const std::size_t l_inv = sigma.inverse(l);
      const auto it = phase.find(l_inv);
      if (it == phase.end()) throw ValidationError("subgroup is not closed under inverses");
      // g = s l^{-1}, so that g l = s.
      const std::size_t g = sigma.product(src, l_inv);
      out(static_cast<Eigen::Index>(g)) += w * c(s) * std::conj(it->second) * sigma(src, l_inv);
    }
  }
  return out;
}

TwistedRingElement cdim_kernel(double alpha, const LatticePreset& preset,
                               const std::vector<std::size_t>& central,
                               const std::vector<Complex>& u_central) {
  if (central.size() != u_central.size()) throw ValidationError("central list and phases differ in length");
  const double scalar = covolume_times_dpi(preset, alpha);
  TwistedRingElement phi;
  for (std::size_t i = 0; i < central.size(); ++i) phi.add(central[i], scalar * std::conj(u_central[i]));
  return phi;
}

}  // namespace coherentlab
