#pragma once

// Fuchsian lattice presets, finite word/metric balls of lattice elements,
// stabilizers of disk points, coset representatives, and co-volumes.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coherentlab/moebius.hpp"

namespace coherentlab {

struct LatticePreset {
  enum class Kind { Triangle, Modular };

  Kind kind = Kind::Triangle;
  int p = 2;
  int q = 3;
  int r = 7;
  /// Which vertex of the (p, q, r) triangle sits at the origin: 0 -> p, 1 -> q, 2 -> r.
  int origin_vertex = 0;

  /// Throws ValidationError for orders < 2 or 1/p + 1/q + 1/r >= 1.
  static LatticePreset triangle(int p, int q, int r, int origin_vertex = 0);
  static LatticePreset modular();

  /// Order of the cone point placed at the origin (2 for the modular preset).
  int origin_order() const;
  std::string name() const;
};

/// Genus, cone orders and number of cusps of the quotient orbifold.
struct OrbifoldSignature {
  int genus = 0;
  std::vector<int> cone_orders;
  int cusps = 0;
};

OrbifoldSignature signature(const LatticePreset& preset);

/// Curvature -1 area of the quotient, 2 pi (2g - 2 + sum(1 - 1/m) + cusps).
double orbifold_area(const LatticePreset& preset);

/// vol(G/Gamma) * d_pi with d_pi = alpha - 1 and vol = area / (4 pi).
double covolume_times_dpi(const LatticePreset& preset, double alpha);

/// Generators of the preset lattice. Triangle: [rotation of order m0 about 0,
/// rotation of order m1 about the next vertex], whose product has order m2,
/// where (m0, m1, m2) is (p, q, r) rotated so that m0 sits at the origin.
/// Modular: Cayley images of S and ST (orders 2 and 3), with i mapped to 0.
std::vector<GroupElement> build_generators(const LatticePreset& preset);

/// Largest residual of the defining relations, measured mod +-I.
double relation_residual(const LatticePreset& preset, const std::vector<GroupElement>& gens);

struct BallOptions {
  int max_word_len = 8;
  double max_radius = 1e9;
  double dedup_tol = 1e-8;
  std::size_t max_elements = 200000;
};

struct BallElement {
  GroupElement g;  // canonical sign representative
  /// Generator letters: +(i+1) for generator i, -(i+1) for its inverse.
  std::vector<int> word;
  Complex orbit;        // g . 0
  double displacement;  // hyperbolic distance from 0 to g . 0
};

/// Letters a, b, ... for generators and A, B, ... for inverses; "e" when empty.
std::string word_to_string(const std::vector<int>& word);

class LatticeBall {
 public:
  LatticeBall(std::vector<GroupElement> generators, BallOptions options);

  const std::vector<BallElement>& elements() const { return elements_; }
  const BallElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const BallOptions& options() const { return options_; }

  /// Index of g modulo +-I, if present.
  std::optional<std::size_t> find(const GroupElement& g) const;
  /// Like find(), but throws BallUnderflow when g is absent.
  std::size_t require(const GroupElement& g) const;
  /// Index of the stored representative of elements()[i]^{-1}.
  std::size_t inverse_index(std::size_t i) const;
  /// Index of the stored representative of elements()[i] * elements()[j].
  std::size_t product_index(std::size_t i, std::size_t j) const;

  static constexpr std::size_t identity_index() { return 0; }

  /// Smallest displacement among elements first reached one letter past the
  /// word-length cutoff. Elements closer to the origin than this are all in
  /// the ball unless they need a longer detour; a heuristic audit value.
  double complete_radius() const { return complete_radius_; }
  /// Largest displacement present.
  double radius() const;

 private:
  friend LatticeBall enumerate_ball(const std::vector<GroupElement>&, const BallOptions&);

  std::optional<std::size_t> insert(BallElement e);
  static long long cell(double x);

  std::vector<GroupElement> generators_;
  BallOptions options_;
  std::vector<BallElement> elements_;
  std::unordered_map<long long, std::vector<std::size_t>> index_;
  double complete_radius_ = 0.0;
};

/// Breadth-first closure over generators and inverses up to max_word_len,
/// keeping elements within max_radius, deduplicated mod +-I. The identity is
/// element 0. Throws BudgetExceeded past max_elements.
LatticeBall enumerate_ball(const std::vector<GroupElement>& gens, const BallOptions& options);

struct Stabilizer {
  std::vector<std::size_t> indices;  // into the ball
  std::vector<GroupElement> elements;
  DiskPoint fixed_point;
  /// False when the found set is not closed under products (ball too small).
  bool closed = true;
  std::vector<std::string> warnings;

  std::size_t order() const { return elements.size(); }
};

Stabilizer stabilizer_of(const LatticeBall& ball, const DiskPoint& z, double tol = 1e-9);

/// One ball index per left coset g Gamma_z meeting the ball (the first in
/// ball order, hence a shortest word).
std::vector<std::size_t> coset_representatives(const LatticeBall& ball, const Stabilizer& stab,
                                               double tol = 1e-8);

/// Ball elements commuting with every generator mod +-I.
std::vector<std::size_t> center_elements(const LatticeBall& ball, double tol = 1e-9);

}  // namespace coherentlab
