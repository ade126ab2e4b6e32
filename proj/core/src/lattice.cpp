#include "coherentlab/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "coherentlab/error.hpp"

namespace coherentlab {

namespace {

constexpr double kCell = 1e-7;

GroupElement power(const GroupElement& g, int n) {
  GroupElement out = GroupElement::identity();
  for (int i = 0; i < n; ++i) out = compose(out, g);
  return out;
}

double distance_to_identity(const GroupElement& g) {
  const GroupElement e = GroupElement::identity();
  return std::min(matrix_distance(g, e), matrix_distance(g, e.negated()));
}

std::array<int, 3> rotated_orders(const LatticePreset& p) {
  const std::array<int, 3> o{p.p, p.q, p.r};
  const int v = p.origin_vertex;
  return {o[v], o[(v + 1) % 3], o[(v + 2) % 3]};
}

// Real SL(2) matrix [[al, be], [ga, de]] conjugated by the Cayley map
// tau -> (tau - i)/(tau + i).
GroupElement cayley_image(double al, double be, double ga, double de) {
  return GroupElement{Complex{(al + de) / 2.0, (be - ga) / 2.0},
                      Complex{(al - de) / 2.0, -(be + ga) / 2.0}}
      .renormalized();
}

}  // namespace

LatticePreset LatticePreset::triangle(int p, int q, int r, int origin_vertex) {
  if (p < 2 || q < 2 || r < 2) throw ValidationError("triangle orders must be >= 2");
  if (q * r + p * r + p * q >= p * q * r) {
    throw ValidationError("triangle signature is not hyperbolic (1/p + 1/q + 1/r >= 1)");
  }
  if (origin_vertex < 0 || origin_vertex > 2) throw ValidationError("origin_vertex must be 0, 1 or 2");
  return LatticePreset{Kind::Triangle, p, q, r, origin_vertex};
}

LatticePreset LatticePreset::modular() { return LatticePreset{Kind::Modular, 2, 3, 0, 0}; }

int LatticePreset::origin_order() const {
  if (kind == Kind::Modular) return 2;
  return rotated_orders(*this)[0];
}

std::string LatticePreset::name() const {
  if (kind == Kind::Modular) return "modular";
  std::ostringstream os;
  os << "triangle(" << p << "," << q << "," << r << ")@" << origin_order();
  return os.str();
}

OrbifoldSignature signature(const LatticePreset& preset) {
  if (preset.kind == LatticePreset::Kind::Modular) return {0, {2, 3}, 1};
  return {0, {preset.p, preset.q, preset.r}, 0};
}

namespace {

// -chi of the orbifold as an exact fraction num / den.
std::pair<long long, long long> neg_euler_characteristic(const LatticePreset& preset) {
  const OrbifoldSignature s = signature(preset);
  long long num = 2LL * s.genus - 2 + s.cusps;
  long long den = 1;
  for (int m : s.cone_orders) {
    // num/den + (m - 1)/m
    num = num * m + (m - 1LL) * den;
    den *= m;
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return {num, den};
}

}  // namespace

double orbifold_area(const LatticePreset& preset) {
  const auto [num, den] = neg_euler_characteristic(preset);
  return 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
}

double covolume_times_dpi(const LatticePreset& preset, double alpha) {
  if (!(alpha > 1.0)) throw ValidationError("alpha must exceed 1");
  // (alpha - 1) area / (4 pi), with the pi cancelled by hand
  const auto [num, den] = neg_euler_characteristic(preset);
  return (alpha - 1.0) * static_cast<double>(num) / (2.0 * static_cast<double>(den));
}

std::vector<GroupElement> build_generators(const LatticePreset& preset) {
  if (preset.kind == LatticePreset::Kind::Modular) {
    return {cayley_image(0, -1, 1, 0), cayley_image(0, -1, 1, 1)};
  }
  const auto [m0, m1, m2] = rotated_orders(preset);
  const double A = kPi / m0;
  const double B = kPi / m1;
  const double C = kPi / m2;
  // Hyperbolic law of cosines for the side joining the first two vertices.
  const double cosh_c = (std::cos(C) + std::cos(A) * std::cos(B)) / (std::sin(A) * std::sin(B));
  const double c = std::acosh(cosh_c);
  const GroupElement to_b = GroupElement::translation(std::tanh(c / 2.0));
  const GroupElement g0 = GroupElement::rotation(2.0 * A);
  const GroupElement g1 =
      compose(compose(to_b, GroupElement::rotation(2.0 * B)), to_b.inverse());
  return {g0, g1};
}

double relation_residual(const LatticePreset& preset, const std::vector<GroupElement>& gens) {
  if (gens.size() < 2) throw ValidationError("expected two generators");
  if (preset.kind == LatticePreset::Kind::Modular) {
    return std::max(distance_to_identity(power(gens[0], 2)), distance_to_identity(power(gens[1], 3)));
  }
  const auto [m0, m1, m2] = rotated_orders(preset);
  return std::max({distance_to_identity(power(gens[0], m0)),
                   distance_to_identity(power(gens[1], m1)),
                   distance_to_identity(power(compose(gens[0], gens[1]), m2))});
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int l : word) {
    const char base = l > 0 ? 'a' : 'A';
    s.push_back(static_cast<char>(base + std::abs(l) - 1));
  }
  return s;
}

LatticeBall::LatticeBall(std::vector<GroupElement> generators, BallOptions options)
    : generators_(std::move(generators)), options_(options) {}

long long LatticeBall::cell(double x) { return static_cast<long long>(std::floor(x / kCell)); }

std::optional<std::size_t> LatticeBall::find(const GroupElement& g) const {
  const Complex w = act(g, Complex{0.0, 0.0});
  const long long cx = cell(w.real());
  const long long cy = cell(w.imag());
  for (long long dx = -1; dx <= 1; ++dx) {
    for (long long dy = -1; dy <= 1; ++dy) {
      const auto it = index_.find((cx + dx) * 40000007LL + (cy + dy));
      if (it == index_.end()) continue;
      for (std::size_t i : it->second) {
        if (same_element(elements_[i].g, g, options_.dedup_tol)) return i;
      }
    }
  }
  return std::nullopt;
}

std::size_t LatticeBall::require(const GroupElement& g) const {
  if (auto i = find(g)) return *i;
  throw BallUnderflow("ball underflow: product left the enumerated lattice ball");
}

std::size_t LatticeBall::inverse_index(std::size_t i) const { return require(elements_[i].g.inverse()); }

std::size_t LatticeBall::product_index(std::size_t i, std::size_t j) const {
  return require(compose(elements_[i].g, elements_[j].g));
}

double LatticeBall::radius() const {
  double r = 0.0;
  for (const auto& e : elements_) r = std::max(r, e.displacement);
  return r;
}

std::optional<std::size_t> LatticeBall::insert(BallElement e) {
  if (find(e.g)) return std::nullopt;
  if (elements_.size() >= options_.max_elements) {
    throw BudgetExceeded("lattice ball exceeded its element cap of " +
                         std::to_string(options_.max_elements));
  }
  const std::size_t i = elements_.size();
  index_[cell(e.orbit.real()) * 40000007LL + cell(e.orbit.imag())].push_back(i);
  elements_.push_back(std::move(e));
  return i;
}

LatticeBall enumerate_ball(const std::vector<GroupElement>& gens, const BallOptions& options) {
  if (options.max_word_len < 0 || options.max_word_len > 30) {
    throw ValidationError("max_word_len must lie in [0, 30]");
  }
  if (!(options.dedup_tol > 0.0)) throw ValidationError("dedup_tol must be positive");

  LatticeBall ball(gens, options);
  ball.insert({GroupElement::identity(), {}, Complex{0.0, 0.0}, 0.0});

  std::vector<std::pair<int, GroupElement>> letters;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int l = static_cast<int>(i) + 1;
    letters.emplace_back(l, gens[i]);
    letters.emplace_back(-l, gens[i].inverse());
  }

  auto extend = [&](std::size_t idx, const std::pair<int, GroupElement>& letter) {
    const BallElement& from = ball.elements_[idx];
    BallElement e;
    e.g = compose(from.g, letter.second).canonical();
    e.word = from.word;
    e.word.push_back(letter.first);
    e.orbit = act(e.g, Complex{0.0, 0.0});
    e.displacement = hyperbolic_distance(Complex{0.0, 0.0}, e.orbit);
    return e;
  };

  std::vector<std::size_t> frontier{0};
  for (int len = 1; len <= options.max_word_len; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (const auto& letter : letters) {
        BallElement e = extend(idx, letter);
        if (e.displacement > options.max_radius) continue;
        if (auto i = ball.insert(std::move(e))) next.push_back(*i);
      }
    }
    frontier = std::move(next);
  }

  double beyond = std::numeric_limits<double>::infinity();
  for (std::size_t idx : frontier) {
    for (const auto& letter : letters) {
      const BallElement e = extend(idx, letter);
      if (!ball.find(e.g)) beyond = std::min(beyond, e.displacement);
    }
  }
  ball.complete_radius_ = std::min(beyond, options.max_radius);
  return ball;
}

Stabilizer stabilizer_of(const LatticeBall& ball, const DiskPoint& z, double tol) {
  Stabilizer s;
  s.fixed_point = z;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (std::abs(act(ball[i].g, z.value()) - z.value()) < tol) {
      s.indices.push_back(i);
      s.elements.push_back(ball[i].g);
    }
  }
  for (const auto& g : s.elements) {
    for (const auto& h : s.elements) {
      const GroupElement gh = compose(g, h);
      const bool present = std::any_of(s.elements.begin(), s.elements.end(), [&](const GroupElement& x) {
        return same_element(x, gh, ball.options().dedup_tol);
      });
      if (!present) s.closed = false;
    }
  }
  if (!s.closed) {
    s.warnings.push_back("stabilizer is not closed under composition; enlarge the ball");
  }
  return s;
}

std::vector<std::size_t> coset_representatives(const LatticeBall& ball, const Stabilizer& stab,
                                               double tol) {
  const Complex z = stab.fixed_point.value();
  const double cell_size = std::max(tol, 1e-12) * 4.0;
  auto key = [&](Complex w) {
    return std::pair<long long, long long>{static_cast<long long>(std::floor(w.real() / cell_size)),
                                           static_cast<long long>(std::floor(w.imag() / cell_size))};
  };
  std::unordered_map<long long, std::vector<Complex>> seen;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Complex w = act(ball[i].g, z);
    const auto [kx, ky] = key(w);
    bool found = false;
    for (long long dx = -1; dx <= 1 && !found; ++dx) {
      for (long long dy = -1; dy <= 1 && !found; ++dy) {
        const auto it = seen.find((kx + dx) * 1000000007LL + (ky + dy));
        if (it == seen.end()) continue;
        found = std::any_of(it->second.begin(), it->second.end(),
                            [&](Complex v) { return std::abs(v - w) <= tol; });
      }
    }
    if (!found) {
      seen[kx * 1000000007LL + ky].push_back(w);
      reps.push_back(i);
    }
  }
  return reps;
}

std::vector<std::size_t> center_elements(const LatticeBall& ball, double tol) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const GroupElement& g = ball[i].g;
    const bool central = std::all_of(ball.generators().begin(), ball.generators().end(),
                                     [&](const GroupElement& s) {
                                       return same_element(compose(g, s), compose(s, g), tol);
                                     });
    if (central) out.push_back(i);
  }
  return out;
}

}  // namespace coherentlab
