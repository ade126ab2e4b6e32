#include "coherentlab/lattice.hpp"

#include <cmath>
#include <set>

#include "coherentlab/error.hpp"
#include "doctest.h"

using namespace coherentlab;

namespace {

LatticeBall ball_of(const LatticePreset& preset, int len, double radius = 1e9) {
  BallOptions o;
  o.max_word_len = len;
  o.max_radius = radius;
  return enumerate_ball(build_generators(preset), o);
}

// Order of g mod +-I by repeated multiplication; 0 if above cap.
int element_order(const GroupElement& g, int cap = 50) {
  GroupElement acc = g;
  for (int k = 1; k <= cap; ++k) {
    if (same_element(acc, GroupElement::identity(), 1e-9)) return k;
    acc = compose(acc, g);
  }
  return 0;
}

}  // namespace

TEST_CASE("preset validation") {
  CHECK_THROWS_AS(LatticePreset::triangle(2, 3, 6), ValidationError);  // Euclidean
  CHECK_THROWS_AS(LatticePreset::triangle(1, 3, 7), ValidationError);
  CHECK_THROWS_AS(LatticePreset::triangle(2, 3, 7, 3), ValidationError);
  CHECK_NOTHROW(LatticePreset::triangle(3, 3, 4));
  CHECK(LatticePreset::triangle(2, 3, 7, 2).origin_order() == 7);
  CHECK(LatticePreset::triangle(2, 3, 7, 1).origin_order() == 3);
  CHECK(LatticePreset::modular().origin_order() == 2);
}

TEST_CASE("generator orders and relations") {
  for (int v = 0; v < 3; ++v) {
    const auto preset = LatticePreset::triangle(2, 3, 7, v);
    const auto gens = build_generators(preset);
    REQUIRE(gens.size() == 2);
    CHECK(relation_residual(preset, gens) < 1e-9);
    const int orders[3] = {2, 3, 7};
    CHECK(element_order(gens[0]) == orders[v]);
    CHECK(element_order(gens[1]) == orders[(v + 1) % 3]);
    CHECK(element_order(compose(gens[0], gens[1])) == orders[(v + 2) % 3]);
    CHECK(std::abs(act(gens[0], Complex{0.0})) < 1e-14);
  }
  const auto gens7 = build_generators(LatticePreset::triangle(2, 3, 7, 2));
  CHECK(same_element(gens7[0], GroupElement::rotation(2 * kPi / 7), 1e-12));
}

TEST_CASE("modular generators are the Cayley images of S and ST") {
  const auto preset = LatticePreset::modular();
  const auto gens = build_generators(preset);
  CHECK(relation_residual(preset, gens) < 1e-12);
  CHECK(element_order(gens[0]) == 2);
  CHECK(element_order(gens[1]) == 3);

  // Independent oracle: C M C^{-1} with C = [[1, -i], [1, i]] / sqrt(2i)-free form,
  // acting on tau in the upper half-plane; compare actions at a few points.
  auto cayley = [](Complex tau) { return (tau - Complex{0, 1}) / (tau + Complex{0, 1}); };
  auto inv_cayley = [](Complex w) { return Complex{0, 1} * (1.0 + w) / (1.0 - w); };
  auto mobius = [](double a, double b, double c, double d, Complex tau) {
    return (a * tau + b) / (c * tau + d);
  };
  for (Complex w : {Complex{0.1, 0.2}, Complex{-0.5, 0.3}, Complex{0.0, -0.7}}) {
    const Complex tau = inv_cayley(w);
    CHECK(std::abs(act(gens[0], w) - cayley(mobius(0, -1, 1, 0, tau))) < 1e-12);
    CHECK(std::abs(act(gens[1], w) - cayley(mobius(0, -1, 1, 1, tau))) < 1e-12);
  }
}

TEST_CASE("small balls by hand") {
  const auto preset = LatticePreset::triangle(2, 3, 7, 0);
  CHECK(ball_of(preset, 0).size() == 1);
  // g_p is self-inverse mod +-I.
  CHECK(ball_of(preset, 1).size() == 4);
  // Same here: the second generator of the order-7 placement has order 2.
  CHECK(ball_of(LatticePreset::triangle(2, 3, 7, 2), 1).size() == 4);
  CHECK(ball_of(LatticePreset::triangle(2, 3, 7, 1), 1).size() == 5);
}

TEST_CASE("ball invariants") {
  const auto preset = LatticePreset::triangle(2, 3, 7, 2);
  const auto ball = ball_of(preset, 8);
  CHECK(ball.identity_index() == 0);
  CHECK(same_element(ball[0].g, GroupElement::identity()));
  CHECK(ball[0].word.empty());

  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto& e = ball[i];
    CHECK(e.g.canonical().a == e.g.a);
    CHECK(std::abs(e.g.det() - 1.0) < 1e-10);
    CHECK(e.word.size() <= 8);
    // Word multiplies out to the element.
    GroupElement w = GroupElement::identity();
    for (int letter : e.word) {
      const GroupElement& gen = ball.generators()[std::abs(letter) - 1];
      w = compose(w, letter > 0 ? gen : gen.inverse());
    }
    CHECK(same_element(w, e.g, 1e-9));
    CHECK(std::abs(e.orbit - act(e.g, Complex{0.0})) < 1e-12);
    CHECK(e.displacement == doctest::Approx(hyperbolic_distance(0.0, e.orbit)).epsilon(1e-12));
    // find() returns itself.
    REQUIRE(ball.find(e.g).has_value());
    CHECK(*ball.find(e.g) == i);
    CHECK(*ball.find(e.g.negated()) == i);
  }
  // Pairwise distinct mod +-I (brute force).
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = i + 1; j < ball.size(); ++j) CHECK_FALSE(same_element(ball[i].g, ball[j].g, 1e-8));
}

TEST_CASE("ball sizes are monotone in word length and radius") {
  const auto preset = LatticePreset::triangle(2, 3, 7, 2);
  std::size_t prev = 0;
  for (int len = 0; len <= 10; ++len) {
    const auto n = ball_of(preset, len).size();
    CHECK(n >= prev);
    prev = n;
  }
  prev = 0;
  for (double r : {0.5, 1.0, 2.0, 3.0, 5.0}) {
    const auto n = ball_of(preset, 10, r).size();
    CHECK(n >= prev);
    prev = n;
  }
  const auto cut = ball_of(preset, 10, 2.0);
  for (const auto& e : cut.elements()) CHECK(e.displacement <= 2.0);
}

TEST_CASE("enumeration is deterministic") {
  const auto preset = LatticePreset::modular();
  const auto a = ball_of(preset, 7);
  const auto b = ball_of(preset, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].word == b[i].word);
    CHECK(a[i].g.a == b[i].g.a);
    CHECK(a[i].g.b == b[i].g.b);
  }
}

TEST_CASE("inverse and product lookup") {
  const auto ball = ball_of(LatticePreset::triangle(2, 3, 7, 2), 8);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (ball[i].word.size() > 7) continue;
    const auto inv = ball.inverse_index(i);
    CHECK(same_element(compose(ball[i].g, ball[inv].g), GroupElement::identity(), 1e-9));
  }
  CHECK(ball.product_index(1, 0) == 1);
  const auto p = ball.product_index(1, 2);
  CHECK(same_element(ball[p].g, compose(ball[1].g, ball[2].g), 1e-9));

  // Something far away is absent.
  const GroupElement far = GroupElement::translation(0.999999);
  CHECK_FALSE(ball.find(far).has_value());
  CHECK_THROWS_AS(ball.require(far), BallUnderflow);
}

TEST_CASE("element budget") {
  BallOptions o;
  o.max_word_len = 14;
  o.max_elements = 50;
  CHECK_THROWS_AS(enumerate_ball(build_generators(LatticePreset::modular()), o), BudgetExceeded);
}

TEST_CASE("complete radius is below the ball radius") {
  const auto ball = ball_of(LatticePreset::triangle(2, 3, 7, 2), 10);
  CHECK(ball.complete_radius() > 0.0);
  CHECK(ball.complete_radius() <= ball.radius() + 1e-12);
}

TEST_CASE("stabilizers") {
  const auto preset7 = LatticePreset::triangle(2, 3, 7, 2);
  const auto ball = ball_of(preset7, 6);
  const auto st = stabilizer_of(ball, DiskPoint{0.0});
  CHECK(st.order() == 7);
  CHECK(st.closed);
  CHECK(st.indices[0] == 0);

  CHECK(stabilizer_of(ball, DiskPoint{Complex{0.3, 0.1}}).order() == 1);

  const auto mball = ball_of(LatticePreset::modular(), 6);
  CHECK(stabilizer_of(mball, DiskPoint{0.0}).order() == 2);

  const auto ball2 = ball_of(LatticePreset::triangle(2, 3, 7, 0), 6);
  CHECK(stabilizer_of(ball2, DiskPoint{0.0}).order() == 2);

  // The order-3 cone point of the (2,3,7)@7 triangle is the fixed point of g0 g1.
  const GroupElement g1 = compose(ball.generators()[0], ball.generators()[1]);
  // Fixed point of w -> (aw + b)/(conj(b) w + conj(a)) inside the disk.
  const Complex a = g1.a, b = g1.b;
  const Complex disc = std::sqrt((a - std::conj(a)) * (a - std::conj(a)) + 4.0 * std::norm(b));
  Complex fp = ((a - std::conj(a)) + disc) / (2.0 * std::conj(b));
  if (std::abs(fp) >= 1.0) fp = ((a - std::conj(a)) - disc) / (2.0 * std::conj(b));
  CHECK(std::abs(act(g1, fp) - fp) < 1e-12);
  CHECK(stabilizer_of(ball, DiskPoint{fp}).order() == 3);
}

TEST_CASE("coset representatives") {
  const auto ball = ball_of(LatticePreset::triangle(2, 3, 7, 2), 8);
  const auto st = stabilizer_of(ball, DiskPoint{0.0});
  const auto reps = coset_representatives(ball, st);
  CHECK(reps.front() == 0);
  // Orbit points pairwise distinct, and every ball orbit point is one of them.
  std::set<std::pair<long long, long long>> seen;
  for (auto i : reps) {
    const Complex w = ball[i].orbit;
    CHECK(seen.insert({std::llround(w.real() * 1e7), std::llround(w.imag() * 1e7)}).second);
  }
  for (const auto& e : ball.elements()) {
    bool hit = false;
    for (auto i : reps) hit = hit || std::abs(ball[i].orbit - e.orbit) < 1e-8;
    CHECK(hit);
  }
  // Words are shortest in their coset.
  for (const auto& e : ball.elements()) {
    for (auto i : reps)
      if (std::abs(ball[i].orbit - e.orbit) < 1e-8) CHECK(ball[i].word.size() <= e.word.size());
  }
}

TEST_CASE("centers are trivial") {
  CHECK(center_elements(ball_of(LatticePreset::triangle(2, 3, 7, 2), 6)).size() == 1);
  CHECK(center_elements(ball_of(LatticePreset::modular(), 6)).size() == 1);
}

TEST_CASE("signature, area and covolume") {
  const auto t = LatticePreset::triangle(2, 3, 7, 2);
  const auto sig = signature(t);
  CHECK(sig.genus == 0);
  CHECK(sig.cusps == 0);
  CHECK(sig.cone_orders.size() == 3);
  CHECK(orbifold_area(t) == doctest::Approx(kPi / 21).epsilon(1e-14));
  CHECK(orbifold_area(LatticePreset::modular()) == doctest::Approx(kPi / 3).epsilon(1e-14));
  for (double alpha : {2.0, 7.0, 13.0, 85.0}) {
    CHECK(std::abs(covolume_times_dpi(t, alpha) - (alpha - 1) / 84) < 1e-14);
    CHECK(std::abs(covolume_times_dpi(LatticePreset::modular(), alpha) - (alpha - 1) / 12) < 1e-14);
  }
  CHECK_THROWS_AS(covolume_times_dpi(t, 1.0), ValidationError);
}

TEST_CASE("word strings") {
  CHECK(word_to_string({}) == "e");
  CHECK(word_to_string({1, -2, 2}) == "aBb");
}
