#include "coherentlab/density.hpp"

#include <cmath>

#include "coherentlab/error.hpp"
#include "doctest.h"

using namespace coherentlab;

TEST_CASE("invariant closed forms") {
  const auto t = LatticePreset::triangle(2, 3, 7, 2);
  const auto m = LatticePreset::modular();
  for (double alpha : {1.5, 5.0, 7.0, 13.0, 30.0, 85.0}) {
    CHECK(std::abs(density_invariant(t, alpha, 7) - (alpha - 1) / 12) < 1e-12);
    CHECK(std::abs(density_invariant(t, alpha, 1) - (alpha - 1) / 84) < 1e-12);
    CHECK(std::abs(density_invariant(m, alpha, 2) - (alpha - 1) / 6) < 1e-12);
  }
  CHECK(std::abs(threshold_alpha(t, 7) - 13.0) < 1e-12);
  CHECK(std::abs(threshold_alpha(t, 1) - 85.0) < 1e-12);
  CHECK(std::abs(threshold_alpha(m, 2) - 7.0) < 1e-12);
  CHECK_THROWS_AS(density_invariant(t, 3.0, 0), ValidationError);
}

TEST_CASE("the invariant is linear in alpha") {
  const auto t = LatticePreset::triangle(2, 3, 7, 2);
  const double a = density_invariant(t, 4.0, 7), b = density_invariant(t, 10.0, 7);
  CHECK(std::abs(density_invariant(t, 7.0, 7) - (a + b) / 2) < 1e-14);
}

TEST_CASE("regimes and predictions") {
  const auto t = LatticePreset::triangle(2, 3, 7, 2);
  const auto below = classify(t, 7.0, 0.0, 7);
  CHECK(below.regime == Regime::BelowThreshold);
  CHECK(below.invariant == doctest::Approx(0.5));
  CHECK(below.predictions.frame_possible);
  CHECK(below.predictions.cyclic_possible);
  CHECK_FALSE(below.predictions.riesz_possible);
  CHECK_FALSE(below.predictions.pz_separating_possible);

  const auto at = classify(t, 13.0, 0.0, 7);
  CHECK(at.regime == Regime::AtThreshold);
  CHECK(at.predictions.frame_possible);
  CHECK(at.predictions.riesz_possible);

  const auto above = classify(t, 30.0, 0.0, 7);
  CHECK(above.regime == Regime::AboveThreshold);
  CHECK(above.invariant == doctest::Approx(29.0 / 12.0));
  CHECK_FALSE(above.predictions.frame_possible);
  CHECK_FALSE(above.predictions.cyclic_possible);
  CHECK(above.predictions.riesz_possible);
  CHECK(above.preset == "triangle(2,3,7)@7");
  CHECK(std::string(to_string(above.regime)) != std::string(to_string(below.regime)));
}

TEST_CASE("regime report finds the stabilizer") {
  const auto t = LatticePreset::triangle(2, 3, 7, 2);
  BallOptions o;
  o.max_word_len = 6;
  const auto ball = enumerate_ball(build_generators(t), o);
  const auto cone = regime_report(t, 13.0, DiskPoint{0.0}, ball);
  CHECK(cone.stab_order == 7);
  CHECK(cone.regime == Regime::AtThreshold);
  const auto generic = regime_report(t, 13.0, DiskPoint{Complex{0.2, 0.1}}, ball);
  CHECK(generic.stab_order == 1);
  CHECK(generic.regime == Regime::BelowThreshold);
  CHECK(generic.alpha_threshold == doctest::Approx(85.0));
}
