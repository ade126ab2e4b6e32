#include "coherentlab/frames.hpp"

#include <cmath>
#include <memory>

#include "coherentlab/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace coherentlab;
using coherentlab::testing::Rng;

namespace {

std::shared_ptr<const LatticeBall> ball237(int len) {
  BallOptions o;
  o.max_word_len = len;
  return std::make_shared<const LatticeBall>(
      enumerate_ball(build_generators(LatticePreset::triangle(2, 3, 7, 2)), o));
}

// Brute-force Gram entry from truncated kernel coefficient vectors.
Complex gram_oracle(double alpha, const GroupElement& gi, const GroupElement& gj, Complex z) {
  const int N = 3000;
  const Eigen::VectorXcd vi = kernel_coeffs(alpha, act(gi, z), N).vector.coeffs * transform_kernel(alpha, gi, DiskPoint{z}).scalar;
  const Eigen::VectorXcd vj = kernel_coeffs(alpha, act(gj, z), N).vector.coeffs * transform_kernel(alpha, gj, DiskPoint{z}).scalar;
  return vi.dot(vj) * std::pow(1.0 - std::norm(z), alpha);  // <v_j, v_i>
}

}  // namespace

TEST_CASE("Gram of a single element") {
  auto ball = ball237(0);
  const auto sys = make_coherent_system(5.0, DiskPoint{0.2}, ball);
  const auto g = gram_matrix(sys, true);
  REQUIRE(g.entries.rows() == 1);
  CHECK(std::abs(g.entries(0, 0) - 1.0) < 1e-14);
  const auto b = riesz_bounds_finite_section(g);
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(1.0));
}

TEST_CASE("Gram entries against truncated coefficient vectors") {
  auto ball = ball237(3);
  const Complex z{0.05, 0.02};
  const double alpha = 6.0;
  const auto sys = make_coherent_system(alpha, DiskPoint{z}, ball);
  const auto g = gram_matrix(sys, false);
  CHECK((g.entries - g.entries.adjoint()).norm() < 1e-12);
  for (std::size_t i = 0; i < ball->size(); i += 3)
    for (std::size_t j = 0; j < ball->size(); j += 4) {
      const Complex oracle = gram_oracle(alpha, (*ball)[i].g, (*ball)[j].g, z);
      CHECK(std::abs(g.entries(i, j) - oracle) < 1e-9);
    }
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) CHECK(std::abs(g.entries(i, i) - 1.0) < 1e-12);
  const auto ev = hermitian_eigenvalues(g.entries);
  CHECK(ev(0) >= -1e-10 * ev(ev.size() - 1));
}

TEST_CASE("two-element Gram: overlap and eigenvalues") {
  // Ball {e, g} at z = 0: orbit points 0 and t = g.0.
  auto ball = ball237(8);
  const auto sys = make_coherent_system(4.0, DiskPoint{0.0}, ball);
  const std::size_t far = sys.representatives[5];
  const auto g = gram_matrix(sys, std::vector<std::size_t>{0, far});
  const double t2 = std::norm((*ball)[far].orbit);
  const Complex rho = g.entries(0, 1);
  CHECK(std::norm(rho) == doctest::Approx(std::pow(1.0 - t2, 4.0)).epsilon(1e-12));
  const auto b = riesz_bounds_finite_section(g);
  CHECK(b.lower == doctest::Approx(1.0 - std::abs(rho)).epsilon(1e-12));
  CHECK(b.upper == doctest::Approx(1.0 + std::abs(rho)).epsilon(1e-12));
}

TEST_CASE("Riesz bounds interlace over nested sections") {
  double lo = 1e300, hi = -1e300;
  for (int len : {4, 6, 8, 10}) {
    const auto sys = make_coherent_system(13.0, DiskPoint{0.0}, ball237(len));
    const auto b = riesz_bounds_finite_section(gram_matrix(sys, true));
    CHECK(b.lower <= lo + 1e-12);
    CHECK(b.upper >= hi - 1e-12);
    lo = b.lower;
    hi = b.upper;
  }
}

TEST_CASE("spectra ignore phase conventions") {
  auto ball = ball237(7);
  for (double alpha : {5.0, 7.5}) {
    const auto a = make_coherent_system(alpha, DiskPoint{Complex{0.1, 0.05}}, ball);
    const auto b = make_coherent_system(alpha, DiskPoint{Complex{0.1, 0.05}}, ball, true, BranchRule{42});
    const auto ea = hermitian_eigenvalues(gram_matrix(a, false).entries);
    const auto eb = hermitian_eigenvalues(gram_matrix(b, false).entries);
    CHECK((ea - eb).cwiseAbs().maxCoeff() < 1e-9);
    const auto fa = hermitian_eigenvalues(frame_operator(a, 30, IndexSet::Full));
    const auto fb = hermitian_eigenvalues(frame_operator(b, 30, IndexSet::Full));
    CHECK((fa - fb).cwiseAbs().maxCoeff() < 1e-9);
  }
  // Random diagonal unitary conjugation.
  Rng rng(9);
  const auto sys = make_coherent_system(6.0, DiskPoint{0.0}, ball);
  auto g = gram_matrix(sys, true).entries;
  Eigen::VectorXcd d(g.rows());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::polar(1.0, rng.uniform(-kPi, kPi));
  const Eigen::MatrixXcd conj = d.asDiagonal() * g * d.conjugate().asDiagonal();
  CHECK((hermitian_eigenvalues(g) - hermitian_eigenvalues(conj)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("frame operator: trivial ball and monotonicity") {
  const auto sys0 = make_coherent_system(3.0, DiskPoint{0.0}, ball237(0));
  const auto b0 = frame_bounds_truncated(sys0, 1);
  CHECK(b0.lower == doctest::Approx(1.0));
  CHECK(b0.upper == doctest::Approx(1.0));

  const auto sys = make_coherent_system(7.0, DiskPoint{0.0}, ball237(8));
  double prev = 1e300;
  for (int N : {5, 10, 20, 40}) {
    const auto b = frame_bounds_truncated(sys, N);
    CHECK(b.lower <= prev + 1e-10);
    prev = b.lower;
  }
  double prevB = 0.0;
  for (int len : {4, 6, 8}) {
    const auto b = frame_bounds_truncated(make_coherent_system(7.0, DiskPoint{0.0}, ball237(len)), 20);
    CHECK(b.upper >= prevB - 1e-10);
    prevB = b.upper;
  }
}

TEST_CASE("frame operator: coset copies add up") {
  const auto ball = ball237(8);
  const auto sys = make_coherent_system(7.0, DiskPoint{0.0}, ball);
  REQUIRE(sys.stabilizer.order() == 7);
  std::vector<GroupElement> completed;
  for (std::size_t r : sys.representatives)
    for (const auto& s : sys.stabilizer.elements) completed.push_back(compose((*ball)[r].g, s));
  const auto full = frame_operator(sys, 40, completed);
  const auto reduced = frame_operator(sys, 40, IndexSet::Reduced);
  CHECK((full - 7.0 * reduced).norm() < 1e-10 * full.norm());
}

TEST_CASE("frame operator entries against kernel coefficients") {
  const auto ball = ball237(2);
  const Complex z{0.1, -0.1};
  const double alpha = 4.5;
  const auto sys = make_coherent_system(alpha, DiskPoint{z}, ball, false);
  const int N = 12;
  Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Zero(N, N);
  for (const auto& e : ball->elements()) {
    const auto t = transform_kernel(alpha, e.g, DiskPoint{z});
    const Eigen::VectorXcd v = kernel_coeffs(alpha, t.point.value(), N).vector.coeffs * t.scalar;
    oracle += v * v.adjoint();
  }
  CHECK((frame_operator(sys, N, IndexSet::Full) - oracle).norm() < 1e-11 * oracle.norm());
}

TEST_CASE("stabilizer phases") {
  const auto ball = ball237(6);
  const auto st = stabilizer_of(*ball, DiskPoint{0.0});
  for (double alpha : {3.0, 7.5}) {
    const auto u = stabilizer_phases(alpha, st);
    REQUIRE(u.size() == 7);
    CHECK(std::abs(u[0] - 1.0) < 1e-14);
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(std::abs(std::abs(u[i]) - 1.0) < 1e-12);
      // Projective character: u(g)u(h) = sigma(g,h) u(gh).
      for (std::size_t j = 0; j < 7; ++j) {
        const GroupElement gh = compose(st.elements[i], st.elements[j]);
        std::size_t k = 0;
        while (!same_element(st.elements[k], gh, 1e-9)) ++k;
        const Complex s = cocycle(st.elements[i], st.elements[j], st.elements[k], alpha, BranchRule{});
        CHECK(std::abs(u[i] * u[j] - s * u[k]) < 1e-10);
      }
    }
  }
  Stabilizer bogus = st;
  bogus.elements.push_back(GroupElement::translation(0.3));
  CHECK_THROWS_AS(stabilizer_phases(3.0, bogus), ValidationError);
}

TEST_CASE("p_z at the order-7 point") {
  const auto ball = ball237(6);
  const auto st = stabilizer_of(*ball, DiskPoint{0.0});
  for (double alpha : {4.0, 7.0, 9.5}) {
    const int N = 70;
    const auto p = projection_pz_matrix(alpha, st, N);
    CHECK((p * p - p).norm() < 1e-9);
    CHECK((p - p.adjoint()).norm() < 1e-9);
    // Diagonal 0/1 on degrees that are multiples of 7.
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) {
        const double expect = (m == n && n % 7 == 0) ? 1.0 : 0.0;
        CHECK(std::abs(p(m, n) - expect) < 1e-9);
      }
    const Eigen::VectorXcd k0 = kernel_coeffs(alpha, 0.0, N).vector.coeffs;
    CHECK((p * k0 - k0).norm() < 1e-9);
    CHECK(std::abs(p.trace().real() - 10.0) < 1e-9);
    // Commutes with the stabilizer.
    const auto q = default_quadrature(alpha, N);
    for (const auto& g : st.elements) {
      const auto M = pi_matrix(alpha, g, N, q);
      CHECK((M * p - p * M).norm() < 1e-9);
    }
  }
}

TEST_CASE("p_z at a generic point is the identity") {
  const auto ball = ball237(4);
  const auto st = stabilizer_of(*ball, DiskPoint{Complex{0.31, 0.2}});
  REQUIRE(st.order() == 1);
  const auto p = projection_pz_matrix(5.0, st, 20);
  CHECK((p - Eigen::MatrixXcd::Identity(20, 20)).norm() < 1e-10);
}

TEST_CASE("p_z at the modular order-2 point") {
  BallOptions o;
  o.max_word_len = 4;
  const auto ball = enumerate_ball(build_generators(LatticePreset::modular()), o);
  const auto st = stabilizer_of(ball, DiskPoint{0.0});
  REQUIRE(st.order() == 2);
  const int N = 41;
  const auto p = projection_pz_matrix(6.0, st, N);
  CHECK(std::abs(p.trace().real() - 21.0) < 1e-9);
  CHECK((p * p - p).norm() < 1e-9);
}
