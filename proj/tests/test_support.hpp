#pragma once

#include <cmath>
#include <random>

#include "coherentlab/moebius.hpp"

namespace coherentlab::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 12345) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  /// Uniform in angle, radius up to r_max.
  Complex disk_point(double r_max = 0.8) {
    return std::polar(r_max * std::sqrt(uniform()), uniform(-kPi, kPi));
  }

  /// rot * translation(t) * rot with |t| <= t_max.
  GroupElement group_element(double t_max = 0.9) {
    return compose(GroupElement::rotation(uniform(-kPi, kPi)),
                   compose(GroupElement::translation(uniform(-t_max, t_max)),
                           GroupElement::rotation(uniform(-kPi, kPi))));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace coherentlab::testing
