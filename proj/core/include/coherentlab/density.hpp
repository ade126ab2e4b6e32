#pragma once

// The density invariant vol(G/Gamma) d_pi |Gamma_z| and the regimes it
// predicts for lattice orbits of Bergman kernels. Predictions are necessary
// conditions only: a flag set to false means "ruled out", true means "not
// ruled out".

#include <string>
#include <vector>

#include "coherentlab/lattice.hpp"

namespace coherentlab {

enum class Regime { BelowThreshold, AtThreshold, AboveThreshold };

const char* to_string(Regime r);

inline constexpr double kThresholdTolerance = 1e-9;

struct Predictions {
  bool cyclic_possible = true;
  bool frame_possible = true;
  bool pz_separating_possible = true;
  bool riesz_possible = true;
};

struct DensityReport {
  std::string preset;
  double alpha = 0.0;
  Complex z;
  int stab_order = 1;
  double vol_dpi = 0.0;
  double invariant = 0.0;
  double alpha_threshold = 0.0;
  Regime regime = Regime::BelowThreshold;
  Predictions predictions;
  std::vector<std::string> warnings;
};

/// covolume_times_dpi(preset, alpha) * stab_order.
double density_invariant(const LatticePreset& preset, double alpha, int stab_order);

/// The unique alpha at which the invariant equals 1: 1 + 4 pi / (|Gamma_z| area).
double threshold_alpha(const LatticePreset& preset, int stab_order);

/// Classification from a known stabilizer order.
DensityReport classify(const LatticePreset& preset, double alpha, Complex z, int stab_order);

/// Classification with the stabilizer of z found in the ball.
DensityReport regime_report(const LatticePreset& preset, double alpha, const DiskPoint& z,
                            const LatticeBall& ball);

}  // namespace coherentlab
