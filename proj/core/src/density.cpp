#include "coherentlab/density.hpp"

#include <cmath>

#include "coherentlab/error.hpp"

namespace coherentlab {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::BelowThreshold:
      return "below_threshold";
    case Regime::AtThreshold:
      return "at_threshold";
    case Regime::AboveThreshold:
      return "above_threshold";
  }
  return "unknown";
}

double density_invariant(const LatticePreset& preset, double alpha, int stab_order) {
  if (stab_order < 1) throw ValidationError("stabilizer order must be >= 1");
  return covolume_times_dpi(preset, alpha) * stab_order;
}

double threshold_alpha(const LatticePreset& preset, int stab_order) {
  if (stab_order < 1) throw ValidationError("stabilizer order must be >= 1");
  // vol d_pi is linear in alpha and vanishes at alpha = 1
  return 1.0 + 1.0 / covolume_times_dpi(preset, 2.0) / stab_order;
}

DensityReport classify(const LatticePreset& preset, double alpha, Complex z, int stab_order) {
  DensityReport r;
  r.preset = preset.name();
  r.alpha = alpha;
  r.z = z;
  r.stab_order = stab_order;
  r.vol_dpi = covolume_times_dpi(preset, alpha);
  r.invariant = density_invariant(preset, alpha, stab_order);
  r.alpha_threshold = threshold_alpha(preset, stab_order);

  if (std::abs(r.invariant - 1.0) < kThresholdTolerance) {
    r.regime = Regime::AtThreshold;
  } else if (r.invariant < 1.0) {
    r.regime = Regime::BelowThreshold;
    // A Riesz sequence or p_z-separating vector forces invariant >= 1.
    r.predictions.riesz_possible = false;
    r.predictions.pz_separating_possible = false;
  } else {
    r.regime = Regime::AboveThreshold;
    // A frame or cyclic vector forces invariant <= 1.
    r.predictions.frame_possible = false;
    r.predictions.cyclic_possible = false;
  }
  return r;
}

DensityReport regime_report(const LatticePreset& preset, double alpha, const DiskPoint& z,
                            const LatticeBall& ball) {
  const Stabilizer stab = stabilizer_of(ball, z);
  DensityReport r = classify(preset, alpha, z.value(), static_cast<int>(stab.order()));
  r.warnings = stab.warnings;
  return r;
}

}  // namespace coherentlab
