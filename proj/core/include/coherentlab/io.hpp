#pragma once

// CSV and JSON artifact formats.
//
//   ball CSV:      word,re_a,im_a,re_b,im_b,orbit_re,orbit_im,displacement
//   spectrum CSV:  schema_version,alpha,N,ball_size,radius,lambda_min,lambda_max,index_set
//   orbit CSV:     re,im,coset_id
//   ring JSON:     [{"word": "aB", "re": 0.5, "im": 0.0}, ...]
//   report JSON:   {preset, alpha, z, stab_order, vol_dpi, invariant, regime, predictions{...}}

#include <iosfwd>
#include <string>
#include <vector>

#include "coherentlab/density.hpp"
#include "coherentlab/frames.hpp"
#include "coherentlab/lattice.hpp"
#include "coherentlab/twisted_ring.hpp"

namespace coherentlab {

inline constexpr int kSchemaVersion = 1;

void write_ball_csv(std::ostream& os, const LatticeBall& ball);

struct SpectrumRow {
  double alpha = 0.0;
  int N = 0;  // truncation degree; 0 for Gram (Riesz) rows
  std::size_t ball_size = 0;
  double radius = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  IndexSet index_set = IndexSet::Full;
};

void write_spectrum_header(std::ostream& os);
void write_spectrum_row(std::ostream& os, const SpectrumRow& row);

/// Orbit points g.z of every ball element with the index of its coset
/// representative.
void write_orbit_csv(std::ostream& os, const CoherentSystem& system);

/// Row-major entries i,j,re,im.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& m);

std::string ring_to_json(const TwistedRingElement& x, const LatticeBall& ball);
/// Inverse of ring_to_json: words are multiplied out and looked up in the ball.
TwistedRingElement ring_from_json(const std::string& text, const LatticeBall& ball);

std::string report_to_json(const DensityReport& report);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace coherentlab
