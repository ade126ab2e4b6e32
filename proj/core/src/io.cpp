#include "coherentlab/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "coherentlab/error.hpp"
#include "json.hpp"

namespace coherentlab {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_ball_csv(std::ostream& os, const LatticeBall& ball) {
  os << "word,re_a,im_a,re_b,im_b,orbit_re,orbit_im,displacement\n";
  for (const auto& e : ball.elements()) {
    os << word_to_string(e.word) << ',' << format_double(e.g.a.real()) << ','
       << format_double(e.g.a.imag()) << ',' << format_double(e.g.b.real()) << ','
       << format_double(e.g.b.imag()) << ',' << format_double(e.orbit.real()) << ','
       << format_double(e.orbit.imag()) << ',' << format_double(e.displacement) << '\n';
  }
}

void write_spectrum_header(std::ostream& os) {
  os << "schema_version,alpha,N,ball_size,radius,lambda_min,lambda_max,index_set\n";
}

void write_spectrum_row(std::ostream& os, const SpectrumRow& row) {
  os << kSchemaVersion << ',' << format_double(row.alpha) << ',' << row.N << ',' << row.ball_size
     << ',' << format_double(row.radius) << ',' << format_double(row.lambda_min) << ','
     << format_double(row.lambda_max) << ',' << to_string(row.index_set) << '\n';
}

void write_orbit_csv(std::ostream& os, const CoherentSystem& system) {
  os << "re,im,coset_id\n";
  const Complex z = system.z.value();
  std::vector<Complex> rep_points;
  for (std::size_t r : system.representatives) rep_points.push_back(act((*system.ball)[r].g, z));
  for (const auto& e : system.ball->elements()) {
    const Complex w = act(e.g, z);
    std::size_t id = 0;
    double best = std::abs(w - rep_points.front());
    for (std::size_t k = 1; k < rep_points.size(); ++k) {
      const double d = std::abs(w - rep_points[k]);
      if (d < best) {
        best = d;
        id = k;
      }
    }
    os << format_double(w.real()) << ',' << format_double(w.imag()) << ',' << id << '\n';
  }
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& m) {
  os << "i,j,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << i << ',' << j << ',' << format_double(m(i, j).real()) << ','
         << format_double(m(i, j).imag()) << '\n';
    }
  }
}

std::string ring_to_json(const TwistedRingElement& x, const LatticeBall& ball) {
  json arr = json::array();
  for (const auto& [i, v] : x.coeffs()) {
    if (i >= ball.size()) throw ValidationError("ring element support exceeds the ball");
    arr.push_back({{"word", word_to_string(ball[i].word)}, {"re", v.real()}, {"im", v.imag()}});
  }
  return arr.dump();
}

TwistedRingElement ring_from_json(const std::string& text, const LatticeBall& ball) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("ring JSON: ") + e.what());
  }
  if (!arr.is_array()) throw ValidationError("ring JSON must be an array");
  const auto& gens = ball.generators();
  TwistedRingElement out;
  try {
    for (const auto& item : arr) {
      const std::string word = item.at("word").get<std::string>();
      GroupElement g = GroupElement::identity();
      if (word != "e") {
        for (char ch : word) {
          const bool inv = ch >= 'A' && ch <= 'Z';
          const auto k = static_cast<std::size_t>(inv ? ch - 'A' : ch - 'a');
          if (k >= gens.size()) throw ValidationError("ring JSON: unknown generator letter");
          g = compose(g, inv ? gens[k].inverse() : gens[k]);
        }
      }
      out.add(ball.require(g), Complex{item.at("re").get<double>(), item.at("im").get<double>()});
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("ring JSON: ") + e.what());
  }
  return out;
}

std::string report_to_json(const DensityReport& r) {
  json j = {
      {"preset", r.preset},
      {"alpha", r.alpha},
      {"z", {r.z.real(), r.z.imag()}},
      {"stab_order", r.stab_order},
      {"vol_dpi", r.vol_dpi},
      {"invariant", r.invariant},
      {"alpha_threshold", r.alpha_threshold},
      {"regime", to_string(r.regime)},
      {"predictions",
       {{"cyclic_possible", r.predictions.cyclic_possible},
        {"frame_possible", r.predictions.frame_possible},
        {"pz_separating_possible", r.predictions.pz_separating_possible},
        {"riesz_possible", r.predictions.riesz_possible}}},
  };
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j.dump();
}

}  // namespace coherentlab
