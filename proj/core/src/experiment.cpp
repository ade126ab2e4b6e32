#include "coherentlab/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "coherentlab/bergman.hpp"
#include "coherentlab/density.hpp"
#include "coherentlab/error.hpp"
#include "coherentlab/frames.hpp"
#include "coherentlab/io.hpp"
#include "coherentlab/twisted_ring.hpp"
#include "json.hpp"

namespace coherentlab {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

double parse_number(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("config key '" + key + "': expected a number, got '" + s + "'");
  }
}

int parse_int(const std::string& key, const std::string& raw) {
  const double v = parse_number(key, raw);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ValidationError("config key '" + key + "': expected an integer");
  }
  return static_cast<int>(v);
}

std::vector<std::string> parse_list(const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty() || s.front() != '[') return {s};
  if (s.back() != ']') throw ValidationError("unterminated list '" + s + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<double> parse_doubles(const std::string& key, const std::string& raw) {
  std::vector<double> out;
  for (const auto& item : parse_list(raw)) out.push_back(parse_number(key, item));
  return out;
}

std::vector<int> parse_ints(const std::string& key, const std::string& raw) {
  std::vector<int> out;
  for (const auto& item : parse_list(raw)) out.push_back(parse_int(key, item));
  return out;
}

std::string parse_string(const std::string& raw) {
  std::string s = trim(raw);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

bool parse_bool(const std::string& key, const std::string& raw) {
  const std::string s = parse_string(raw);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw ValidationError("config key '" + key + "': expected true or false");
}

Mode parse_mode(const std::string& s) {
  static const std::map<std::string, Mode> modes{
      {"density", Mode::Density},         {"frame_scan", Mode::FrameScan},
      {"riesz_scan", Mode::RieszScan},    {"dpi_estimate", Mode::DpiEstimate},
      {"verify", Mode::Verify},           {"gram_dump", Mode::GramDump}};
  const auto it = modes.find(s);
  if (it == modes.end()) throw ValidationError("unknown mode '" + s + "'");
  return it->second;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"mode", [](auto& c, auto&, auto& v) { c.mode = parse_mode(parse_string(v)); }},
      {"preset.kind", [](auto& c, auto&, auto& v) { c.preset_kind = parse_string(v); }},
      {"preset.orders", [](auto& c, auto& k, auto& v) { c.orders = parse_ints(k, v); }},
      {"preset.origin_vertex", [](auto& c, auto& k, auto& v) { c.origin_vertex = parse_int(k, v); }},
      {"z",
       [](auto& c, auto& k, auto& v) {
         const auto xs = parse_doubles(k, v);
         if (xs.size() != 2) throw ValidationError("config key 'z' expects [re, im]");
         c.z = Complex{xs[0], xs[1]};
       }},
      {"alpha", [](auto& c, auto& k, auto& v) { c.alpha_grid = parse_doubles(k, v); }},
      {"ball.max_word_len", [](auto& c, auto& k, auto& v) { c.word_lengths = parse_ints(k, v); }},
      {"ball.max_radius", [](auto& c, auto& k, auto& v) { c.max_radius = parse_number(k, v); }},
      {"ball.dedup_tol", [](auto& c, auto& k, auto& v) { c.dedup_tol = parse_number(k, v); }},
      {"ball.max_elements",
       [](auto& c, auto& k, auto& v) { c.max_elements = static_cast<std::size_t>(parse_int(k, v)); }},
      {"truncation.N", [](auto& c, auto& k, auto& v) { c.truncations = parse_ints(k, v); }},
      {"truncation.n_radial", [](auto& c, auto& k, auto& v) { c.n_radial = parse_int(k, v); }},
      {"truncation.n_angular", [](auto& c, auto& k, auto& v) { c.n_angular = parse_int(k, v); }},
      {"dpi.R", [](auto& c, auto& k, auto& v) { c.dpi_radius = parse_number(k, v); }},
      {"frames.normalized", [](auto& c, auto& k, auto& v) { c.normalized = parse_bool(k, v); }},
      {"branch.twist_seed",
       [](auto& c, auto& k, auto& v) { c.twist_seed = static_cast<std::uint64_t>(parse_int(k, v)); }},
      {"output.path", [](auto& c, auto&, auto& v) { c.output_path = parse_string(v); }},
      {"output.format", [](auto& c, auto&, auto& v) { c.output_format = parse_string(v); }},
      {"output.orbit_csv", [](auto& c, auto&, auto& v) { c.orbit_csv = parse_string(v); }},
      {"output.ball_csv", [](auto& c, auto&, auto& v) { c.ball_csv = parse_string(v); }},
      {"workers", [](auto& c, auto& k, auto& v) { c.workers = parse_int(k, v); }},
  };
  return table;
}

void set_key(ExperimentConfig& c, const std::string& key, const std::string& value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw ValidationError("unknown config key '" + key + "'");
  it->second(c, key, value);
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_floating_point_v<T>) {
      s += format_double(xs[i]);
    } else {
      s += std::to_string(xs[i]);
    }
  }
  return s + "]";
}

// Runs f over the alpha grid, up to `workers` at a time, returning results in
// grid order.
template <class F>
auto map_grid(const std::vector<double>& grid, int workers, F f) {
  using R = decltype(f(grid.front()));
  std::vector<R> out;
  out.reserve(grid.size());
  if (workers <= 1) {
    for (double a : grid) out.push_back(f(a));
    return out;
  }
  for (std::size_t start = 0; start < grid.size(); start += static_cast<std::size_t>(workers)) {
    std::vector<std::future<R>> batch;
    const std::size_t end = std::min(grid.size(), start + static_cast<std::size_t>(workers));
    for (std::size_t i = start; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, f, grid[i]));
    }
    for (auto& fut : batch) out.push_back(fut.get());
  }
  return out;
}

std::shared_ptr<const LatticeBall> make_ball(const ExperimentConfig& c, int word_len) {
  BallOptions opt;
  opt.max_word_len = word_len;
  opt.max_radius = c.max_radius;
  opt.dedup_tol = c.dedup_tol;
  opt.max_elements = c.max_elements;
  return std::make_shared<const LatticeBall>(enumerate_ball(build_generators(c.preset()), opt));
}

void write_echo(std::ostream& os, const ExperimentConfig& c) {
  os << "# coherentlab schema_version=" << kSchemaVersion << '\n';
  for (const auto& [k, v] : c.resolved()) os << "# " << k << " = " << v << '\n';
}

nlohmann::json echo_json(const ExperimentConfig& c) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : c.resolved()) j[k] = v;
  return j;
}

std::string error_json(const char* kind, const std::string& message) {
  return nlohmann::json{{"error", kind}, {"message", message}}.dump();
}

struct Emitted {
  std::string body;
  int code = 0;
};

Emitted run_density(const ExperimentConfig& c) {
  const auto ball = make_ball(c, *std::max_element(c.word_lengths.begin(), c.word_lengths.end()));
  const LatticePreset preset = c.preset();
  const DiskPoint z{c.z};
  const auto reports = map_grid(c.alpha_grid, c.workers, [&](double alpha) {
    return regime_report(preset, alpha, z, *ball);
  });
  std::ostringstream os;
  if (c.output_format == "json") {
    nlohmann::json j{{"schema_version", kSchemaVersion}, {"config", echo_json(c)}};
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(nlohmann::json::parse(report_to_json(r)));
    os << j.dump(2) << '\n';
  } else {
    write_echo(os, c);
    os << "schema_version,preset,alpha,z_re,z_im,stab_order,vol_dpi,invariant,regime,"
          "cyclic_possible,frame_possible,pz_separating_possible,riesz_possible\n";
    for (const auto& r : reports) {
      os << kSchemaVersion << ',' << r.preset << ',' << format_double(r.alpha) << ','
         << format_double(r.z.real()) << ',' << format_double(r.z.imag()) << ',' << r.stab_order
         << ',' << format_double(r.vol_dpi) << ',' << format_double(r.invariant) << ','
         << to_string(r.regime) << ',' << r.predictions.cyclic_possible << ','
         << r.predictions.frame_possible << ',' << r.predictions.pz_separating_possible << ','
         << r.predictions.riesz_possible << '\n';
    }
  }
  return {os.str(), 0};
}

Emitted run_scan(const ExperimentConfig& c, bool frame) {
  std::vector<std::shared_ptr<const LatticeBall>> balls;
  for (int L : c.word_lengths) balls.push_back(make_ball(c, L));
  const DiskPoint z{c.z};
  const BranchRule rule{c.twist_seed};
  const auto rows = map_grid(c.alpha_grid, c.workers, [&](double alpha) {
    std::vector<SpectrumRow> out;
    for (const auto& ball : balls) {
      const CoherentSystem sys = make_coherent_system(alpha, z, ball, c.normalized, rule);
      if (frame) {
        for (int N : c.truncations) {
          const SpectralBounds b = frame_bounds_truncated(sys, N);
          out.push_back({alpha, N, ball->size(), ball->radius(), b.lower, b.upper, IndexSet::Full});
        }
      } else {
        const SpectralBounds b = riesz_bounds_finite_section(gram_matrix(sys, true));
        out.push_back({alpha, 0, ball->size(), ball->radius(), b.lower, b.upper, IndexSet::Reduced});
      }
    }
    return out;
  });
  std::ostringstream os;
  write_echo(os, c);
  write_spectrum_header(os);
  for (const auto& block : rows) {
    for (const auto& r : block) write_spectrum_row(os, r);
  }
  return {os.str(), 0};
}

Emitted run_dpi(const ExperimentConfig& c) {
  const auto est = map_grid(c.alpha_grid, c.workers, [&](double alpha) {
    const int nr = c.n_radial > 0 ? c.n_radial : 160;
    const int na = c.n_angular > 0 ? c.n_angular : 64;
    return estimate_formal_dimension(alpha, c.dpi_radius, nr, na);
  });
  std::ostringstream os;
  write_echo(os, c);
  os << "schema_version,alpha,R,estimate,lower,exact,tail_bound,tail_warning\n";
  for (std::size_t i = 0; i < est.size(); ++i) {
    os << kSchemaVersion << ',' << format_double(c.alpha_grid[i]) << ','
       << format_double(c.dpi_radius) << ',' << format_double(est[i].estimate) << ','
       << format_double(est[i].lower) << ',' << format_double(c.alpha_grid[i] - 1.0) << ','
       << format_double(est[i].tail_bound) << ',' << est[i].tail_warning << '\n';
  }
  return {os.str(), 0};
}

Emitted run_gram_dump(const ExperimentConfig& c) {
  const auto ball = make_ball(c, *std::max_element(c.word_lengths.begin(), c.word_lengths.end()));
  const CoherentSystem sys =
      make_coherent_system(c.alpha_grid.front(), DiskPoint{c.z}, ball, c.normalized, BranchRule{c.twist_seed});
  std::ostringstream os;
  write_echo(os, c);
  write_matrix_csv(os, gram_matrix(sys, true).entries);
  return {os.str(), 0};
}

Emitted run_verify(const ExperimentConfig& c) {
  const auto results = run_verification_suite(c);
  std::ostringstream os;
  write_echo(os, c);
  os << "check,passed,detail\n";
  bool ok = true;
  for (const auto& r : results) {
    os << r.name << ',' << (r.passed ? "pass" : "FAIL") << ",\"" << r.detail << "\"\n";
    ok = ok && r.passed;
  }
  return {os.str(), ok ? 0 : 3};
}

void write_side_outputs(const ExperimentConfig& c) {
  if (c.orbit_csv.empty() && c.ball_csv.empty()) return;
  const auto ball = make_ball(c, *std::max_element(c.word_lengths.begin(), c.word_lengths.end()));
  if (!c.ball_csv.empty()) {
    std::ofstream f(c.ball_csv);
    if (!f) throw ValidationError("cannot write '" + c.ball_csv + "'");
    write_ball_csv(f, *ball);
  }
  if (!c.orbit_csv.empty()) {
    std::ofstream f(c.orbit_csv);
    if (!f) throw ValidationError("cannot write '" + c.orbit_csv + "'");
    write_orbit_csv(f, make_coherent_system(c.alpha_grid.front(), DiskPoint{c.z}, ball));
  }
}

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Density:
      return "density";
    case Mode::FrameScan:
      return "frame_scan";
    case Mode::RieszScan:
      return "riesz_scan";
    case Mode::DpiEstimate:
      return "dpi_estimate";
    case Mode::Verify:
      return "verify";
    case Mode::GramDump:
      return "gram_dump";
  }
  return "unknown";
}

LatticePreset ExperimentConfig::preset() const {
  if (preset_kind == "modular") return LatticePreset::modular();
  if (preset_kind == "triangle") {
    if (orders.size() != 3) throw ValidationError("preset.orders expects [p, q, r]");
    return LatticePreset::triangle(orders[0], orders[1], orders[2], origin_vertex);
  }
  throw ValidationError("unknown preset.kind '" + preset_kind + "'");
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::resolved() const {
  return {
      {"mode", to_string(mode)},
      {"preset.kind", preset_kind},
      {"preset.orders", join(orders)},
      {"preset.origin_vertex", std::to_string(origin_vertex)},
      {"z", join(std::vector<double>{z.real(), z.imag()})},
      {"alpha", join(alpha_grid)},
      {"ball.max_word_len", join(word_lengths)},
      {"ball.max_radius", format_double(max_radius)},
      {"ball.dedup_tol", format_double(dedup_tol)},
      {"ball.max_elements", std::to_string(max_elements)},
      {"truncation.N", join(truncations)},
      {"truncation.n_radial", std::to_string(n_radial)},
      {"truncation.n_angular", std::to_string(n_angular)},
      {"dpi.R", format_double(dpi_radius)},
      {"frames.normalized", normalized ? "true" : "false"},
      {"branch.twist_seed", std::to_string(twist_seed)},
      {"output.path", output_path},
      {"output.format", output_format},
      {"output.orbit_csv", orbit_csv},
      {"output.ball_csv", ball_csv},
      {"workers", std::to_string(workers)},
  };
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' && line.find('=') == std::string::npos) {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    set_key(c, key, line.substr(eq + 1));
  }
  return c;
}

void apply_override(ExperimentConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ValidationError("override must be key=value: '" + assignment + "'");
  set_key(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

void validate(const ExperimentConfig& c) {
  (void)c.preset();
  if (c.alpha_grid.empty()) throw ValidationError("alpha grid is empty");
  for (double a : c.alpha_grid) {
    if (!(a > 1.0)) throw ValidationError("alpha values must exceed 1");
  }
  if (c.word_lengths.empty()) throw ValidationError("ball.max_word_len is empty");
  if (c.truncations.empty()) throw ValidationError("truncation.N is empty");
  for (int N : c.truncations) {
    if (N < 1) throw ValidationError("truncation.N values must be >= 1");
  }
  (void)DiskPoint{c.z};
  if (c.output_format != "csv" && c.output_format != "json") {
    throw ValidationError("output.format must be csv or json");
  }
  if (c.output_format == "json" && c.mode != Mode::Density) {
    throw ValidationError("json output is available for mode=density only");
  }
  if (c.workers < 1) throw ValidationError("workers must be >= 1");
}

std::vector<CheckResult> run_verification_suite(const ExperimentConfig& config) {
  std::vector<CheckResult> results;
  auto check = [&](const std::string& name, auto body) {
    CheckResult r{name, false, ""};
    try {
      std::tie(r.passed, r.detail) = body();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(r);
  };
  auto fmt = [](double x) { return format_double(x); };

  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto random_element = [&]() {
    const double t = 0.9 * std::abs(unif(rng));
    return compose(GroupElement::rotation(kPi * unif(rng)),
                   compose(GroupElement::translation(t), GroupElement::rotation(kPi * unif(rng))));
  };

  check("cocycle_identity", [&]() {
    double worst = 0.0;
    for (double alpha : {2.5, 4.0, 7.3}) {
      for (int i = 0; i < 200; ++i) {
        const GroupElement g = random_element(), h = random_element(), k = random_element();
        const Complex lhs = cocycle(g, h, alpha) * cocycle(compose(g, h), k, alpha);
        const Complex rhs = cocycle(g, compose(h, k), alpha) * cocycle(h, k, alpha);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    return std::pair{worst < 1e-10, "max residual " + fmt(worst)};
  });

  check("group_action", [&]() {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const GroupElement g = random_element(), h = random_element();
      const Complex w = 0.7 * Complex{unif(rng), unif(rng)} / std::sqrt(2.0);
      worst = std::max(worst, std::abs(act(compose(g, h), w) - act(g, act(h, w))));
      worst = std::max(worst, std::abs(compose(g, h).det() - 1.0));
    }
    return std::pair{worst < 1e-12, "max residual " + fmt(worst)};
  });

  check("reproducing_property", [&]() {
    const double alpha = 4.0;
    const Quadrature quad = mu_alpha_quadrature(alpha, 24, 48);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      CoeffVector f{Eigen::VectorXcd::Zero(12)};
      for (int n = 0; n < 12; ++n) f.coeffs(n) = Complex{unif(rng), unif(rng)};
      const Complex z = 0.6 * Complex{unif(rng), unif(rng)} / std::sqrt(2.0);
      const Complex lhs = quadrature_inner(quad, f, kernel_coeffs(alpha, z, 12).vector);
      worst = std::max(worst, std::abs(lhs - evaluate(alpha, f, z)));
    }
    return std::pair{worst < 1e-9, "max residual " + fmt(worst)};
  });

  const LatticePreset preset = config.preset();
  const auto gens = build_generators(preset);

  check("generator_relations", [&]() {
    const double r = relation_residual(preset, gens);
    return std::pair{r < 1e-9, "residual " + fmt(r)};
  });

  BallOptions opt;
  opt.max_word_len = std::min(6, *std::max_element(config.word_lengths.begin(), config.word_lengths.end()));
  opt.max_radius = config.max_radius;
  opt.dedup_tol = config.dedup_tol;
  const auto ball = std::make_shared<const LatticeBall>(enumerate_ball(gens, opt));
  const DiskPoint z{config.z};

  check("stabilizer_projection", [&]() {
    const Stabilizer stab = stabilizer_of(*ball, z);
    if (!stab.closed) return std::pair{false, std::string("stabilizer not closed")};
    const int N = 24;
    const Eigen::MatrixXcd p = projection_pz_matrix(4.5, stab, N);
    const double idem = (p * p - p).norm();
    return std::pair{idem < 1e-9, "order " + std::to_string(stab.order()) + ", idempotency " + fmt(idem)};
  });

  check("twisted_ring_projection", [&]() {
    const double alpha = 4.5;
    const Stabilizer stab = stabilizer_of(*ball, z);
    const CocycleTable sigma(ball, alpha);
    const TwistedRingElement p0 = projection_p0(stab.indices, stabilizer_phases(alpha, stab), sigma);
    const double idem = (twisted_convolve(p0, p0, sigma) - p0).max_abs();
    const double tr = std::abs(trace(p0) - 1.0 / static_cast<double>(stab.order()));
    return std::pair{idem < 1e-10 && tr < 1e-12, "idempotency " + fmt(idem) + ", trace error " + fmt(tr)};
  });

  check("density_linearity", [&]() {
    const Stabilizer stab = stabilizer_of(*ball, z);
    const int m = static_cast<int>(stab.order());
    const double slope = density_invariant(preset, 3.0, m) - density_invariant(preset, 2.0, m);
    const double expected = m * orbifold_area(preset) / (4.0 * kPi);
    const double err = std::abs(slope - expected);
    return std::pair{err < 1e-12, "slope " + fmt(slope)};
  });

  check("formal_dimension", [&]() {
    const auto est = estimate_formal_dimension(4.0, 12.0);
    const double rel = std::abs(est.estimate - 3.0) / 3.0;
    return std::pair{rel < 0.01, "estimate " + fmt(est.estimate)};
  });

  check("branch_invariance", [&]() {
    const double alpha = 5.5;
    const auto a = riesz_bounds_finite_section(gram_matrix(make_coherent_system(alpha, z, ball), true));
    const auto b = riesz_bounds_finite_section(
        gram_matrix(make_coherent_system(alpha, z, ball, true, BranchRule{99}), true));
    const double d = std::max(std::abs(a.lower - b.lower), std::abs(a.upper - b.upper));
    return std::pair{d < 1e-9, "max eigenvalue change " + fmt(d)};
  });

  return results;
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Emitted e;
    switch (config.mode) {
      case Mode::Density:
        e = run_density(config);
        break;
      case Mode::FrameScan:
        e = run_scan(config, true);
        break;
      case Mode::RieszScan:
        e = run_scan(config, false);
        break;
      case Mode::DpiEstimate:
        e = run_dpi(config);
        break;
      case Mode::Verify:
        e = run_verify(config);
        break;
      case Mode::GramDump:
        e = run_gram_dump(config);
        break;
    }
    write_side_outputs(config);
    if (config.output_path == "-" || config.output_path.empty()) {
      out << e.body;
    } else {
      std::ofstream f(config.output_path);
      if (!f) throw ValidationError("cannot write '" + config.output_path + "'");
      f << e.body;
    }
    if (e.code == 3) err << error_json("property_suite", "one or more checks failed") << '\n';
    return e.code;
  } catch (const ValidationError& ex) {
    err << error_json("validation", ex.what()) << '\n';
    return 1;
  } catch (const NumericalError& ex) {
    err << error_json("numerical", ex.what()) << '\n';
    return 2;
  }
}

}  // namespace coherentlab
