#include "horo/harness.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "horo/corpus.hpp"
#include "horo/error.hpp"
#include "horo/inversion.hpp"
#include "horo/quadrature.hpp"
#include "horo/spectral.hpp"
#include "horo/transform.hpp"
#include "horo/zonal.hpp"
#include "json.hpp"

namespace horo {
namespace {

using ordered_json = nlohmann::ordered_json;

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> defaults{
      {"forward", 1e-10},      {"holomorphy", 1e-6},   {"abel_vs_spectral", 1e-6}, {"series", 1e-9},
      {"zonal", 1e-10},        {"orthogonality", 1e-12}, {"plancherel", 1e-8},     {"zonal_identity", 1e-9},
      {"imaginary", 1e-8},     {"negative_modes", 1e-9}, {"aliasing", 1e-6},       {"abel_residual", 1e-4},
  };
  return defaults;
}

double roundtrip_default(int n, const std::string& method) {
  if (method != "spectral") return 1e-4;
  return n == 1 ? 1e-10 : n == 2 ? 1e-8 : 1e-7;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<CorpusEntry> corpus_for(const RunConfig& cfg) {
  if (cfg.terms.empty()) {
    return make_corpus(cfg.n, cfg.band, cfg.seed, cfg.terms_per_degree, cfg.closed_form);
  }
  std::vector<CorpusEntry> corpus;
  if (cfg.closed_form) corpus = make_corpus(cfg.n, 0, cfg.seed, 0, true);
  corpus.erase(std::remove_if(corpus.begin(), corpus.end(),
                              [](const CorpusEntry& e) { return e.name.rfind("random", 0) == 0; }),
               corpus.end());
  std::vector<ConeTerm> terms;
  for (const ExplicitTerm& t : cfg.terms) {
    terms.push_back(ConeTerm{t.degree, make_cone_point(t.re, t.im), {t.coeff_re, t.coeff_im}});
  }
  corpus.push_back({"explicit", BandLimitedFunction(cfg.n, std::move(terms))});
  return corpus;
}

InversionParams params_for(const RunConfig& cfg, InversionMethod method) {
  InversionParams p;
  p.sphere_resolution = cfg.sphere_resolution;
  p.fiber_resolution = cfg.fiber_resolution;
  p.circle_resolution = cfg.circle_resolution;
  p.kmax = cfg.kmax;
  p.method = method;
  p.abel.radii = cfg.abel_radii;
  p.abel.resolution_scale = cfg.abel_scale;
  p.tol.aliasing = cfg.tolerance("aliasing");
  p.tol.abel_residual = cfg.tolerance("abel_residual");
  p.strict = false;
  p.threads = cfg.threads;
  return p;
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  j["n"] = cfg.n;
  j["kmax"] = cfg.kmax;
  j["band"] = cfg.band;
  j["resolution"] = {{"sphere", cfg.sphere_resolution},
                     {"fiber", cfg.fiber_resolution},
                     {"circle", cfg.circle_resolution}};
  j["method"] = cfg.method;
  j["seed"] = cfg.seed;
  j["grid"] = {{"size", cfg.grid_size}};
  ordered_json corpus;
  corpus["terms_per_degree"] = cfg.terms_per_degree;
  corpus["closed_form"] = cfg.closed_form;
  ordered_json terms = ordered_json::array();
  for (const ExplicitTerm& t : cfg.terms) {
    terms.push_back({{"k", t.degree}, {"re", t.re}, {"im", t.im}, {"c", {t.coeff_re, t.coeff_im}}});
  }
  corpus["terms"] = terms;
  j["corpus"] = corpus;
  j["abel"] = {{"radii", cfg.abel_radii}, {"resolution_scale", cfg.abel_scale}};
  ordered_json tol;
  for (const auto& [key, value] : default_tolerances()) tol[key] = cfg.tolerance(key);
  tol["roundtrip"] = cfg.tolerance("roundtrip");
  j["tolerances"] = tol;
  j["threads"] = cfg.threads;
  j["timing"] = cfg.timing;
  return j;
}

Vec unit_vector(std::size_t dim, std::size_t j) {
  Vec e(dim, 0.0);
  e[j] = 1.0;
  return e;
}

// One rule per ζ: at least the configured and heuristic resolutions, and enough
// nodes that the geometric decay sup|h|^res of the kernel's series is below 1e-14.
std::vector<int> kernel_resolutions(const RunConfig& cfg, const std::vector<ConePoint>& zetas,
                                    std::map<int, QuadratureRule>& rules) {
  std::vector<int> resolution(zetas.size());
  for (std::size_t i = 0; i < zetas.size(); ++i) {
    const ResolutionAdvice advice = recommended_resolution(zetas[i]);
    const double r = zetas[i].sup_h();
    const int geometric = r > 0.0 ? static_cast<int>(std::ceil(std::log(1e-14) / std::log(r))) + 2 : 4;
    resolution[i] = std::max({cfg.sphere_resolution, advice.resolution, geometric});
    rules.try_emplace(resolution[i], sphere_rule(cfg.n, resolution[i]));
  }
  return resolution;
}

}  // namespace

RunConfig RunConfig::resolved() const {
  RunConfig r = *this;
  static const std::vector<std::string> commands{"dims", "forward", "roundtrip", "zonal", "plancherel", "series"};
  if (std::find(commands.begin(), commands.end(), r.command) == commands.end()) {
    throw Error(ErrorCode::kConfigError, "unknown command '" + r.command + "'");
  }
  if (r.n < 1 || (r.command != "dims" && r.n > 3)) {
    throw Error(ErrorCode::kConfigError, "n must be 1, 2 or 3 (dims accepts any n >= 1)");
  }
  if (r.kmax < 0) throw Error(ErrorCode::kConfigError, "kmax must be >= 0");
  if (r.band < 0) r.band = r.kmax;
  parse_inversion_method(r.method);
  // Defaults resolve every degree the spectral chain touches, guard modes included.
  if (r.sphere_resolution < 0) r.sphere_resolution = std::max(r.n == 3 ? 16 : 64, 2 * r.kmax + 6);
  if (r.fiber_resolution < 0) r.fiber_resolution = r.n == 2 ? std::max(256, 2 * r.kmax + 6) : r.n == 3 ? std::max(8, r.kmax + 4) : 2;
  if (r.circle_resolution < 0) r.circle_resolution = std::max(32, 2 * r.kmax + 2);
  if (r.command == "dims") return r;
  if (r.sphere_resolution < 4) throw Error(ErrorCode::kConfigError, "sphere resolution must be >= 4");
  if (r.n != 1 && r.fiber_resolution < 4) throw Error(ErrorCode::kConfigError, "fiber resolution must be >= 4");
  if (r.circle_resolution < 2 * r.kmax + 2) {
    throw Error(ErrorCode::kConfigError, "circle resolution must be >= 2*kmax+2");
  }
  if (r.grid_size < 1) throw Error(ErrorCode::kConfigError, "grid size must be >= 1");
  if (r.terms_per_degree < 0) throw Error(ErrorCode::kConfigError, "terms_per_degree must be >= 0");
  if (r.threads < 1) throw Error(ErrorCode::kConfigError, "threads must be >= 1");
  if (r.abel_radii.size() < 2) throw Error(ErrorCode::kConfigError, "need at least two Abel radii");
  for (double radius : r.abel_radii) {
    if (!(radius > 0.0 && radius < 1.0)) throw Error(ErrorCode::kConfigError, "Abel radii must lie in (0, 1)");
  }
  for (const ExplicitTerm& t : r.terms) {
    if (t.re.size() != static_cast<std::size_t>(r.n) + 1 || t.im.size() != t.re.size()) {
      throw Error(ErrorCode::kConfigError, "explicit term vectors must have length n+1");
    }
    if (t.degree < 0) throw Error(ErrorCode::kConfigError, "explicit term degree must be >= 0");
  }
  for (const auto& [key, value] : r.tolerances) {
    if (key != "roundtrip" && !default_tolerances().contains(key)) {
      throw Error(ErrorCode::kConfigError, "unknown tolerance key '" + key + "'");
    }
    if (!(value > 0.0)) throw Error(ErrorCode::kConfigError, "tolerance '" + key + "' must be positive");
  }
  return r;
}

double RunConfig::tolerance(const std::string& key) const {
  if (auto it = tolerances.find(key); it != tolerances.end()) return it->second;
  if (key == "roundtrip") return roundtrip_default(n, method);
  if (auto it = default_tolerances().find(key); it != default_tolerances().end()) return it->second;
  throw Error(ErrorCode::kConfigError, "unknown tolerance key '" + key + "'");
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kConfigError, "cannot read config '" + path + "': " + e.what());
  }
  try {
    RunConfig& c = base;
    if (root["command"]) c.command = root["command"].as<std::string>();
    if (root["n"]) c.n = root["n"].as<int>();
    if (root["kmax"]) c.kmax = root["kmax"].as<int>();
    if (root["band"]) c.band = root["band"].as<int>();
    if (const auto res = root["resolution"]) {
      if (res["sphere"]) c.sphere_resolution = res["sphere"].as<int>();
      if (res["fiber"]) c.fiber_resolution = res["fiber"].as<int>();
      if (res["circle"]) c.circle_resolution = res["circle"].as<int>();
    }
    if (root["method"]) c.method = root["method"].as<std::string>();
    if (root["seed"]) c.seed = root["seed"].as<std::uint64_t>();
    if (const auto grid = root["grid"]) {
      if (grid["size"]) c.grid_size = grid["size"].as<int>();
    }
    if (const auto corpus = root["corpus"]) {
      if (corpus["terms_per_degree"]) c.terms_per_degree = corpus["terms_per_degree"].as<int>();
      if (corpus["closed_form"]) c.closed_form = corpus["closed_form"].as<bool>();
      if (const auto terms = corpus["terms"]) {
        c.terms.clear();
        for (const auto& t : terms) {
          ExplicitTerm term;
          term.degree = t["k"].as<int>();
          term.re = t["re"].as<Vec>();
          term.im = t["im"].as<Vec>();
          if (t["c"]) {
            const Vec coeff = t["c"].as<Vec>();
            if (coeff.size() != 2) throw Error(ErrorCode::kConfigError, "term coefficient must be [re, im]");
            term.coeff_re = coeff[0];
            term.coeff_im = coeff[1];
          }
          c.terms.push_back(std::move(term));
        }
      }
    }
    if (const auto abel = root["abel"]) {
      if (abel["radii"]) c.abel_radii = abel["radii"].as<Vec>();
      if (abel["resolution_scale"]) c.abel_scale = abel["resolution_scale"].as<double>();
    }
    if (const auto tol = root["tolerances"]) {
      for (const auto& kv : tol) c.tolerances[kv.first.as<std::string>()] = kv.second.as<double>();
    }
    if (root["threads"]) c.threads = root["threads"].as<int>();
    if (root["timing"]) c.timing = root["timing"].as<bool>();
    if (const auto out = root["output"]) {
      if (out["json"]) c.json_path = out["json"].as<std::string>();
      if (out["csv"]) c.csv_path = out["csv"].as<std::string>();
    }
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kConfigError, "bad value in '" + path + "': " + e.what());
  }
  return base;
}

Check check_below(std::string name, double value, double tol) {
  return {std::move(name), value, 0.0, tol, std::isfinite(value) && std::abs(value) < tol};
}

Check check_close(std::string name, double value, double reference, double tol) {
  return {std::move(name), value, reference, tol, std::isfinite(value) && std::abs(value - reference) <= tol};
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_json() const {
  ordered_json j;
  j["config"] = config_json(config);
  ordered_json list = ordered_json::array();
  for (const Check& c : checks) {
    list.push_back({{"name", c.name}, {"value", c.value}, {"reference", c.reference}, {"tol", c.tol}, {"pass", c.pass}});
  }
  j["checks"] = list;
  j["timing_ms"] = timing_ms;
  return j.dump(2) + "\n";
}

Report cmd_dims(const RunConfig& config) {
  const RunConfig cfg = config.resolved();
  Report report{cfg, {}, 0.0, {}, {}};
  const DimensionTable table(cfg.n, cfg.kmax);
  std::ostringstream text;
  text << "k,d(k)\n";
  for (int k = 0; k <= cfg.kmax; ++k) {
    text << k << ',' << table(k) << '\n';
    report.checks.push_back(check_close("dims/k=" + std::to_string(k), static_cast<double>(table(k)),
                                        static_cast<double>(dimension_closed_form(cfg.n, k)), 0.0));
    if (cfg.n == 2 || cfg.n == 3) {
      report.checks.push_back(check_close("dims/cone_operator/k=" + std::to_string(k),
                                          cone_operator_multiplier(cfg.n, k), static_cast<double>(table(k)), 0.0));
    }
  }
  std::ostringstream factors;
  factors << "factors:";
  if (table.factors().empty()) factors << " none (n = 1: d(k) = 2 for k >= 1)";
  for (const LinearFactor& f : table.factors()) factors << " (1 + " << f.slope_num << "k/" << f.slope_den << ")";
  report.diagnostics.push_back(text.str() + factors.str());
  return report;
}

Report cmd_forward(const RunConfig& config) {
  const RunConfig cfg = config.resolved();
  Report report{cfg, {}, 0.0, {}, {}};
  Rng rng(cfg.seed);
  std::vector<ConePoint> zetas;
  for (int i = 0; i < 6; ++i) zetas.push_back(random_interior_cone_point(cfg.n, rng, 0.6));
  const ConePoint boundary = random_boundary_cone_point(cfg.n, rng);
  const std::size_t dim = static_cast<std::size_t>(cfg.n) + 1;

  std::map<int, QuadratureRule> rules;
  const std::vector<int> resolution = kernel_resolutions(cfg, zetas, rules);

  for (const CorpusEntry& entry : corpus_for(cfg)) {
    const SphereFunction f = entry.f.as_function();
    std::map<int, Vec> samples;
    for (const auto& [res, rule] : rules) samples.emplace(res, sample(f, rule));
    const int band = entry.f.band_limit();
    double max_diff = 0.0, max_cr = 0.0;
    for (std::size_t i = 0; i < zetas.size(); ++i) {
      const QuadratureRule& rule = rules.at(resolution[i]);
      const Vec& values = samples.at(resolution[i]);
      const ForwardResult fr = forward(values, zetas[i], rule);
      if (fr.near_singular) report.diagnostics.push_back("near-singular forward evaluation for " + entry.name);
      cdouble exact{0.0, 0.0};
      for (int k = 0; k <= band; ++k) exact += entry.f.exact_component(zetas[i], k);
      max_diff = std::max(max_diff, std::abs(fr.value - exact));
      // Flow in the plane of two coordinate axes (pure scaling for n = 1), rate e^{0.3i}.
      const Vec a = unit_vector(dim, i % dim);
      const Vec b = cfg.n == 1 ? a : unit_vector(dim, (i + 1) % dim);
      max_cr = std::max(max_cr, cauchy_riemann_residual(values, rule, zetas[i], a, b, std::polar(1.0, 0.3), 1e-4));
    }
    report.checks.push_back(check_below("forward/" + entry.name + "/max_abs_diff", max_diff, cfg.tolerance("forward")));
    report.checks.push_back(check_below("forward/" + entry.name + "/cauchy_riemann", max_cr, cfg.tolerance("holomorphy")));
    if (cfg.method != "spectral") {
      AbelOptions abel;
      abel.radii = cfg.abel_radii;
      abel.resolution_scale = cfg.abel_scale;
      const TransformSamples via_abel = boundary_values_abel(f, boundary, cfg.circle_resolution, abel, kDefaultTolerances, false);
      const QuadratureRule exact_rule = sphere_rule(cfg.n, std::max(2 * band + 2, 4));
      const TransformSamples via_spectral =
          boundary_values_spectral(sample(f, exact_rule), exact_rule, boundary, band, cfg.circle_resolution);
      double diff = 0.0;
      for (std::size_t m = 0; m < via_abel.values.size(); ++m) {
        diff = std::max(diff, std::abs(via_abel.values[m] - via_spectral.values[m]));
      }
      report.checks.push_back(check_below("forward/" + entry.name + "/abel_vs_spectral", diff, cfg.tolerance("abel_vs_spectral")));
      report.checks.push_back(check_below("forward/" + entry.name + "/abel_residual", via_abel.max_abel_residual,
                                          cfg.tolerance("abel_residual")));
    }
  }
  return report;
}

Report cmd_roundtrip(const RunConfig& config) {
  const RunConfig cfg = config.resolved();
  Report report{cfg, {}, 0.0, {}, {}};
  const InversionEngine engine(cfg.n, params_for(cfg, parse_inversion_method(cfg.method)));
  const auto grid = evaluation_grid(cfg.n, cfg.grid_size, cfg.seed);
  const auto corpus = corpus_for(cfg);
  const bool abel_path = engine.params().method != InversionMethod::kSpectral;

  for (std::size_t e = 0; e < corpus.size(); ++e) {
    const CorpusEntry& entry = corpus[e];
    const ReconstructionReport rec = roundtrip(entry.f.as_function(), grid, engine);
    const std::string prefix = "roundtrip/" + entry.name + "/";
    report.checks.push_back(check_below(prefix + "max_abs_error", rec.max_abs_error, cfg.tolerance("roundtrip")));
    report.checks.push_back(check_below(prefix + "max_imag_residual", rec.max_imag_residual, cfg.tolerance("imaginary")));
    report.checks.push_back(
        check_below(prefix + "negative_mode_ratio", rec.max_negative_mode_ratio, cfg.tolerance("negative_modes")));
    report.checks.push_back(check_below(prefix + "out_of_band_ratio", rec.max_out_of_band_ratio, cfg.tolerance("aliasing")));
    if (abel_path) {
      report.checks.push_back(check_below(prefix + "abel_residual", rec.max_abel_residual, cfg.tolerance("abel_residual")));
    }
    if (rec.max_out_of_band_ratio > cfg.tolerance("aliasing")) {
      report.diagnostics.push_back("truncation: " + entry.name + " has boundary circle modes above kmax = " +
                                   std::to_string(cfg.kmax) + " (relative weight " + fmt17(rec.max_out_of_band_ratio) +
                                   "); its band limit is " + std::to_string(entry.f.band_limit()) +
                                   ", raise --kmax to at least that");
    }
    if (e + 1 == corpus.size()) {
      std::ostringstream csv;
      csv << "point_index";
      for (int j = 1; j <= cfg.n + 1; ++j) csv << ",x" << j;
      csv << ",truth,reconstructed,abs_error\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv << i;
        for (double c : grid[i].coords()) csv << ',' << fmt17(c);
        csv << ',' << fmt17(rec.truth[i]) << ',' << fmt17(rec.reconstructed[i]) << ','
            << fmt17(std::abs(rec.reconstructed[i] - rec.truth[i])) << '\n';
      }
      report.csv = csv.str();
    }
  }
  return report;
}

Report cmd_zonal(const RunConfig& config) {
  const RunConfig cfg = config.resolved();
  Report report{cfg, {}, 0.0, {}, {}};
  constexpr int kSamples = 50;
  const std::size_t dim = static_cast<std::size_t>(cfg.n) + 1;
  Rng rng(cfg.seed);
  const SpherePoint x = random_sphere_point(cfg.n, rng);
  const FiberFrame frame = fiber_frame(x);
  std::ostringstream table;
  table << "k,max|average - oracle|\n";
  for (int k = 0; k <= cfg.kmax; ++k) {
    const int fiber_res = cfg.n == 1 ? 2 : std::max(cfg.fiber_resolution, 2 * k + 2);
    const FiberRule fiber = fiber_rule(frame, fiber_res);
    double worst = 0.0, worst_imag = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const double t = std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * kSamples));
      Vec y(dim);
      for (std::size_t j = 0; j < dim; ++j) y[j] = t * x[j] + std::sqrt(1.0 - t * t) * frame.basis[0][j];
      const cdouble avg = zonal_by_average_complex(k, fiber, y);
      worst = std::max(worst, std::abs(avg.real() - zonal_oracle(cfg.n, k, t)));
      worst_imag = std::max(worst_imag, std::abs(avg.imag()));
    }
    table << k << ',' << fmt17(worst) << '\n';
    report.checks.push_back(check_below("zonal/k=" + std::to_string(k) + "/max_abs_diff", worst, cfg.tolerance("zonal")));
    report.checks.push_back(check_below("zonal/k=" + std::to_string(k) + "/max_imag", worst_imag, cfg.tolerance("zonal")));
  }
  report.diagnostics.push_back(table.str());

  const QuadratureRule rule = sphere_rule(cfg.n, std::min(cfg.sphere_resolution, 16));
  const DimensionTable dims(cfg.n, cfg.kmax);
  const int top = std::min(cfg.kmax, 3);
  for (int k = 0; k <= top; ++k) {
    for (int kp = k; kp <= top; ++kp) {
      const double expected = k == kp ? 1.0 / static_cast<double>(dims(k)) : 0.0;
      report.checks.push_back(check_close("zonal/orthogonality/k=" + std::to_string(k) + ",k'=" + std::to_string(kp),
                                          orthogonality_check(cfg.n, k, kp, rule, x), expected,
                                          cfg.tolerance("orthogonality")));
    }
  }

  // Fiber points over x see the real sphere only inside the closed unit disk: |h(y,ζ)| <= 1.
  const FiberRule fiber = fiber_rule(frame, cfg.n == 1 ? 2 : 16);
  double excess = 0.0;
  for (std::size_t j = 0; j < fiber.size(); ++j) {
    const ConePoint zeta = fiber.point(j);
    for (std::size_t i = 0; i < rule.size(); ++i) excess = std::max(excess, std::abs(h(rule.node(i), zeta)) - 1.0);
  }
  report.checks.push_back(check_below("zonal/fiber_abs_h_excess", std::max(0.0, excess), 1e-12));
  return report;
}

Report cmd_plancherel(const RunConfig& config) {
  const RunConfig cfg = config.resolved();
  Report report{cfg, {}, 0.0, {}, {}};
  const InversionEngine engine(cfg.n, params_for(cfg, parse_inversion_method(cfg.method)));
  const auto grid = evaluation_grid(cfg.n, cfg.grid_size, cfg.seed);
  const bool spectral = engine.params().method == InversionMethod::kSpectral;
  for (const CorpusEntry& entry : corpus_for(cfg)) {
    const SphereFunction f = entry.f.as_function();
    const Vec samples = sample(f, engine.sphere());
    double worst = 0.0;
    for (const SpherePoint& x : grid) {
      const double by_series = engine.invert_plancherel_sampled(samples, x);
      const double by_operator = spectral ? engine.invert_at_sampled(samples, x).value : engine.invert_at(f, x).value;
      worst = std::max(worst, std::abs(by_series - by_operator));
    }
    report.checks.push_back(check_below("plancherel/" + entry.name + "/max_form_diff", worst, cfg.tolerance("plancherel")));

    double identity = 0.0;
    const std::size_t probes = std::min<std::size_t>(grid.size(), 5);
    InversionParams p = engine.params();
    p.method = InversionMethod::kSpectral;
    for (std::size_t i = 0; i < probes; ++i) {
      for (int k = 0; k <= std::max(entry.f.band_limit(), 1); ++k) {
        identity = std::max(identity, zonal_projection_identity_check(f, grid[i], k, p));
      }
    }
    report.checks.push_back(
        check_below("plancherel/" + entry.name + "/zonal_identity", identity, cfg.tolerance("zonal_identity")));
  }
  return report;
}

Report cmd_series(const RunConfig& config) {
  const RunConfig cfg = config.resolved();
  Report report{cfg, {}, 0.0, {}, {}};
  Rng rng(cfg.seed);
  std::vector<ConePoint> zetas;
  for (int i = 0; i < 4; ++i) zetas.push_back(random_interior_cone_point(cfg.n, rng, 0.6));
  std::map<int, QuadratureRule> rules;
  const std::vector<int> resolution = kernel_resolutions(cfg, zetas, rules);
  for (const CorpusEntry& entry : corpus_for(cfg)) {
    const SphereFunction f = entry.f.as_function();
    std::map<int, Vec> samples;
    for (const auto& [res, rule] : rules) samples.emplace(res, sample(f, rule));
    const int band = entry.f.band_limit();
    std::vector<cdouble> totals;
    std::vector<std::vector<cdouble>> comps;
    for (std::size_t i = 0; i < zetas.size(); ++i) {
      const QuadratureRule& rule = rules.at(resolution[i]);
      totals.push_back(forward(samples.at(resolution[i]), zetas[i], rule).value);
      comps.push_back(fourier_components(samples.at(resolution[i]), zetas[i], band + 1, rule));
    }
    // Residual after K terms against the exactly known tail: the components above K.
    for (int kmax = 0; kmax <= band + 1; ++kmax) {
      double residual = 0.0, expected = 0.0, worst = 0.0;
      for (std::size_t i = 0; i < zetas.size(); ++i) {
        cdouble partial{0.0, 0.0}, missing{0.0, 0.0};
        for (int k = 0; k <= band + 1; ++k) (k <= kmax ? partial : missing) += comps[i][k];
        const double r = std::abs(totals[i] - partial);
        residual = std::max(residual, r);
        expected = std::max(expected, std::abs(missing));
        worst = std::max(worst, std::abs(r - std::abs(missing)));
      }
      Check c = check_close("series/" + entry.name + "/K=" + std::to_string(kmax), residual, expected,
                            cfg.tolerance("series"));
      c.pass = worst <= cfg.tolerance("series");
      report.checks.push_back(c);
    }
  }
  return report;
}

Report run_command(const RunConfig& config) {
  const RunConfig cfg = config.resolved();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  if (cfg.command == "dims") report = cmd_dims(cfg);
  else if (cfg.command == "forward") report = cmd_forward(cfg);
  else if (cfg.command == "roundtrip") report = cmd_roundtrip(cfg);
  else if (cfg.command == "zonal") report = cmd_zonal(cfg);
  else if (cfg.command == "plancherel") report = cmd_plancherel(cfg);
  else report = cmd_series(cfg);
  if (cfg.timing) {
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kConfigError, "cannot write '" + path + "'");
    out << text;
  };
  if (!cfg.json_path.empty()) write(cfg.json_path, report.to_json());
  if (!cfg.csv_path.empty() && !report.csv.empty()) write(cfg.csv_path, report.csv);
  return report;
}

}  // namespace horo
