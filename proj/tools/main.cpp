// reserve-spacing: viability analysis of a two-reserve network.
//
// Subcommands: matrix, sweep, optimize, simulate. Each takes --config <path>
// (JSON, '-' for stdin) plus flag overrides; flags win. Exit codes: 0 on
// success, 2 for configuration problems, 3 for computation failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "reserve/io.hpp"
#include "reserve/model.hpp"
#include "reserve/optimize.hpp"
#include "reserve/presets.hpp"
#include "reserve/simulate.hpp"
#include "reserve/spectral.hpp"

namespace {

using nlohmann::json;
using namespace reserve;

constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_config(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json cfg;
  try {
    cfg = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
  return cfg;
}

void reject_unknown_keys(const json& cfg, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, _] : cfg.items())
    if (!allowed.contains(key))
      throw ConfigError("unknown key '" + key + "' in " + where);
}

double number(const json& cfg, const std::string& key) {
  const auto& v = cfg.at(key);
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& cfg, const std::string& key, double fallback) {
  return cfg.contains(key) ? number(cfg, key) : fallback;
}

long long integer(const json& cfg, const std::string& key, long long fallback) {
  if (!cfg.contains(key)) return fallback;
  const auto& v = cfg.at(key);
  if (!v.is_number_integer()) throw ConfigError("key '" + key + "' must be an integer");
  return v.get<long long>();
}

std::uint64_t seed_from(const json& cfg) {
  const auto& v = cfg.at("seed");
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0))
    throw ConfigError("key 'seed' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string text_or(const json& cfg, const std::string& key, const std::string& fallback) {
  if (!cfg.contains(key)) return fallback;
  const auto& v = cfg.at(key);
  if (!v.is_string()) throw ConfigError("key '" + key + "' must be a string");
  return v.get<std::string>();
}

const std::set<std::string> kParamKeys = {"variant", "r", "mu", "alpha", "a", "b"};

std::set<std::string> with_params(std::set<std::string> extra) {
  extra.insert(kParamKeys.begin(), kParamKeys.end());
  return extra;
}

ModelParams params_from(const json& cfg) {
  for (const char* key : {"r", "mu", "alpha"})
    if (!cfg.contains(key))
      throw ConfigError(std::string("missing required parameter '") + key + "'");
  return ModelParams(number(cfg, "r"), number(cfg, "mu"), number(cfg, "alpha"),
                     number_or(cfg, "a", 0.0), number_or(cfg, "b", 0.0));
}

ModelVariant variant_from(const json& cfg) {
  return parse_variant(text_or(cfg, "variant", "baseline"));
}

// Round to the emitted precision so JSON output carries 12 significant digits.
double num12(double x) { return std::stod(format_g12(x)); }

json units_block() {
  return json{{"distance", "km"}, {"time_step", "year"}};
}

json params_block(const ModelParams& p) {
  return json{{"r", p.r()}, {"mu", p.mu()}, {"alpha", p.alpha()},
              {"a", p.a()}, {"b", p.b()}};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
  out << text;
}

// --- matrix ---------------------------------------------------------------

TransitionMatrix named_matrix(const std::string& name, const ModelParams& p,
                              ModelVariant variant, Distance d) {
  if (name == "E") return extinction_matrix(p.r(), p.mu(), d);
  if (name == "C") return colonisation_matrix(p.alpha(), d);
  if (name == "R") return recruitment_matrix(p.a());
  if (name == "L") return local_extinction_matrix(p.b());
  if (name == "A") return compose(variant, p, d);
  throw ConfigError("unknown matrix '" + name + "' (expected E, C, R, L or A)");
}

std::vector<std::string> default_show(ModelVariant variant) {
  switch (variant) {
    case ModelVariant::Baseline: return {"E", "C", "A"};
    case ModelVariant::Recruitment: return {"E", "C", "R", "A"};
    case ModelVariant::Full: return {"E", "L", "C", "R", "A"};
  }
  return {};
}

int run_matrix(const json& cfg) {
  reject_unknown_keys(cfg, with_params({"d", "show", "format", "out"}), "matrix config");
  const ModelParams p = params_from(cfg);
  const ModelVariant variant = variant_from(cfg);
  const Distance d(number_or(cfg, "d", 0.0));
  const std::string format = text_or(cfg, "format", "text");

  std::vector<std::string> show = default_show(variant);
  if (cfg.contains("show")) {
    if (!cfg.at("show").is_array()) throw ConfigError("key 'show' must be an array");
    show = cfg.at("show").get<std::vector<std::string>>();
  }

  std::string out;
  if (format == "text") {
    std::ostringstream os;
    os << "# reserve-spacing matrix (distances in km, one step = one year)\n"
       << "# variant=" << to_string(variant) << " r=" << format_g12(p.r())
       << " mu=" << format_g12(p.mu()) << " alpha=" << format_g12(p.alpha())
       << " a=" << format_g12(p.a()) << " b=" << format_g12(p.b())
       << " d=" << format_g12(d.km()) << "\n";
    for (const auto& name : show)
      os << matrix_to_text(name, named_matrix(name, p, variant, d));
    out = os.str();
  } else if (format == "json") {
    json doc{{"command", "matrix"},
             {"units", units_block()},
             {"variant", to_string(variant)},
             {"params", params_block(p)},
             {"d", d.km()}};
    json mats = json::object();
    for (const auto& name : show) {
      const TransitionMatrix m = named_matrix(name, p, variant, d);
      json rows = json::array();
      for (int i = 0; i < 3; ++i)
        rows.push_back({num12(m(i, 0)), num12(m(i, 1)), num12(m(i, 2))});
      mats[name] = rows;
    }
    doc["matrices"] = mats;
    out = doc.dump(2) + "\n";
  } else {
    throw ConfigError("format must be 'text' or 'json'");
  }
  write_output(out, text_or(cfg, "out", ""));
  return 0;
}

// --- sweep ----------------------------------------------------------------

ModelParams override_params(const ModelParams& base, const json& entry) {
  auto pick = [&](const char* key, double fallback) {
    return entry.contains(key) ? number(entry, key) : fallback;
  };
  return ModelParams(pick("r", base.r()), pick("mu", base.mu()),
                     pick("alpha", base.alpha()), pick("a", base.a()),
                     pick("b", base.b()));
}

int run_sweep(const json& cfg) {
  reject_unknown_keys(cfg,
                      with_params({"objective", "d_min", "d_max", "points",
                                   "series", "preset", "out"}),
                      "sweep config");

  std::vector<CurveRecord> records;
  if (cfg.contains("preset")) {
    const std::string preset = text_or(cfg, "preset", "");
    for (const auto& [key, _] : cfg.items())
      if (key != "preset" && key != "out")
        throw ConfigError("preset sweeps take no other keys; found '" + key + "'");
    if (!is_preset(preset)) throw ConfigError("unknown preset '" + preset + "'");
    records = run_preset(preset);
  } else {
    const ModelParams base = params_from(cfg);
    const ModelVariant variant = variant_from(cfg);
    if (!cfg.contains("objective")) throw ConfigError("missing required key 'objective'");
    const ObjectiveSpec spec{variant, parse_objective(text_or(cfg, "objective", ""))};
    const double d_min = number_or(cfg, "d_min", 0.0);
    const double d_max = number_or(cfg, "d_max", default_d_max(base));
    const int points = static_cast<int>(integer(cfg, "points", 401));

    std::vector<std::pair<std::string, ModelParams>> series;
    if (cfg.contains("series")) {
      if (!cfg.at("series").is_array() || cfg.at("series").empty())
        throw ConfigError("key 'series' must be a non-empty array");
      for (const auto& entry : cfg.at("series")) {
        if (!entry.is_object()) throw ConfigError("series entries must be objects");
        reject_unknown_keys(entry, {"label", "r", "mu", "alpha", "a", "b"},
                            "series entry");
        if (!entry.contains("label")) throw ConfigError("series entry needs a 'label'");
        series.emplace_back(text_or(entry, "label", ""), override_params(base, entry));
      }
    } else {
      series.emplace_back(to_string(variant), base);
    }

    for (const auto& [label, params] : series) {
      validate_objective(spec, params);
      for (const CurvePoint& pt : sweep(spec, params, d_min, d_max, points))
        records.push_back({label, pt.d, pt.value});
    }
  }

  write_output(curves_to_csv(records), text_or(cfg, "out", ""));
  return 0;
}

// --- optimize ---------------------------------------------------------------

int run_optimize(const json& cfg) {
  reject_unknown_keys(cfg, with_params({"objective", "d_min", "d_max", "tol", "out"}),
                      "optimize config");
  const ModelParams p = params_from(cfg);
  const ModelVariant variant = variant_from(cfg);
  if (!cfg.contains("objective")) throw ConfigError("missing required key 'objective'");
  const ObjectiveSpec spec{variant, parse_objective(text_or(cfg, "objective", ""))};
  validate_objective(spec, p);
  const double d_min = number_or(cfg, "d_min", 0.0);
  const double d_max = number_or(cfg, "d_max", default_d_max(p));
  const double tol = number_or(cfg, "tol", 1e-6);

  const SpacingOptimum opt = optimize_spacing(spec, p, d_min, d_max, tol);

  json curve = json::array();
  for (const CurvePoint& pt : opt.curve)
    curve.push_back({num12(pt.d), num12(pt.value)});
  json doc{{"command", "optimize"},
           {"units", units_block()},
           {"variant", to_string(variant)},
           {"objective", to_string(spec.kind)},
           {"params", params_block(p)},
           {"search", {{"d_min", d_min}, {"d_max", d_max}, {"tol", tol}}},
           {"d_star", num12(opt.d_star)},
           {"value", num12(opt.value)},
           {"plateau", opt.plateau},
           {"curve", curve}};
  write_output(doc.dump(2) + "\n", text_or(cfg, "out", ""));
  return 0;
}

// --- simulate ---------------------------------------------------------------

int run_simulate(const json& cfg) {
  reject_unknown_keys(cfg,
                      with_params({"mode", "d", "n_reps", "horizon", "burn_in",
                                   "seed", "initial", "out"}),
                      "simulate config");
  const ModelParams p = params_from(cfg);
  const ModelVariant variant = variant_from(cfg);
  const Distance d(number_or(cfg, "d", 0.0));
  const std::string mode = text_or(cfg, "mode", "survival");
  if (mode != "survival" && mode != "stationary")
    throw ConfigError("mode must be 'survival' or 'stationary'");
  if (!cfg.contains("seed")) throw ConfigError("missing required key 'seed'");

  SimConfig sim{variant, p, d,
                integer(cfg, "n_reps", 100000),
                static_cast<int>(integer(cfg, "horizon", 20)),
                seed_from(cfg),
                static_cast<int>(integer(cfg, "burn_in", 1000))};

  json doc{{"command", "simulate"},
           {"mode", mode},
           {"units", units_block()},
           {"variant", to_string(variant)},
           {"params", params_block(p)},
           {"d", d.km()},
           {"n_reps", sim.n_reps},
           {"seed", static_cast<std::uint64_t>(sim.seed)}};

  auto zscore = [](double mc, double se, double analytic) -> json {
    if (se > 0.0) return num12((mc - analytic) / se);
    return mc == analytic ? json(0.0) : json();
  };

  if (mode == "survival") {
    std::array<double, 3> p0{0, 0, 1};
    if (cfg.contains("initial")) {
      if (!cfg.at("initial").is_array() || cfg.at("initial").size() != 3)
        throw ConfigError("key 'initial' must be an array of 3 probabilities");
      for (int i = 0; i < 3; ++i) p0[i] = cfg.at("initial")[i].get<double>();
    }
    const OccupancyDistribution initial(p0[0], p0[1], p0[2]);
    const SimulationEstimate est = estimate_survival(sim, initial);
    const double analytic = survival_probability(variant, p, d, initial, sim.horizon);
    doc["horizon"] = sim.horizon;
    doc["initial"] = {p0[0], p0[1], p0[2]};
    doc["estimate"] = {{"mean", num12(est.mean)},
                       {"std_error", num12(est.std_error)},
                       {"n", est.n}};
    doc["analytic"] = num12(analytic);
    doc["z"] = zscore(est.mean, est.std_error, analytic);
  } else {
    validate_objective({variant, ObjectiveKind::EquilibriumPersistence}, p);
    const StationaryEstimate est = estimate_stationary(sim);
    const StationarySummary analytic = stationary_distribution(compose(variant, p, d));
    doc["burn_in"] = sim.burn_in;
    json states = json::array();
    for (int i = 0; i < 3; ++i)
      states.push_back({{"state", i},
                        {"mean", num12(est.mean[i])},
                        {"std_error", num12(est.std_error[i])},
                        {"analytic", num12(analytic.pi[i])},
                        {"z", zscore(est.mean[i], est.std_error[i], analytic.pi[i])}});
    doc["estimate"] = states;
    doc["persistence_analytic"] = num12(analytic.persistence);
  }
  write_output(doc.dump(2) + "\n", text_or(cfg, "out", ""));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-reserve viability analysis: transition matrices, viability "
               "curves, optimal spacing, and Monte Carlo cross-checks"};
  app.require_subcommand(1);

  struct Flags {
    std::optional<std::string> config, variant, objective, format, mode, preset, out;
    std::optional<double> r, mu, alpha, a, b, d, d_min, d_max, tol;
    std::optional<long long> points, n_reps, horizon, burn_in;
    std::optional<std::uint64_t> seed;
    std::vector<double> initial;
    std::vector<std::string> show;
  } f;

  auto add_common = [&](CLI::App* cmd, bool wants_d) {
    cmd->add_option("--config", f.config, "JSON config file, or '-' for stdin");
    cmd->add_option("--variant", f.variant, "baseline|recruitment|full");
    cmd->add_option("--r", f.r, "catastrophe probability per step");
    cmd->add_option("--mu", f.mu, "mean catastrophe size (km)");
    cmd->add_option("--alpha", f.alpha, "dispersal decay rate (1/km)");
    cmd->add_option("--a", f.a, "external recruitment probability");
    cmd->add_option("--b", f.b, "local extinction probability");
    cmd->add_option("--out", f.out, "output path (default stdout)");
    if (wants_d) cmd->add_option("--d", f.d, "inter-reserve distance (km)");
  };

  CLI::App* matrix = app.add_subcommand("matrix", "print stage and composed matrices");
  add_common(matrix, true);
  matrix->add_option("--show", f.show, "matrices to print (E,C,R,L,A)")->delimiter(',');
  matrix->add_option("--format", f.format, "text|json");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sample a viability curve as CSV");
  add_common(sweep_cmd, false);
  sweep_cmd->add_option("--objective", f.objective,
                        "quasi_extinction_rate|equilibrium_persistence");
  sweep_cmd->add_option("--preset", f.preset, "fig3|fig5|fig6|fig8|fig9");
  sweep_cmd->add_option("--d-min", f.d_min, "grid start (km)");
  sweep_cmd->add_option("--d-max", f.d_max, "grid end (km)");
  sweep_cmd->add_option("--points", f.points, "grid size (default 401)");

  CLI::App* optimize_cmd = app.add_subcommand("optimize", "find the best spacing");
  add_common(optimize_cmd, false);
  optimize_cmd->add_option("--objective", f.objective,
                           "quasi_extinction_rate|equilibrium_persistence");
  optimize_cmd->add_option("--d-min", f.d_min, "search start (km)");
  optimize_cmd->add_option("--d-max", f.d_max, "search end (km)");
  optimize_cmd->add_option("--tol", f.tol, "bracket width target (km)");

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo estimate vs analytic value");
  add_common(simulate_cmd, true);
  simulate_cmd->add_option("--mode", f.mode, "survival|stationary");
  simulate_cmd->add_option("--n-reps", f.n_reps, "replicates");
  simulate_cmd->add_option("--horizon", f.horizon, "steps per replicate");
  simulate_cmd->add_option("--burn-in", f.burn_in, "discarded steps (stationary)");
  simulate_cmd->add_option("--seed", f.seed, "64-bit reproducibility seed");
  simulate_cmd->add_option("--initial", f.initial, "initial distribution p0,p1,p2")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  json cfg;
  try {
    cfg = f.config ? load_config(*f.config) : json::object();
    auto set_num = [&](const char* key, const std::optional<double>& v) {
      if (v) cfg[key] = *v;
    };
    auto set_int = [&](const char* key, const std::optional<long long>& v) {
      if (v) cfg[key] = *v;
    };
    auto set_str = [&](const char* key, const std::optional<std::string>& v) {
      if (v) cfg[key] = *v;
    };
    set_str("variant", f.variant);
    set_str("objective", f.objective);
    set_str("format", f.format);
    set_str("mode", f.mode);
    set_str("preset", f.preset);
    set_str("out", f.out);
    set_num("r", f.r);
    set_num("mu", f.mu);
    set_num("alpha", f.alpha);
    set_num("a", f.a);
    set_num("b", f.b);
    set_num("d", f.d);
    set_num("d_min", f.d_min);
    set_num("d_max", f.d_max);
    set_num("tol", f.tol);
    set_int("points", f.points);
    set_int("n_reps", f.n_reps);
    set_int("horizon", f.horizon);
    set_int("burn_in", f.burn_in);
    if (f.seed) cfg["seed"] = *f.seed;
    if (!f.initial.empty()) cfg["initial"] = f.initial;
    if (!f.show.empty()) cfg["show"] = f.show;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (matrix->parsed()) return run_matrix(cfg);
    if (sweep_cmd->parsed()) return run_sweep(cfg);
    if (optimize_cmd->parsed()) return run_optimize(cfg);
    return run_simulate(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidParameter& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IncompatibleObjective& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
}
