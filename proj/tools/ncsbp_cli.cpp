// ncsbp: command line driver.
//   run           integrate one experiment, print a JSON summary, optional CSV
//   convergence   L2 errors and EOC over a list of element counts
//   check         sample a flux-set entropy condition
//   list-presets
// Exit codes: 0 ok, 1 invalid configuration, 2 numerical failure,
// 3 condition violated.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncsbp/conditions.hpp"
#include "ncsbp/experiments.hpp"

using nlohmann::json;
using namespace ncsbp;

namespace {

constexpr int kInvalid = 1;
constexpr int kNumerical = 2;
constexpr int kViolation = 3;

struct Overrides {
  std::string preset;
  std::string config_file;
  std::optional<std::string> system, flux, surface_flux, mesh, ic, bc, method, entropy;
  std::vector<double> alpha;
  std::optional<int> degree, elements, m, n, callback_every;
  std::optional<double> cfl, t_final, gravity, celerity, gamma;
  std::optional<std::uint64_t> seed;
};

template <class T>
void take(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void apply_json(const json& j, ExperimentConfig& c) {
  static const std::vector<std::string> known = {
      "name", "system", "flux", "surface_flux", "alpha", "m", "n", "gravity", "celerity", "gamma", "entropy",
      "degree", "elements", "mesh", "domain_a", "domain_b", "length", "cfl", "t_final", "ic", "bc", "method",
      "seed", "callback_every", "preset"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("unknown config key '" + key + "'");
  }
  take(j, "name", c.name);
  take(j, "system", c.system);
  take(j, "flux", c.flux);
  take(j, "surface_flux", c.surface_flux);
  take(j, "alpha", c.alpha);
  take(j, "m", c.m);
  take(j, "n", c.n);
  take(j, "gravity", c.gravity);
  take(j, "celerity", c.celerity);
  take(j, "gamma", c.gamma);
  take(j, "entropy", c.entropy);
  take(j, "degree", c.degree);
  take(j, "elements", c.elements);
  take(j, "mesh", c.mesh);
  take(j, "domain_a", c.domain_a);
  take(j, "domain_b", c.domain_b);
  take(j, "length", c.length);
  take(j, "cfl", c.cfl);
  take(j, "t_final", c.t_final);
  take(j, "ic", c.ic);
  take(j, "bc", c.bc);
  take(j, "method", c.method);
  take(j, "seed", c.seed);
  take(j, "callback_every", c.callback_every);
}

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig c;
  json file;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) throw std::invalid_argument("cannot open config file '" + o.config_file + "'");
    try {
      file = json::parse(in);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed config file: ") + e.what());
    }
  }
  std::string preset_name = o.preset;
  if (preset_name.empty() && file.contains("preset")) preset_name = file.at("preset").get<std::string>();
  if (!preset_name.empty()) c = preset(preset_name);
  if (!file.is_null()) {
    try {
      apply_json(file, c);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("bad config value: ") + e.what());
    }
  }
  if (o.system) c.system = *o.system;
  if (o.flux) c.flux = *o.flux;
  if (o.surface_flux) c.surface_flux = *o.surface_flux;
  if (o.mesh) c.mesh = *o.mesh;
  if (o.ic) c.ic = *o.ic;
  if (o.bc) c.bc = *o.bc;
  if (o.method) c.method = *o.method;
  if (o.entropy) c.entropy = *o.entropy;
  if (!o.alpha.empty()) c.alpha = o.alpha;
  if (o.degree) c.degree = *o.degree;
  if (o.elements) c.elements = *o.elements;
  if (o.m) c.m = *o.m;
  if (o.n) c.n = *o.n;
  if (o.callback_every) c.callback_every = *o.callback_every;
  if (o.cfl) c.cfl = *o.cfl;
  if (o.t_final) c.t_final = *o.t_final;
  if (o.gravity) c.gravity = *o.gravity;
  if (o.celerity) c.celerity = *o.celerity;
  if (o.gamma) c.gamma = *o.gamma;
  if (o.seed) c.seed = *o.seed;
  return c;
}

void add_config_options(CLI::App* app, Overrides& o) {
  app->add_option("--preset", o.preset, "start from a named preset");
  app->add_option("--config", o.config_file, "JSON file with config keys")->check(CLI::ExistingFile);
  app->add_option("--system", o.system, "var_advection|coupled_burgers|monomial|shallow_water|sainte_marie|euler");
  app->add_option("--flux", o.flux, "volume flux set");
  app->add_option("--surface-flux", o.surface_flux, "surface flux set");
  app->add_option("--alpha", o.alpha, "flux parameters")->delimiter(',');
  app->add_option("--degree,-p", o.degree);
  app->add_option("--elements,-K", o.elements, "1D count or per direction in 2D");
  app->add_option("--m", o.m);
  app->add_option("--n", o.n);
  app->add_option("--cfl", o.cfl);
  app->add_option("--tfinal", o.t_final);
  app->add_option("--gravity", o.gravity);
  app->add_option("--celerity", o.celerity);
  app->add_option("--gamma", o.gamma);
  app->add_option("--entropy", o.entropy, "total_energy|thermodynamic");
  app->add_option("--mesh", o.mesh, "line|warped2d");
  app->add_option("--ic", o.ic);
  app->add_option("--bc", o.bc, "periodic|wall");
  app->add_option("--method", o.method, "ssprk104|rk4");
  app->add_option("--seed", o.seed);
  app->add_option("--every", o.callback_every, "record diagnostics every N steps");
}

json summary_json(const ExperimentConfig& c, const RunSummary& s) {
  json j;
  j["name"] = c.name;
  j["system"] = c.system;
  j["flux"] = c.flux;
  j["degree"] = c.degree;
  j["elements"] = c.elements;
  j["steps"] = s.steps;
  j["t_final"] = s.t_final;
  j["entropy_initial"] = s.entropy_initial;
  j["entropy_final"] = s.entropy_final;
  j["entropy_error"] = s.entropy_error;
  j["entropy_residual_final"] = s.entropy_residual_final;
  j["entropy_residual_max"] = s.entropy_residual_max;
  j["mass_drift"] = s.mass_drift;
  j["mass_rate_final"] = s.mass_rate_final;
  if (s.error) j["l2_error"] = *s.error;
  return j;
}

int cmd_run(const Overrides& o, const std::string& output) {
  const ExperimentConfig c = resolve(o);
  Experiment ex = build_experiment(c);
  std::ofstream csv;
  if (!output.empty()) {
    csv.open(output);
    if (!csv) throw std::invalid_argument("cannot write '" + output + "'");
  }
  const RunSummary s = run_experiment(ex, output.empty() ? nullptr : &csv);
  std::cout << summary_json(c, s).dump(2) << '\n';
  return 0;
}

int cmd_convergence(const Overrides& o, const std::vector<int>& levels, const std::string& output) {
  const ExperimentConfig c = resolve(o);
  const auto rows = run_convergence(c, levels);
  if (output.empty()) {
    write_convergence_csv(std::cout, rows);
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write '" + output + "'");
    write_convergence_csv(out, rows);
    write_convergence_csv(std::cout, rows);
  }
  return 0;
}

int cmd_check(const Overrides& o, long samples, std::string condition, double tol) {
  const ExperimentConfig c = resolve(o);
  const SystemPtr sys = build_system(c);
  const std::string flux = c.flux;
  const FluxSetPtr fs = build_fluxset(flux, sys, c.alpha);
  if (condition == "auto") condition = (flux == "es" || flux == "es_kep") ? "es" : "ec";
  ConditionKind kind;
  PairSampler sampler;
  if (condition == "ec") {
    kind = ConditionKind::entropy_conservative;
  } else if (condition == "es") {
    kind = ConditionKind::entropy_stable;
  } else if (condition == "wb") {
    kind = ConditionKind::well_balanced;
    sampler = lake_at_rest_pairs(sys);
  } else {
    throw std::invalid_argument("unknown condition '" + condition + "'");
  }
  if (tol < 0.0) tol = kind == ConditionKind::entropy_stable ? 1e-14 : 1e-12;
  const ConditionReport r = sample_condition(kind, *fs, samples, c.seed, sampler);
  json j;
  j["condition"] = r.condition;
  j["fluxset"] = r.fluxset;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["max_violation"] = r.max_violation;
  j["tolerance"] = tol;
  const int nv = sys->num_vars();
  j["worst_minus"] = std::vector<double>(r.worst_minus.v.begin(), r.worst_minus.v.begin() + nv);
  j["worst_plus"] = std::vector<double>(r.worst_plus.v.begin(), r.worst_plus.v.begin() + nv);
  const bool ok = r.max_violation <= tol;
  j["pass"] = ok;
  std::cout << j.dump(2) << '\n';
  return ok ? 0 : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-conservative and entropy-stable split-form DG solver"};
  app.require_subcommand(1);

  Overrides run_o;
  std::string run_out;
  auto* run = app.add_subcommand("run", "integrate one experiment");
  add_config_options(run, run_o);
  run->add_option("--output,-o", run_out, "CSV diagnostics file");

  Overrides conv_o;
  std::string conv_out;
  std::vector<int> levels = {4, 8, 16};
  auto* conv = app.add_subcommand("convergence", "EOC study");
  add_config_options(conv, conv_o);
  conv->add_option("--levels", levels, "element counts")->delimiter(',');
  conv->add_option("--output,-o", conv_out, "CSV file");

  Overrides check_o;
  long samples = 10000;
  std::string condition = "auto";
  double tol = -1.0;
  auto* check = app.add_subcommand("check", "sample an entropy condition of a flux set");
  add_config_options(check, check_o);
  check->add_option("--samples", samples)->check(CLI::PositiveNumber);
  check->add_option("--condition", condition, "auto|ec|es|wb");
  check->add_option("--tol", tol, "violation threshold");

  auto* list = app.add_subcommand("list-presets", "print preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*run) return cmd_run(run_o, run_out);
    if (*conv) return cmd_convergence(conv_o, levels, conv_out);
    if (*check) return cmd_check(check_o, samples, condition, tol);
    if (*list) {
      for (const auto& name : preset_names()) std::cout << name << '\n';
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kInvalid;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kInvalid;
}
