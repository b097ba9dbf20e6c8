// Acceptance runner: one PASS/FAIL line per criterion, indented detail lines
// below it. Optional arguments select criteria by number.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncsbp/conditions.hpp"
#include "ncsbp/experiments.hpp"

using namespace ncsbp;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void note(const std::string& line) { details.push_back(line); }
  void require(bool ok, const std::string& line) {
    pass = pass && ok;
    details.push_back((ok ? "ok    " : "FAIL  ") + line);
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double max_abs_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

Outcome sbp_property() {
  Outcome o;
  double worst = 0.0;
  for (int p = 0; p <= 8; ++p) worst = std::max(worst, verify_sbp_property(build_gll_operator(p)));
  o.require(worst <= 1e-13, fmt("max |MD + D^T M - B| over p = 0..8: %.3e (limit 1e-13)", worst));
  return o;
}

SystemPtr sys_of(SystemKind kind, int dim, auto tweak) {
  SystemParams p;
  p.dim = dim;
  tweak(p);
  return make_system(kind, p);
}

Outcome flux_conditions() {
  Outcome o;
  constexpr long kSamples = 10000;
  constexpr std::uint64_t kSeed = 20240601;
  std::vector<std::pair<std::string, FluxSetPtr>> ec;
  const auto none = [](SystemParams&) {};
  ec.emplace_back("advection", advection_fluxset(sys_of(SystemKind::var_advection, 1, none)));
  ec.emplace_back("coupled Burgers", coupled_burgers_fluxset(sys_of(SystemKind::coupled_burgers, 1, none)));
  const std::pair<int, int> pairs[] = {{4, 4}, {5, 5}, {4, 5}, {5, 4}, {3, 5}, {5, 3}};
  for (auto [m, n] : pairs) {
    auto split = sys_of(SystemKind::monomial, 1, [&](SystemParams& p) {
      p.m = m;
      p.n = n;
      p.monomial_form = MonomialForm::split;
    });
    ec.emplace_back(fmt("monomial EC2 (%d,%d)", m, n), monomial_ec2_fluxset(split, 0.5));
    if (n % 2 == 1) {
      auto product = sys_of(SystemKind::monomial, 1, [&](SystemParams& p) {
        p.m = m;
        p.n = n;
        p.monomial_form = MonomialForm::product;
      });
      ec.emplace_back(fmt("monomial EC1 (%d,%d)", m, n), monomial_ec1_fluxset(product));
    }
  }
  for (int dim : {1, 2}) {
    const auto water = [](SystemParams& p) {
      p.gravity = 9.81;
      p.celerity = 1.98;
    };
    for (double alpha : {0.0, 0.5, 1.0}) {
      ec.emplace_back(fmt("shallow water %dD alpha=%.1f", dim, alpha),
                      shallow_water_fluxset(sys_of(SystemKind::shallow_water, dim, water), alpha));
    }
    ec.emplace_back(fmt("Sainte-Marie %dD (1/2,1,2/3)", dim),
                    sainte_marie_fluxset(sys_of(SystemKind::sainte_marie, dim, water), 0.5, 1.0, 2.0 / 3.0));
    for (auto ent : {EulerEntropy::total_energy, EulerEntropy::thermodynamic}) {
      ec.emplace_back(fmt("Euler EC-KEP %dD %s", dim, ent == EulerEntropy::total_energy ? "total energy" : "-rho s"),
                      euler_ec_kep_fluxset(sys_of(SystemKind::euler_internal_energy, dim,
                                                  [&](SystemParams& p) { p.entropy = ent; })));
    }
  }
  double worst_ec = 0.0;
  for (const auto& [label, fs] : ec) {
    const ConditionReport r = sample_condition(ConditionKind::entropy_conservative, *fs, kSamples, kSeed);
    worst_ec = std::max(worst_ec, r.max_violation);
    o.require(r.max_violation <= 1e-12, fmt("EC %-34s %.3e", label.c_str(), r.max_violation));
  }
  double worst_es = -1.0;
  for (int dim : {1, 2}) {
    for (auto mom : {EsMomentum::dissipative, EsMomentum::kep}) {
      const auto sys = sys_of(SystemKind::euler_internal_energy, dim,
                              [](SystemParams& p) { p.entropy = EulerEntropy::thermodynamic; });
      const auto fs = euler_es_fluxset(sys, mom);
      const ConditionReport r = sample_condition(ConditionKind::entropy_stable, *fs, kSamples, kSeed);
      worst_es = std::max(worst_es, r.max_violation);
      o.require(r.max_violation <= 1e-14,
                fmt("ES Euler %dD %-12s max signed residual %.3e", dim,
                    mom == EsMomentum::dissipative ? "dissipative" : "kep", r.max_violation));
    }
  }
  o.note(fmt("worst EC %.3e, worst ES %.3e, %ld pairs each, seed %llu", worst_ec, worst_es, kSamples,
             static_cast<unsigned long long>(kSeed)));
  return o;
}

Outcome advection() {
  Outcome o;
  for (int p = 1; p <= 5; ++p) {
    ExperimentConfig c = preset("advection");
    c.degree = p;
    c.callback_every = 500;
    const RunSummary s = run_experiment(c);
    o.require(s.entropy_error <= 1e-10 && s.entropy_residual_max <= 1e-12,
              fmt("p=%d steps=%ld entropy error %.3e (<=1e-10), max |entropy rate| %.3e (<=1e-12)", p, s.steps,
                  s.entropy_error, s.entropy_residual_max));
  }
  return o;
}

Outcome monomial() {
  Outcome o;
  struct Case {
    const char* flux;
    int m, n;
    enum { ec, not_ec, skip } entropy;
    bool mass_band;  // |mass| must lie in [1e-7, 1e-3] instead of <= 1e-13
  };
  const std::vector<Case> cases = {
      {"ec2", 4, 4, Case::ec, false}, {"ec2", 5, 5, Case::ec, false}, {"ec2", 4, 5, Case::ec, false},
      {"ec2", 5, 4, Case::ec, false}, {"ec2", 3, 5, Case::ec, false}, {"ec2", 5, 3, Case::ec, false},
      {"ec1", 4, 5, Case::ec, true},  {"ec1", 5, 5, Case::ec, false}, {"ec1", 3, 5, Case::ec, false},
      {"ec1", 5, 3, Case::ec, false}, {"ec1", 4, 4, Case::not_ec, false}, {"ec1", 5, 4, Case::skip, true},
  };
  for (const Case& k : cases) {
    for (int p = 1; p <= 5; ++p) {
      ExperimentConfig c = preset(k.flux == std::string("ec1") ? "monomial_ec1" : "monomial_ec2");
      c.m = k.m;
      c.n = k.n;
      c.degree = p;
      const RunSummary s = run_experiment(c);
      const double rate = std::fabs(s.mass_rate_final[0]);
      const double drift = std::fabs(s.mass_drift[0]);
      bool ok = true;
      std::string what;
      if (k.entropy == Case::ec) {
        ok = ok && s.entropy_error <= 1e-10;
        what += fmt("entropy %.3e (<=1e-10)", s.entropy_error);
      } else if (k.entropy == Case::not_ec) {
        ok = ok && s.entropy_error >= 1e-4;
        what += fmt("entropy %.3e (>=1e-4)", s.entropy_error);
      } else {
        what += fmt("entropy %.3e (not checked)", s.entropy_error);
      }
      if (k.mass_band) {
        ok = ok && rate >= 1e-7 && rate <= 1e-3;
        what += fmt(", mass rate %.3e (in [1e-7,1e-3])", rate);
      } else {
        ok = ok && rate <= 1e-13;
        what += fmt(", mass rate %.3e (<=1e-13)", rate);
      }
      what += fmt(", mass change %.3e", drift);
      o.require(ok, fmt("%s (%d,%d) p=%d T=%.6f: ", k.flux, k.m, k.n, p, s.t_final) + what);
    }
  }
  return o;
}

Outcome sainte_marie() {
  Outcome o;
  for (int p = 1; p <= 5; ++p) {
    ExperimentConfig c = preset("sainte_marie_ec");
    c.degree = p;
    const RunSummary s = run_experiment(c);
    o.require(s.entropy_error <= 1e-10, fmt("p=%d steps=%ld entropy error %.3e (<=1e-10)", p, s.steps, s.entropy_error));
  }
  return o;
}

Outcome well_balanced() {
  Outcome o;
  const char* names[] = {"H-H0", "v1", "v2", "w", "p"};
  for (int p = 2; p <= 5; ++p) {
    ExperimentConfig c = preset("wb2d");
    c.degree = p;
    Experiment ex = build_experiment(c);
    Field u = ex.initial;
    IntegratorConfig ic;
    ic.cfl = c.cfl;
    ic.t_final = c.t_final;
    const IntegrationResult r = integrate(*ex.disc, u, ic);
    const std::vector<double> norms = lake_at_rest_norms(ex, u, kLakeLevel);
    std::string line = fmt("p=%d steps=%ld T=%.1f", p, r.steps, r.t);
    for (std::size_t i = 0; i < norms.size(); ++i) line += fmt(" %s=%.2e", names[i], norms[i]);
    o.require(max_abs_of(norms) <= 1e-10, line + " (all <=1e-10)");
  }
  return o;
}

Outcome free_stream() {
  Outcome o;
  for (int p = 2; p <= 5; ++p) {
    ExperimentConfig c = preset("free_stream");
    c.degree = p;
    Experiment ex = build_experiment(c);
    Field u = ex.initial;
    IntegratorConfig ic;
    ic.cfl = c.cfl;
    ic.t_final = c.t_final;
    const IntegrationResult r = integrate(*ex.disc, u, ic);
    double dev = 0.0;
    for (std::size_t i = 0; i < u.data.size(); ++i) dev = std::max(dev, max_abs(u.data[i] - ex.initial.data[i], 4));
    o.require(dev <= 1e-12, fmt("p=%d steps=%ld T=%.1f max deviation %.3e (<=1e-12)", p, r.steps, r.t, dev));
  }
  return o;
}

Outcome pressure_equilibrium() {
  Outcome o;
  for (const char* mesh : {"line", "warped2d"}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      ExperimentConfig c = preset("pep");
      c.seed = seed;
      c.mesh = mesh;
      if (c.mesh == "warped2d") c.elements = 4;
      Experiment ex = build_experiment(c);
      const System& sys = *ex.system;
      const int dim = sys.dim();
      Field u = ex.initial;
      const double dt = stable_dt(*ex.disc, u, c.cfl);
      step(*ex.disc, u, dt, Method::ssprk104);
      double dv = 0.0;
      double dp = 0.0;
      double drho = 0.0;
      for (std::size_t i = 0; i < u.data.size(); ++i) {
        const Vec& s = u.data[i];
        for (int d = 0; d < dim; ++d) dv = std::max(dv, std::fabs(s[1 + d] / s[0] - 1.0));
        dp = std::max(dp, std::fabs(euler_pressure(sys, s) - 1.0));
        drho = std::max(drho, std::fabs(s[0] - ex.initial.data[i][0]));
      }
      o.require(dv <= 1e-13 && dp <= 1e-13,
                fmt("%s seed=%llu dt=%.3e max|dv|=%.3e max|dp|=%.3e (<=1e-13), density moved by %.3e", mesh,
                    static_cast<unsigned long long>(seed), dt, dv, dp, drho));
    }
  }
  return o;
}

Outcome total_energy() {
  Outcome o;
  ExperimentConfig c = preset("euler_energy");
  const RunSummary s = run_experiment(c);
  o.require(s.entropy_error <= 1e-11,
            fmt("p=%d K=%d steps=%ld T=%.2f energy %.15g, relative drift %.3e (<=1e-11), absolute %.3e", c.degree,
                c.elements, s.steps, s.t_final, s.entropy_initial, s.entropy_error,
                std::fabs(s.entropy_final - s.entropy_initial)));
  return o;
}

Outcome convergence() {
  Outcome o;
  ExperimentConfig c = preset("euler_mms");
  const std::vector<ConvergenceRow> rows = run_convergence(c, {4, 8, 16});
  for (const ConvergenceRow& r : rows) {
    o.note(fmt("K=%d (%dx%d) L2 error %.4e EOC %s", r.elements * r.elements, r.elements, r.elements, r.error,
               r.eoc ? fmt("%.2f", *r.eoc).c_str() : "-"));
  }
  const double last = *rows.back().eoc;
  o.require(last >= 3.0, fmt("p=%d T=%.1f CFL=%.2f EOC on the last pair %.3f (>=3)", c.degree, c.t_final, c.cfl, last));
  return o;
}

Outcome split_forms() {
  Outcome o;
  const char* names[] = {"form1 pointwise", "form2 <g>", "form3 <h>", "form4 <hg>", "form4 <h><g>", "form4 {{hg}}"};
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  int row_index = 0;
  for (SplitFormRow row : kAllSplitFormRows) {
    double worst = 0.0;
    for (int p = 1; p <= 6; ++p) {
      const SbpOperator op = build_gll_operator(p);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> h(static_cast<std::size_t>(p + 1)), g(h.size());
        for (auto& v : h) v = dist(rng);
        for (auto& v : g) v = dist(rng);
        worst = std::max(worst, split_form_equivalence(op, h, g, row));
      }
    }
    o.require(worst <= 1e-14, fmt("%-16s max deviation %.3e over p=1..6 (<=1e-14)", names[row_index], worst));
    ++row_index;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "SBP property p=0..8", sbp_property},
      {2, "flux entropy conditions over 1e4 pairs", flux_conditions},
      {3, "variable-coefficient advection entropy conservation", advection},
      {4, "monomial EC1/EC2 entropy and mass", monomial},
      {5, "Sainte-Marie entropy conservation", sainte_marie},
      {6, "2D lake at rest on the warped mesh", well_balanced},
      {7, "free-stream preservation", free_stream},
      {8, "pressure equilibrium preservation", pressure_equilibrium},
      {9, "total energy with gravity potential", total_energy},
      {10, "manufactured solution convergence", convergence},
      {11, "split-form kernel identities", split_forms},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : all) {
    if (!wanted.empty() && !wanted.contains(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs);
    for (const auto& d : out.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
