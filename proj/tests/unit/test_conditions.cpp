#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "ncsbp/conditions.hpp"

using namespace ncsbp;

namespace {

// Inviscid Burgers with U = u^2 / 2, kept local to exercise the conservative check.
class Burgers final : public System {
 public:
  Burgers() : System({}, 1, 0, 0) {}
  std::string name() const override { return "burgers"; }
  std::vector<std::string> variable_names() const override { return {"u"}; }
  Vec flux(const Vec& u, int) const override { return unit(0.5 * u[0] * u[0]); }
  Vec factor(const Vec&, int, int) const override { return Vec{}; }
  double gfun(const Vec&, int, int) const override { return 0.0; }
  double entropy(const Vec& u) const override { return 0.5 * u[0] * u[0]; }
  Vec entropy_vars(const Vec& u) const override { return unit(u[0]); }
  double entropy_flux(const Vec& u, int) const override { return u[0] * u[0] * u[0] / 3.0; }
  double wave_speed(const Vec& u) const override { return std::fabs(u[0]); }
  Vec sample(std::mt19937_64& rng) const override { return unit(std::uniform_real_distribution<double>(-2, 2)(rng)); }

 private:
  static Vec unit(double v) {
    Vec r;
    r[0] = v;
    return r;
  }
};

SystemPtr water(SystemKind kind, int dim) {
  SystemParams p;
  p.dim = dim;
  p.gravity = 9.81;
  p.celerity = 1.98;
  return make_system(kind, p);
}

SystemPtr monomial(int m, int n, MonomialForm form) {
  SystemParams p;
  p.m = m;
  p.n = n;
  p.monomial_form = form;
  return make_system(SystemKind::monomial, p);
}

}  // namespace

TEST_CASE("Tadmor condition for the conservative Burgers flux") {
  const Burgers sys;
  const TwoPointFlux ec = [](const Vec& a, const Vec& b) {
    Vec f;
    f[0] = (a[0] * a[0] + a[0] * b[0] + b[0] * b[0]) / 6.0;
    return f;
  };
  const TwoPointFlux central = [](const Vec& a, const Vec& b) {
    Vec f;
    f[0] = 0.25 * (a[0] * a[0] + b[0] * b[0]);
    return f;
  };
  std::mt19937_64 rng(1);
  double worst_ec = 0.0;
  double worst_central = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const Vec a = sys.sample(rng);
    const Vec b = sys.sample(rng);
    worst_ec = std::fmax(worst_ec, std::fabs(check_conservative_ec(sys, ec, a, b, 0)));
    worst_central = std::fmax(worst_central, std::fabs(check_conservative_ec(sys, central, a, b, 0)));
  }
  CHECK(worst_ec < 1e-14);
  // [[u]]^3 / 12 for the arithmetic mean of f
  CHECK(worst_central > 0.1);
  Vec a;
  Vec b;
  a[0] = 0.0;
  b[0] = 1.0;
  CHECK(check_conservative_ec(sys, central, a, b, 0) == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("EC flux sets pass the sampled condition") {
  std::vector<FluxSetPtr> sets = {
      advection_fluxset(make_system(SystemKind::var_advection)),
      coupled_burgers_fluxset(make_system(SystemKind::coupled_burgers)),
      monomial_ec1_fluxset(monomial(4, 5, MonomialForm::product)),
      monomial_ec1_fluxset(monomial(3, 3, MonomialForm::product)),
      monomial_ec2_fluxset(monomial(4, 4, MonomialForm::split), 0.5),
      monomial_ec2_fluxset(monomial(5, 3, MonomialForm::split), 0.3),
      sainte_marie_fluxset(water(SystemKind::sainte_marie, 2), 0.5, 1.0, 2.0 / 3.0),
  };
  for (double alpha : {0.0, 0.5, 1.0}) sets.push_back(shallow_water_fluxset(water(SystemKind::shallow_water, 2), alpha));
  for (auto ent : {EulerEntropy::total_energy, EulerEntropy::thermodynamic}) {
    SystemParams p;
    p.dim = 2;
    p.entropy = ent;
    sets.push_back(euler_ec_kep_fluxset(make_system(SystemKind::euler_internal_energy, p)));
  }
  for (const auto& fs : sets) {
    const ConditionReport r = sample_condition(ConditionKind::entropy_conservative, *fs, 2000, 42);
    CHECK_MESSAGE(r.max_violation <= 1e-12, fs->name() << " " << r.max_violation);
  }
}

TEST_CASE("EC1 with even n and the central flux are not EC") {
  const auto ec1 = monomial_ec1_fluxset(monomial(4, 4, MonomialForm::product));
  CHECK(sample_condition(ConditionKind::entropy_conservative, *ec1, 500, 1).max_violation > 1e-6);
  const auto central = central_fluxset(monomial(2, 2, MonomialForm::split));
  CHECK(sample_condition(ConditionKind::entropy_conservative, *central, 500, 1).max_violation > 1e-6);
}

TEST_CASE("ES flux never produces entropy") {
  for (auto mom : {EsMomentum::dissipative, EsMomentum::kep}) {
    for (int dim : {1, 2}) {
      SystemParams p;
      p.dim = dim;
      p.entropy = EulerEntropy::thermodynamic;
      const auto es = euler_es_fluxset(make_system(SystemKind::euler_internal_energy, p), mom);
      const ConditionReport r = sample_condition(ConditionKind::entropy_stable, *es, 2000, 9);
      CHECK(r.max_violation <= 1e-14);
    }
  }
}

TEST_CASE("ES residual equals minus half [[log rho]] [[rho]] |V_int| in 1D") {
  SystemParams p;
  p.entropy = EulerEntropy::thermodynamic;
  const SystemPtr sys = make_system(SystemKind::euler_internal_energy, p);
  const auto es = euler_es_fluxset(sys);
  Vec a;
  Vec b;
  a[0] = 1.0;
  a[1] = 0.5;
  a[2] = 2.5;
  b[0] = 2.0;
  b[1] = 2.0 * (-0.2);
  b[2] = 1.5 / 0.4;
  const double pa = 1.0;
  const double pb = 1.5;
  const double vmax = 0.5;
  const double vint = 0.5 * (0.5 - 0.2) - (pb - pa) / (2.0 * 1.5 * vmax);
  // the residual is (gamma - 1) times the entropy-flux form
  const double expected = -0.5 * std::log(2.0) * 1.0 * std::fabs(vint) * 0.4;
  CHECK(check_nonconservative_ec(*es, a, b, 0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("lake at rest pairs are preserved by the water flux sets") {
  for (int dim : {1, 2}) {
    const SystemPtr sw = water(SystemKind::shallow_water, dim);
    const SystemPtr sm = water(SystemKind::sainte_marie, dim);
    for (double alpha : {0.0, 0.5, 1.0}) {
      const auto fs = shallow_water_fluxset(sw, alpha);
      CHECK(sample_condition(ConditionKind::well_balanced, *fs, 1000, 3, lake_at_rest_pairs(sw)).max_violation <= 1e-14);
    }
    const auto fs = sainte_marie_fluxset(sm, 0.5, 1.0, 2.0 / 3.0);
    CHECK(sample_condition(ConditionKind::well_balanced, *fs, 1000, 3, lake_at_rest_pairs(sm)).max_violation <= 1e-14);
  }
  CHECK_THROWS_AS(lake_at_rest_pairs(make_system(SystemKind::var_advection)), std::invalid_argument);
}

TEST_CASE("the four forms reduce to each other for the shallow water flux") {
  const SystemPtr sw = water(SystemKind::shallow_water, 1);
  const auto pointwise = shallow_water_fluxset(sw, 0.0);
  const auto averaged = shallow_water_fluxset(sw, 1.0);
  std::mt19937_64 rng(2);
  for (int s = 0; s < 200; ++s) {
    const Vec a = sw->sample(rng);
    const Vec b = sw->sample(rng);
    const double scale = 1.0 + 100.0 * max_abs(a, 3) * max_abs(b, 3);
    // alpha = 1: form 3, and form 4 with (Hg)^num = H^num <g>
    FormInputs in = form_inputs(*averaged, a, b, 0);
    CHECK(std::fabs(check_form_condition(3, *sw, in, a, b, 0)) < 1e-13 * scale);
    const double gmean = 0.5 * (sw->gfun(a, 0, 0) + sw->gfun(b, 0, 0));
    in.hg_num = {in.h_num[0] * gmean};
    CHECK(std::fabs(check_form_condition(4, *sw, in, a, b, 0)) < 1e-13 * scale);
    // alpha = 0: form 1, and form 2 with g^num = <g>
    FormInputs local = form_inputs(*pointwise, a, b, 0);
    CHECK(std::fabs(check_form_condition(1, *sw, local, a, b, 0)) < 1e-13 * scale);
    local.g_num = {gmean};
    CHECK(std::fabs(check_form_condition(2, *sw, local, a, b, 0)) < 1e-13 * scale);
  }
  FormInputs empty;
  const Vec u = sw->sample(rng);
  CHECK_THROWS_AS(check_form_condition(5, *sw, empty, u, u, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_form_condition(3, *sw, empty, u, u, 0), std::invalid_argument);
}

TEST_CASE("fluctuation form and three-state identity") {
  const SystemPtr sm = water(SystemKind::sainte_marie, 1);
  const auto fs = sainte_marie_fluxset(sm, 0.5, 1.0, 2.0 / 3.0);
  std::mt19937_64 rng(4);
  for (int s = 0; s < 200; ++s) {
    const Vec a = sm->sample(rng);
    const Vec b = sm->sample(rng);
    const Vec c = sm->sample(rng);
    const Fluctuations d = fluctuations_from_fluxset(*fs, a, b, 0);
    const double scale = 1.0 + max_abs(a, 5) * max_abs(b, 5) * 1e2;
    CHECK(std::fabs(check_fluctuation_condition(*sm, d, a, b, 0)) < 1e-12 * scale * scale);
    CHECK(std::fabs(check_three_state(*fs, a, b, c, 0)) < 1e-12 * scale * scale);
  }
}

TEST_CASE("report csv") {
  const auto fs = advection_fluxset(make_system(SystemKind::var_advection));
  std::vector<ConditionReport> reps = {sample_condition(ConditionKind::consistency, *fs, 10, 5)};
  std::ostringstream os;
  write_reports_csv(os, reps);
  CHECK(os.str().rfind("condition,fluxset,samples,max_violation,seed\nconsistency,", 0) == 0);
  CHECK(to_string(ConditionKind::entropy_stable) == "es");
}
