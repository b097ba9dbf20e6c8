#include "doctest.h"

#include <cmath>
#include <limits>

#include "ncsbp/experiments.hpp"
#include "ncsbp/timeint.hpp"

using namespace ncsbp;

namespace {

double one_step(Method method, double z) {
  Field u(1, 1);
  u.at(0, 0)[0] = 1.0;
  const RhsFn rhs = [z](const Field& x, Field& dx) {
    dx = Field(1, 1);
    dx.at(0, 0)[0] = z * x.at(0, 0)[0];
  };
  step(rhs, u, 1.0, method);
  return u.at(0, 0)[0];
}

}  // namespace

TEST_CASE("SSPRK(10,4) stability polynomial against the exact rational oracle") {
  CHECK(std::fabs(one_step(Method::ssprk104, -0.5) - 0.6065409840182282) < 1e-15);
  CHECK(std::fabs(one_step(Method::ssprk104, -3.0) - 0.062734374999999995) < 1e-15);
  CHECK(std::fabs(one_step(Method::ssprk104, 0.25) - 1.2840248831024188) < 1e-15);
}

TEST_CASE("classical RK4 stability polynomial") {
  const double z = -0.7;
  const double expected = 1.0 + z + z * z / 2.0 + z * z * z / 6.0 + z * z * z * z / 24.0;
  CHECK(std::fabs(one_step(Method::rk4, z) - expected) < 1e-15);
}

TEST_CASE("fourth-order convergence on a time-dependent ODE") {
  for (Method method : {Method::ssprk104, Method::rk4}) {
    std::vector<double> errs;
    for (int n : {10, 20}) {
      Field u(1, 1);
      u.at(0, 0)[0] = 1.0;
      const RhsFn rhs = [](const Field& x, Field& dx) {
        dx = Field(1, 1);
        dx.at(0, 0)[0] = std::cos(x.t) * x.at(0, 0)[0];
      };
      for (int s = 0; s < n; ++s) step(rhs, u, 1.0 / n, method);
      errs.push_back(std::fabs(u.at(0, 0)[0] - std::exp(std::sin(1.0))));
      CHECK(u.t == doctest::Approx(1.0));
    }
    CHECK(std::log2(errs[0] / errs[1]) > 3.8);
  }
}

TEST_CASE("integrate lands exactly on the final time and calls back") {
  ExperimentConfig c = preset("advection");
  c.elements = 4;
  c.degree = 2;
  c.cfl = 0.5;
  c.t_final = 0.1234;
  Experiment ex = build_experiment(c);
  Field u = ex.initial;
  IntegratorConfig ic;
  ic.cfl = 0.5;
  ic.t_final = 0.1234;
  ic.callback_every = 3;
  long calls = 0;
  const IntegrationResult r = integrate(*ex.disc, u, ic, [&](const Field&, long) {
    ++calls;
    return true;
  });
  CHECK(u.t == 0.1234);
  CHECK(r.t == 0.1234);
  CHECK(calls >= 2 + r.steps / 3 - 1);
  // coefficient field untouched
  CHECK(u.at(1, 1)[1] == ex.initial.at(1, 1)[1]);
}

TEST_CASE("stable time step scales with the CFL number and 2p + 1") {
  ExperimentConfig c = preset("advection");
  c.elements = 8;
  c.degree = 3;
  Experiment ex = build_experiment(c);
  const double a = stable_dt(*ex.disc, ex.initial, 0.1);
  const double b = stable_dt(*ex.disc, ex.initial, 0.2);
  CHECK(b == doctest::Approx(2.0 * a));
  // max speed of a = 2 + cos(pi x) on the nodes is at most 3
  CHECK(a >= 0.1 * 0.25 / 3.0 / 7.0 * (1.0 - 1e-12));
  CHECK_THROWS_AS(stable_dt(*ex.disc, ex.initial, 0.0), std::invalid_argument);
}

TEST_CASE("blow-up raises NumericalFailure") {
  ExperimentConfig c = preset("advection");
  c.elements = 4;
  c.degree = 3;
  Experiment ex = build_experiment(c);
  Field u = ex.initial;
  IntegratorConfig ic;
  ic.cfl = 50.0;
  ic.t_final = 50.0;
  CHECK_THROWS_AS(integrate(*ex.disc, u, ic), NumericalFailure);
  IntegratorConfig limited;
  limited.cfl = 0.1;
  limited.t_final = 1.0;
  limited.max_steps = 3;
  Field v = ex.initial;
  CHECK_THROWS_AS(integrate(*ex.disc, v, limited), NumericalFailure);
}
