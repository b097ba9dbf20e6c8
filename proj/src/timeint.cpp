#include "ncsbp/timeint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace ncsbp {

double stable_dt(const Discretization& disc, const Field& u, double cfl) {
  if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  const System& sys = disc.system();
  double best = std::numeric_limits<double>::infinity();
  for (int e = 0; e < disc.num_elements(); ++e) {
    for (int q = 0; q < disc.nodes_per_element(); ++q) {
      const double lambda = sys.wave_speed(u.at(e, q));
      if (lambda > 0.0) best = std::min(best, disc.geometry(e, q).width / lambda);
    }
  }
  return cfl * best / (2.0 * disc.degree() + 1.0);
}

namespace {

// y = a * x + b * y + c * z, elementwise over the states
void combine(Field& y, double b, const Field& x, double a, const Field* z = nullptr, double c = 0.0) {
  for (std::size_t i = 0; i < y.data.size(); ++i) {
    Vec r = y.data[i] * b + x.data[i] * a;
    if (z) r += z->data[i] * c;
    y.data[i] = r;
  }
}

void ssprk104(const RhsFn& rhs, Field& u, double dt) {
  static constexpr std::array<double, 10> c = {0.0,       1.0 / 6.0, 1.0 / 3.0, 0.5,       2.0 / 3.0,
                                               1.0 / 3.0, 0.5,       2.0 / 3.0, 5.0 / 6.0, 1.0};
  const double t0 = u.t;
  Field q1 = u;
  Field q2 = u;
  Field k;
  for (int s = 0; s < 5; ++s) {
    q1.t = t0 + c[static_cast<std::size_t>(s)] * dt;
    rhs(q1, k);
    combine(q1, 1.0, k, dt / 6.0);
  }
  combine(q2, 1.0 / 25.0, q1, 9.0 / 25.0);
  combine(q1, -5.0, q2, 15.0);
  for (int s = 5; s < 9; ++s) {
    q1.t = t0 + c[static_cast<std::size_t>(s)] * dt;
    rhs(q1, k);
    combine(q1, 1.0, k, dt / 6.0);
  }
  q1.t = t0 + dt;
  rhs(q1, k);
  combine(q2, 1.0, q1, 3.0 / 5.0, &k, dt / 10.0);
  u.data = std::move(q2.data);
  u.t = t0 + dt;
}

void rk4(const RhsFn& rhs, Field& u, double dt) {
  const double t0 = u.t;
  Field k1, k2, k3, k4;
  rhs(u, k1);
  Field tmp = u;
  combine(tmp, 1.0, k1, 0.5 * dt);
  tmp.t = t0 + 0.5 * dt;
  rhs(tmp, k2);
  tmp = u;
  combine(tmp, 1.0, k2, 0.5 * dt);
  tmp.t = t0 + 0.5 * dt;
  rhs(tmp, k3);
  tmp = u;
  combine(tmp, 1.0, k3, dt);
  tmp.t = t0 + dt;
  rhs(tmp, k4);
  for (std::size_t i = 0; i < u.data.size(); ++i) {
    u.data[i] += (dt / 6.0) * (k1.data[i] + 2.0 * k2.data[i] + 2.0 * k3.data[i] + k4.data[i]);
  }
  u.t = t0 + dt;
}

bool finite(const Field& u, int nv) {
  for (const Vec& v : u.data) {
    for (int i = 0; i < nv; ++i) {
      if (!std::isfinite(v[i])) return false;
    }
  }
  return true;
}

}  // namespace

void step(const RhsFn& rhs, Field& u, double dt, Method method) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (method == Method::ssprk104) {
    ssprk104(rhs, u, dt);
  } else {
    rk4(rhs, u, dt);
  }
}

void step(const Discretization& disc, Field& u, double dt, Method method) {
  const int nv = disc.system().num_vars();
  const Field before = u;
  step([&disc](const Field& x, Field& dx) { disc.rhs(x, dx); }, u, dt, method);
  // Coefficient fields are exact constants in time.
  for (std::size_t i = 0; i < u.data.size(); ++i) {
    for (int j = nv; j < kMaxVars; ++j) u.data[i][j] = before.data[i][j];
  }
}

IntegrationResult integrate(const Discretization& disc, Field& u, const IntegratorConfig& config,
                            const StepCallback& callback) {
  if (!(config.cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (config.t_final < u.t) throw std::invalid_argument("final time precedes the current time");
  const int nv = disc.system().num_vars();
  IntegrationResult res{0, u.t};
  if (callback && !callback(u, 0)) return res;
  bool called_last = true;
  while (u.t < config.t_final) {
    if (res.steps >= config.max_steps) throw NumericalFailure("step limit reached", u.t);
    double dt = stable_dt(disc, u, config.cfl);
    const double remaining = config.t_final - u.t;
    const bool last = !(dt < remaining) || remaining - dt < 1e-14 * std::max(1.0, config.t_final);
    if (last) dt = remaining;
    step(disc, u, dt, config.method);
    if (last) u.t = config.t_final;
    ++res.steps;
    if (!finite(u, nv)) throw NumericalFailure("non-finite state", u.t);
    called_last = false;
    if (callback && config.callback_every > 0 && res.steps % config.callback_every == 0) {
      called_last = true;
      if (!callback(u, res.steps)) break;
    }
  }
  if (callback && !called_last) callback(u, res.steps);
  res.t = u.t;
  return res;
}

}  // namespace ncsbp
