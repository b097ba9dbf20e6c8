#pragma once

#include <functional>
#include <stdexcept>

#include "ncsbp/semidisc.hpp"

namespace ncsbp {

enum class Method { ssprk104, rk4 };

struct IntegratorConfig {
  Method method = Method::ssprk104;
  double cfl = 0.1;
  double t_final = 0.0;
  int callback_every = 0;  // steps between callbacks; 0 means only at start and end
  long max_steps = 100000000;
};

// Thrown when the state stops being finite; carries the time of failure.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double t) : std::runtime_error(what), time(t) {}
  double time;
};

// cfl * min over nodes of (width / lambda(u)) / (2p + 1). Returns +infinity
// when every wave speed vanishes.
double stable_dt(const Discretization& disc, const Field& u, double cfl);

// Generic right-hand side so the integrators also serve plain ODE tests.
using RhsFn = std::function<void(const Field& u, Field& du)>;

void step(const RhsFn& rhs, Field& u, double dt, Method method);
void step(const Discretization& disc, Field& u, double dt, Method method);

// Called with the current state and step index; return false to stop early.
using StepCallback = std::function<bool(const Field& u, long step)>;

struct IntegrationResult {
  long steps = 0;
  double t = 0.0;
};

// Steps with stable_dt, clipping the last step to t_final; callbacks at
// start, every callback_every steps and at the end. Throws NumericalFailure
// on non-finite states.
IntegrationResult integrate(const Discretization& disc, Field& u, const IntegratorConfig& config,
                            const StepCallback& callback = nullptr);

}  // namespace ncsbp
