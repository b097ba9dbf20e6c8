#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ncsbp/vec.hpp"

namespace ncsbp {

enum class SystemKind {
  var_advection,
  coupled_burgers,
  monomial,
  shallow_water,
  sainte_marie,
  euler_internal_energy
};

// product: u_t + u^m (u^n)_x = 0.  split: u_t + (u^{m+n})_x - u^n (u^m)_x = 0.
enum class MonomialForm { product, split };

// Entropy attached to the Euler system: total energy rho*E or -rho*s.
enum class EulerEntropy { total_energy, thermodynamic };

struct SystemParams {
  int dim = 1;
  int m = 1;
  int n = 1;
  MonomialForm monomial_form = MonomialForm::product;
  double gravity = 1.0;
  double celerity = 2.0;
  double gamma = 1.4;
  EulerEntropy entropy = EulerEntropy::total_energy;
};

// A hyperbolic system u_t + sum_j f^j(u)_x_j + sum_k H_k^j(u) g_k^j(u)_x_j = s(u)
// together with an entropy pair. Evolved variables sit in [0, num_vars) of a
// Vec, coefficient fields in [num_vars, num_vars + num_aux).
class System {
 public:
  System(SystemParams params, int vars, int aux, int terms)
      : params_(params), num_vars_(vars), num_aux_(aux), num_terms_(terms) {}
  virtual ~System() = default;

  const SystemParams& params() const { return params_; }
  int dim() const { return params_.dim; }
  int num_vars() const { return num_vars_; }
  int num_aux() const { return num_aux_; }
  int width() const { return num_vars_ + num_aux_; }
  int num_terms() const { return num_terms_; }

  virtual std::string name() const = 0;
  virtual std::vector<std::string> variable_names() const = 0;

  virtual Vec flux(const Vec& u, int dir) const = 0;
  // Column k of H^dir and the matching scalar g_k^dir.
  virtual Vec factor(const Vec& u, int dir, int term) const = 0;
  virtual double gfun(const Vec& u, int dir, int term) const = 0;
  virtual Vec source(const Vec& /*u*/) const { return Vec{}; }

  virtual double entropy(const Vec& u) const = 0;
  virtual Vec entropy_vars(const Vec& u) const = 0;
  virtual double entropy_flux(const Vec& u, int dir) const = 0;
  double potential(const Vec& u, int dir) const {
    return dot(entropy_vars(u), flux(u, dir), num_vars_) - entropy_flux(u, dir);
  }

  // Largest characteristic speed over all directions.
  virtual double wave_speed(const Vec& u) const = 0;
  virtual bool admissible(const Vec& /*u*/) const { return true; }
  // Random admissible state; coefficient fields included.
  virtual Vec sample(std::mt19937_64& rng) const = 0;
  // Ghost state for a slip wall with outward unit normal.
  virtual Vec mirror(const Vec& u, const Normal& /*unit*/) const { return u; }

  Vec flux(const Vec& u, const Normal& m) const {
    Vec f = flux(u, 0) * m[0];
    if (dim() > 1) f += flux(u, 1) * m[1];
    return f;
  }

 private:
  SystemParams params_;
  int num_vars_;
  int num_aux_;
  int num_terms_;
};

using SystemPtr = std::shared_ptr<const System>;

// Throws std::invalid_argument for inadmissible parameters (g, c <= 0,
// gamma <= 1, m or n < 1, m + n > 40, unsupported dimension).
SystemPtr make_system(SystemKind kind, const SystemParams& params = {});

// max_j |omega . df/du_j + sum_k omega . H_k dg_k/du_j - dF/du_j| with central
// differences of step 1e-6 (scaled by max(1, |u_j|)). Throws for inadmissible u.
double check_entropy_compatibility(const System& sys, const Vec& u, int dir);

// max_j |omega_j - dU/du_j| by central differences.
double check_entropy_gradient(const System& sys, const Vec& u);

// Euler helpers shared with the flux module.
double euler_pressure(const System& sys, const Vec& u);

}  // namespace ncsbp
