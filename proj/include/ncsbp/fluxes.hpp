#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ncsbp/systems.hpp"
#include "ncsbp/vec.hpp"

namespace ncsbp {

// (b - a) / (log b - log a); series expansion when the arguments nearly agree.
// Throws std::domain_error for nonpositive input.
double logarithmic_mean(double a, double b);

// 0.5 * (a_minus * b_plus + a_plus * b_minus)
double product_mean(double a_minus, double a_plus, double b_minus, double b_plus);

// Closed form h^num [[u^n]] of the first monomial scheme (pairs with
// alpha = (m + 1) / (m + n + 1)). Exact polynomial quotient; antisymmetric.
// For m, n both even the division remainder is dropped (not EC).
double monomial_ec1_fluctuation(int m, int n, double u_minus, double u_plus);
double monomial_ec1_alpha(int m, int n);

// Two-point fluxes of a scheme. All contractions take a direction vector m
// (a unit axis vector in 1D, a scaled contravariant normal or averaged metric
// in 2D) and return m . (quantity), so the same object drives volume and
// surface terms on curvilinear meshes.
class FluxSet {
 public:
  FluxSet(SystemPtr system, std::vector<double> alpha, bool symmetric);
  virtual ~FluxSet() = default;

  virtual std::string name() const = 0;
  const System& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }
  double alpha(int term) const { return alpha_[static_cast<std::size_t>(term)]; }
  const std::vector<double>& alphas() const { return alpha_; }
  bool symmetric() const { return symmetric_; }
  // False when the scheme only defines the fluctuation H^num [[g]].
  virtual bool has_factor_flux() const { return true; }

  // Per-axis primitives.
  virtual Vec conservative(const Vec& a, const Vec& b, int dir) const = 0;
  virtual Vec factor(const Vec& a, const Vec& b, int dir, int term) const;
  // H_k^num (a, b) (g_k(b) - g_k(a)).
  virtual Vec fluctuation(const Vec& a, const Vec& b, int dir, int term) const;

  // m . f^num
  virtual Vec flux(const Vec& a, const Vec& b, const Normal& m) const;
  // sum_k alpha_k m . H_k^num [[g_k]]
  virtual Vec fluct(const Vec& a, const Vec& b, const Normal& m) const;
  // sum_k (1 - alpha_k) m . H_k(a) [[g_k]]
  Vec local(const Vec& a, const Vec& b, const Normal& m) const;
  // m . f^num + 0.5 (fluct + local), the interface contribution seen from a.
  Vec surface(const Vec& in, const Vec& out, const Normal& m) const;

 protected:
  int dims() const { return system_->dim(); }

 private:
  SystemPtr system_;
  std::vector<double> alpha_;
  bool symmetric_;
};

using FluxSetPtr = std::shared_ptr<const FluxSet>;

Normal axis(int dir);

enum class MeanKind { arithmetic, power };
enum class EsMomentum { dissipative, kep };

FluxSetPtr advection_fluxset(SystemPtr system);
FluxSetPtr coupled_burgers_fluxset(SystemPtr system);
// System must be the monomial product form.
FluxSetPtr monomial_ec1_fluxset(SystemPtr system);
// System must be the monomial split form. h^num is <u^n> (arithmetic) or <u>^n (power).
FluxSetPtr monomial_ec2_fluxset(SystemPtr system, double alpha, MeanKind h_mean = MeanKind::arithmetic);
FluxSetPtr shallow_water_fluxset(SystemPtr system, double alpha);
FluxSetPtr sainte_marie_fluxset(SystemPtr system, double alpha1, double alpha2, double alpha3);
FluxSetPtr euler_ec_kep_fluxset(SystemPtr system);
FluxSetPtr euler_es_fluxset(SystemPtr system, EsMomentum momentum = EsMomentum::dissipative);
// Arithmetic means of f and H with alpha = 1; consistent but not EC in general.
FluxSetPtr central_fluxset(SystemPtr system);

// Consistency f^num(u,u) = f(u), fluctuation(u,u) = 0 and (if declared)
// symmetry, as a max abs deviation over the given state.
double fluxset_consistency(const FluxSet& fs, const Vec& u);
double fluxset_symmetry(const FluxSet& fs, const Vec& a, const Vec& b);

}  // namespace ncsbp
