#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ncsbp/fluxes.hpp"

namespace ncsbp {

using TwoPointFlux = std::function<Vec(const Vec&, const Vec&)>;

// [[w]] . f^num - [[psi]] for a conservative flux in direction dir.
double check_conservative_ec(const System& sys, const TwoPointFlux& fnum, const Vec& a, const Vec& b,
                             int dir);

// [[w]] . f^num - sum_k (alpha_k <w> . H_k^num [[g_k]] + (1 - alpha_k) <w . H_k> [[g_k]]) - [[psi]]
// Zero for EC, nonpositive for ES.
double check_nonconservative_ec(const FluxSet& fs, const Vec& a, const Vec& b, int dir);

// The numerical entropy flux induced by an EC flux set (alpha blend of the
// first and third forms).
double induced_entropy_flux(const FluxSet& fs, const Vec& a, const Vec& b, int dir);

// omega(u0) . (du0/dt * dx) + F^num(u0, u+) - F^num(u-, u0) for the three-point
// finite-volume update of the middle cell. Zero for EC flux sets.
double check_three_state(const FluxSet& fs, const Vec& um, const Vec& u0, const Vec& up, int dir);

// Ingredients of the four nonconservative forms, one entry per term.
struct FormInputs {
  Vec f_num;
  std::vector<Vec> h_num;     // forms 3 and 4
  std::vector<double> g_num;  // form 2
  std::vector<Vec> hg_num;    // form 4
};

// Evaluates the entropy condition of form 1..4; throws std::invalid_argument
// for an unknown form or missing ingredients.
double check_form_condition(int form, const System& sys, const FormInputs& in, const Vec& a, const Vec& b,
                            int dir);

// f^num and H^num of a flux set at one pair, ready for check_form_condition.
FormInputs form_inputs(const FluxSet& fs, const Vec& a, const Vec& b, int dir);

struct Fluctuations {
  Vec minus;  // D^-(u-, u+), acts on the left cell
  Vec plus;   // D^+(u-, u+), acts on the right cell
};

Fluctuations fluctuations_from_fluxset(const FluxSet& fs, const Vec& a, const Vec& b, int dir);

// [[F]] - (w(u+) . D^+ + w(u-) . D^-); nonpositive means admissible.
double check_fluctuation_condition(const System& sys, const Fluctuations& d, const Vec& a, const Vec& b,
                                   int dir);

struct WellBalancedResidual {
  Vec minus;
  Vec plus;
};

WellBalancedResidual check_well_balanced(const FluxSet& fs, const Vec& a, const Vec& b, int dir);

enum class ConditionKind { entropy_conservative, entropy_stable, well_balanced, consistency };

std::string to_string(ConditionKind kind);

struct ConditionReport {
  std::string condition;
  std::string fluxset;
  long samples = 0;
  // Positive means violated beyond zero; for EC and WB this is a max of
  // normalized absolute residuals, for ES the max signed residual.
  double max_violation = 0.0;
  Vec worst_minus;
  Vec worst_plus;
  std::uint64_t seed = 0;
};

using PairSampler = std::function<std::pair<Vec, Vec>(std::mt19937_64&)>;

// Independent random admissible states from the system sampler.
PairSampler random_pairs(SystemPtr sys);
// Lake at rest: zero velocities (and w = p = 0), h + b constant, b random.
PairSampler lake_at_rest_pairs(SystemPtr sys);

ConditionReport sample_condition(ConditionKind kind, const FluxSet& fs, long samples, std::uint64_t seed,
                                 const PairSampler& sampler = nullptr);

// condition,fluxset,samples,max_violation,seed
void write_reports_csv(std::ostream& os, const std::vector<ConditionReport>& reports);

}  // namespace ncsbp
