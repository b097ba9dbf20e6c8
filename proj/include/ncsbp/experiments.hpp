#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncsbp/diagnostics.hpp"
#include "ncsbp/timeint.hpp"

namespace ncsbp {

struct ExperimentConfig {
  std::string name = "custom";
  std::string system = "var_advection";
  std::string flux;          // empty: the system's default EC flux
  std::string surface_flux;  // empty: same as flux
  std::vector<double> alpha; // overrides of the flux parameters
  int m = 1;
  int n = 1;
  double gravity = 1.0;
  double celerity = 2.0;
  double gamma = 1.4;
  std::string entropy = "total_energy";  // euler: total_energy | thermodynamic
  int degree = 3;
  int elements = 32;          // 1D count, or per direction in 2D
  std::string mesh = "line";  // line | warped2d
  double domain_a = -1.0;
  double domain_b = 1.0;
  double length = 1.4142135623730951;  // side of the 2D square
  double cfl = 0.1;
  double t_final = 1.0;
  std::string ic = "advection";
  std::string bc = "periodic";  // periodic | wall
  std::string method = "ssprk104";
  std::uint64_t seed = 1;
  int callback_every = 0;
};

struct Experiment {
  ExperimentConfig config;
  SystemPtr system;
  FluxSetPtr volume;
  FluxSetPtr surface;
  std::optional<Discretization> disc;
  Field initial;
  ExactSolution exact;  // set for manufactured solutions
};

// Validates the config and assembles mesh, fluxes, forcing and initial data.
// Throws std::invalid_argument for inconsistent settings.
Experiment build_experiment(const ExperimentConfig& config);

SystemPtr build_system(const ExperimentConfig& config);
FluxSetPtr build_fluxset(const std::string& name, const SystemPtr& system, const std::vector<double>& alpha);

struct RunSummary {
  long steps = 0;
  double t_final = 0.0;
  double entropy_initial = 0.0;
  double entropy_final = 0.0;
  double entropy_error = 0.0;            // |S(T) - S(0)| / |S(0)|
  double entropy_deviation = 0.0;        // integral of |U - U0| over |S(0)|
  double entropy_residual_final = 0.0;
  double entropy_residual_max = 0.0;     // max |residual| over recorded times
  std::vector<double> mass_drift;        // totals(T) - totals(0)
  std::vector<double> mass_rate_final;   // 1^T J M du/dt at T
  std::optional<double> error;
};

// Integrates the experiment and optionally streams diagnostics rows as CSV.
RunSummary run_experiment(Experiment& ex, std::ostream* csv = nullptr);
RunSummary run_experiment(const ExperimentConfig& config, std::ostream* csv = nullptr);

struct ConvergenceRow {
  int elements = 0;  // per direction
  double error = 0.0;
  std::optional<double> eoc;
};

std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& base, const std::vector<int>& elements);
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

// Steady-state norms of the 2D lake at rest: ||H - H0||, ||v1||, ||v2||,
// ||w||, ||p|| in the discrete M norm.
std::vector<double> lake_at_rest_norms(const Experiment& ex, const Field& u, double level);

// T_max of the monomial equation with u0 = sin(pi x), from a 10^6 point grid.
double monomial_t_max(int m, int n);

std::vector<std::string> preset_names();
// Throws std::invalid_argument for unknown names.
ExperimentConfig preset(const std::string& name);

// Level H0 and element index of the bathymetry override in the 2D lake at rest.
inline constexpr double kLakeLevel = 3.0;
inline constexpr int kBumpElement = 6;  // label 7

}  // namespace ncsbp
