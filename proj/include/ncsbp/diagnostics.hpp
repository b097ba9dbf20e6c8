#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ncsbp/semidisc.hpp"

namespace ncsbp {

using NodalFunctional = std::function<double(const Vec&)>;
using ExactSolution = std::function<Vec(double x, double y, double t)>;

// sum over nodes of J * w * phi(u)
double total_functional(const Discretization& disc, const Field& u, const NodalFunctional& phi);

// sum over nodes of J * w * omega(u) . du/dt
double entropy_residual(const Discretization& disc, const Field& u);
double entropy_residual(const Discretization& disc, const Field& u, const Field& du);

// sqrt(sum J * w * |u - exact|^2) over the evolved components.
double l2_error(const Discretization& disc, const Field& u, const ExactSolution& exact);

// rate_k = log(e_{k-1} / e_k) / log(N_k / N_{k-1}); throws for nonpositive
// errors or mismatched lengths.
std::vector<double> eoc(std::span<const double> errors, std::span<const double> resolutions);

struct DiagnosticsRecord {
  double t = 0.0;
  double entropy = 0.0;
  double entropy_residual = 0.0;
  // sum J * w * |U(u) - U(u0)|, the integral of differences variant
  double entropy_deviation = 0.0;
  std::vector<double> totals;  // one per evolved component
  std::optional<double> error;
};

// Builds a record; reference supplies U(u0) nodewise for entropy_deviation.
DiagnosticsRecord make_record(const Discretization& disc, const Field& u, const Field* reference = nullptr,
                              const ExactSolution& exact = nullptr);

// |S(T) - S(0)| / |S(0)|
double normalized_entropy_error(double initial, double final_value);

// t,entropy,entropy_residual,entropy_deviation,mass_1..mass_n[,error]; 17 significant digits.
void write_csv_header(std::ostream& os, int components, bool with_error);
void write_csv_row(std::ostream& os, const DiagnosticsRecord& rec);

}  // namespace ncsbp
