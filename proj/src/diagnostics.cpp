#include "ncsbp/diagnostics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ncsbp {

double total_functional(const Discretization& disc, const Field& u, const NodalFunctional& phi) {
  double s = 0.0;
  for (int e = 0; e < disc.num_elements(); ++e) {
    for (int q = 0; q < disc.nodes_per_element(); ++q) s += disc.quadrature_weight(e, q) * phi(u.at(e, q));
  }
  return s;
}

double entropy_residual(const Discretization& disc, const Field& u, const Field& du) {
  const System& sys = disc.system();
  const int nv = sys.num_vars();
  double s = 0.0;
  for (int e = 0; e < disc.num_elements(); ++e) {
    for (int q = 0; q < disc.nodes_per_element(); ++q) {
      s += disc.quadrature_weight(e, q) * dot(sys.entropy_vars(u.at(e, q)), du.at(e, q), nv);
    }
  }
  return s;
}

double entropy_residual(const Discretization& disc, const Field& u) {
  return entropy_residual(disc, u, disc.rhs(u));
}

double l2_error(const Discretization& disc, const Field& u, const ExactSolution& exact) {
  const int nv = disc.system().num_vars();
  double s = 0.0;
  for (int e = 0; e < disc.num_elements(); ++e) {
    for (int q = 0; q < disc.nodes_per_element(); ++q) {
      const NodeGeometry& g = disc.geometry(e, q);
      const Vec diff = u.at(e, q) - exact(g.x, g.y, u.t);
      s += disc.quadrature_weight(e, q) * dot(diff, diff, nv);
    }
  }
  return std::sqrt(s);
}

std::vector<double> eoc(std::span<const double> errors, std::span<const double> resolutions) {
  if (errors.size() != resolutions.size() || errors.size() < 2) {
    throw std::invalid_argument("eoc needs matching lists of at least two entries");
  }
  std::vector<double> rates;
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (!(errors[k] > 0.0) || !(errors[k - 1] > 0.0)) throw std::invalid_argument("errors must be positive");
    if (!(resolutions[k] > 0.0) || !(resolutions[k - 1] > 0.0) || resolutions[k] == resolutions[k - 1]) {
      throw std::invalid_argument("resolutions must be positive and distinct");
    }
    rates.push_back(std::log(errors[k - 1] / errors[k]) / std::log(resolutions[k] / resolutions[k - 1]));
  }
  return rates;
}

DiagnosticsRecord make_record(const Discretization& disc, const Field& u, const Field* reference,
                              const ExactSolution& exact) {
  const System& sys = disc.system();
  const int nv = sys.num_vars();
  DiagnosticsRecord rec;
  rec.t = u.t;
  rec.totals.assign(static_cast<std::size_t>(nv), 0.0);
  for (int e = 0; e < disc.num_elements(); ++e) {
    for (int q = 0; q < disc.nodes_per_element(); ++q) {
      const double w = disc.quadrature_weight(e, q);
      const Vec& v = u.at(e, q);
      const double ent = sys.entropy(v);
      rec.entropy += w * ent;
      if (reference) rec.entropy_deviation += w * std::fabs(ent - sys.entropy(reference->at(e, q)));
      for (int i = 0; i < nv; ++i) rec.totals[static_cast<std::size_t>(i)] += w * v[i];
    }
  }
  rec.entropy_residual = entropy_residual(disc, u);
  if (exact) rec.error = l2_error(disc, u, exact);
  return rec;
}

double normalized_entropy_error(double initial, double final_value) {
  return std::fabs(final_value - initial) / std::fabs(initial);
}

void write_csv_header(std::ostream& os, int components, bool with_error) {
  os << "t,entropy,entropy_residual,entropy_deviation";
  for (int i = 1; i <= components; ++i) os << ",mass_" << i;
  if (with_error) os << ",error";
  os << '\n';
}

void write_csv_row(std::ostream& os, const DiagnosticsRecord& rec) {
  const auto old = os.precision(17);
  os << rec.t << ',' << rec.entropy << ',' << rec.entropy_residual << ',' << rec.entropy_deviation;
  for (double m : rec.totals) os << ',' << m;
  if (rec.error) os << ',' << *rec.error;
  os << '\n';
  os.precision(old);
}

}  // namespace ncsbp
