#include "ncsbp/sbp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ncsbp {

void legendre(int n, double x, double& value, double& derivative) {
  if (n == 0) {
    value = 1.0;
    derivative = 0.0;
    return;
  }
  double p0 = 1.0;
  double p1 = x;
  double d0 = 0.0;
  double d1 = 1.0;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    const double d2 = d0 + (2.0 * k - 1.0) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  value = p1;
  derivative = d1;
}

namespace {

// Interior GLL nodes are the roots of L_p'. Newton on q = L_p' with
// q' = (2x L_p' - p(p+1) L_p) / (1 - x^2), started from Chebyshev-Lobatto points.
void gll_nodes_weights(int p, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  const int n = p + 1;
  x.resize(n);
  w.resize(n);
  x[0] = -1.0;
  x[p] = 1.0;
  for (int i = 1; i < p; ++i) {
    double xi = -std::cos(std::numbers::pi * i / p);
    for (int it = 0; it < 100; ++it) {
      double l = 0.0;
      double dl = 0.0;
      legendre(p, xi, l, dl);
      const double ddl = (2.0 * xi * dl - p * (p + 1.0) * l) / (1.0 - xi * xi);
      const double step = dl / ddl;
      xi -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    x[i] = xi;
  }
  // Enforce exact symmetry about the origin.
  for (int i = 0; i < n / 2; ++i) {
    const double s = 0.5 * (x[p - i] - x[i]);
    x[i] = -s;
    x[p - i] = s;
  }
  if (n % 2 == 1) x[p / 2] = 0.0;
  for (int i = 0; i < n; ++i) {
    double l = 0.0;
    double dl = 0.0;
    legendre(p, x[i], l, dl);
    w[i] = 2.0 / (p * (p + 1.0) * l * l);
  }
}

}  // namespace

SbpOperator build_gll_operator(int p) {
  if (p < 0 || p > 20) {
    throw std::invalid_argument("GLL degree must lie in [0, 20], got " + std::to_string(p));
  }
  SbpOperator op;
  op.degree = p;
  if (p == 0) {
    op.nodes = Eigen::VectorXd::Zero(1);
    op.mass = Eigen::VectorXd::Constant(1, 2.0);
    op.deriv = Eigen::MatrixXd::Zero(1, 1);
    return op;
  }
  gll_nodes_weights(p, op.nodes, op.mass);
  const int n = p + 1;

  // Barycentric weights, then the negative-sum trick for the diagonal so that
  // constants are differentiated to exactly zero.
  Eigen::VectorXd bw = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k != j) bw[j] /= (op.nodes[j] - op.nodes[k]);
    }
  }
  op.deriv = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = (bw[j] / bw[i]) / (op.nodes[i] - op.nodes[j]);
      op.deriv(i, j) = d;
      diag -= d;
    }
    op.deriv(i, i) = diag;
  }
  return op;
}

Eigen::MatrixXd SbpOperator::restriction() const {
  const int n = size();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(2, n);
  r(0, 0) = 1.0;
  r(1, n - 1) = 1.0;
  return r;
}

Eigen::MatrixXd SbpOperator::boundary_matrix() const {
  const Eigen::MatrixXd r = restriction();
  Eigen::MatrixXd bn = Eigen::MatrixXd::Zero(2, 2);
  bn(0, 0) = -1.0;
  bn(1, 1) = 1.0;
  return r.transpose() * bn * r;
}

double verify_sbp_property(const SbpOperator& op) {
  const Eigen::MatrixXd m = op.mass.asDiagonal();
  const Eigen::MatrixXd q = m * op.deriv;
  return (q + q.transpose() - op.boundary_matrix()).cwiseAbs().maxCoeff();
}

double polynomial_accuracy(const SbpOperator& op, int k) {
  const int n = op.size();
  Eigen::VectorXd f(n);
  Eigen::VectorXd df(n);
  for (int i = 0; i < n; ++i) {
    const double x = op.nodes[i];
    f[i] = std::pow(x, k);
    df[i] = k == 0 ? 0.0 : k * std::pow(x, k - 1);
  }
  return (op.deriv * f - df).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd skew_extended_derivative(const SbpOperator& op) {
  const Eigen::VectorXd inv_mass = op.mass.cwiseInverse();
  return 2.0 * op.deriv - inv_mass.asDiagonal() * op.boundary_matrix();
}

}  // namespace ncsbp
