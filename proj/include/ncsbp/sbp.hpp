#pragma once

#include <Eigen/Dense>
#include <vector>

namespace ncsbp {

// Diagonal-norm summation-by-parts operator on the reference interval [-1, 1].
// The boundary operators are fixed for nodal operators that include both
// endpoints: R picks the first and last node, B = diag(1, 1) and the normal
// sign matrix is diag(-1, +1).
struct SbpOperator {
  int degree = 0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd mass;
  Eigen::MatrixXd deriv;

  int size() const { return static_cast<int>(nodes.size()); }
  Eigen::MatrixXd restriction() const;     // 2 x N
  Eigen::MatrixXd boundary_matrix() const; // R^T B N R, N x N
};

// Gauss-Lobatto-Legendre collocation operator of degree p (0 <= p <= 20).
// p = 0 gives the finite-volume limit: one node, mass 2, zero derivative.
SbpOperator build_gll_operator(int p);

// max |M D + D^T M - R^T B N R|
double verify_sbp_property(const SbpOperator& op);

// max_i |(D x^k)_i - k x_i^(k-1)|
double polynomial_accuracy(const SbpOperator& op, int k);

// 2 D - M^{-1} R^T B N R, the derivative with the surface correction folded in.
Eigen::MatrixXd skew_extended_derivative(const SbpOperator& op);

// Legendre polynomial L_n and its derivative at x.
void legendre(int n, double x, double& value, double& derivative);

}  // namespace ncsbp
