#include "ncsbp/mesh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ncsbp {

Mesh1D build_mesh_1d(double a, double b, int elements, bool periodic) {
  if (elements < 1) throw std::invalid_argument("mesh needs at least one element");
  if (!(b > a)) throw std::invalid_argument("mesh interval must satisfy b > a");
  return Mesh1D{a, b, elements, periodic};
}

std::array<double, 2> warp_map(double xi, double eta, double length, double amplitude) {
  const double k = 2.0 * std::numbers::pi / length;
  const double s = amplitude * std::sin(k * xi) * std::sin(k * eta);
  return {xi + s, eta + s};
}

PointMap warped_square(WarpParams params) {
  return [params](double xi, double eta) {
    return warp_map(xi, eta, params.length, params.amplitude);
  };
}

namespace {

// out(i, j) = sum_k D(i, k) in(k, j)  (derivative along xi)
void apply_xi(const Eigen::MatrixXd& d, const std::vector<double>& in, std::vector<double>& out,
              int n) {
  out.assign(in.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += d(i, k) * in[j * n + k];
      out[j * n + i] = s;
    }
  }
}

// out(i, j) = sum_k D(j, k) in(i, k)  (derivative along eta)
void apply_eta(const Eigen::MatrixXd& d, const std::vector<double>& in, std::vector<double>& out,
               int n) {
  out.assign(in.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += d(j, k) * in[k * n + i];
      out[j * n + i] = s;
    }
  }
}

}  // namespace

CurvilinearMesh2D build_mesh_2d(int kx, int ky, const PointMap& mapping, int p_geo,
                                BoundaryKind boundary, std::array<double, 2> lower,
                                std::array<double, 2> upper) {
  if (kx < 1 || ky < 1) throw std::invalid_argument("mesh needs at least one element per direction");
  if (p_geo < 1) throw std::invalid_argument("geometry degree must be at least 1");
  CurvilinearMesh2D mesh;
  mesh.kx = kx;
  mesh.ky = ky;
  mesh.degree = p_geo;
  mesh.boundary = boundary;
  mesh.op = build_gll_operator(p_geo);
  const int n = p_geo + 1;
  const double hx = (upper[0] - lower[0]) / kx;
  const double hy = (upper[1] - lower[1]) / ky;
  mesh.elements.resize(static_cast<std::size_t>(kx * ky));
  for (int ey = 0; ey < ky; ++ey) {
    for (int ex = 0; ex < kx; ++ex) {
      ElementGeometry& g = mesh.elements[static_cast<std::size_t>(mesh.element_index(ex, ey))];
      g.lower = {lower[0] + ex * hx, lower[1] + ey * hy};
      g.upper = {g.lower[0] + hx, g.lower[1] + hy};
      g.x.resize(static_cast<std::size_t>(n * n));
      g.y.resize(static_cast<std::size_t>(n * n));
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const double xi = g.lower[0] + 0.5 * (mesh.op.nodes[i] + 1.0) * hx;
          const double eta = g.lower[1] + 0.5 * (mesh.op.nodes[j] + 1.0) * hy;
          const auto p = mapping(xi, eta);
          g.x[static_cast<std::size_t>(j * n + i)] = p[0];
          g.y[static_cast<std::size_t>(j * n + i)] = p[1];
        }
      }
      apply_xi(mesh.op.deriv, g.x, g.x_xi, n);
      apply_eta(mesh.op.deriv, g.x, g.x_eta, n);
      apply_xi(mesh.op.deriv, g.y, g.y_xi, n);
      apply_eta(mesh.op.deriv, g.y, g.y_eta, n);
      g.jac.resize(g.x.size());
      for (std::size_t q = 0; q < g.x.size(); ++q) {
        g.jac[q] = g.x_xi[q] * g.y_eta[q] - g.x_eta[q] * g.y_xi[q];
        if (!(g.jac[q] > 0.0)) {
          throw std::invalid_argument("mapping produces a non-positive Jacobian in element " +
                                      std::to_string(mesh.element_index(ex, ey) + 1));
        }
      }
    }
  }
  return mesh;
}

double check_metric_identities(const CurvilinearMesh2D& mesh) {
  const int n = mesh.nodes_1d();
  double worst = 0.0;
  std::vector<double> a, b;
  for (const auto& g : mesh.elements) {
    apply_xi(mesh.op.deriv, g.y_eta, a, n);
    apply_eta(mesh.op.deriv, g.y_xi, b, n);
    for (std::size_t q = 0; q < a.size(); ++q) worst = std::fmax(worst, std::fabs(a[q] - b[q]));
    apply_xi(mesh.op.deriv, g.x_eta, a, n);
    apply_eta(mesh.op.deriv, g.x_xi, b, n);
    for (std::size_t q = 0; q < a.size(); ++q) worst = std::fmax(worst, std::fabs(a[q] - b[q]));
  }
  return worst;
}

}  // namespace ncsbp
