#pragma once

#include <array>
#include <functional>
#include <vector>

#include "ncsbp/sbp.hpp"
#include "ncsbp/vec.hpp"

namespace ncsbp {

struct Mesh1D {
  double a = 0.0;
  double b = 1.0;
  int elements = 1;
  bool periodic = true;

  double dx() const { return (b - a) / elements; }
};

// Uniform partition of [a, b]; throws for K < 1 or b <= a.
Mesh1D build_mesh_1d(double a, double b, int elements, bool periodic = true);

enum class BoundaryKind { periodic, wall };

// Maps a point of the unwarped logical square to physical space.
using PointMap = std::function<std::array<double, 2>(double, double)>;

struct WarpParams {
  double length = 1.4142135623730951;  // sqrt(2)
  double amplitude = 1.4142135623730951 / 12.0;
};

// x = xi + w sin(2 pi xi / L) sin(2 pi eta / L), same perturbation for y.
std::array<double, 2> warp_map(double xi, double eta, double length, double amplitude);
PointMap warped_square(WarpParams params = {});

// Per-element geometry on the tensor GLL grid. Node (i, j) with i along xi and
// j along eta is stored at j * N + i.
struct ElementGeometry {
  std::vector<double> x, y;
  std::vector<double> x_xi, x_eta, y_xi, y_eta;
  std::vector<double> jac;
  // Unwarped logical box of the element, used for element-local data such as
  // discontinuous bathymetry.
  std::array<double, 2> lower{}, upper{};

  Normal normal_xi(int node) const { return {y_eta[node], -x_eta[node]}; }
  Normal normal_eta(int node) const { return {-y_xi[node], x_xi[node]}; }
};

// Structured quadrilateral mesh with Kx * Ky elements in row-major order
// (element index = ey * Kx + ex; the 1-based label is index + 1).
struct CurvilinearMesh2D {
  int kx = 1;
  int ky = 1;
  int degree = 1;
  BoundaryKind boundary = BoundaryKind::periodic;
  SbpOperator op;
  std::vector<ElementGeometry> elements;

  int num_elements() const { return kx * ky; }
  int nodes_1d() const { return degree + 1; }
  int element_index(int ex, int ey) const { return ey * kx + ex; }
};

// Samples the map on each element's tensor GLL nodes of degree p_geo, computes
// the metric terms with the same derivative operator and rejects meshes with
// a non-positive nodal Jacobian. The logical domain is [lower, upper].
CurvilinearMesh2D build_mesh_2d(int kx, int ky, const PointMap& mapping, int p_geo,
                                BoundaryKind boundary, std::array<double, 2> lower = {0.0, 0.0},
                                std::array<double, 2> upper = {1.0, 1.0});

// max over nodes of |D1 Y_eta - Y_xi D2^T| and |D1 X_eta - X_xi D2^T|.
double check_metric_identities(const CurvilinearMesh2D& mesh);

}  // namespace ncsbp
