#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncsbp/mesh.hpp"

using namespace ncsbp;

TEST_CASE("uniform line mesh") {
  const Mesh1D m = build_mesh_1d(-1.0, 1.0, 32);
  CHECK(m.dx() == doctest::Approx(1.0 / 16.0));
  CHECK(m.periodic);
  CHECK_THROWS_AS(build_mesh_1d(0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh_1d(1.0, 1.0, 4), std::invalid_argument);
}

TEST_CASE("warp map agrees with the symbolic oracle") {
  const double l = std::sqrt(2.0);
  auto a = warp_map(0.3, 0.9, l, l / 12.0);
  CHECK(std::fabs(a[0] - 0.21342796194311205) < 1e-15);
  CHECK(std::fabs(a[1] - 0.81342796194311208) < 1e-15);
  auto b = warp_map(0.7, 0.2, l, l / 12.0);
  CHECK(std::fabs(b[0] - 0.70288774658497885) < 1e-15);
  CHECK(std::fabs(b[1] - 0.20288774658497890) < 1e-15);
  // boundary stays fixed
  auto c = warp_map(0.0, 0.4, l, l / 12.0);
  CHECK(c[0] == 0.0);
  CHECK(c[1] == doctest::Approx(0.4));
}

TEST_CASE("warped mesh metric identities and positive Jacobian") {
  for (int p = 1; p <= 6; ++p) {
    const double l = std::sqrt(2.0);
    const CurvilinearMesh2D mesh =
        build_mesh_2d(4, 4, warped_square(), p, BoundaryKind::wall, {0.0, 0.0}, {l, l});
    CHECK(mesh.num_elements() == 16);
    CHECK(check_metric_identities(mesh) <= 1e-13);
    double area = 0.0;
    for (const auto& el : mesh.elements) {
      for (std::size_t q = 0; q < el.jac.size(); ++q) {
        CHECK(el.jac[q] > 0.0);
        area += el.jac[q] * mesh.op.mass[static_cast<int>(q) % (p + 1)] * mesh.op.mass[static_cast<int>(q) / (p + 1)];
      }
    }
    // the warp keeps the outer boundary, so the area is L^2 for any p
    CHECK(area == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("Jacobian at a node matches the symbolic value for a fine geometry degree") {
  const double l = std::sqrt(2.0);
  // one element over the whole square; node (i, j) of degree 12 near (0.7, 0.2)
  const CurvilinearMesh2D mesh = build_mesh_2d(1, 1, warped_square(), 12, BoundaryKind::periodic, {0.0, 0.0}, {l, l});
  const auto& el = mesh.elements[0];
  // the map is entire, so the interpolated Jacobian converges spectrally;
  // compare against analytic derivatives at the node itself
  const double w = l / 12.0;
  const double k = 2.0 * std::numbers::pi / l;
  double worst = 0.0;
  for (std::size_t q = 0; q < el.jac.size(); ++q) {
    const int n = 13;
    const double xi = 0.5 * (mesh.op.nodes[static_cast<int>(q) % n] + 1.0) * l;
    const double eta = 0.5 * (mesh.op.nodes[static_cast<int>(q) / n] + 1.0) * l;
    const double sx = std::sin(k * xi), cx = std::cos(k * xi), sy = std::sin(k * eta), cy = std::cos(k * eta);
    const double x_xi = 1.0 + w * k * cx * sy, x_eta = w * k * sx * cy;
    const double y_xi = w * k * cx * sy, y_eta = 1.0 + w * k * sx * cy;
    // reference element derivatives carry the factor l / 2
    const double jac = (x_xi * y_eta - x_eta * y_xi) * 0.25 * l * l;
    worst = std::fmax(worst, std::fabs(jac - el.jac[q]));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("row-major element numbering") {
  const CurvilinearMesh2D mesh = build_mesh_2d(4, 4, warped_square(), 2, BoundaryKind::wall, {0.0, 0.0},
                                               {std::sqrt(2.0), std::sqrt(2.0)});
  CHECK(mesh.element_index(2, 1) == 6);
  const auto& el = mesh.elements[6];
  CHECK(el.lower[0] == doctest::Approx(std::sqrt(2.0) / 2.0));
  CHECK(el.lower[1] == doctest::Approx(std::sqrt(2.0) / 4.0));
}

TEST_CASE("folded mapping is rejected") {
  const PointMap fold = [](double xi, double eta) { return std::array<double, 2>{-xi, eta}; };
  CHECK_THROWS_AS(build_mesh_2d(2, 2, fold, 2, BoundaryKind::periodic), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh_2d(0, 2, warped_square(), 2, BoundaryKind::periodic), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh_2d(2, 2, warped_square(), 0, BoundaryKind::periodic), std::invalid_argument);
}
