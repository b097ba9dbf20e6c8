#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ncsbp/fluxes.hpp"
#include "ncsbp/mesh.hpp"
#include "ncsbp/sbp.hpp"

namespace ncsbp {

// Nodal states of all elements, element-major then node-major. Each Vec holds
// the evolved variables followed by the coefficient fields.
struct Field {
  int elements = 0;
  int nodes = 0;  // per element
  double t = 0.0;
  std::vector<Vec> data;

  Field() = default;
  Field(int num_elements, int nodes_per_element)
      : elements(num_elements), nodes(nodes_per_element), data(static_cast<std::size_t>(num_elements * nodes_per_element)) {}

  Vec& at(int e, int q) { return data[static_cast<std::size_t>(e * nodes + q)]; }
  const Vec& at(int e, int q) const { return data[static_cast<std::size_t>(e * nodes + q)]; }
  std::span<Vec> element(int e) { return {data.data() + static_cast<std::size_t>(e * nodes), static_cast<std::size_t>(nodes)}; }
  std::span<const Vec> element(int e) const {
    return {data.data() + static_cast<std::size_t>(e * nodes), static_cast<std::size_t>(nodes)};
  }
};

// Per-node geometry. In 1D the contravariant vector is (1, 0) and J = dx / 2.
struct NodeGeometry {
  double x = 0.0;
  double y = 0.0;
  double jac = 1.0;
  Normal n1{1.0, 0.0};
  Normal n2{0.0, 1.0};
  double width = 0.0;  // local physical element size used for the CFL
};

// An interface between the + side of element `minus` and the - side of
// element `plus` along reference direction `dir`. A value of -1 marks a wall.
struct Face {
  int minus = -1;
  int plus = -1;
  int dir = 0;
};

using InitialCondition = std::function<Vec(int elem, double x, double y)>;
using Forcing = std::function<Vec(double x, double y, double t)>;

class Discretization {
 public:
  static Discretization line(const Mesh1D& mesh, int degree, FluxSetPtr volume, FluxSetPtr surface);
  static Discretization curvilinear(const CurvilinearMesh2D& mesh, FluxSetPtr volume, FluxSetPtr surface);

  int dim() const { return dim_; }
  int degree() const { return op_.degree; }
  int nodes_1d() const { return op_.size(); }
  int nodes_per_element() const { return dim_ == 1 ? nodes_1d() : nodes_1d() * nodes_1d(); }
  int num_elements() const { return num_elements_; }
  const SbpOperator& op() const { return op_; }
  const System& system() const { return volume_->system(); }
  const FluxSet& volume_flux() const { return *volume_; }
  const FluxSet& surface_flux() const { return *surface_; }
  const std::vector<Face>& faces() const { return faces_; }
  BoundaryKind boundary() const { return boundary_; }
  const NodeGeometry& geometry(int e, int q) const { return geom_[static_cast<std::size_t>(e * nodes_per_element() + q)]; }
  // J times the tensor quadrature weight.
  double quadrature_weight(int e, int q) const;

  bool include_sources = true;
  Forcing forcing;  // optional, added to the conserved components

  Field make_field(const InitialCondition& init) const;

  // Unscaled flux-differencing sum VOL for one element, added into out.
  void volume_terms(const Field& u, int elem, std::span<Vec> out) const;
  // Unscaled interface terms SURF of one face, added into acc.
  void surface_terms(const Field& u, int face, Field& acc) const;
  // du/dt = -(VOL + SURF) / J + s(u) + forcing(x, y, t).
  void rhs(const Field& u, Field& du) const;
  Field rhs(const Field& u) const;

 private:
  Discretization(SbpOperator op, FluxSetPtr volume, FluxSetPtr surface);
  Vec ghost(const Vec& in, const Normal& outward) const;

  int dim_ = 1;
  int num_elements_ = 0;
  SbpOperator op_;
  FluxSetPtr volume_;
  FluxSetPtr surface_;
  BoundaryKind boundary_ = BoundaryKind::periodic;
  std::vector<NodeGeometry> geom_;
  std::vector<Face> faces_;
};

// Direct first/third-form finite-volume update for a p = 0 line
// discretization, independent of the SBP assembly.
Field three_point_fv_rhs(const Discretization& disc, const Field& u);

enum class SplitFormRow {
  form1_pointwise,      // D_ik h_i [[g]]_ik          vs  H D g
  form2_mean_g,         // 2 D_ik h_i <g>_ik          vs  H D g
  form3_mean_h,         // D_ik <h>_ik [[g]]_ik       vs  (D(Hg) + H D g - G D h) / 2
  form4_mean_hg,        // 2 D_ik <hg> - 2 D_ik <h> g_i    vs  D(Hg) - G D h
  form4_mean_h_mean_g,  // 2 D_ik <h><g> - 2 D_ik <h> g_i  vs  (D(Hg) + H D g - G D h) / 2
  form4_product_mean,   // 2 D_ik {{h g}} - 2 D_ik <h> g_i vs  H D g
};

inline constexpr SplitFormRow kAllSplitFormRows[] = {
    SplitFormRow::form1_pointwise,    SplitFormRow::form2_mean_g,        SplitFormRow::form3_mean_h,
    SplitFormRow::form4_mean_hg,      SplitFormRow::form4_mean_h_mean_g, SplitFormRow::form4_product_mean};

// Max nodal deviation between the two-point kernel and the matching
// strong or split operator form.
double split_form_equivalence(const SbpOperator& op, std::span<const double> h, std::span<const double> g,
                              SplitFormRow row);

}  // namespace ncsbp
