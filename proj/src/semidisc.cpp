#include "ncsbp/semidisc.hpp"

#include <cmath>
#include <stdexcept>

namespace ncsbp {

namespace {

Normal average(const Normal& a, const Normal& b) { return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])}; }
Normal negate(const Normal& a) { return {-a[0], -a[1]}; }
Normal unit_of(const Normal& a) {
  const double len = length(a);
  return {a[0] / len, a[1] / len};
}

// Smallest singular value of [[a, b], [c, d]].
double min_singular(double a, double b, double c, double d) {
  const double s = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  const double disc = std::sqrt(std::fmax(0.0, s * s - 4.0 * det * det));
  return std::sqrt(std::fmax(0.0, 0.5 * (s - disc)));
}

void check_fluxes(const FluxSetPtr& volume, const FluxSetPtr& surface) {
  if (!volume || !surface) throw std::invalid_argument("discretization needs volume and surface fluxes");
  if (!volume->symmetric()) throw std::invalid_argument("volume flux set must be symmetric");
  if (&volume->system() != &surface->system()) {
    throw std::invalid_argument("volume and surface fluxes must share one system");
  }
}

}  // namespace

Discretization::Discretization(SbpOperator op, FluxSetPtr volume, FluxSetPtr surface)
    : op_(std::move(op)), volume_(std::move(volume)), surface_(std::move(surface)) {}

Discretization Discretization::line(const Mesh1D& mesh, int degree, FluxSetPtr volume, FluxSetPtr surface) {
  check_fluxes(volume, surface);
  if (volume->system().dim() != 1) throw std::invalid_argument("line mesh needs a 1D system");
  Discretization disc(build_gll_operator(degree), std::move(volume), std::move(surface));
  disc.dim_ = 1;
  disc.num_elements_ = mesh.elements;
  disc.boundary_ = mesh.periodic ? BoundaryKind::periodic : BoundaryKind::wall;
  const double dx = mesh.dx();
  const int n = disc.nodes_1d();
  for (int e = 0; e < mesh.elements; ++e) {
    for (int q = 0; q < n; ++q) {
      NodeGeometry g;
      g.x = mesh.a + e * dx + 0.5 * (disc.op_.nodes[q] + 1.0) * dx;
      g.jac = 0.5 * dx;
      g.width = dx;
      disc.geom_.push_back(g);
    }
  }
  const int k = mesh.elements;
  if (mesh.periodic) {
    for (int e = 0; e < k; ++e) disc.faces_.push_back({e, (e + 1) % k, 0});
  } else {
    disc.faces_.push_back({-1, 0, 0});
    for (int e = 0; e + 1 < k; ++e) disc.faces_.push_back({e, e + 1, 0});
    disc.faces_.push_back({k - 1, -1, 0});
  }
  return disc;
}

Discretization Discretization::curvilinear(const CurvilinearMesh2D& mesh, FluxSetPtr volume,
                                           FluxSetPtr surface) {
  check_fluxes(volume, surface);
  if (volume->system().dim() != 2) throw std::invalid_argument("curvilinear mesh needs a 2D system");
  Discretization disc(mesh.op, std::move(volume), std::move(surface));
  disc.dim_ = 2;
  disc.num_elements_ = mesh.num_elements();
  disc.boundary_ = mesh.boundary;
  for (const auto& el : mesh.elements) {
    for (std::size_t q = 0; q < el.x.size(); ++q) {
      NodeGeometry g;
      g.x = el.x[q];
      g.y = el.y[q];
      g.jac = el.jac[q];
      g.n1 = el.normal_xi(static_cast<int>(q));
      g.n2 = el.normal_eta(static_cast<int>(q));
      g.width = 2.0 * min_singular(el.x_xi[q], el.x_eta[q], el.y_xi[q], el.y_eta[q]);
      disc.geom_.push_back(g);
    }
  }
  const bool periodic = mesh.boundary == BoundaryKind::periodic;
  for (int ey = 0; ey < mesh.ky; ++ey) {
    for (int ex = 0; ex < mesh.kx; ++ex) {
      const int e = mesh.element_index(ex, ey);
      if (ex + 1 < mesh.kx) {
        disc.faces_.push_back({e, mesh.element_index(ex + 1, ey), 0});
      } else if (periodic) {
        disc.faces_.push_back({e, mesh.element_index(0, ey), 0});
      } else {
        disc.faces_.push_back({e, -1, 0});
      }
      if (!periodic && ex == 0) disc.faces_.push_back({-1, e, 0});
    }
  }
  for (int ey = 0; ey < mesh.ky; ++ey) {
    for (int ex = 0; ex < mesh.kx; ++ex) {
      const int e = mesh.element_index(ex, ey);
      if (ey + 1 < mesh.ky) {
        disc.faces_.push_back({e, mesh.element_index(ex, ey + 1), 1});
      } else if (periodic) {
        disc.faces_.push_back({e, mesh.element_index(ex, 0), 1});
      } else {
        disc.faces_.push_back({e, -1, 1});
      }
      if (!periodic && ey == 0) disc.faces_.push_back({-1, e, 1});
    }
  }
  return disc;
}

double Discretization::quadrature_weight(int e, int q) const {
  const int n = nodes_1d();
  const double w = dim_ == 1 ? op_.mass[q] : op_.mass[q % n] * op_.mass[q / n];
  return geometry(e, q).jac * w;
}

Field Discretization::make_field(const InitialCondition& init) const {
  Field f(num_elements_, nodes_per_element());
  for (int e = 0; e < num_elements_; ++e) {
    for (int q = 0; q < nodes_per_element(); ++q) {
      const NodeGeometry& g = geometry(e, q);
      f.at(e, q) = init(e, g.x, g.y);
    }
  }
  return f;
}

Vec Discretization::ghost(const Vec& in, const Normal& outward) const {
  return system().mirror(in, unit_of(outward));
}

void Discretization::volume_terms(const Field& u, int elem, std::span<Vec> out) const {
  const System& sys = system();
  const FluxSet& fs = *volume_;
  const int n = nodes_1d();
  const int lines = dim_ == 1 ? 1 : n;
  const auto& d = op_.deriv;
  const std::span<const Vec> ue = u.element(elem);
  for (int dir = 0; dir < dim_; ++dir) {
    for (int line = 0; line < lines; ++line) {
      auto idx = [&](int i) { return dir == 0 ? line * n + i : i * n + line; };
      auto metric = [&](int q) -> const Normal& {
        const NodeGeometry& g = geometry(elem, q);
        return dir == 0 ? g.n1 : g.n2;
      };
      for (int i = 0; i < n; ++i) {
        const int qi = idx(i);
        const Vec& ui = ue[static_cast<std::size_t>(qi)];
        const Normal& mi = metric(qi);
        if (d(i, i) != 0.0) out[static_cast<std::size_t>(qi)] += sys.flux(ui, mi) * (2.0 * d(i, i));
        for (int k = i + 1; k < n; ++k) {
          const int qk = idx(k);
          const Vec& uk = ue[static_cast<std::size_t>(qk)];
          const Normal mik = average(mi, metric(qk));
          const Vec f = fs.flux(ui, uk, mik);
          const Vec phi = fs.fluct(ui, uk, mik);
          out[static_cast<std::size_t>(qi)] += 2.0 * d(i, k) * f + d(i, k) * (phi + fs.local(ui, uk, mik));
          out[static_cast<std::size_t>(qk)] += 2.0 * d(k, i) * f + d(k, i) * (fs.local(uk, ui, mik) - phi);
        }
      }
    }
  }
}

void Discretization::surface_terms(const Field& u, int face, Field& acc) const {
  const System& sys = system();
  const Face& f = faces_[static_cast<std::size_t>(face)];
  const int n = nodes_1d();
  const int count = dim_ == 1 ? 1 : n;
  const double inv_w = 1.0 / op_.mass[n - 1];
  for (int t = 0; t < count; ++t) {
    const int qm = dim_ == 1 ? n - 1 : (f.dir == 0 ? t * n + (n - 1) : (n - 1) * n + t);
    const int qp = dim_ == 1 ? 0 : (f.dir == 0 ? t * n : t);
    const NodeGeometry& owner = f.minus >= 0 ? geometry(f.minus, qm) : geometry(f.plus, qp);
    const Normal nrm = f.dir == 0 ? owner.n1 : owner.n2;
    if (f.minus >= 0) {
      const Vec& in = u.at(f.minus, qm);
      const Vec out = f.plus >= 0 ? u.at(f.plus, qp) : ghost(in, nrm);
      acc.at(f.minus, qm) += (surface_->surface(in, out, nrm) - sys.flux(in, nrm)) * inv_w;
    }
    if (f.plus >= 0) {
      const Normal neg = negate(nrm);
      const Vec& in = u.at(f.plus, qp);
      const Vec out = f.minus >= 0 ? u.at(f.minus, qm) : ghost(in, neg);
      acc.at(f.plus, qp) += (surface_->surface(in, out, neg) - sys.flux(in, neg)) * inv_w;
    }
  }
}

void Discretization::rhs(const Field& u, Field& du) const {
  const System& sys = system();
  const int nv = sys.num_vars();
  Field acc(num_elements_, nodes_per_element());
  for (int e = 0; e < num_elements_; ++e) volume_terms(u, e, acc.element(e));
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) surface_terms(u, f, acc);
  if (du.elements != num_elements_ || du.nodes != nodes_per_element()) du = Field(num_elements_, nodes_per_element());
  du.t = u.t;
  for (int e = 0; e < num_elements_; ++e) {
    for (int q = 0; q < nodes_per_element(); ++q) {
      const NodeGeometry& g = geometry(e, q);
      Vec r = acc.at(e, q) * (-1.0 / g.jac);
      if (include_sources) r += sys.source(u.at(e, q));
      if (forcing) r += forcing(g.x, g.y, u.t);
      for (int i = nv; i < kMaxVars; ++i) r[i] = 0.0;
      du.at(e, q) = r;
    }
  }
}

Field Discretization::rhs(const Field& u) const {
  Field du(num_elements_, nodes_per_element());
  rhs(u, du);
  return du;
}

Field three_point_fv_rhs(const Discretization& disc, const Field& u) {
  if (disc.dim() != 1 || disc.degree() != 0) throw std::invalid_argument("three-point scheme needs p = 0 in 1D");
  const System& sys = disc.system();
  const FluxSet& fs = disc.surface_flux();
  const int nv = sys.num_vars();
  const int k = disc.num_elements();
  const double dx = disc.geometry(0, 0).width;
  const bool periodic = disc.boundary() == BoundaryKind::periodic;
  const Normal m{1.0, 0.0};
  Field du(k, 1);
  du.t = u.t;
  for (int i = 0; i < k; ++i) {
    const Vec& ui = u.at(i, 0);
    const Vec ul = i > 0 ? u.at(i - 1, 0) : (periodic ? u.at(k - 1, 0) : sys.mirror(ui, {-1.0, 0.0}));
    const Vec ur = i + 1 < k ? u.at(i + 1, 0) : (periodic ? u.at(0, 0) : sys.mirror(ui, {1.0, 0.0}));
    Vec r = fs.flux(ui, ur, m) - fs.flux(ul, ui, m) + 0.5 * (fs.fluct(ui, ur, m) + fs.fluct(ul, ui, m)) +
            0.5 * (fs.local(ui, ur, m) - fs.local(ui, ul, m));
    r *= -1.0 / dx;
    if (disc.include_sources) r += sys.source(ui);
    if (disc.forcing) r += disc.forcing(disc.geometry(i, 0).x, 0.0, u.t);
    for (int j = nv; j < kMaxVars; ++j) r[j] = 0.0;
    du.at(i, 0) = r;
  }
  return du;
}

double split_form_equivalence(const SbpOperator& op, std::span<const double> h, std::span<const double> g,
                              SplitFormRow row) {
  const int n = op.size();
  if (static_cast<int>(h.size()) != n || static_cast<int>(g.size()) != n) {
    throw std::invalid_argument("nodal data must match the operator size");
  }
  const Eigen::Map<const Eigen::VectorXd> hv(h.data(), n);
  const Eigen::Map<const Eigen::VectorXd> gv(g.data(), n);
  const Eigen::MatrixXd& d = op.deriv;
  const Eigen::VectorXd dg = d * gv;
  const Eigen::VectorXd dh = d * hv;
  const Eigen::VectorXd dhg = d * hv.cwiseProduct(gv);
  const Eigen::VectorXd strong = hv.cwiseProduct(dg);
  const Eigen::VectorXd split = 0.5 * (dhg + strong - gv.cwiseProduct(dh));
  const Eigen::VectorXd product_rule = dhg - gv.cwiseProduct(dh);

  Eigen::VectorXd kernel = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      const double h_avg = 0.5 * (hv[i] + hv[k]);
      const double g_avg = 0.5 * (gv[i] + gv[k]);
      switch (row) {
        case SplitFormRow::form1_pointwise: s += d(i, k) * hv[i] * (gv[k] - gv[i]); break;
        case SplitFormRow::form2_mean_g: s += 2.0 * d(i, k) * hv[i] * g_avg; break;
        case SplitFormRow::form3_mean_h: s += d(i, k) * h_avg * (gv[k] - gv[i]); break;
        case SplitFormRow::form4_mean_hg:
          s += 2.0 * d(i, k) * 0.5 * (hv[i] * gv[i] + hv[k] * gv[k]) - 2.0 * d(i, k) * h_avg * gv[i];
          break;
        case SplitFormRow::form4_mean_h_mean_g:
          s += 2.0 * d(i, k) * h_avg * g_avg - 2.0 * d(i, k) * h_avg * gv[i];
          break;
        case SplitFormRow::form4_product_mean:
          s += 2.0 * d(i, k) * product_mean(hv[i], hv[k], gv[i], gv[k]) - 2.0 * d(i, k) * h_avg * gv[i];
          break;
      }
    }
    kernel[i] = s;
  }
  const Eigen::VectorXd* reference = &strong;
  switch (row) {
    case SplitFormRow::form1_pointwise:
    case SplitFormRow::form2_mean_g:
    case SplitFormRow::form4_product_mean: reference = &strong; break;
    case SplitFormRow::form3_mean_h:
    case SplitFormRow::form4_mean_h_mean_g: reference = &split; break;
    case SplitFormRow::form4_mean_hg: reference = &product_rule; break;
  }
  return (kernel - *reference).cwiseAbs().maxCoeff();
}

}  // namespace ncsbp
