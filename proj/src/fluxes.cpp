#include "ncsbp/fluxes.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ncsbp {

double logarithmic_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("logarithmic mean needs positive arguments");
  const double zeta = (b - a) / (b + a);
  const double f = zeta * zeta;
  if (f < 1e-4) {
    return 0.5 * (a + b) / (1.0 + f * (1.0 / 3.0 + f * (1.0 / 5.0 + f / 7.0)));
  }
  // log(b / a) = 2 atanh(zeta)
  return (b - a) / (2.0 * std::atanh(zeta));
}

double product_mean(double a_minus, double a_plus, double b_minus, double b_plus) {
  return 0.5 * (a_minus * b_plus + a_plus * b_minus);
}

double monomial_ec1_alpha(int m, int n) { return (m + 1.0) / (m + n + 1.0); }

namespace {

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Q(a, b) = P(a, b) / (a + b) with P written in the monomials b^{d-j} a^j,
// a = u_minus, b = u_plus, d = m + n + 1. The remainder vanishes whenever a
// consistent antisymmetric quotient exists; otherwise it is dropped.
double ec1_quotient(int m, int n, double a, double b) {
  const int d = m + n + 1;
  std::vector<double> c(static_cast<std::size_t>(d + 1), 0.0);
  const double scale = static_cast<double>(n) / d;
  c[0] += 0.5 * scale;
  c[static_cast<std::size_t>(n)] += 0.5 * scale;
  c[static_cast<std::size_t>(m + 1)] -= 0.5 * scale;
  c[static_cast<std::size_t>(d)] -= 0.5 * scale;
  double q_prev = 0.0;
  double value = 0.0;
  for (int j = 0; j < d; ++j) {
    const double q = c[static_cast<std::size_t>(j)] - q_prev;
    value += q * ipow(b, d - 1 - j) * ipow(a, j);
    q_prev = q;
  }
  return value;
}

}  // namespace

double monomial_ec1_fluctuation(int m, int n, double u_minus, double u_plus) {
  const double q = 0.5 * (ec1_quotient(m, n, u_minus, u_plus) - ec1_quotient(m, n, u_plus, u_minus));
  return 2.0 * q / monomial_ec1_alpha(m, n);
}

Normal axis(int dir) { return dir == 0 ? Normal{1.0, 0.0} : Normal{0.0, 1.0}; }

FluxSet::FluxSet(SystemPtr system, std::vector<double> alpha, bool symmetric)
    : system_(std::move(system)), alpha_(std::move(alpha)), symmetric_(symmetric) {
  if (!system_) throw std::invalid_argument("flux set needs a system");
  if (static_cast<int>(alpha_.size()) != system_->num_terms()) {
    throw std::invalid_argument("one alpha per nonconservative term required");
  }
}

Vec FluxSet::factor(const Vec& a, const Vec& b, int dir, int term) const {
  return 0.5 * (system_->factor(a, dir, term) + system_->factor(b, dir, term));
}

Vec FluxSet::fluctuation(const Vec& a, const Vec& b, int dir, int term) const {
  const double jump = system_->gfun(b, dir, term) - system_->gfun(a, dir, term);
  return factor(a, b, dir, term) * jump;
}

Vec FluxSet::flux(const Vec& a, const Vec& b, const Normal& m) const {
  Vec f = conservative(a, b, 0) * m[0];
  if (dims() > 1) f += conservative(a, b, 1) * m[1];
  return f;
}

Vec FluxSet::fluct(const Vec& a, const Vec& b, const Normal& m) const {
  Vec r;
  for (int d = 0; d < dims(); ++d) {
    if (m[static_cast<std::size_t>(d)] == 0.0) continue;
    for (int k = 0; k < system_->num_terms(); ++k) {
      if (alpha(k) == 0.0) continue;
      r += fluctuation(a, b, d, k) * (alpha(k) * m[static_cast<std::size_t>(d)]);
    }
  }
  return r;
}

Vec FluxSet::local(const Vec& a, const Vec& b, const Normal& m) const {
  Vec r;
  for (int d = 0; d < dims(); ++d) {
    if (m[static_cast<std::size_t>(d)] == 0.0) continue;
    for (int k = 0; k < system_->num_terms(); ++k) {
      const double w = 1.0 - alpha(k);
      if (w == 0.0) continue;
      const double jump = system_->gfun(b, d, k) - system_->gfun(a, d, k);
      r += system_->factor(a, d, k) * (w * jump * m[static_cast<std::size_t>(d)]);
    }
  }
  return r;
}

Vec FluxSet::surface(const Vec& in, const Vec& out, const Normal& m) const {
  return flux(in, out, m) + 0.5 * (fluct(in, out, m) + local(in, out, m));
}

namespace {

double mean(double a, double b) { return 0.5 * (a + b); }

using ConservativeFn = std::function<Vec(const Vec&, const Vec&, int)>;
using FactorFn = std::function<Vec(const Vec&, const Vec&, int, int)>;

class GenericFluxSet final : public FluxSet {
 public:
  GenericFluxSet(std::string name, SystemPtr sys, std::vector<double> alpha, ConservativeFn f,
                 FactorFn h = nullptr)
      : FluxSet(std::move(sys), std::move(alpha), true),
        name_(std::move(name)),
        f_(std::move(f)),
        h_(std::move(h)) {}
  std::string name() const override { return name_; }
  Vec conservative(const Vec& a, const Vec& b, int dir) const override { return f_(a, b, dir); }
  Vec factor(const Vec& a, const Vec& b, int dir, int term) const override {
    return h_ ? h_(a, b, dir, term) : FluxSet::factor(a, b, dir, term);
  }

 private:
  std::string name_;
  ConservativeFn f_;
  FactorFn h_;
};

class MonomialEc1 final : public FluxSet {
 public:
  explicit MonomialEc1(SystemPtr sys)
      : FluxSet(sys, {monomial_ec1_alpha(sys->params().m, sys->params().n)}, true),
        m_(sys->params().m),
        n_(sys->params().n) {}
  std::string name() const override { return "monomial_ec1"; }
  bool has_factor_flux() const override { return false; }
  Vec conservative(const Vec&, const Vec&, int) const override { return Vec{}; }
  Vec factor(const Vec&, const Vec&, int, int) const override {
    throw std::logic_error("monomial_ec1 defines only the fluctuation");
  }
  Vec fluctuation(const Vec& a, const Vec& b, int, int) const override {
    Vec r;
    r[0] = monomial_ec1_fluctuation(m_, n_, a[0], b[0]);
    return r;
  }

 private:
  int m_;
  int n_;
};

void check_monomial(const SystemPtr& sys, MonomialForm form) {
  if (!sys || sys->name() != (form == MonomialForm::product ? "monomial_product" : "monomial_split")) {
    throw std::invalid_argument("flux set requires the matching monomial form");
  }
}

void check_name(const SystemPtr& sys, const std::string& expected) {
  if (!sys || sys->name() != expected) throw std::invalid_argument("flux set requires " + expected);
}

struct EulerState {
  double rho;
  double p;
  std::array<double, 2> v{};
};

EulerState euler_state(const System& sys, const Vec& u) {
  EulerState s{u[0], euler_pressure(sys, u)};
  if (!(s.rho > 0.0) || !(s.p > 0.0)) throw std::domain_error("nonpositive density or pressure");
  for (int d = 0; d < sys.dim(); ++d) s.v[static_cast<std::size_t>(d)] = u[1 + d] / u[0];
  return s;
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

class EulerEcKep final : public FluxSet {
 public:
  explicit EulerEcKep(SystemPtr sys) : FluxSet(sys, {1.0, 1.0}, true) {}
  std::string name() const override { return "euler_ec_kep"; }
  Vec conservative(const Vec& a, const Vec& b, int dir) const override {
    const System& sys = system();
    const EulerState l = euler_state(sys, a);
    const EulerState r = euler_state(sys, b);
    const int ie = sys.dim() + 1;
    const double vn = mean(l.v[dir], r.v[dir]);
    const double p_avg = mean(l.p, r.p);
    Vec f;
    f[0] = logarithmic_mean(l.rho, r.rho) * vn;
    for (int d = 0; d < sys.dim(); ++d) f[1 + d] = f[0] * mean(l.v[d], r.v[d]);
    f[1 + dir] += p_avg;
    const double beta_log = logarithmic_mean(l.rho / l.p, r.rho / r.p);
    f[ie] = f[0] / ((sys.params().gamma - 1.0) * beta_log) + vn * p_avg;
    return f;
  }
  Vec factor(const Vec& a, const Vec& b, int dir, int term) const override {
    const System& sys = system();
    Vec h;
    if (term == 0) {
      h[1 + dir] = logarithmic_mean(a[0], b[0]);
    } else {
      h[sys.dim() + 1] = -mean(a[1 + dir] / a[0], b[1 + dir] / b[0]);
    }
    return h;
  }
};

// Interface flux rotated into the frame of the unit normal m / |m|.
class EulerEs final : public FluxSet {
 public:
  EulerEs(SystemPtr sys, EsMomentum momentum) : FluxSet(sys, {1.0, 1.0}, false), momentum_(momentum) {}
  std::string name() const override {
    return momentum_ == EsMomentum::dissipative ? "euler_es" : "euler_es_kep";
  }
  Vec conservative(const Vec& a, const Vec& b, int dir) const override { return flux(a, b, axis(dir)); }
  Vec factor(const Vec& a, const Vec& b, int dir, int term) const override {
    const Frame fr = frame(axis(dir));
    const Interface s = interface(a, b, fr);
    Vec h;
    if (term == 0) {
      h[1 + dir] = logarithmic_mean(a[0], b[0]);
    } else {
      // v^num = V_int n + <v_t> t, projected on the axis
      const double vx = s.vint * fr.n[0] + s.vt_avg * fr.t[0];
      const double vy = s.vint * fr.n[1] + s.vt_avg * fr.t[1];
      h[system().dim() + 1] = -(dir == 0 ? vx : vy);
    }
    return h;
  }
  Vec flux(const Vec& a, const Vec& b, const Normal& m) const override {
    const System& sys = system();
    const Frame fr = frame(m);
    const Interface s = interface(a, b, fr);
    const int ie = sys.dim() + 1;
    const double sg = sign(s.vint);
    Vec f;
    f[0] = (logarithmic_mean(s.l.rho, s.r.rho) - 0.5 * (s.r.rho - s.l.rho) * sg) * s.vint;
    double fn = 0.0;
    double ft = 0.0;
    if (momentum_ == EsMomentum::kep) {
      fn = f[0] * mean(s.vn_l, s.vn_r) + mean(s.l.p, s.r.p);
      ft = f[0] * s.vt_avg;
    } else {
      const double rho_avg = mean(s.l.rho, s.r.rho);
      fn = (mean(s.l.rho * s.vn_l, s.r.rho * s.vn_r) - 0.5 * (s.r.rho * s.vn_r - s.l.rho * s.vn_l) * sg) *
               s.vint +
           mean(s.l.p, s.r.p) - 0.5 * s.vmax * rho_avg * (s.vn_r - s.vn_l);
      ft = (mean(s.l.rho * s.vt_l, s.r.rho * s.vt_r) - 0.5 * (s.r.rho * s.vt_r - s.l.rho * s.vt_l) * sg) *
               s.vint -
           0.5 * s.vmax * rho_avg * (s.vt_r - s.vt_l);
    }
    if (sys.dim() == 1) {
      f[1] = fn * fr.n[0];
    } else {
      f[1] = fn * fr.n[0] + ft * fr.t[0];
      f[2] = fn * fr.n[1] + ft * fr.t[1];
    }
    const double beta_log = logarithmic_mean(s.l.rho / s.l.p, s.r.rho / s.r.p);
    f[ie] = f[0] / ((sys.params().gamma - 1.0) * beta_log) + mean(s.l.p, s.r.p) * s.vint;
    return f * fr.length;
  }
  Vec fluct(const Vec& a, const Vec& b, const Normal& m) const override {
    const System& sys = system();
    const Frame fr = frame(m);
    const Interface s = interface(a, b, fr);
    const int iphi = sys.dim() + 2;
    Vec r;
    const double grav = logarithmic_mean(a[0], b[0]) * (b[iphi] - a[iphi]);
    for (int d = 0; d < sys.dim(); ++d) r[1 + d] = grav * fr.n[static_cast<std::size_t>(d)];
    r[sys.dim() + 1] = -s.vint * (s.r.p - s.l.p);
    return r * fr.length;
  }

 private:
  struct Frame {
    Normal n;
    Normal t;
    double length;
  };
  struct Interface {
    EulerState l, r;
    double vn_l, vn_r, vt_l, vt_r, vt_avg, vmax, vint;
  };

  Frame frame(const Normal& m) const {
    const double len = system().dim() == 1 ? std::fabs(m[0]) : length(m);
    if (!(len > 0.0)) throw std::invalid_argument("zero normal");
    Frame fr{{m[0] / len, system().dim() == 1 ? 0.0 : m[1] / len}, {}, len};
    fr.t = {-fr.n[1], fr.n[0]};
    return fr;
  }

  Interface interface(const Vec& a, const Vec& b, const Frame& fr) const {
    const System& sys = system();
    Interface s{euler_state(sys, a), euler_state(sys, b), 0, 0, 0, 0, 0, 0, 0};
    s.vn_l = s.l.v[0] * fr.n[0] + s.l.v[1] * fr.n[1];
    s.vn_r = s.r.v[0] * fr.n[0] + s.r.v[1] * fr.n[1];
    s.vt_l = s.l.v[0] * fr.t[0] + s.l.v[1] * fr.t[1];
    s.vt_r = s.r.v[0] * fr.t[0] + s.r.v[1] * fr.t[1];
    s.vt_avg = mean(s.vt_l, s.vt_r);
    s.vmax = std::fmax(std::fabs(s.vn_l), std::fabs(s.vn_r));
    const double beta = s.vmax > 0.0 ? 1.0 / (2.0 * mean(s.l.rho, s.r.rho) * s.vmax) : 0.0;
    s.vint = mean(s.vn_l, s.vn_r) - beta * (s.r.p - s.l.p);
    return s;
  }

  EsMomentum momentum_;
};

}  // namespace

FluxSetPtr advection_fluxset(SystemPtr system) {
  check_name(system, "var_advection");
  return std::make_shared<GenericFluxSet>(
      "advection", system, std::vector<double>{0.0},
      [](const Vec&, const Vec&, int) { return Vec{}; });
}

FluxSetPtr coupled_burgers_fluxset(SystemPtr system) {
  check_name(system, "coupled_burgers");
  return std::make_shared<GenericFluxSet>(
      "coupled_burgers", system, std::vector<double>{2.0 / 3.0, 2.0 / 3.0},
      [](const Vec&, const Vec&, int) { return Vec{}; });
}

FluxSetPtr monomial_ec1_fluxset(SystemPtr system) {
  check_monomial(system, MonomialForm::product);
  return std::make_shared<MonomialEc1>(system);
}

FluxSetPtr monomial_ec2_fluxset(SystemPtr system, double alpha, MeanKind h_mean) {
  check_monomial(system, MonomialForm::split);
  const int m = system->params().m;
  const int n = system->params().n;
  auto hnum = [n, h_mean](double a, double b) {
    return h_mean == MeanKind::arithmetic ? mean(ipow(a, n), ipow(b, n)) : ipow(mean(a, b), n);
  };
  auto f = [m, n, alpha, hnum](const Vec& ua, const Vec& ub, int) {
    const double a = ua[0];
    const double b = ub[0];
    const int d = m + n + 1;
    std::array<double, 64> pa{}, pb{};
    pa[0] = pb[0] = 1.0;
    for (int k = 1; k < d; ++k) {
      pa[static_cast<std::size_t>(k)] = pa[static_cast<std::size_t>(k - 1)] * a;
      pb[static_cast<std::size_t>(k)] = pb[static_cast<std::size_t>(k - 1)] * b;
    }
    double s_all = 0.0;
    for (int k = 0; k < d; ++k) s_all += pb[static_cast<std::size_t>(d - 1 - k)] * pa[static_cast<std::size_t>(k)];
    double s_m = 0.0;
    for (int k = 0; k < m; ++k) s_m += pb[static_cast<std::size_t>(m - 1 - k)] * pa[static_cast<std::size_t>(k)];
    Vec r;
    r[0] = (m + 1.0) / d * s_all - alpha * mean(a, b) * hnum(a, b) * s_m -
           (1.0 - alpha) * mean(ipow(a, n + 1), ipow(b, n + 1)) * s_m;
    return r;
  };
  auto h = [hnum](const Vec& ua, const Vec& ub, int, int) {
    Vec r;
    r[0] = -hnum(ua[0], ub[0]);
    return r;
  };
  return std::make_shared<GenericFluxSet>("monomial_ec2", system, std::vector<double>{alpha}, f, h);
}

FluxSetPtr shallow_water_fluxset(SystemPtr system, double alpha) {
  check_name(system, "shallow_water");
  const double g = system->params().gravity;
  const int dim = system->dim();
  auto f = [g, dim, alpha](const Vec& a, const Vec& b, int dir) {
    const double v_a = a[1 + dir] / a[0];
    const double v_b = b[1 + dir] / b[0];
    Vec r;
    r[0] = alpha * mean(a[0], b[0]) * mean(v_a, v_b) + (1.0 - alpha) * mean(a[1 + dir], b[1 + dir]);
    for (int d = 0; d < dim; ++d) r[1 + d] = r[0] * mean(a[1 + d] / a[0], b[1 + d] / b[0]);
    const double h_avg = mean(a[0], b[0]);
    r[1 + dir] += (1.0 - alpha) * g * h_avg * h_avg + (alpha - 0.5) * g * mean(a[0] * a[0], b[0] * b[0]);
    return r;
  };
  return std::make_shared<GenericFluxSet>("shallow_water", system, std::vector<double>{alpha}, f);
}

FluxSetPtr sainte_marie_fluxset(SystemPtr system, double alpha1, double alpha2, double alpha3) {
  check_name(system, "sainte_marie");
  const double g = system->params().gravity;
  const int dim = system->dim();
  auto f = [g, dim, alpha1, alpha3](const Vec& a, const Vec& b, int dir) {
    const int iw = 1 + dim;
    const int ip = 2 + dim;
    const double p_a = a[ip] / a[0];
    const double p_b = b[ip] / b[0];
    Vec r;
    r[0] = alpha1 * mean(a[0], b[0]) * mean(a[1 + dir] / a[0], b[1 + dir] / b[0]) +
           (1.0 - alpha1) * mean(a[1 + dir], b[1 + dir]);
    for (int d = 0; d < dim; ++d) r[1 + d] = r[0] * mean(a[1 + d] / a[0], b[1 + d] / b[0]);
    const double h_avg = mean(a[0], b[0]);
    r[1 + dir] += (1.0 - alpha1) * g * h_avg * h_avg + (alpha1 - 0.5) * g * mean(a[0] * a[0], b[0] * b[0]) +
                  alpha3 * mean(p_a, p_b) * h_avg + (1.0 - alpha3) * mean(a[ip], b[ip]);
    r[iw] = r[0] * mean(a[iw] / a[0], b[iw] / b[0]);
    r[ip] = r[0] * mean(p_a, p_b);
    return r;
  };
  return std::make_shared<GenericFluxSet>("sainte_marie", system,
                                          std::vector<double>{alpha1, alpha2, alpha3, alpha2}, f);
}

FluxSetPtr euler_ec_kep_fluxset(SystemPtr system) {
  check_name(system, "euler_internal_energy");
  return std::make_shared<EulerEcKep>(system);
}

FluxSetPtr euler_es_fluxset(SystemPtr system, EsMomentum momentum) {
  check_name(system, "euler_internal_energy");
  return std::make_shared<EulerEs>(system, momentum);
}

FluxSetPtr central_fluxset(SystemPtr system) {
  if (!system) throw std::invalid_argument("flux set needs a system");
  const System* sys = system.get();
  return std::make_shared<GenericFluxSet>(
      "central", system, std::vector<double>(static_cast<std::size_t>(system->num_terms()), 1.0),
      [sys](const Vec& a, const Vec& b, int dir) { return 0.5 * (sys->flux(a, dir) + sys->flux(b, dir)); });
}

double fluxset_consistency(const FluxSet& fs, const Vec& u) {
  const System& sys = fs.system();
  const int n = sys.num_vars();
  double worst = 0.0;
  for (int d = 0; d < sys.dim(); ++d) {
    worst = std::fmax(worst, max_abs(fs.conservative(u, u, d) - sys.flux(u, d), n));
    for (int k = 0; k < sys.num_terms(); ++k) {
      if (fs.has_factor_flux()) {
        worst = std::fmax(worst, max_abs(fs.factor(u, u, d, k) - sys.factor(u, d, k), n));
      }
      worst = std::fmax(worst, max_abs(fs.fluctuation(u, u, d, k), n));
    }
  }
  return worst;
}

double fluxset_symmetry(const FluxSet& fs, const Vec& a, const Vec& b) {
  const System& sys = fs.system();
  const int n = sys.num_vars();
  double worst = 0.0;
  for (int d = 0; d < sys.dim(); ++d) {
    worst = std::fmax(worst, max_abs(fs.conservative(a, b, d) - fs.conservative(b, a, d), n));
    for (int k = 0; k < sys.num_terms(); ++k) {
      if (fs.has_factor_flux()) {
        worst = std::fmax(worst, max_abs(fs.factor(a, b, d, k) - fs.factor(b, a, d, k), n));
      }
      worst = std::fmax(worst, max_abs(fs.fluctuation(a, b, d, k) + fs.fluctuation(b, a, d, k), n));
    }
  }
  return worst;
}

}  // namespace ncsbp
