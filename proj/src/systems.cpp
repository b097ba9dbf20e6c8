#include "ncsbp/systems.hpp"

#include <cmath>
#include <stdexcept>

namespace ncsbp {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec unit(int i, double value) {
  Vec e;
  e[i] = value;
  return e;
}

class VarAdvection final : public System {
 public:
  explicit VarAdvection(SystemParams p) : System(p, 1, 1, 1) {}
  std::string name() const override { return "var_advection"; }
  std::vector<std::string> variable_names() const override { return {"u", "a"}; }
  Vec flux(const Vec&, int) const override { return Vec{}; }
  Vec factor(const Vec& u, int, int) const override { return unit(0, u[1]); }
  double gfun(const Vec& u, int, int) const override { return u[0]; }
  double entropy(const Vec& u) const override { return u[0] * u[0] / u[1]; }
  Vec entropy_vars(const Vec& u) const override { return unit(0, 2.0 * u[0] / u[1]); }
  double entropy_flux(const Vec& u, int) const override { return u[0] * u[0]; }
  double wave_speed(const Vec& u) const override { return std::fabs(u[1]); }
  bool admissible(const Vec& u) const override { return u[1] > 0.0; }
  Vec sample(std::mt19937_64& rng) const override {
    Vec u;
    u[0] = uniform(rng, -2.0, 2.0);
    u[1] = uniform(rng, 0.5, 3.0);
    return u;
  }
};

class CoupledBurgers final : public System {
 public:
  explicit CoupledBurgers(SystemParams p) : System(p, 2, 0, 2) {}
  std::string name() const override { return "coupled_burgers"; }
  std::vector<std::string> variable_names() const override { return {"u", "v"}; }
  Vec flux(const Vec&, int) const override { return Vec{}; }
  Vec factor(const Vec& u, int, int term) const override { return unit(term, u[term]); }
  double gfun(const Vec& u, int, int) const override { return u[0] + u[1]; }
  double entropy(const Vec& u) const override {
    const double q = u[0] + u[1];
    return 0.5 * q * q;
  }
  Vec entropy_vars(const Vec& u) const override {
    const double q = u[0] + u[1];
    Vec w;
    w[0] = q;
    w[1] = q;
    return w;
  }
  double entropy_flux(const Vec& u, int) const override {
    const double q = u[0] + u[1];
    return q * q * q / 3.0;
  }
  double wave_speed(const Vec& u) const override { return std::fabs(u[0] + u[1]); }
  Vec sample(std::mt19937_64& rng) const override {
    Vec u;
    u[0] = uniform(rng, -2.0, 2.0);
    u[1] = uniform(rng, -2.0, 2.0);
    return u;
  }
};

class Monomial final : public System {
 public:
  explicit Monomial(SystemParams p) : System(p, 1, 0, 1), m_(p.m), n_(p.n) {}
  std::string name() const override {
    return params().monomial_form == MonomialForm::product ? "monomial_product" : "monomial_split";
  }
  std::vector<std::string> variable_names() const override { return {"u"}; }
  bool split() const { return params().monomial_form == MonomialForm::split; }
  Vec flux(const Vec& u, int) const override {
    return split() ? unit(0, std::pow(u[0], m_ + n_)) : Vec{};
  }
  Vec factor(const Vec& u, int, int) const override {
    return split() ? unit(0, -std::pow(u[0], n_)) : unit(0, std::pow(u[0], m_));
  }
  double gfun(const Vec& u, int, int) const override {
    return split() ? std::pow(u[0], m_) : std::pow(u[0], n_);
  }
  double entropy(const Vec& u) const override { return 0.5 * u[0] * u[0]; }
  Vec entropy_vars(const Vec& u) const override { return unit(0, u[0]); }
  double entropy_flux(const Vec& u, int) const override {
    return static_cast<double>(n_) / (m_ + n_ + 1) * std::pow(u[0], m_ + n_ + 1);
  }
  double wave_speed(const Vec& u) const override {
    return (m_ + n_) * std::pow(std::fabs(u[0]), m_ + n_ - 1);
  }
  Vec sample(std::mt19937_64& rng) const override { return unit(0, uniform(rng, -2.0, 2.0)); }

 private:
  int m_;
  int n_;
};

// Shallow water in 1D or 2D: (h, h v_1[, h v_2] | b).
class ShallowWater final : public System {
 public:
  explicit ShallowWater(SystemParams p) : System(p, 1 + p.dim, 1, 1) {}
  std::string name() const override { return "shallow_water"; }
  std::vector<std::string> variable_names() const override {
    if (dim() == 1) return {"h", "hv", "b"};
    return {"h", "hv1", "hv2", "b"};
  }
  int ib() const { return 1 + dim(); }
  double vel(const Vec& u, int d) const { return u[1 + d] / u[0]; }
  double speed2(const Vec& u) const {
    double s = 0.0;
    for (int d = 0; d < dim(); ++d) s += vel(u, d) * vel(u, d);
    return s;
  }
  Vec flux(const Vec& u, int dir) const override {
    const double g = params().gravity;
    const double vn = vel(u, dir);
    Vec f;
    f[0] = u[1 + dir];
    for (int d = 0; d < dim(); ++d) f[1 + d] = u[1 + d] * vn;
    f[1 + dir] += 0.5 * g * u[0] * u[0];
    return f;
  }
  Vec factor(const Vec& u, int dir, int) const override {
    return unit(1 + dir, params().gravity * u[0]);
  }
  double gfun(const Vec& u, int, int) const override { return u[ib()]; }
  double entropy(const Vec& u) const override {
    const double g = params().gravity;
    return 0.5 * u[0] * speed2(u) + 0.5 * g * u[0] * u[0] + g * u[0] * u[ib()];
  }
  Vec entropy_vars(const Vec& u) const override {
    const double g = params().gravity;
    Vec w;
    w[0] = -0.5 * speed2(u) + g * u[0] + g * u[ib()];
    for (int d = 0; d < dim(); ++d) w[1 + d] = vel(u, d);
    return w;
  }
  double entropy_flux(const Vec& u, int dir) const override {
    const double g = params().gravity;
    return (0.5 * u[0] * speed2(u) + g * u[0] * (u[0] + u[ib()])) * vel(u, dir);
  }
  double wave_speed(const Vec& u) const override {
    return std::sqrt(speed2(u)) + std::sqrt(params().gravity * u[0]);
  }
  bool admissible(const Vec& u) const override { return u[0] > 0.0; }
  Vec sample(std::mt19937_64& rng) const override {
    Vec u;
    u[0] = uniform(rng, 0.5, 3.0);
    for (int d = 0; d < dim(); ++d) u[1 + d] = u[0] * uniform(rng, -2.0, 2.0);
    u[ib()] = uniform(rng, -1.0, 1.0);
    return u;
  }
  Vec mirror(const Vec& u, const Normal& nu) const override {
    Vec r = u;
    if (dim() == 1) {
      r[1] = -u[1];
      return r;
    }
    const double mn = u[1] * nu[0] + u[2] * nu[1];
    r[1] = u[1] - 2.0 * mn * nu[0];
    r[2] = u[2] - 2.0 * mn * nu[1];
    return r;
  }
};

// Hyperbolized Sainte-Marie: (h, h v_1[, h v_2], h w, h p | b).
class SainteMarie final : public System {
 public:
  explicit SainteMarie(SystemParams p) : System(p, 3 + p.dim, 1, 4) {}
  std::string name() const override { return "sainte_marie"; }
  std::vector<std::string> variable_names() const override {
    if (dim() == 1) return {"h", "hv", "hw", "hp", "b"};
    return {"h", "hv1", "hv2", "hw", "hp", "b"};
  }
  int iw() const { return 1 + dim(); }
  int ip() const { return 2 + dim(); }
  int ib() const { return 3 + dim(); }
  double vel(const Vec& u, int d) const { return u[1 + d] / u[0]; }
  double speed2(const Vec& u) const {
    double s = 0.0;
    for (int d = 0; d < dim(); ++d) s += vel(u, d) * vel(u, d);
    return s;
  }
  Vec flux(const Vec& u, int dir) const override {
    const double g = params().gravity;
    const double vn = vel(u, dir);
    const double p = u[ip()] / u[0];
    Vec f;
    f[0] = u[1 + dir];
    for (int d = 0; d < dim(); ++d) f[1 + d] = u[1 + d] * vn;
    f[1 + dir] += 0.5 * g * u[0] * u[0] + u[0] * p;
    f[iw()] = u[iw()] * vn;
    f[ip()] = u[ip()] * vn;
    return f;
  }
  Vec factor(const Vec& u, int dir, int term) const override {
    const double g = params().gravity;
    const double c2 = params().celerity * params().celerity;
    const double p = u[ip()] / u[0];
    switch (term) {
      case 0: return unit(1 + dir, g * u[0]);
      case 1: return unit(1 + dir, 2.0 * p);
      case 2: return unit(ip(), c2 * u[0]);
      default: return unit(ip(), -2.0 * c2 * vel(u, dir));
    }
  }
  double gfun(const Vec& u, int dir, int term) const override {
    return term == 2 ? vel(u, dir) : u[ib()];
  }
  Vec source(const Vec& u) const override {
    const double c2 = params().celerity * params().celerity;
    Vec s;
    s[iw()] = 2.0 * u[ip()] / u[0];
    s[ip()] = -2.0 * c2 * u[iw()] / u[0];
    return s;
  }
  double entropy(const Vec& u) const override {
    const double g = params().gravity;
    const double c2 = params().celerity * params().celerity;
    const double w = u[iw()] / u[0];
    const double p = u[ip()] / u[0];
    return 0.5 * u[0] * (speed2(u) + w * w + p * p / c2) + 0.5 * g * u[0] * u[0] +
           g * u[0] * u[ib()];
  }
  Vec entropy_vars(const Vec& u) const override {
    const double g = params().gravity;
    const double c2 = params().celerity * params().celerity;
    const double w = u[iw()] / u[0];
    const double p = u[ip()] / u[0];
    Vec e;
    e[0] = -0.5 * (speed2(u) + w * w + p * p / c2) + g * u[0] + g * u[ib()];
    for (int d = 0; d < dim(); ++d) e[1 + d] = vel(u, d);
    e[iw()] = w;
    e[ip()] = p / c2;
    return e;
  }
  double entropy_flux(const Vec& u, int dir) const override {
    const double g = params().gravity;
    const double p = u[ip()] / u[0];
    return (entropy(u) + 0.5 * g * u[0] * u[0] + u[0] * p) * vel(u, dir);
  }
  double wave_speed(const Vec& u) const override {
    return std::sqrt(speed2(u)) + std::sqrt(params().gravity * u[0]) + params().celerity;
  }
  bool admissible(const Vec& u) const override { return u[0] > 0.0; }
  Vec sample(std::mt19937_64& rng) const override {
    Vec u;
    u[0] = uniform(rng, 0.5, 3.0);
    for (int d = 0; d < dim(); ++d) u[1 + d] = u[0] * uniform(rng, -2.0, 2.0);
    u[iw()] = u[0] * uniform(rng, -2.0, 2.0);
    u[ip()] = u[0] * uniform(rng, -5.0, 20.0);
    u[ib()] = uniform(rng, -1.0, 1.0);
    return u;
  }
  Vec mirror(const Vec& u, const Normal& nu) const override {
    Vec r = u;
    if (dim() == 1) {
      r[1] = -u[1];
      return r;
    }
    const double mn = u[1] * nu[0] + u[2] * nu[1];
    r[1] = u[1] - 2.0 * mn * nu[0];
    r[2] = u[2] - 2.0 * mn * nu[1];
    return r;
  }
};

// Euler with internal energy: (rho, rho v_1[, rho v_2], rho e | phi).
class EulerInternal final : public System {
 public:
  explicit EulerInternal(SystemParams p) : System(p, 2 + p.dim, 1, 2) {}
  std::string name() const override { return "euler_internal_energy"; }
  std::vector<std::string> variable_names() const override {
    if (dim() == 1) return {"rho", "rho_v", "rho_e", "phi"};
    return {"rho", "rho_v1", "rho_v2", "rho_e", "phi"};
  }
  int ie() const { return 1 + dim(); }
  int iphi() const { return 2 + dim(); }
  double gm1() const { return params().gamma - 1.0; }
  double vel(const Vec& u, int d) const { return u[1 + d] / u[0]; }
  double speed2(const Vec& u) const {
    double s = 0.0;
    for (int d = 0; d < dim(); ++d) s += vel(u, d) * vel(u, d);
    return s;
  }
  double pressure(const Vec& u) const { return gm1() * u[ie()]; }
  Vec flux(const Vec& u, int dir) const override {
    const double vn = vel(u, dir);
    const double p = pressure(u);
    Vec f;
    f[0] = u[1 + dir];
    for (int d = 0; d < dim(); ++d) f[1 + d] = u[1 + d] * vn;
    f[1 + dir] += p;
    f[ie()] = (u[ie()] + p) * vn;
    return f;
  }
  Vec factor(const Vec& u, int dir, int term) const override {
    if (term == 0) return unit(1 + dir, u[0]);
    return unit(ie(), -vel(u, dir));
  }
  double gfun(const Vec& u, int, int term) const override {
    return term == 0 ? u[iphi()] : pressure(u);
  }
  bool thermodynamic() const { return params().entropy == EulerEntropy::thermodynamic; }
  double specific_entropy(const Vec& u) const {
    return std::log(pressure(u)) - params().gamma * std::log(u[0]);
  }
  double entropy(const Vec& u) const override {
    if (thermodynamic()) return -u[0] * specific_entropy(u);
    return u[ie()] + 0.5 * u[0] * speed2(u) + u[0] * u[iphi()];
  }
  Vec entropy_vars(const Vec& u) const override {
    Vec w;
    if (thermodynamic()) {
      w[0] = -std::log(gm1() * u[ie()] / std::pow(u[0], params().gamma)) + params().gamma;
      w[ie()] = -u[0] / u[ie()];
      return w;
    }
    w[0] = u[iphi()] - 0.5 * speed2(u);
    for (int d = 0; d < dim(); ++d) w[1 + d] = vel(u, d);
    w[ie()] = 1.0;
    return w;
  }
  double entropy_flux(const Vec& u, int dir) const override {
    if (thermodynamic()) return -u[0] * specific_entropy(u) * vel(u, dir);
    return (entropy(u) + pressure(u)) * vel(u, dir);
  }
  double wave_speed(const Vec& u) const override {
    return std::sqrt(speed2(u)) + std::sqrt(params().gamma * pressure(u) / u[0]);
  }
  bool admissible(const Vec& u) const override { return u[0] > 0.0 && u[ie()] > 0.0; }
  Vec sample(std::mt19937_64& rng) const override {
    Vec u;
    u[0] = uniform(rng, 0.5, 3.0);
    for (int d = 0; d < dim(); ++d) u[1 + d] = u[0] * uniform(rng, -2.0, 2.0);
    u[ie()] = uniform(rng, 0.5, 5.0) / gm1();
    u[iphi()] = uniform(rng, -1.0, 1.0);
    return u;
  }
  Vec mirror(const Vec& u, const Normal& nu) const override {
    Vec r = u;
    if (dim() == 1) {
      r[1] = -u[1];
      return r;
    }
    const double mn = u[1] * nu[0] + u[2] * nu[1];
    r[1] = u[1] - 2.0 * mn * nu[0];
    r[2] = u[2] - 2.0 * mn * nu[1];
    return r;
  }
};

}  // namespace

SystemPtr make_system(SystemKind kind, const SystemParams& params) {
  if (params.dim != 1 && params.dim != 2) throw std::invalid_argument("dimension must be 1 or 2");
  const bool two_d_ok = kind == SystemKind::shallow_water || kind == SystemKind::sainte_marie ||
                        kind == SystemKind::euler_internal_energy;
  if (params.dim == 2 && !two_d_ok) throw std::invalid_argument("system is one-dimensional only");
  switch (kind) {
    case SystemKind::var_advection: return std::make_shared<VarAdvection>(params);
    case SystemKind::coupled_burgers: return std::make_shared<CoupledBurgers>(params);
    case SystemKind::monomial:
      if (params.m < 1 || params.n < 1) throw std::invalid_argument("monomial needs m, n >= 1");
      if (params.m + params.n > 40) throw std::invalid_argument("monomial needs m + n <= 40");
      return std::make_shared<Monomial>(params);
    case SystemKind::shallow_water:
      if (!(params.gravity > 0.0)) throw std::invalid_argument("gravity must be positive");
      return std::make_shared<ShallowWater>(params);
    case SystemKind::sainte_marie:
      if (!(params.gravity > 0.0)) throw std::invalid_argument("gravity must be positive");
      if (!(params.celerity > 0.0)) throw std::invalid_argument("celerity must be positive");
      return std::make_shared<SainteMarie>(params);
    case SystemKind::euler_internal_energy:
      if (!(params.gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
      return std::make_shared<EulerInternal>(params);
  }
  throw std::invalid_argument("unknown system");
}

double euler_pressure(const System& sys, const Vec& u) {
  return (sys.params().gamma - 1.0) * u[sys.dim() + 1];
}

namespace {

constexpr double kFdStep = 1e-6;

double fd_step(const Vec& u, int j) { return kFdStep * std::fmax(1.0, std::fabs(u[j])); }

}  // namespace

double check_entropy_compatibility(const System& sys, const Vec& u, int dir) {
  if (!sys.admissible(u)) throw std::domain_error("inadmissible state");
  const int n = sys.num_vars();
  const Vec w = sys.entropy_vars(u);
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const double h = fd_step(u, j);
    Vec up = u;
    Vec um = u;
    up[j] += h;
    um[j] -= h;
    double lhs = dot(w, sys.flux(up, dir) - sys.flux(um, dir), n) / (2.0 * h);
    for (int k = 0; k < sys.num_terms(); ++k) {
      const double dg = (sys.gfun(up, dir, k) - sys.gfun(um, dir, k)) / (2.0 * h);
      lhs += dot(w, sys.factor(u, dir, k), n) * dg;
    }
    const double rhs = (sys.entropy_flux(up, dir) - sys.entropy_flux(um, dir)) / (2.0 * h);
    worst = std::fmax(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

double check_entropy_gradient(const System& sys, const Vec& u) {
  const Vec w = sys.entropy_vars(u);
  double worst = 0.0;
  for (int j = 0; j < sys.num_vars(); ++j) {
    const double h = fd_step(u, j);
    Vec up = u;
    Vec um = u;
    up[j] += h;
    um[j] -= h;
    const double d = (sys.entropy(up) - sys.entropy(um)) / (2.0 * h);
    worst = std::fmax(worst, std::fabs(d - w[j]));
  }
  return worst;
}

}  // namespace ncsbp
