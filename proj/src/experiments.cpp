#include "ncsbp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace ncsbp {

namespace {

constexpr double kPi = std::numbers::pi;

std::invalid_argument bad(const std::string& what) { return std::invalid_argument(what); }

SystemKind system_kind(const std::string& name) {
  if (name == "var_advection") return SystemKind::var_advection;
  if (name == "coupled_burgers") return SystemKind::coupled_burgers;
  if (name == "monomial") return SystemKind::monomial;
  if (name == "shallow_water") return SystemKind::shallow_water;
  if (name == "sainte_marie") return SystemKind::sainte_marie;
  if (name == "euler" || name == "euler_internal_energy") return SystemKind::euler_internal_energy;
  throw bad("unknown system '" + name + "'");
}

std::string default_flux(const std::string& system) {
  if (system == "var_advection") return "advection";
  if (system == "coupled_burgers") return "coupled_burgers";
  if (system == "monomial") return "ec2";
  if (system == "shallow_water") return "shallow_water";
  if (system == "sainte_marie") return "sainte_marie";
  return "ec_kep";
}

double alpha_or(const std::vector<double>& alpha, std::size_t i, double fallback) {
  return i < alpha.size() ? alpha[i] : fallback;
}

// Periodic wavelength of the domain along x.
double period(const ExperimentConfig& c) { return c.mesh == "warped2d" ? c.length : c.domain_b - c.domain_a; }

double bathymetry(double x, double y) {
  return 1.5 / std::exp(0.5 * ((x - 1.0) * (x - 1.0) + (y - 1.0) * (y - 1.0))) +
         0.75 / std::exp(0.5 * ((x + 1.0) * (x + 1.0) + (y + 1.0) * (y + 1.0)));
}

double bump_bathymetry(double x, double y) {
  return 2.0 + 0.5 * std::sin(2.0 * kPi * x) + 0.5 * std::cos(2.0 * kPi * y);
}

struct Mms {
  double gamma;
  double h(double x, double t) const { return 2.0 + 0.1 * std::sin(std::numbers::sqrt2 * kPi * (x - t)); }
  double dh(double x, double t) const {
    return 0.1 * std::numbers::sqrt2 * kPi * std::cos(std::numbers::sqrt2 * kPi * (x - t));
  }
};

InitialCondition initial_condition(const ExperimentConfig& c, const System& sys, const ExactSolution& exact) {
  const std::string& ic = c.ic;
  const int dim = sys.dim();
  const std::string name = sys.name();
  const double lx = period(c);
  const double x0 = c.mesh == "warped2d" ? 0.0 : c.domain_a;

  if (ic == "advection") {
    if (name != "var_advection") throw bad("ic 'advection' needs var_advection");
    return [](int, double x, double) {
      Vec u;
      u[0] = 2.0 + std::sin(kPi * (x - 0.7));
      u[1] = 2.0 + std::cos(kPi * x);
      return u;
    };
  }
  if (ic == "sine") {
    if (dim != 1) throw bad("ic 'sine' is one-dimensional");
    const int nv = sys.num_vars();
    return [nv](int, double x, double) {
      Vec u;
      for (int i = 0; i < nv; ++i) u[i] = std::sin(kPi * x);
      return u;
    };
  }
  if (ic == "sainte_marie") {
    if (name != "sainte_marie" || dim != 1) throw bad("ic 'sainte_marie' needs the 1D sainte_marie system");
    return [lx, x0](int, double x, double) {
      const double s = std::exp(std::sin(2.0 * kPi * (x - x0) / lx));
      const double h = 1.0 + s;
      Vec u;
      u[0] = h;
      u[1] = h;
      u[2] = h;
      u[3] = 10.0 * h;
      u[4] = 0.1 * s;
      return u;
    };
  }
  if (ic == "lake_at_rest" || ic == "lake_at_rest_bump") {
    if (name != "sainte_marie" && name != "shallow_water") throw bad("lake at rest needs a water system");
    const bool bump = ic == "lake_at_rest_bump";
    const int ib = sys.num_vars();
    return [bump, ib](int elem, double x, double y) {
      const double b = bump && elem == kBumpElement ? bump_bathymetry(x, y) : bathymetry(x, y);
      if (!(b < kLakeLevel)) throw std::domain_error("bathymetry reaches the lake level");
      Vec u;
      u[0] = kLakeLevel - b;
      u[ib] = b;
      return u;
    };
  }
  if (ic == "constant") {
    if (name != "euler_internal_energy") throw bad("ic 'constant' needs euler");
    const double gm1 = sys.params().gamma - 1.0;
    return [dim, gm1](int, double, double) {
      const double rho = 1.2;
      const double v[2] = {0.3, -0.2};
      Vec u;
      u[0] = rho;
      for (int d = 0; d < dim; ++d) u[1 + d] = rho * v[d];
      u[1 + dim] = 1.5 / gm1;
      return u;
    };
  }
  if (ic == "pep") {
    if (name != "euler_internal_energy") throw bad("ic 'pep' needs euler");
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> amp(0.0, 0.25);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::array<double, 6> a{}, ph{};
    for (int k = 0; k < 6; ++k) {
      a[static_cast<std::size_t>(k)] = amp(rng);
      ph[static_cast<std::size_t>(k)] = phase(rng);
    }
    const double gm1 = sys.params().gamma - 1.0;
    return [=](int, double x, double y) {
      double rho = 2.0;
      for (int k = 1; k <= 3; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        rho += a[i] * std::sin(2.0 * kPi * k * (x - x0) / lx + ph[i]);
        if (dim == 2) rho += a[i + 3] * std::sin(2.0 * kPi * k * y / lx + ph[i + 3]);
      }
      Vec u;
      u[0] = rho;
      for (int d = 0; d < dim; ++d) u[1 + d] = rho;
      u[1 + dim] = 1.0 / gm1;
      return u;
    };
  }
  if (ic == "euler_gravity") {
    if (name != "euler_internal_energy" || dim != 1) throw bad("ic 'euler_gravity' needs 1D euler");
    const double gm1 = sys.params().gamma - 1.0;
    return [=](int, double x, double) {
      const double s = 2.0 * kPi * (x - x0) / lx;
      const double rho = 1.0 + 0.2 * std::sin(s);
      const double v = 0.1 + 0.1 * std::cos(s);
      const double p = 10.0 + 0.5 * std::sin(s);
      Vec u;
      u[0] = rho;
      u[1] = rho * v;
      u[2] = p / gm1;
      u[3] = x;
      return u;
    };
  }
  if (ic == "mms") {
    if (!exact) throw bad("ic 'mms' needs euler");
    return [exact](int, double x, double y) { return exact(x, y, 0.0); };
  }
  throw bad("unknown initial condition '" + ic + "'");
}

}  // namespace

SystemPtr build_system(const ExperimentConfig& c) {
  SystemParams p;
  p.dim = c.mesh == "warped2d" ? 2 : 1;
  if (c.mesh != "line" && c.mesh != "warped2d") throw bad("mesh must be 'line' or 'warped2d'");
  p.m = c.m;
  p.n = c.n;
  const std::string flux = c.flux.empty() ? default_flux(c.system) : c.flux;
  p.monomial_form = flux == "ec1" ? MonomialForm::product : MonomialForm::split;
  p.gravity = c.gravity;
  p.celerity = c.celerity;
  p.gamma = c.gamma;
  if (c.entropy == "total_energy") {
    p.entropy = EulerEntropy::total_energy;
  } else if (c.entropy == "thermodynamic") {
    p.entropy = EulerEntropy::thermodynamic;
  } else {
    throw bad("entropy must be 'total_energy' or 'thermodynamic'");
  }
  return make_system(system_kind(c.system), p);
}

FluxSetPtr build_fluxset(const std::string& name, const SystemPtr& system, const std::vector<double>& alpha) {
  if (name == "advection") return advection_fluxset(system);
  if (name == "coupled_burgers") return coupled_burgers_fluxset(system);
  if (name == "ec1") return monomial_ec1_fluxset(system);
  if (name == "ec2") return monomial_ec2_fluxset(system, alpha_or(alpha, 0, 0.5));
  if (name == "ec2_power") return monomial_ec2_fluxset(system, alpha_or(alpha, 0, 0.5), MeanKind::power);
  if (name == "shallow_water") return shallow_water_fluxset(system, alpha_or(alpha, 0, 0.5));
  if (name == "sainte_marie") {
    return sainte_marie_fluxset(system, alpha_or(alpha, 0, 0.5), alpha_or(alpha, 1, 1.0),
                                alpha_or(alpha, 2, 2.0 / 3.0));
  }
  if (name == "ec_kep") return euler_ec_kep_fluxset(system);
  if (name == "es") return euler_es_fluxset(system, EsMomentum::dissipative);
  if (name == "es_kep") return euler_es_fluxset(system, EsMomentum::kep);
  if (name == "central") return central_fluxset(system);
  throw bad("unknown flux '" + name + "'");
}

double monomial_t_max(int m, int n) {
  if (m < 1 || n < 1) throw bad("monomial needs m, n >= 1");
  constexpr int points = 1000000;
  double lowest = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = -1.0 + 2.0 * i / (points - 1.0);
    const double s = n * (m + n - 1.0) * kPi * std::pow(std::sin(kPi * x), m + n - 2) * std::cos(kPi * x);
    lowest = std::min(lowest, s);
  }
  return -1.0 / lowest;
}

Experiment build_experiment(const ExperimentConfig& config) {
  Experiment ex;
  ex.config = config;
  ExperimentConfig& c = ex.config;
  if (c.degree < 0) throw bad("degree must be nonnegative");
  if (c.elements < 1) throw bad("elements must be positive");
  if (!(c.cfl > 0.0)) throw bad("cfl must be positive");
  if (c.bc != "periodic" && c.bc != "wall") throw bad("bc must be 'periodic' or 'wall'");
  if (c.method != "ssprk104" && c.method != "rk4") throw bad("method must be 'ssprk104' or 'rk4'");
  if (c.callback_every < 0) throw bad("callback_every must be nonnegative");
  if (c.flux.empty()) c.flux = default_flux(c.system);
  if (c.surface_flux.empty()) c.surface_flux = c.flux;

  ex.system = build_system(c);
  ex.volume = build_fluxset(c.flux, ex.system, c.alpha);
  ex.surface = build_fluxset(c.surface_flux, ex.system, c.alpha);

  if (!(c.t_final > 0.0)) {
    if (c.system != "monomial" || c.ic != "sine") throw bad("t_final must be positive");
    c.t_final = 0.5 * monomial_t_max(c.m, c.n);
  }

  const BoundaryKind bk = c.bc == "wall" ? BoundaryKind::wall : BoundaryKind::periodic;
  if (c.mesh == "line") {
    if (!(c.domain_b > c.domain_a)) throw bad("domain_b must exceed domain_a");
    const Mesh1D mesh = build_mesh_1d(c.domain_a, c.domain_b, c.elements, bk == BoundaryKind::periodic);
    ex.disc.emplace(Discretization::line(mesh, c.degree, ex.volume, ex.surface));
  } else {
    if (c.degree < 1) throw bad("curvilinear meshes need degree >= 1");
    if (!(c.length > 0.0)) throw bad("length must be positive");
    const CurvilinearMesh2D mesh =
        build_mesh_2d(c.elements, c.elements, warped_square({c.length, c.length / 12.0}), c.degree, bk,
                      {0.0, 0.0}, {c.length, c.length});
    ex.disc.emplace(Discretization::curvilinear(mesh, ex.volume, ex.surface));
  }

  if (c.ic == "mms") {
    if (ex.system->name() != "euler_internal_energy") throw bad("ic 'mms' needs euler");
    const Mms mms{c.gamma};
    const int dim = ex.system->dim();
    ex.exact = [mms, dim](double x, double, double t) {
      const double h = mms.h(x, t);
      Vec u;
      u[0] = h;
      u[1 + dim] = h * h - h;
      return u;
    };
    ex.disc->forcing = [mms, dim](double x, double, double t) {
      const double h = mms.h(x, t);
      const double dh = mms.dh(x, t);
      Vec s;
      s[0] = -dh;
      s[1] = (mms.gamma - 1.0) * (2.0 * h - 1.0) * dh;
      s[1 + dim] = -(2.0 * h - 1.0) * dh;
      return s;
    };
  }

  ex.initial = ex.disc->make_field(initial_condition(c, *ex.system, ex.exact));
  return ex;
}

RunSummary run_experiment(Experiment& ex, std::ostream* csv) {
  const Discretization& disc = *ex.disc;
  const int nv = disc.system().num_vars();
  IntegratorConfig ic;
  ic.method = ex.config.method == "rk4" ? Method::rk4 : Method::ssprk104;
  ic.cfl = ex.config.cfl;
  ic.t_final = ex.config.t_final;
  ic.callback_every = ex.config.callback_every;

  const Field reference = ex.initial;
  Field u = ex.initial;
  RunSummary sum;
  std::optional<DiagnosticsRecord> first, last;
  if (csv) write_csv_header(*csv, nv, static_cast<bool>(ex.exact));
  auto cb = [&](const Field& state, long) {
    DiagnosticsRecord rec = make_record(disc, state, &reference, ex.exact);
    sum.entropy_residual_max = std::max(sum.entropy_residual_max, std::fabs(rec.entropy_residual));
    if (csv) write_csv_row(*csv, rec);
    if (!first) first = rec;
    last = std::move(rec);
    return true;
  };
  const IntegrationResult res = integrate(disc, u, ic, cb);
  sum.steps = res.steps;
  sum.t_final = res.t;
  sum.entropy_initial = first->entropy;
  sum.entropy_final = last->entropy;
  const double scale = std::fabs(first->entropy) > 0.0 ? std::fabs(first->entropy) : 1.0;
  sum.entropy_error = std::fabs(last->entropy - first->entropy) / scale;
  sum.entropy_deviation = last->entropy_deviation / scale;
  sum.entropy_residual_final = last->entropy_residual;
  for (int i = 0; i < nv; ++i) {
    const auto k = static_cast<std::size_t>(i);
    sum.mass_drift.push_back(last->totals[k] - first->totals[k]);
  }
  const Field du = disc.rhs(u);
  sum.mass_rate_final.assign(static_cast<std::size_t>(nv), 0.0);
  for (int e = 0; e < disc.num_elements(); ++e) {
    for (int q = 0; q < disc.nodes_per_element(); ++q) {
      const double w = disc.quadrature_weight(e, q);
      for (int i = 0; i < nv; ++i) sum.mass_rate_final[static_cast<std::size_t>(i)] += w * du.at(e, q)[i];
    }
  }
  sum.error = last->error;
  ex.initial = reference;
  return sum;
}

RunSummary run_experiment(const ExperimentConfig& config, std::ostream* csv) {
  Experiment ex = build_experiment(config);
  return run_experiment(ex, csv);
}

std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& base, const std::vector<int>& elements) {
  if (elements.size() < 2) throw bad("convergence needs at least two resolutions");
  std::vector<ConvergenceRow> rows;
  std::vector<double> errs, res;
  for (int k : elements) {
    ExperimentConfig c = base;
    c.elements = k;
    c.callback_every = 0;
    Experiment ex = build_experiment(c);
    if (!ex.exact) throw bad("convergence needs a manufactured solution (ic 'mms')");
    const RunSummary s = run_experiment(ex);
    rows.push_back({k, *s.error, std::nullopt});
    errs.push_back(*s.error);
    res.push_back(static_cast<double>(k));
  }
  const std::vector<double> rates = eoc(errs, res);
  for (std::size_t i = 0; i < rates.size(); ++i) rows[i + 1].eoc = rates[i];
  return rows;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  const auto old = os.precision(17);
  os << "elements,error,eoc\n";
  for (const ConvergenceRow& r : rows) {
    os << r.elements << ',' << r.error << ',';
    if (r.eoc) os << *r.eoc;
    os << '\n';
  }
  os.precision(old);
}

std::vector<double> lake_at_rest_norms(const Experiment& ex, const Field& u, double level) {
  const Discretization& disc = *ex.disc;
  const System& sys = disc.system();
  if (sys.name() != "sainte_marie" && sys.name() != "shallow_water") throw bad("lake at rest needs a water system");
  const int nv = sys.num_vars();
  // H - H0, velocities, then w and p for the non-hydrostatic system.
  const int comps = nv;
  std::vector<double> norms(static_cast<std::size_t>(comps), 0.0);
  for (int e = 0; e < disc.num_elements(); ++e) {
    for (int q = 0; q < disc.nodes_per_element(); ++q) {
      const Vec& s = u.at(e, q);
      const double w = disc.quadrature_weight(e, q);
      const double dev = s[0] + s[nv] - level;
      norms[0] += w * dev * dev;
      for (int i = 1; i < comps; ++i) {
        const double v = s[i] / s[0];
        norms[static_cast<std::size_t>(i)] += w * v * v;
      }
    }
  }
  for (double& n : norms) n = std::sqrt(n);
  return norms;
}

std::vector<std::string> preset_names() {
  return {"advection", "monomial_ec1", "monomial_ec2", "sainte_marie_ec", "wb2d",
          "free_stream", "pep", "euler_energy", "euler_mms"};
}

ExperimentConfig preset(const std::string& name) {
  ExperimentConfig c;
  c.name = name;
  if (name == "advection") {
    c.system = "var_advection";
    c.flux = "advection";
    c.degree = 3;
    c.elements = 32;
    c.cfl = 0.01;
    c.t_final = 1.0;
    c.ic = "advection";
  } else if (name == "monomial_ec1" || name == "monomial_ec2") {
    c.system = "monomial";
    c.flux = name == "monomial_ec1" ? "ec1" : "ec2";
    c.m = 4;
    c.n = name == "monomial_ec1" ? 5 : 4;
    c.degree = 3;
    c.elements = 32;
    c.cfl = 0.001;
    c.t_final = 0.0;  // half the shock formation time
    c.ic = "sine";
  } else if (name == "sainte_marie_ec") {
    c.system = "sainte_marie";
    c.flux = "sainte_marie";
    c.alpha = {0.5, 1.0, 2.0 / 3.0};
    c.gravity = 1.0;
    c.celerity = 2.0;
    c.degree = 3;
    c.elements = 128;
    c.domain_a = 0.0;
    c.domain_b = 1.0;
    c.cfl = 0.1;
    c.t_final = 0.1;
    c.ic = "sainte_marie";
  } else if (name == "wb2d") {
    c.system = "sainte_marie";
    c.flux = "sainte_marie";
    c.alpha = {0.5, 1.0, 2.0 / 3.0};
    c.gravity = 9.81;
    c.celerity = 1.98;
    c.mesh = "warped2d";
    c.bc = "wall";
    c.degree = 3;
    c.elements = 4;
    c.cfl = 1.0;
    c.t_final = 100.0;
    c.ic = "lake_at_rest_bump";
  } else if (name == "free_stream") {
    c.system = "euler";
    c.flux = "ec_kep";
    c.mesh = "warped2d";
    c.degree = 3;
    c.elements = 4;
    c.cfl = 0.5;
    c.t_final = 1.0;
    c.ic = "constant";
  } else if (name == "pep") {
    c.system = "euler";
    c.flux = "ec_kep";
    c.domain_a = 0.0;
    c.domain_b = 1.0;
    c.degree = 3;
    c.elements = 16;
    c.cfl = 0.1;
    c.t_final = 0.01;
    c.ic = "pep";
  } else if (name == "euler_energy") {
    c.system = "euler";
    c.flux = "ec_kep";
    c.domain_a = 0.0;
    c.domain_b = 1.0;
    c.degree = 3;
    c.elements = 16;
    c.cfl = 0.01;
    c.t_final = 0.5;
    c.ic = "euler_gravity";
  } else if (name == "euler_mms") {
    c.system = "euler";
    c.flux = "ec_kep";
    c.mesh = "warped2d";
    c.degree = 3;
    c.elements = 4;
    c.cfl = 0.1;
    c.t_final = 2.0;
    c.ic = "mms";
  } else {
    throw bad("unknown preset '" + name + "'");
  }
  return c;
}

}  // namespace ncsbp
