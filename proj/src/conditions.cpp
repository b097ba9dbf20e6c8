#include "ncsbp/conditions.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ncsbp {

namespace {

double psi_jump(const System& sys, const Vec& a, const Vec& b, int dir) {
  return sys.potential(b, dir) - sys.potential(a, dir);
}

double g_jump(const System& sys, const Vec& a, const Vec& b, int dir, int k) {
  return sys.gfun(b, dir, k) - sys.gfun(a, dir, k);
}

}  // namespace

double check_conservative_ec(const System& sys, const TwoPointFlux& fnum, const Vec& a, const Vec& b,
                             int dir) {
  const int n = sys.num_vars();
  const Vec jw = sys.entropy_vars(b) - sys.entropy_vars(a);
  return dot(jw, fnum(a, b), n) - psi_jump(sys, a, b, dir);
}

double check_nonconservative_ec(const FluxSet& fs, const Vec& a, const Vec& b, int dir) {
  const System& sys = fs.system();
  const int n = sys.num_vars();
  const Normal m = axis(dir);
  const Vec wa = sys.entropy_vars(a);
  const Vec wb = sys.entropy_vars(b);
  const Vec w_avg = 0.5 * (wa + wb);
  return dot(wb - wa, fs.flux(a, b, m), n) - dot(w_avg, fs.fluct(a, b, m), n) -
         0.5 * (dot(wa, fs.local(a, b, m), n) - dot(wb, fs.local(b, a, m), n)) - psi_jump(sys, a, b, dir);
}

double induced_entropy_flux(const FluxSet& fs, const Vec& a, const Vec& b, int dir) {
  const System& sys = fs.system();
  const int n = sys.num_vars();
  const Normal m = axis(dir);
  const Vec wa = sys.entropy_vars(a);
  const Vec wb = sys.entropy_vars(b);
  const double f_avg = 0.5 * (sys.entropy_flux(a, dir) + sys.entropy_flux(b, dir));
  const double wf_avg = 0.5 * (dot(wa, sys.flux(a, dir), n) + dot(wb, sys.flux(b, dir), n));
  return f_avg + dot(0.5 * (wa + wb), fs.flux(a, b, m), n) - wf_avg -
         0.25 * dot(wb - wa, fs.fluct(a, b, m), n) +
         0.25 * (dot(wa, fs.local(a, b, m), n) + dot(wb, fs.local(b, a, m), n));
}

double check_three_state(const FluxSet& fs, const Vec& um, const Vec& u0, const Vec& up, int dir) {
  const System& sys = fs.system();
  const int n = sys.num_vars();
  const Normal m = axis(dir);
  const Vec update = fs.flux(u0, up, m) - fs.flux(um, u0, m) + 0.5 * (fs.fluct(u0, up, m) + fs.fluct(um, u0, m)) +
                     0.5 * (fs.local(u0, up, m) - fs.local(u0, um, m));
  return -dot(sys.entropy_vars(u0), update, n) + induced_entropy_flux(fs, u0, up, dir) -
         induced_entropy_flux(fs, um, u0, dir);
}

double check_form_condition(int form, const System& sys, const FormInputs& in, const Vec& a, const Vec& b,
                            int dir) {
  const int n = sys.num_vars();
  const int terms = sys.num_terms();
  const Vec wa = sys.entropy_vars(a);
  const Vec wb = sys.entropy_vars(b);
  double r = dot(wb - wa, in.f_num, n) - psi_jump(sys, a, b, dir);
  auto need = [terms](std::size_t size, const char* what) {
    if (static_cast<int>(size) != terms) {
      throw std::invalid_argument(std::string("form condition needs ") + what + " for every term");
    }
  };
  switch (form) {
    case 1:
      for (int k = 0; k < terms; ++k) {
        const double wh = 0.5 * (dot(wa, sys.factor(a, dir, k), n) + dot(wb, sys.factor(b, dir, k), n));
        r -= wh * g_jump(sys, a, b, dir, k);
      }
      return r;
    case 2:
      need(in.g_num.size(), "g^num");
      for (int k = 0; k < terms; ++k) {
        const double wh_a = dot(wa, sys.factor(a, dir, k), n);
        const double wh_b = dot(wb, sys.factor(b, dir, k), n);
        r += (wh_b - wh_a) * in.g_num[static_cast<std::size_t>(k)] -
             (wh_b * sys.gfun(b, dir, k) - wh_a * sys.gfun(a, dir, k));
      }
      return r;
    case 3:
      need(in.h_num.size(), "H^num");
      for (int k = 0; k < terms; ++k) {
        r -= dot(0.5 * (wa + wb), in.h_num[static_cast<std::size_t>(k)], n) * g_jump(sys, a, b, dir, k);
      }
      return r;
    case 4:
      need(in.h_num.size(), "H^num");
      need(in.hg_num.size(), "(Hg)^num");
      for (int k = 0; k < terms; ++k) {
        const Vec& h = in.h_num[static_cast<std::size_t>(k)];
        r += dot(wb - wa, in.hg_num[static_cast<std::size_t>(k)], n) -
             (dot(wb, h, n) * sys.gfun(b, dir, k) - dot(wa, h, n) * sys.gfun(a, dir, k));
      }
      return r;
    default:
      throw std::invalid_argument("form must be 1, 2, 3 or 4");
  }
}

FormInputs form_inputs(const FluxSet& fs, const Vec& a, const Vec& b, int dir) {
  FormInputs in;
  in.f_num = fs.conservative(a, b, dir);
  for (int k = 0; k < fs.system().num_terms(); ++k) in.h_num.push_back(fs.factor(a, b, dir, k));
  return in;
}

Fluctuations fluctuations_from_fluxset(const FluxSet& fs, const Vec& a, const Vec& b, int dir) {
  const System& sys = fs.system();
  const Normal m = axis(dir);
  const Vec f = fs.flux(a, b, m);
  const Vec phi = fs.fluct(a, b, m);
  // (1 - alpha) H(u) [[g]] evaluated on either side
  const Vec loc_a = fs.local(a, b, m);
  const Vec loc_b = -fs.local(b, a, m);
  return {f - sys.flux(a, dir) + 0.5 * (phi + loc_a), sys.flux(b, dir) - f + 0.5 * (phi + loc_b)};
}

double check_fluctuation_condition(const System& sys, const Fluctuations& d, const Vec& a, const Vec& b,
                                   int dir) {
  const int n = sys.num_vars();
  const double jump_f = sys.entropy_flux(b, dir) - sys.entropy_flux(a, dir);
  return jump_f - (dot(sys.entropy_vars(b), d.plus, n) + dot(sys.entropy_vars(a), d.minus, n));
}

WellBalancedResidual check_well_balanced(const FluxSet& fs, const Vec& a, const Vec& b, int dir) {
  const System& sys = fs.system();
  const Normal m = axis(dir);
  const Vec f = fs.flux(a, b, m);
  const Vec phi = fs.fluct(a, b, m);
  return {f + 0.5 * (phi + fs.local(a, b, m)) - sys.flux(a, dir),
          -f + 0.5 * (phi - fs.local(b, a, m)) + sys.flux(b, dir)};
}

std::string to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::entropy_conservative: return "ec";
    case ConditionKind::entropy_stable: return "es";
    case ConditionKind::well_balanced: return "wb";
    case ConditionKind::consistency: return "consistency";
  }
  return "unknown";
}

PairSampler random_pairs(SystemPtr sys) {
  return [sys](std::mt19937_64& rng) {
    Vec a = sys->sample(rng);
    Vec b = sys->sample(rng);
    return std::pair{a, b};
  };
}

PairSampler lake_at_rest_pairs(SystemPtr sys) {
  if (sys->name() != "shallow_water" && sys->name() != "sainte_marie") {
    throw std::invalid_argument("lake at rest needs a shallow-water type system");
  }
  return [sys](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> bath(-1.0, 1.0);
    std::uniform_real_distribution<double> depth(0.5, 3.0);
    const int ib = sys->num_vars();
    Vec a;
    Vec b;
    a[0] = depth(rng);
    a[ib] = bath(rng);
    const double level = a[0] + a[ib];
    do {
      b[ib] = bath(rng);
      b[0] = level - b[ib];
    } while (!(b[0] > 0.1));
    return std::pair{a, b};
  };
}

namespace {

double scale_of(const FluxSet& fs, const Vec& a, const Vec& b, int dir) {
  const System& sys = fs.system();
  const int n = sys.num_vars();
  const Normal m = axis(dir);
  const double w = norm2(sys.entropy_vars(a), n) + norm2(sys.entropy_vars(b), n);
  const double f = norm2(fs.flux(a, b, m), n) + norm2(fs.fluct(a, b, m), n) + norm2(fs.local(a, b, m), n) +
                   norm2(fs.local(b, a, m), n);
  return 1.0 + std::fabs(psi_jump(sys, a, b, dir)) + w * f;
}

}  // namespace

ConditionReport sample_condition(ConditionKind kind, const FluxSet& fs, long samples, std::uint64_t seed,
                                 const PairSampler& sampler) {
  const System& sys = fs.system();
  const int n = sys.num_vars();
  PairSampler draw = sampler ? sampler : random_pairs(fs.system_ptr());
  std::mt19937_64 rng(seed);
  ConditionReport rep{to_string(kind), fs.name(), samples, 0.0, {}, {}, seed};
  if (kind == ConditionKind::entropy_stable) rep.max_violation = samples > 0 ? -std::numeric_limits<double>::infinity() : 0.0;
  for (long s = 0; s < samples; ++s) {
    const auto [a, b] = draw(rng);
    for (int dir = 0; dir < sys.dim(); ++dir) {
      double v = 0.0;
      switch (kind) {
        case ConditionKind::entropy_conservative:
          v = std::fabs(check_nonconservative_ec(fs, a, b, dir)) / scale_of(fs, a, b, dir);
          break;
        case ConditionKind::entropy_stable:
          v = check_nonconservative_ec(fs, a, b, dir) / scale_of(fs, a, b, dir);
          break;
        case ConditionKind::well_balanced: {
          const auto r = check_well_balanced(fs, a, b, dir);
          const double sc = 1.0 + max_abs(sys.flux(a, dir), n) + max_abs(sys.flux(b, dir), n);
          v = std::fmax(max_abs(r.minus, n), max_abs(r.plus, n)) / sc;
          break;
        }
        case ConditionKind::consistency:
          v = fluxset_consistency(fs, a);
          if (fs.symmetric()) v = std::fmax(v, fluxset_symmetry(fs, a, b));
          break;
      }
      if (v > rep.max_violation) {
        rep.max_violation = v;
        rep.worst_minus = a;
        rep.worst_plus = b;
      }
    }
  }
  return rep;
}

void write_reports_csv(std::ostream& os, const std::vector<ConditionReport>& reports) {
  os << "condition,fluxset,samples,max_violation,seed\n";
  const auto old = os.precision(17);
  for (const auto& r : reports) {
    os << r.condition << ',' << r.fluxset << ',' << r.samples << ',' << r.max_violation << ',' << r.seed
       << '\n';
  }
  os.precision(old);
}

}  // namespace ncsbp
