#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncsbp/conditions.hpp"
#include "ncsbp/experiments.hpp"

namespace py = pybind11;
using namespace ncsbp;

namespace {

ExperimentConfig config_from(const std::string& preset_name, const py::dict& kw) {
  ExperimentConfig c = preset_name.empty() ? ExperimentConfig{} : preset(preset_name);
  for (const auto& [k, v] : kw) {
    const auto key = k.cast<std::string>();
    if (key == "system") c.system = v.cast<std::string>();
    else if (key == "flux") c.flux = v.cast<std::string>();
    else if (key == "surface_flux") c.surface_flux = v.cast<std::string>();
    else if (key == "alpha") c.alpha = v.cast<std::vector<double>>();
    else if (key == "m") c.m = v.cast<int>();
    else if (key == "n") c.n = v.cast<int>();
    else if (key == "gravity") c.gravity = v.cast<double>();
    else if (key == "celerity") c.celerity = v.cast<double>();
    else if (key == "gamma") c.gamma = v.cast<double>();
    else if (key == "entropy") c.entropy = v.cast<std::string>();
    else if (key == "degree") c.degree = v.cast<int>();
    else if (key == "elements") c.elements = v.cast<int>();
    else if (key == "mesh") c.mesh = v.cast<std::string>();
    else if (key == "domain_a") c.domain_a = v.cast<double>();
    else if (key == "domain_b") c.domain_b = v.cast<double>();
    else if (key == "length") c.length = v.cast<double>();
    else if (key == "cfl") c.cfl = v.cast<double>();
    else if (key == "t_final") c.t_final = v.cast<double>();
    else if (key == "ic") c.ic = v.cast<std::string>();
    else if (key == "bc") c.bc = v.cast<std::string>();
    else if (key == "method") c.method = v.cast<std::string>();
    else if (key == "seed") c.seed = v.cast<std::uint64_t>();
    else if (key == "callback_every") c.callback_every = v.cast<int>();
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  return c;
}

py::dict summary_dict(const RunSummary& s) {
  py::dict d;
  d["steps"] = s.steps;
  d["t_final"] = s.t_final;
  d["entropy_initial"] = s.entropy_initial;
  d["entropy_final"] = s.entropy_final;
  d["entropy_error"] = s.entropy_error;
  d["entropy_residual_final"] = s.entropy_residual_final;
  d["entropy_residual_max"] = s.entropy_residual_max;
  d["mass_drift"] = s.mass_drift;
  d["mass_rate_final"] = s.mass_rate_final;
  d["l2_error"] = s.error ? py::cast(*s.error) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_ncsbp, m) {
  m.doc() = "Split-form DG operators, flux sets and experiment drivers";

  py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);

  m.def(
      "gll_operator",
      [](int p) {
        const SbpOperator op = build_gll_operator(p);
        return py::make_tuple(op.nodes, op.mass, op.deriv);
      },
      py::arg("degree"), "(nodes, weights, D) of the degree-p Gauss-Lobatto operator");
  m.def(
      "sbp_residual", [](int p) { return verify_sbp_property(build_gll_operator(p)); }, py::arg("degree"));

  m.def("preset_names", &preset_names);
  m.def("monomial_t_max", &monomial_t_max, py::arg("m"), py::arg("n"));

  m.def(
      "run",
      [](const std::string& preset_name, const py::kwargs& kw) {
        const ExperimentConfig c = config_from(preset_name, kw);
        RunSummary s;
        {
          py::gil_scoped_release release;
          s = run_experiment(c);
        }
        return summary_dict(s);
      },
      py::arg("preset") = "", "Integrate an experiment; keyword arguments override config fields.");

  m.def(
      "convergence",
      [](const std::vector<int>& levels, const std::string& preset_name, const py::kwargs& kw) {
        const ExperimentConfig c = config_from(preset_name, kw);
        std::vector<ConvergenceRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_convergence(c, levels);
        }
        py::list out;
        for (const auto& r : rows) {
          out.append(py::make_tuple(r.elements, r.error, r.eoc ? py::cast(*r.eoc) : py::none()));
        }
        return out;
      },
      py::arg("levels"), py::arg("preset") = "");

  m.def(
      "check",
      [](const std::string& condition, long samples, const py::kwargs& kw) {
        const ExperimentConfig c = config_from("", kw);
        const SystemPtr sys = build_system(c);
        const FluxSetPtr fs = build_fluxset(c.flux, sys, c.alpha);
        ConditionKind kind;
        PairSampler sampler;
        if (condition == "ec") {
          kind = ConditionKind::entropy_conservative;
        } else if (condition == "es") {
          kind = ConditionKind::entropy_stable;
        } else if (condition == "wb") {
          kind = ConditionKind::well_balanced;
          sampler = lake_at_rest_pairs(sys);
        } else {
          throw std::invalid_argument("unknown condition '" + condition + "'");
        }
        return sample_condition(kind, *fs, samples, c.seed, sampler).max_violation;
      },
      py::arg("condition") = "ec", py::arg("samples") = 10000,
      "Max violation of a flux-set entropy condition over random state pairs.");
}
