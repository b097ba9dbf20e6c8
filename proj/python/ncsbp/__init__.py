from ._ncsbp import (
    NumericalFailure,
    check,
    convergence,
    gll_operator,
    monomial_t_max,
    preset_names,
    run,
    sbp_residual,
)

__all__ = [
    "NumericalFailure",
    "check",
    "convergence",
    "gll_operator",
    "monomial_t_max",
    "preset_names",
    "run",
    "sbp_residual",
]
