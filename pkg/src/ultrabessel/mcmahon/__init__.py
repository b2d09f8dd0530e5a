"""Exact-rational derivation of the McMahon-type zero expansions."""

from .checks import CheckResult, all_symbolic_checks, classical_check, spherical_check, theorem_check
from .golden import classical_coefficients, spherical_coefficients, theorem_coefficients
from .pipeline import (
    BETA_OFFSET,
    MAX_ORDER,
    ExpansionTable,
    arccot_compose,
    eval_expansion,
    eval_expansion_mp,
    expansion_table,
    hankel_A,
    pqrs_series,
    revert_series,
    t_series,
)
from .poly import DELTA, MU, MuDeltaPoly, Rat
from .series import AsymSeries

__all__ = [
    "AsymSeries", "BETA_OFFSET", "CheckResult", "all_symbolic_checks", "classical_check",
    "spherical_check", "theorem_check", "DELTA", "ExpansionTable", "MAX_ORDER", "MU", "MuDeltaPoly", "Rat",
    "arccot_compose", "classical_coefficients", "eval_expansion", "eval_expansion_mp",
    "expansion_table", "hankel_A", "pqrs_series", "revert_series", "spherical_coefficients",
    "t_series", "theorem_coefficients",
]
