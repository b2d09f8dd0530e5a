"""Zeros of ultraspherical Bessel derivatives: refinement, counting, oracle and studies."""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .oracle import oracle_offset, oracle_target, oracle_zero
from .study import PRECISION_FLOOR, ConvergenceRow, ConvergenceStudy, convergence_study, fit_slope

__all__ = list(_core_all) + [
    "ConvergenceRow", "ConvergenceStudy", "PRECISION_FLOOR", "convergence_study", "fit_slope",
    "oracle_offset", "oracle_target", "oracle_zero",
]
