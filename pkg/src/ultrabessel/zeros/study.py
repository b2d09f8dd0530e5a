"""Convergence-order studies of the truncated zero expansion against the oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from ..mcmahon import eval_expansion_mp, expansion_table
from .core import ZeroQuery, normalize_kind
from .oracle import ORACLE_DPS, oracle_zero

PRECISION_FLOOR = 1e-28


@dataclass(frozen=True)
class ConvergenceRow:
    order: int
    k: int
    beta_prime: float
    expansion_value: float
    oracle_value: float
    abs_error: float
    precision_floor: bool


@dataclass(frozen=True)
class ConvergenceStudy:
    kind: str
    nu: float
    delta: float
    rows: tuple
    slopes: dict  # order -> fitted slope (nan if fewer than two usable rows)

    def rows_for(self, order):
        return [r for r in self.rows if r.order == order]


def fit_slope(points):
    """Least-squares slope of log(err) against log(beta')."""
    pts = [(math.log(b), math.log(e)) for b, e in points if e > 0]
    if len(pts) < 2:
        return math.nan
    mx = sum(p[0] for p in pts) / len(pts)
    my = sum(p[1] for p in pts) / len(pts)
    sxx = sum((p[0] - mx) ** 2 for p in pts)
    sxy = sum((p[0] - mx) * (p[1] - my) for p in pts)
    return sxy / sxx


def convergence_study(kind, nu, delta, k_list, order_list, oracle=None) -> ConvergenceStudy:
    """Error of each truncation order against oracle zeros (theorem indexing).

    Errors below the oracle's trustworthy floor are flagged and left out of
    the fit.  ``oracle`` maps a ZeroQuery to an mpf; the default is
    :func:`oracle_zero`.
    """
    kind = normalize_kind(kind)
    k_list = sorted({int(k) for k in k_list})
    order_list = sorted({int(m) for m in order_list})
    if not k_list:
        raise ValueError("k_list is empty")
    if not order_list:
        raise ValueError("order_list is empty")
    oracle = oracle or oracle_zero
    rows = []
    with mpmath.workdps(ORACLE_DPS):
        truth = {k: oracle(ZeroQuery(kind, nu, delta, k, paper_indexing=True)) for k in k_list}
        for m in order_list:
            table = expansion_table(kind, m)
            for k in k_list:
                approx = eval_expansion_mp(table, nu, delta, k)
                err = abs(approx - truth[k])
                rows.append(
                    ConvergenceRow(
                        order=m,
                        k=k,
                        beta_prime=float(table.beta_prime(nu, k)),
                        expansion_value=float(approx),
                        oracle_value=float(truth[k]),
                        abs_error=float(err),
                        precision_floor=bool(err < PRECISION_FLOOR),
                    )
                )
    slopes = {
        m: fit_slope([(r.beta_prime, r.abs_error) for r in rows if r.order == m and not r.precision_floor])
        for m in order_list
    }
    return ConvergenceStudy(kind, float(nu), float(delta), tuple(rows), slopes)
