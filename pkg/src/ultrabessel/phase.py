"""Phase function g, the oscillation counter h_nu(x) = x g(nu/x), and zero brackets.

h_nu increases from 0 at the turning point x = nu and grows like
x/pi - nu/2 for large x.  Zeros of y'_{nu,delta} sit near h = k - 1/4 and
zeros of j'_{nu,delta} near h = k - 3/4, which is what the brackets use.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .rootfind import BracketFailure, safeguarded_newton

THETA_SERIES_MAX = 0.2
NU_LARGE = 25.0          # phase-window brackets switch from the small-nu to the large-nu form
TRANSITION_C = 0.2       # Airy strip is nu < x < (1 + c) nu
SCAN_STEP = math.pi / 16


class Source(str, enum.Enum):
    LargeNuAiry = "LargeNuAiry"
    LargeNuOsc = "LargeNuOsc"
    SmallNuOsc = "SmallNuOsc"
    Scan = "Scan"


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    kind: str
    k: int
    source: Source


def _sin_minus_theta_cos(theta):
    """sin t - t cos t, by its Taylor series when t is small."""
    if theta >= THETA_SERIES_MAX:
        return math.sin(theta) - theta * math.cos(theta)
    # sum_{n>=1} (-1)^{n+1} 2n t^{2n+1} / (2n+1)!
    t2 = theta * theta
    term = theta * t2 / 3.0
    total = term
    n = 1
    while abs(term) > 1e-18 * abs(total):
        n += 1
        # ratio of consecutive terms
        term *= -t2 * n / ((n - 1) * (2 * n) * (2 * n + 1))
        total += term
    return total


def g(x: float) -> float:
    """(sqrt(1-x^2) - x arccos x) / pi on [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"g is defined on [0, 1], got {x}")
    theta = math.atan2(math.sqrt((1.0 - x) * (1.0 + x)), x)
    return _sin_minus_theta_cos(theta) / math.pi


def h(nu: float, x: float) -> float:
    """x g(nu/x) for x >= nu, computed without forming nu/x near the turning point."""
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if x < nu:
        raise ValueError(f"h_nu(x) needs x >= nu, got x={x}, nu={nu}")
    if x == 0.0:
        return 0.0
    theta = math.atan2(math.sqrt((x - nu) * (x + nu)), nu)
    return x * _sin_minus_theta_cos(theta) / math.pi


def h_prime(nu: float, x: float) -> float:
    if x == 0.0:
        return 1.0 / math.pi
    return math.sqrt((x - nu) * (x + nu)) / (math.pi * x)


def h_inverse(nu: float, t: float) -> float:
    """The x >= nu with h_nu(x) = t."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return float(nu)
    lo = float(nu)
    hi = nu + math.pi * (t + 1.0) + math.pi * nu
    x0 = min(max(math.pi * t + 0.5 * math.pi * nu, lo), hi)

    def fdf(x):
        return h(nu, x) - t, h_prime(nu, x)

    x, _, _ = safeguarded_newton(fdf, lo, hi, x0=x0, xtol=2e-16, ftol=1e-14 * t)
    return x


def target_phase(kind: str, k: int) -> float:
    """Nominal h-value of the k-th zero (theorem indexing)."""
    return k - 0.25 if kind == "BZero" else k - 0.75


def large_k_threshold(nu: float) -> int:
    return max(10, math.ceil(nu))


def _phase_window(kind, nu, k):
    if nu >= NU_LARGE:
        lo_t, hi_t = k - 0.5, float(k)
    else:
        lo_t, hi_t = k - 0.375, k + 0.125
    if kind == "AZero":
        lo_t, hi_t = lo_t - 0.5, hi_t - 0.5
    lo_t = max(lo_t, 0.0)
    lo = h_inverse(nu, lo_t)
    hi = h_inverse(nu, hi_t)
    if nu >= NU_LARGE:
        source = Source.LargeNuAiry if lo < (1.0 + TRANSITION_C) * nu else Source.LargeNuOsc
    else:
        source = Source.SmallNuOsc
    return lo, hi, source


def _sign(v):
    return (v > 0) - (v < 0)


def scan_bracket(f, center, half_width, step):
    """Sign-change interval of f closest to ``center`` on a uniform grid."""
    lo_edge = max(center - half_width, 1e-12)
    n = max(2, int(math.ceil((center + half_width - lo_edge) / step)))
    xs = [lo_edge + i * (center + half_width - lo_edge) / n for i in range(n + 1)]
    vals = [f(x) for x in xs]
    best = None
    for a, b, fa, fb in zip(xs, xs[1:], vals, vals[1:]):
        if _sign(fa) * _sign(fb) < 0:
            d = abs(0.5 * (a + b) - center)
            if best is None or d < best[0]:
                best = (d, a, b)
    return None if best is None else (best[1], best[2])


def bracket_for_zero(kind: str, nu: float, delta: float, k: int, func=None) -> Bracket:
    """Interval holding the k-th zero (theorem indexing) with a verified sign change.

    The phase bounds give h-windows (k-3/8, k+1/8) for small nu and
    (k-1/2, k) for large nu (shifted by -1/2 for j'-zeros).  If the target
    has no sign change there, the neighbourhood of the one-term estimate is
    scanned, doubling resolution and widening up to twice.

    ``func(x)`` must have the sign of the ultraspherical derivative; it
    defaults to the double-precision evaluator.
    """
    if kind not in ("AZero", "BZero"):
        raise ValueError(f"unknown kind {kind!r}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if func is None:
        from .specfun.bessel import target

        def func(x):
            return target(kind, nu, delta, x)[0]

    lo, hi, source = _phase_window(kind, nu, k)
    if lo < hi:
        flo, fhi = func(lo), func(hi)
        if _sign(flo) * _sign(fhi) < 0:
            return Bracket(lo, hi, kind, k, source)
    center = h_inverse(nu, max(target_phase(kind, k), 0.0))
    step = SCAN_STEP
    half = 0.5 * math.pi
    for _ in range(3):
        got = scan_bracket(func, center, half, step)
        if got is not None:
            return Bracket(got[0], got[1], kind, k, Source.Scan)
        step /= 2
        half *= 2
    raise BracketFailure(f"no sign change near the {k}-th {kind} (nu={nu}, delta={delta})")
