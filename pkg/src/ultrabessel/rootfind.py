"""Bracketed scalar root finding shared by the phase and zero modules."""

from __future__ import annotations

import math


class BracketFailure(ArithmeticError):
    """No sign change where one was required."""


class ConvergenceFailure(ArithmeticError):
    """Iteration budget exhausted without meeting the tolerance."""


def safeguarded_newton(fdf, lo, hi, x0=None, xtol=1e-15, ftol=0.0, max_iter=200):
    """Newton's method kept inside a sign-change bracket.

    ``fdf(x)`` returns (f, f').  A Newton step is replaced by bisection when
    it leaves the current bracket or fails to shrink |f| by 10%.  Stops when
    the step (or bracket) is below ``xtol * max(1, |x|)`` or |f| <= ftol.
    After ``max_iter`` Newton attempts the remaining work is plain bisection,
    which only fails if the bracket itself is invalid.

    Returns (root, iterations, f_at_root).
    """
    flo, _ = fdf(lo)
    fhi, _ = fdf(hi)
    if flo == 0.0:
        return lo, 0, 0.0
    if fhi == 0.0:
        return hi, 0, 0.0
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise BracketFailure(f"no sign change on [{lo}, {hi}]")
    if flo > 0:
        lo, hi = hi, lo  # orient so f(lo) < 0 < f(hi)
    x = 0.5 * (lo + hi) if x0 is None or not min(lo, hi) < x0 < max(lo, hi) else x0
    f, df = fdf(x)
    it = 0
    newton_ok = True
    while True:
        it += 1
        if f == 0.0 or abs(f) <= ftol:
            return x, it, f
        if f < 0:
            lo = x
        else:
            hi = x
        scale = xtol * max(1.0, abs(x))
        if abs(hi - lo) <= scale:
            return x, it, f
        step_x = None
        if newton_ok and df != 0.0 and math.isfinite(df):
            cand = x - f / df
            if abs(cand - x) <= scale:
                return x, it, f  # correction below tolerance: f is at its noise floor
            if min(lo, hi) < cand < max(lo, hi):
                step_x = cand
        if step_x is None:
            step_x = 0.5 * (lo + hi)
        fn, dfn = fdf(step_x)
        if newton_ok and abs(fn) > 0.9 * abs(f) and step_x != 0.5 * (lo + hi):
            # Newton stalled: take a bisection step instead
            mid = 0.5 * (lo + hi)
            fn, dfn = fdf(mid)
            step_x = mid
        moved = abs(step_x - x)
        x, f, df = step_x, fn, dfn
        if moved <= scale and f != 0.0:
            if f < 0:
                lo = x
            else:
                hi = x
            return x, it, f
        if it >= max_iter:
            newton_ok = False
        if it >= max_iter + 1100:
            raise ConvergenceFailure(f"no convergence after {it} iterations on [{lo}, {hi}]")


def bisect(f, lo, hi, xtol=1e-15, max_iter=2000):
    """Plain bisection on a sign-change bracket; returns the final midpoint."""
    flo = f(lo)
    fhi = f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketFailure(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        if abs(hi - lo) <= xtol * max(1, abs(mid)):
            return mid
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    raise ConvergenceFailure("bisection budget exhausted")
