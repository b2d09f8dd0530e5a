"""Independent high-precision oracle for zeros of j'_{nu,delta} and y'_{nu,delta}.

Shares nothing with the double-precision evaluator beyond the phase
function used to place brackets.  mpmath supplies the multiprecision
scalar (and gamma/digamma values); the Bessel sums are written out here:

* ascending series for J_{+-nu}, with the integer-order Y series for
  integer nu and the reflection formula otherwise, carried with extra
  digits to absorb the e^x-sized cancellation;
* Hankel's expansion with truncation at the smallest term, used for
  x >= 40 + nu whenever that term is below the working precision.

Derivatives come from F'_nu = (nu/x) F_nu - F_{nu+1}.  Zeros are found by
pure bisection.
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath

from ..phase import bracket_for_zero, h_inverse, large_k_threshold
from ..rootfind import BracketFailure
from .core import normalize_kind

ORACLE_DPS = 40
HANKEL_SWITCH = 40.0
BISECT_REL = mpmath.mpf(10) ** -36
SCAN_STEP = math.pi / 16
SCAN_START = 1e-6


def _workdps(x, nu=0.0):
    # digits lost to cancellation in the series, plus those needed to keep
    # nu - round(nu) intact through nu + 1 in the reflection formula
    near = abs(float(nu) - round(float(nu)))
    gap = int(-math.log10(near)) if 0 < near < 0.1 else 0
    return ORACLE_DPS + int(0.4343 * float(x)) + 10 + gap


def _j_series(nu, x):
    """sum_m (-1)^m (x/2)^{2m+nu} / (m! Gamma(m+nu+1)); nu may be negative non-integer."""
    half = x / 2
    q = -(half * half)
    term = half**nu * mpmath.rgamma(nu + 1)
    total = term
    m = 0
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec)
    while True:
        m += 1
        term = term * q / (m * (nu + m))
        total += term
        if abs(term) <= eps * abs(total) and m > abs(float(x)):
            return total


def _y_integer(n, x):
    """Y_n for integer n >= 0 by the logarithmic series."""
    half = x / 2
    q = half * half
    first = mpmath.mpf(0)
    if n > 0:
        t = mpmath.factorial(n - 1)
        for k in range(n):
            if k > 0:
                t = t * q / (k * (n - k))
            first += t
        first = -first * half ** (-n) / mpmath.pi
    log_part = 2 / mpmath.pi * mpmath.log(half) * _j_series(mpmath.mpf(n), x)
    term = half**n / mpmath.factorial(n)
    psi_a = mpmath.psi(0, 1)
    psi_b = mpmath.psi(0, n + 1)
    total = (psi_a + psi_b) * term
    k = 0
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec)
    while True:
        k += 1
        term = term * (-q) / (k * (n + k))
        psi_a += mpmath.mpf(1) / k
        psi_b += mpmath.mpf(1) / (n + k)
        inc = (psi_a + psi_b) * term
        total += inc
        if abs(inc) <= eps * abs(total) and k > abs(float(x)):
            break
    return first + log_part - total / mpmath.pi


def _series_pair(kind, nu, x):
    """(F_nu, F_{nu+1}) by ascending series, F = J or Y."""
    if kind == "AZero":
        return _j_series(nu, x), _j_series(nu + 1, x)
    n = int(mpmath.nint(nu))
    if nu == n:
        return _y_integer(n, x), _y_integer(n + 1, x)

    def y(order):
        s = mpmath.sinpi(order)
        return (_j_series(order, x) * mpmath.cospi(order) - _j_series(-order, x)) / s

    return y(nu), y(nu + 1)


def _hankel_pair(kind, nu, x):
    """(F_nu, F'_nu) from Hankel's expansion, or None if it cannot reach working precision.

    With prod_k = prod_{i<=k} (mu - (2i-1)^2) and d_k = k! 8^k the function
    coefficients are a_k = prod_k / d_k and the derivative ones
    b_k = prod_{k-1} (mu + 4k^2 - 1) / d_k.
    """
    mu = 4 * nu * nu
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec)
    p = q = r = s = mpmath.mpf(0)
    prod_prev = mpmath.mpf(1)  # prod_{k-1}
    d = mpmath.mpf(1)
    xk = mpmath.mpf(1)
    prev = mpmath.inf
    k = 0
    while True:
        if k > 0:
            d *= 8 * k
            xk *= x
        prod = prod_prev * (mu - (2 * k - 1) ** 2) if k > 0 else prod_prev
        a = prod / d
        b = prod_prev * (mu + 4 * k * k - 1) / d if k > 0 else a
        term_a, term_b = a / xk, b / xk
        mag = abs(term_a) + abs(term_b)
        if mag == 0 and k > 0:
            return _hankel_finish(kind, nu, x, p, q, r, s)
        if mag > prev:
            # the series has started to diverge; accept only if the smallest term was negligible
            return _hankel_finish(kind, nu, x, p, q, r, s) if prev <= eps else None
        sign = -1 if (k // 2) % 2 else 1
        if k % 2 == 0:
            p += sign * term_a
            r += sign * term_b
        else:
            q += sign * term_a
            s += sign * term_b
        if mag <= eps * 1e-3:
            return _hankel_finish(kind, nu, x, p, q, r, s)
        prev = mag
        prod_prev = prod
        k += 1


def _hankel_finish(kind, nu, x, p, q, r, s):
    chi = x - (nu / 2 + mpmath.mpf(1) / 4) * mpmath.pi
    c, sn = mpmath.cos(chi), mpmath.sin(chi)
    amp = mpmath.sqrt(2 / (mpmath.pi * x))
    if kind == "AZero":
        return amp * (p * c - q * sn), -amp * (r * sn + s * c)
    return amp * (p * sn + q * c), amp * (r * c - s * sn)


def oracle_target(kind, nu, delta, x):
    """F'_nu(x) - delta F_nu(x) / x at the current mpmath precision plus guard digits."""
    kind = normalize_kind(kind)
    with mpmath.workdps(_workdps(x, nu)):
        nu_m = mpmath.mpf(nu)
        x_m = mpmath.mpf(x)
        got = None
        if x_m >= HANKEL_SWITCH + nu_m:
            with mpmath.workdps(ORACLE_DPS + 10):
                got = _hankel_pair(kind, nu_m, x_m)
        if got is None:
            f, f1 = _series_pair(kind, nu_m, x_m)
            fp = nu_m / x_m * f - f1
        else:
            f, fp = got
        return +(fp - mpmath.mpf(delta) * f / x_m)


def _sign(v):
    return (v > 0) - (v < 0)


@lru_cache(maxsize=128)
def _oracle_scan(kind, nu, delta):
    """Sign-change intervals below the phase probe, from the oracle's own evaluations."""
    s0 = large_k_threshold(nu) + 2
    X = h_inverse(nu, s0 - 0.25 if kind == "AZero" else s0 + 0.25)
    # log grid near the origin, then a uniform pi/16 grid
    xs = [SCAN_START * 10 ** (i / 4) for i in range(int(4 * math.log10(1.0 / SCAN_START)))]
    n = int(math.ceil((X - 1.0) / SCAN_STEP))
    xs += [1.0 + (X - 1.0) * i / n for i in range(n + 1)]
    with mpmath.workdps(ORACLE_DPS):
        vals = [_sign(oracle_target(kind, nu, delta, x)) for x in xs]
    out = []
    last = None
    for x, s in zip(xs, vals):
        if s == 0:
            continue
        if last is not None and s != last[1]:
            out.append((last[0], x))
        last = (x, s)
    return s0, tuple(out)


def oracle_offset(kind, nu, delta):
    kind = normalize_kind(kind)
    s0, found = _oracle_scan(kind, float(nu), float(delta))
    return len(found) - s0


def oracle_zero(q, dps: int = ORACLE_DPS):
    """k-th zero (as indexed by the query) to about 1e-36 relative, as an mpf."""
    kind, nu, delta = normalize_kind(q.kind), float(q.nu), float(q.delta)
    s0, early = _oracle_scan(kind, nu, delta)
    off = len(early) - s0
    if q.paper_indexing:
        kt, kp = q.k, q.k + off
    else:
        kp, kt = q.k, q.k - off
    if kp < 1:
        raise ValueError(f"theorem zero {q.k} is the origin, not a positive zero")
    with mpmath.workdps(dps):
        if kp <= len(early):
            lo, hi = early[kp - 1]
        else:
            b = bracket_for_zero(kind, nu, delta, kt, func=lambda x: oracle_target(kind, nu, delta, x))
            lo, hi = b.lo, b.hi
        return _bisect(lambda x: oracle_target(kind, nu, delta, x), mpmath.mpf(lo), mpmath.mpf(hi))


def _bisect(f, lo, hi):
    flo, fhi = f(lo), f(hi)
    if _sign(flo) * _sign(fhi) >= 0:
        if flo == 0:
            return lo
        if fhi == 0:
            return hi
        raise BracketFailure(f"oracle bracket [{lo}, {hi}] has no sign change")
    tol = BISECT_REL * hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if _sign(fm) == _sign(flo):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2
