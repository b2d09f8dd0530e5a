"""Airy functions Ai, Ai', Bi, Bi' on the real line."""

from __future__ import annotations

import math

from .bessel import bessel_jy

AI0 = 0.355028053887817239260063186004   # Ai(0) = 3^{-2/3} / Gamma(2/3)
AIP0 = -0.258819403792806798405183560189  # Ai'(0) = -3^{-1/3} / Gamma(1/3)
SQRT3 = math.sqrt(3.0)
BI_CAP = 100.0
MACLAURIN_NEG = -2.5
AI_SERIES_DOUBLE = 2.0
AI_ASYM_POS = 7.0
BI_ASYM_POS = 10.0


def _maclaurin(x):
    """f, f', g, g' of the two standard ascending Airy series."""
    x3 = x * x * x
    f = fp = g = gp = 0.0
    tf, tfp, tg, tgp = 1.0, 0.5 * x * x, x, 1.0
    f, fp, g, gp = tf, tfp, tg, tgp
    for k in range(1, 400):
        tf *= x3 / ((3 * k - 1) * (3 * k))
        tg *= x3 / ((3 * k) * (3 * k + 1))
        tfp *= x3 / ((3 * k) * (3 * k + 2))
        tgp *= x3 / ((3 * k - 2) * (3 * k))
        f += tf
        g += tg
        fp += tfp
        gp += tgp
        if max(abs(tf), abs(tg), abs(tfp), abs(tgp)) < 1e-18 * max(1.0, abs(f), abs(g), abs(fp), abs(gp)):
            break
    return f, fp, g, gp


def _maclaurin_extended(x):
    """Ascending series in 30-digit arithmetic.

    Ai(x) for moderate positive x is a difference of two sums of size Bi(x);
    the extra digits keep the absolute error near double rounding.
    """
    import mpmath

    with mpmath.workdps(30):
        xm = mpmath.mpf(x)
        x3 = xm**3
        tf, tfp, tg, tgp = mpmath.mpf(1), xm * xm / 2, xm, mpmath.mpf(1)
        f, fp, g, gp = tf, tfp, tg, tgp
        for k in range(1, 400):
            tf *= x3 / ((3 * k - 1) * (3 * k))
            tg *= x3 / ((3 * k) * (3 * k + 1))
            tfp *= x3 / ((3 * k) * (3 * k + 2))
            tgp *= x3 / ((3 * k - 2) * (3 * k))
            f += tf
            g += tg
            fp += tfp
            gp += tgp
            if max(tf, tg, tfp, tgp) < mpmath.mpf(10) ** -28 * max(f, g, fp, gp):
                break
        c1 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3))
        c2 = 1 / (mpmath.cbrt(3) * mpmath.gamma(mpmath.mpf(1) / 3))
        return float(c1 * f - c2 * g), float(c1 * fp - c2 * gp)


def _asym_coeffs(n):
    u = [1.0]
    v = [1.0]
    for k in range(1, n):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k))
        v.append(-u[-1] * (6 * k + 1) / (6 * k - 1))
    return u, v


_U, _V = _asym_coeffs(60)


def _asym_sums(zeta, alternating):
    """sum u_k (+-zeta)^{-k} and sum v_k (+-zeta)^{-k}, cut at the smallest term."""
    su = sv = 0.0
    prev = math.inf
    p = 1.0
    for k in range(len(_U)):
        tu = _U[k] * p
        tv = _V[k] * p
        mag = max(abs(tu), abs(tv))
        if mag > prev:
            break
        su += tu
        sv += tv
        prev = mag
        if mag < 1e-17:
            break
        p /= -zeta if alternating else zeta
    return su, sv


def _negative(z):
    """(Ai, Ai', Bi, Bi') at -z for z > 0 through Bessel functions of order 1/3, 2/3."""
    zeta = 2.0 / 3.0 * z * math.sqrt(z)
    r13 = bessel_jy(1.0 / 3.0, zeta)
    r23 = bessel_jy(2.0 / 3.0, zeta)
    sz = math.sqrt(z)
    ai = 0.5 * sz * (r13.j - r13.y / SQRT3)
    bi = -0.5 * sz * (r13.j / SQRT3 + r13.y)
    aip = 0.5 * z * (r23.j + r23.y / SQRT3)
    bip = 0.5 * z * (r23.j / SQRT3 - r23.y)
    return ai, aip, bi, bip


def _check(x):
    if not math.isfinite(x):
        raise ValueError(f"finite argument required, got {x}")


def airy_ai(x: float) -> float:
    return airy_all(x, need_bi=False)[0]


def airy_ai_prime(x: float) -> float:
    return airy_all(x, need_bi=False)[1]


def airy_bi(x: float) -> float:
    return airy_all(x)[2]


def airy_bi_prime(x: float) -> float:
    return airy_all(x)[3]


def airy_all(x: float, need_bi: bool = True):
    """(Ai, Ai', Bi, Bi') at real x.

    Raises OverflowError for x > BI_CAP when Bi is requested.
    """
    x = float(x)
    _check(x)
    if x < MACLAURIN_NEG:
        return _negative(-x)
    if need_bi and x > BI_CAP:
        raise OverflowError(f"Bi overflows beyond x = {BI_CAP}")
    if x <= AI_SERIES_DOUBLE:
        f, fp, g, gp = _maclaurin(x)
        ai = AI0 * f + AIP0 * g
        aip = AI0 * fp + AIP0 * gp
        bi = SQRT3 * (AI0 * f - AIP0 * g)
        bip = SQRT3 * (AI0 * fp - AIP0 * gp)
        return ai, aip, bi, bip
    zeta = 2.0 / 3.0 * x * math.sqrt(x)
    q = x ** 0.25
    if x <= AI_ASYM_POS:
        ai, aip = _maclaurin_extended(x)
    else:
        su, sv = _asym_sums(zeta, alternating=True)
        decay = math.exp(-zeta) / (2.0 * math.sqrt(math.pi))
        ai = decay / q * su
        aip = -decay * q * sv
    if not need_bi:
        return ai, aip, math.nan, math.nan
    if x <= BI_ASYM_POS:
        f, fp, g, gp = _maclaurin(x)
        bi = SQRT3 * (AI0 * f - AIP0 * g)
        bip = SQRT3 * (AI0 * fp - AIP0 * gp)
    else:
        su, sv = _asym_sums(zeta, alternating=False)
        grow = math.exp(zeta) / math.sqrt(math.pi)
        bi = grow / q * su
        bip = grow * q * sv
    return ai, aip, bi, bip


BIP_ZERO_SCAN_STEP = 0.05


def bi_prime_zeros(count: int) -> list:
    """The first ``count`` values t > 0 with Bi'(-t) = 0, in increasing order.

    Sign changes are located on a uniform grid and refined with Newton on
    Bi''(x) = x Bi(x) inside each bracket.
    """
    from ..rootfind import safeguarded_newton

    if count < 1:
        return []

    def fdf(t):
        _, _, bi, bip = airy_all(-t)
        return bip, t * bi  # d/dt Bi'(-t) = -(-t) Bi(-t)

    zeros = []
    t = 0.0
    prev = fdf(t)[0]
    while len(zeros) < count:
        t_next = t + BIP_ZERO_SCAN_STEP
        cur = fdf(t_next)[0]
        if (prev > 0) != (cur > 0):
            root, _, _ = safeguarded_newton(fdf, t, t_next, xtol=4e-16)
            zeros.append(root)
        t, prev = t_next, cur
    return zeros
