"""Double-precision J_nu, Y_nu and derivatives for real nu >= 0, x > 0.

Three evaluation routes, chosen per (nu, x):

* power series for J_nu at small x, paired with Temme's series for Y_nu;
* Steed's continued-fraction method with Temme's series and recurrence in
  the order, or, for x >= nu, Hankel at the reduced order |nu0| <= 1/2
  followed by forward recurrence (both reported as ``PowerSeries``, which
  stands for the series/recurrence family);
* Hankel's large-argument expansion, used only for x >= max((1+c) nu, 10)
  and only when its truncation and cancellation errors are below double
  resolution.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

EPS = 1e-16
FPMIN = 1e-300
SERIES_X_MAX = 2.0
SERIES_REL_TOL = 1e-18
SERIES_MAX_TERMS = 300
HANKEL_C = 0.2
HANKEL_X_MIN = 10.0
HANKEL_MAX_TERM = 1e2
HANKEL_TERM_TOL = 1e-17
HANKEL_ERR_TOL = 1e-13
MAX_CF_ITER = 200000
RECUR_X_MIN = 20.0

# Taylor coefficients of 1/Gamma(1+z) about z = 0
_RGAMMA1 = (
    1.0, 0.57721566490153286061, -0.65587807152025388108, -0.042002635034095235529,
    0.1665386113822914895, -0.042197734555544336748, -0.0096219715278769735621,
    0.0072189432466630995424, -0.0011651675918590651121, -0.00021524167411495097282,
    0.00012805028238811618615, -0.000020134854780788238656, -1.2504934821426706573e-6,
    1.1330272319816958824e-6, -2.0563384169776071035e-7, 6.1160951044814158179e-9,
    5.0020076444692229301e-9, -1.1812745704870201446e-9, 1.0434267116911005105e-10,
    7.782263439905071254e-12, -3.6968056186422057082e-12, 5.100370287454475979e-13,
    -2.0583260535665067832e-14, -5.3481225394230179824e-15, 1.2267786282382607902e-15,
    -1.1812593016974587695e-16, 1.1866922547516003326e-18, 1.4123806553180317816e-18,
)


class Regime(str, enum.Enum):
    PowerSeries = "PowerSeries"
    HankelOscillatory = "HankelOscillatory"
    AiryTransition = "AiryTransition"


@dataclass(frozen=True)
class AbsTol:
    bound: float


@dataclass(frozen=True)
class BigO:
    order: str


@dataclass(frozen=True)
class RegimeEval:
    value: float
    regime: Regime
    err_class: AbsTol | BigO


@dataclass(frozen=True)
class BesselJY:
    """J, Y and first derivatives at one (nu, x), plus the route used."""

    j: float
    y: float
    jp: float
    yp: float
    regime: Regime
    err: float


def _check(nu, x):
    if not (nu >= 0) or math.isinf(nu):
        raise ValueError(f"order must be finite and >= 0, got {nu}")
    if not (x > 0) or math.isinf(x):
        raise ValueError(f"argument must be finite and > 0, got {x}")


def _rgamma1_pair(m):
    """(1/Gamma(1+m), 1/Gamma(1-m)) for |m| <= 1/2."""
    plus = minus = 0.0
    p = 1.0
    for n, c in enumerate(_RGAMMA1):
        term = c * p
        plus += term
        minus += term if n % 2 == 0 else -term
        p *= m
    return plus, minus


def _temme_gammas(m):
    """gam1 = (1/G(1-m) - 1/G(1+m))/(2m), gam2 = (1/G(1-m) + 1/G(1+m))/2."""
    gampl, gammi = _rgamma1_pair(m)
    gam1 = 0.0
    p = 1.0
    m2 = m * m
    for n in range(1, len(_RGAMMA1), 2):
        gam1 -= _RGAMMA1[n] * p
        p *= m2
    return gam1, 0.5 * (gampl + gammi), gampl, gammi


def _j_series(nu, x):
    """J_nu(x), J'_nu(x) from the ascending series."""
    half = 0.5 * x
    q = -half * half
    lead_log = nu * math.log(half) - math.lgamma(nu + 1.0)
    term = 1.0
    s = 1.0
    sd = nu
    for m in range(1, SERIES_MAX_TERMS):
        term *= q / (m * (m + nu))
        s += term
        sd += term * (2 * m + nu)
        if abs(term) < SERIES_REL_TOL * abs(s) and abs(term) * (2 * m + nu) < SERIES_REL_TOL * max(abs(sd), 1e-300):
            break
    lead = math.exp(lead_log)
    j = lead * s
    # d/dx sum (x/2)^{2m+nu} c_m = sum (2m+nu)/x * ...
    jp = lead * sd / x
    return j, jp


def _steed(nu, x):
    """J, Y, J', Y' by continued fractions, Temme series and recurrence."""
    xmin = 2.0
    nl = int(nu + 0.5) if x < xmin else max(0, int(nu - x + 1.5))
    xmu = nu - nl
    xmu2 = xmu * xmu
    xi = 1.0 / x
    xi2 = 2.0 * xi
    w = xi2 / math.pi
    # CF1: J'_nu / J_nu by modified Lentz
    isign = 1
    h = max(nu * xi, FPMIN)
    b = xi2 * nu
    d = 0.0
    c = h
    for _ in range(MAX_CF_ITER):
        b += xi2
        d = b - d
        if abs(d) < FPMIN:
            d = FPMIN
        c = b - 1.0 / c
        if abs(c) < FPMIN:
            c = FPMIN
        d = 1.0 / d
        delh = c * d
        h *= delh
        if d < 0:
            isign = -isign
        if abs(delh - 1.0) < EPS:
            break
    else:
        raise ArithmeticError(f"CF1 failed to converge at nu={nu}, x={x}")
    # downward recurrence from nu to xmu with rescaling
    rjl = isign * 1e-30
    rjpl = h * rjl
    rjl1, rjp1 = rjl, rjpl
    fact = nu * xi
    for _ in range(nl, 0, -1):
        rjtemp = fact * rjl + rjpl
        fact -= xi
        rjpl = fact * rjtemp - rjl
        rjl = rjtemp
        if abs(rjl) > 1e200:
            rjl *= 1e-200
            rjpl *= 1e-200
            rjl1 *= 1e-200
            rjp1 *= 1e-200
    if rjl == 0.0:
        rjl = EPS
    f = rjpl / rjl
    if x < xmin:
        x2 = 0.5 * x
        pimu = math.pi * xmu
        fact = 1.0 if abs(pimu) < EPS else pimu / math.sin(pimu)
        d = -math.log(x2)
        e = xmu * d
        fact2 = 1.0 if abs(e) < EPS else math.sinh(e) / e
        gam1, gam2, gampl, gammi = _temme_gammas(xmu)
        ff = 2.0 / math.pi * fact * (gam1 * math.cosh(e) + gam2 * fact2 * d)
        e = math.exp(e)
        p = e / (gampl * math.pi)
        q = 1.0 / (e * math.pi * gammi)
        pimu2 = 0.5 * pimu
        fact3 = 1.0 if abs(pimu2) < EPS else math.sin(pimu2) / pimu2
        r = math.pi * pimu2 * fact3 * fact3
        c = 1.0
        d = -x2 * x2
        total = ff + r * q
        total1 = p
        for i in range(1, SERIES_MAX_TERMS):
            ff = (i * ff + p + q) / (i * i - xmu2)
            c *= d / i
            p /= i - xmu
            q /= i + xmu
            dl = c * (ff + r * q)
            total += dl
            dl1 = c * p - i * dl
            total1 += dl1
            if abs(dl) < (1.0 + abs(total)) * EPS and abs(dl1) < (1.0 + abs(total1)) * EPS:
                break
        rymu = -total
        ry1 = -total1 * xi2
        rymup = xmu * xi * rymu - ry1
        rjmu = w / (rymup - f * rymu)
    else:
        # CF2: p + iq by modified Lentz
        a = 0.25 - xmu2
        p = -0.5 * xi
        q = 1.0
        br = 2.0 * x
        bi = 2.0
        fact = a * xi / (p * p + q * q)
        cr = br + q * fact
        ci = bi + p * fact
        den = br * br + bi * bi
        dr = br / den
        di = -bi / den
        dlr = cr * dr - ci * di
        dli = cr * di + ci * dr
        temp = p * dlr - q * dli
        q = p * dli + q * dlr
        p = temp
        for i in range(2, MAX_CF_ITER):
            a += 2 * (i - 1)
            bi += 2.0
            dr = a * dr + br
            di = a * di + bi
            if abs(dr) + abs(di) < FPMIN:
                dr = FPMIN
            fact = a / (cr * cr + ci * ci)
            cr = br + cr * fact
            ci = bi - ci * fact
            if abs(cr) + abs(ci) < FPMIN:
                cr = FPMIN
            den = dr * dr + di * di
            dr /= den
            di = -di / den
            dlr = cr * dr - ci * di
            dli = cr * di + ci * dr
            temp = p * dlr - q * dli
            q = p * dli + q * dlr
            p = temp
            if abs(dlr - 1.0) + abs(dli) < EPS:
                break
        else:
            raise ArithmeticError(f"CF2 failed to converge at nu={nu}, x={x}")
        gam = (p - f) / q
        rjmu = math.sqrt(w / ((p - f) * gam + q))
        rjmu = math.copysign(rjmu, rjl)
        rymu = rjmu * gam
        rymup = rymu * (p + q / gam)
        ry1 = xmu * xi * rymu - rymup
    scale = rjmu / rjl
    rj = rjl1 * scale
    rjp = rjp1 * scale
    for i in range(1, nl + 1):
        rytemp = (xmu + i) * xi2 * ry1 - rymu
        rymu = ry1
        ry1 = rytemp
    ry = rymu
    ryp = nu * xi * rymu - ry1
    return rj, ry, rjp, ryp


def hankel_pqrs(nu, x, tol=HANKEL_ERR_TOL):
    """Sum the Hankel auxiliary series P, Q, R, S at (nu, x).

    Returns (P, Q, R, S, err) where err estimates truncation plus rounding
    (largest term times a few ulps), or None when err would exceed ``tol``.
    """
    mu = 4.0 * nu * nu
    e8x = 8.0 * x
    a_prev = 1.0
    P, Q, R, S = 1.0, 0.0, 1.0, 0.0
    biggest = 1.0
    last = 1.0
    k = 0
    while True:
        k += 1
        a = a_prev * (mu - (2 * k - 1) ** 2) / (k * e8x)
        r = a_prev * (mu + 4 * k * k - 1) / (k * e8x)
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            P += sign * a
            R += sign * r
        else:
            Q += sign * a
            S += sign * r
        mag = max(abs(a), abs(r))
        biggest = max(biggest, mag)
        if a == 0.0:
            last = 0.0
            break
        if mag < HANKEL_TERM_TOL:
            last = mag
            break
        # terms past the smallest one only grow
        if k > 2 and mag > last and (2 * k - 1) ** 2 > mu:
            return None
        last = mag
        a_prev = a
        if k > 400:
            return None
    err = last + biggest * EPS * 4
    if err > tol or biggest > HANKEL_MAX_TERM:
        return None
    return P, Q, R, S, err


def _phase_trig(nu, x):
    """cos and sin of chi = x - (nu/2 + 1/4) pi without forming chi."""
    phi = (0.5 * nu + 0.25) * math.pi
    # reduce phi to keep cos/sin of the small angle exact enough
    phi = math.fmod(phi, 2.0 * math.pi)
    cx, sx = math.cos(x), math.sin(x)
    cp, sp = math.cos(phi), math.sin(phi)
    return cx * cp + sx * sp, sx * cp - cx * sp


def _hankel(nu, x):
    got = hankel_pqrs(nu, x)
    if got is None:
        return None
    P, Q, R, S, err = got
    amp = math.sqrt(2.0 / (math.pi * x))
    cchi, schi = _phase_trig(nu, x)
    j = amp * (P * cchi - Q * schi)
    y = amp * (P * schi + Q * cchi)
    jp = -amp * (R * schi + S * cchi)
    yp = amp * (R * cchi - S * schi)
    return j, y, jp, yp, err * amp


def _hankel_recurrence(nu, x):
    """Hankel at order nu0 = nu - round(nu), then forward recurrence to nu.

    Forward recurrence is stable for both J and Y while the order stays below
    the argument, so this is restricted to x >= nu.
    """
    nl = int(nu + 0.5)
    nu0 = nu - nl
    got = _hankel(nu0, x)
    if got is None:
        return None
    j, y, jp, yp, err = got
    if nl == 0:
        return j, y, jp, yp, err
    jm, ym = j, y
    j = nu0 / x * jm - jp
    y = nu0 / x * ym - yp
    for i in range(1, nl):
        order = nu0 + i
        jm, j = j, 2.0 * order / x * j - jm
        ym, y = y, 2.0 * order / x * y - ym
    jp = jm - nu / x * j
    yp = ym - nu / x * y
    return j, y, jp, yp, err * (nl + 1)


def hankel_admissible(nu, x, c=HANKEL_C):
    return x >= max((1.0 + c) * nu, HANKEL_X_MIN)


def bessel_jy(nu: float, x: float) -> BesselJY:
    """Evaluate J_nu, Y_nu, J'_nu, Y'_nu together."""
    nu = float(nu)
    x = float(x)
    _check(nu, x)
    if hankel_admissible(nu, x):
        got = _hankel(nu, x)
        if got is not None:
            j, y, jp, yp, err = got
            return BesselJY(j, y, jp, yp, Regime.HankelOscillatory, err)
    if x >= max(nu, RECUR_X_MIN):
        got = _hankel_recurrence(nu, x)
        if got is not None:
            j, y, jp, yp, err = got
            return BesselJY(j, y, jp, yp, Regime.PowerSeries, err)
    j, y, jp, yp = _steed(nu, x)
    if x <= SERIES_X_MAX:
        j, jp = _j_series(nu, x)
    err = 1e-15 * max(abs(j), abs(y), abs(jp), abs(yp))
    return BesselJY(j, y, jp, yp, Regime.PowerSeries, err)


def bessel_j(nu: float, x: float) -> float:
    return bessel_jy(nu, x).j


def bessel_y(nu: float, x: float) -> float:
    return bessel_jy(nu, x).y


def bessel_j_prime(nu: float, x: float) -> float:
    return bessel_jy(nu, x).jp


def bessel_y_prime(nu: float, x: float) -> float:
    return bessel_jy(nu, x).yp


def bessel_eval(nu: float, x: float, which: str = "y_prime") -> RegimeEval:
    """One of j, y, j_prime, y_prime tagged with the route that produced it."""
    r = bessel_jy(nu, x)
    value = {"j": r.j, "y": r.y, "j_prime": r.jp, "y_prime": r.yp}[which]
    return RegimeEval(value, r.regime, AbsTol(r.err))


def ultra_j_prime(nu: float, delta: float, x: float) -> float:
    """d/dx [x^{-delta} J_nu(x)] = x^{-delta} (J'_nu - delta J_nu / x)."""
    r = bessel_jy(nu, x)
    return x ** (-delta) * (r.jp - delta * r.j / x)


def ultra_y_prime(nu: float, delta: float, x: float) -> float:
    """d/dx [x^{-delta} Y_nu(x)] = x^{-delta} (Y'_nu - delta Y_nu / x)."""
    r = bessel_jy(nu, x)
    return x ** (-delta) * (r.yp - delta * r.y / x)


def target(kind: str, nu: float, delta: float, x: float):
    """Zero-equivalent target F' - delta F / x and its x-derivative.

    F is J_nu for kind 'AZero' and Y_nu for 'BZero'.  The positive factor
    x^{-delta} is dropped, so signs and zeros agree with the ultraspherical
    derivative.  The slope uses F'' = -F'/x + (nu^2/x^2 - 1) F.
    """
    r = bessel_jy(nu, x)
    if kind == "AZero":
        f, fp = r.j, r.jp
    elif kind == "BZero":
        f, fp = r.y, r.yp
    else:
        raise ValueError(f"unknown kind {kind!r}")
    fpp = -fp / x + ((nu / x) ** 2 - 1.0) * f
    value = fp - delta * f / x
    slope = fpp - delta * fp / x + delta * (f / x) / x
    return value, slope, f, fp
