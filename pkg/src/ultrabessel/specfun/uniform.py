"""Leading-order uniform (Airy-type) approximation of Y'_nu near the turning point."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..phase import h
from .airy import airy_bi_prime
from .bessel import HANKEL_C, BigO, Regime, RegimeEval

NU_MIN = 50.0


class RegimeError(ValueError):
    """Point lies outside the strip where an approximation is meant to be used."""


@dataclass(frozen=True)
class UniformAsymptoticPoint:
    z: float
    zeta: float
    airy_arg: float


def uniform_point(nu: float, x: float) -> UniformAsymptoticPoint:
    """Olver's variable for x >= nu > 0.

    nu * (2/3)(-zeta)^{3/2} equals pi * h_nu(x), so zeta follows from the
    phase function without the cancellation in sqrt(z^2-1) - arcsec z.
    """
    if not nu > 0:
        raise ValueError("nu must be > 0")
    if x < nu:
        raise RegimeError(f"x={x} is below the turning point nu={nu}")
    s = (1.5 * math.pi * h(nu, x)) ** (2.0 / 3.0)
    return UniformAsymptoticPoint(z=x / nu, zeta=-s / nu ** (2.0 / 3.0), airy_arg=-s)


def uniform_y_prime(nu: float, x: float, nu_min: float = NU_MIN, c: float = HANKEL_C) -> RegimeEval:
    """Y'_nu(x) ~ 2 (x^2-nu^2)^{1/4} / ((12 pi h)^{1/6} x) * Bi'(-(3 pi h / 2)^{2/3})."""
    if nu < nu_min:
        raise RegimeError(f"nu={nu} is below the transition threshold {nu_min}")
    if not nu < x < (1.0 + c) * nu:
        raise RegimeError(f"x={x} outside ({nu}, {(1.0 + c) * nu})")
    hv = h(nu, x)
    s = (1.5 * math.pi * hv) ** (2.0 / 3.0)
    amp = 2.0 * ((x - nu) * (x + nu)) ** 0.25 / ((12.0 * math.pi * hv) ** (1.0 / 6.0) * x)
    return RegimeEval(amp * airy_bi_prime(-s), Regime.AiryTransition, BigO("nu^(-2/3)"))
