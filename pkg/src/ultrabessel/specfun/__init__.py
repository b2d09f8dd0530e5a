"""Bessel, ultraspherical-derivative and Airy evaluators."""

from .airy import BI_CAP, airy_ai, airy_ai_prime, airy_all, airy_bi, airy_bi_prime, bi_prime_zeros
from .bessel import (
    HANKEL_C,
    AbsTol,
    BesselJY,
    BigO,
    Regime,
    RegimeEval,
    bessel_eval,
    bessel_j,
    bessel_j_prime,
    bessel_jy,
    bessel_y,
    bessel_y_prime,
    hankel_admissible,
    target,
    ultra_j_prime,
    ultra_y_prime,
)
from .uniform import NU_MIN, RegimeError, UniformAsymptoticPoint, uniform_point, uniform_y_prime

__all__ = [
    "BI_CAP", "HANKEL_C", "NU_MIN", "AbsTol", "BesselJY", "BigO", "Regime", "RegimeError",
    "RegimeEval", "UniformAsymptoticPoint", "airy_ai", "airy_ai_prime", "airy_all", "airy_bi",
    "airy_bi_prime", "bessel_eval", "bessel_j", "bessel_j_prime", "bessel_jy", "bessel_y",
    "bessel_y_prime", "hankel_admissible", "target", "ultra_j_prime", "ultra_y_prime",
    "bi_prime_zeros", "uniform_point", "uniform_y_prime",
]
