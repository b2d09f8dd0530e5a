"""Reference coefficient polynomials, entered by hand for cross-checks.

Each entry is an unscaled bracket polynomial; helpers scale it to the coefficient
c_j of beta'^{-j} used by :mod:`ultrabessel.mcmahon.pipeline`.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MuDeltaPoly


def _poly(terms) -> MuDeltaPoly:
    """terms: iterable of (coefficient, mu_exp, delta_exp)."""
    out: dict = {}
    for c, i, j in terms:
        out[(i, j)] = out.get((i, j), 0) + Fraction(c)
    return MuDeltaPoly(out)


# beta'^{-1}: -(mu + 3 + 8 delta) / (8 beta')
C1_NUMERATOR = _poly([(1, 1, 0), (3, 0, 0), (8, 0, 1)])

# beta'^{-3}: -4 (...) / (3 (8 beta')^3)
C3_BRACKET = _poly([
    (7, 2, 0), (82, 1, 0), (144, 1, 1),
    (-9, 0, 0), (144, 0, 1), (192, 0, 2), (-128, 0, 3),
])

# C_{nu,delta} = -(32/15) * (...)
C5_BRACKET = _poly([
    (83, 3, 0),
    (2075, 2, 0), (2920, 2, 1),
    (-3039, 1, 0), (9040, 1, 1), (10560, 1, 2), (-4480, 1, 3),
    (3537, 0, 0), (1800, 0, 1), (8640, 0, 2), (1920, 0, 3), (-12800, 0, 4), (3072, 0, 5),
])

# tilde C_{nu,delta} = -(64/105) * (...)
C7_BRACKET = _poly([
    (6949, 4, 0),
    (296492, 3, 0), (356832, 3, 1),
    (-1248002, 2, 0), (2194080, 2, 1), (2298240, 2, 2), (-743680, 2, 3),
    (7414380, 1, 0), (696864, 1, 1), (5295360, 1, 2), (1917440, 1, 3),
    (-4945920, 1, 4), (946176, 1, 5),
    (-5853627, 0, 0), (913248, 0, 1), (1330560, 0, 2), (2338560, 0, 3),
    (-3225600, 0, 4), (-4902912, 0, 5), (3555328, 0, 6), (-491520, 0, 7),
])

# delta = 0 (classical derivative zeros), polynomials in mu
M1_BRACKETS = {
    1: _poly([(1, 1, 0), (3, 0, 0)]),
    3: _poly([(7, 2, 0), (82, 1, 0), (-9, 0, 0)]),
    5: _poly([(83, 3, 0), (2075, 2, 0), (-3039, 1, 0), (3537, 0, 0)]),
    7: _poly([(6949, 4, 0), (296492, 3, 0), (-1248002, 2, 0), (7414380, 1, 0), (-5853627, 0, 0)]),
}

# delta = 1/2, nu = n + 1/2 (spherical Bessel derivative zeros)
M2_BRACKETS = {
    1: _poly([(1, 1, 0), (7, 0, 0)]),
    3: _poly([(7, 2, 0), (154, 1, 0), (95, 0, 0)]),
    5: _poly([(83, 3, 0), (3535, 2, 0), (3561, 1, 0), (6133, 0, 0)]),
    7: _poly([(6949, 4, 0), (474908, 3, 0), (330638, 2, 0), (9046780, 1, 0), (-5075147, 0, 0)]),
}

# c_j = SCALE[j] * bracket_j ; every table shares these prefactors
SCALE = {
    1: Fraction(-1, 8),
    3: Fraction(-4, 3 * 8**3),
    5: Fraction(-32, 15 * 8**5),
    7: Fraction(-64, 105 * 8**7),
}


def theorem_coefficients() -> dict:
    """c_1, c_3, c_5, c_7 in reference form for general (mu, delta)."""
    brackets = {1: C1_NUMERATOR, 3: C3_BRACKET, 5: C5_BRACKET, 7: C7_BRACKET}
    return {j: brackets[j] * SCALE[j] for j in brackets}


def classical_coefficients() -> dict:
    return {j: M1_BRACKETS[j] * SCALE[j] for j in M1_BRACKETS}


def spherical_coefficients() -> dict:
    return {j: M2_BRACKETS[j] * SCALE[j] for j in M2_BRACKETS}


def c5_reference(mu, delta):
    """Reference C_{nu,delta} evaluated directly (independent of the pipeline)."""
    m, d = mu, delta
    inner = (83 * m**3 + (2075 + 2920 * d) * m**2
             - (3039 - 9040 * d - 10560 * d**2 + 4480 * d**3) * m
             + 3537 + 1800 * d + 8640 * d**2 + 1920 * d**3 - 12800 * d**4 + 3072 * d**5)
    return Fraction(-32, 15) * inner


def c7_reference(mu, delta):
    m, d = mu, delta
    inner = (6949 * m**4 + (296492 + 356832 * d) * m**3
             - (1248002 - 2194080 * d - 2298240 * d**2 + 743680 * d**3) * m**2
             + (7414380 + 696864 * d + 5295360 * d**2 + 1917440 * d**3
                - 4945920 * d**4 + 946176 * d**5) * m
             - 5853627 + 913248 * d + 1330560 * d**2 + 2338560 * d**3
             - 3225600 * d**4 - 4902912 * d**5 + 3555328 * d**6 - 491520 * d**7)
    return Fraction(-64, 105) * inner
