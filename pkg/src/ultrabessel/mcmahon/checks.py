"""Exact comparisons between derived coefficient tables and the reference polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .golden import classical_coefficients, spherical_coefficients, theorem_coefficients
from .pipeline import expansion_table
from .poly import MuDeltaPoly

GOLDEN_ORDER = 4  # c_1 .. c_7


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    diff: tuple = field(default=())


def perturbed(poly: MuDeltaPoly, mu_exp: int, delta_exp: int, amount=Fraction(1)) -> MuDeltaPoly:
    """Copy of ``poly`` with one coefficient shifted; a negative control for the checks."""
    terms = dict(poly.terms)
    terms[(mu_exp, delta_exp)] = terms.get((mu_exp, delta_exp), Fraction(0)) + amount
    return MuDeltaPoly(terms)


def derived_coefficients(perturb=None) -> dict:
    """{power: c_power} from the pipeline; ``perturb`` = (power, mu_exp, delta_exp) alters one term."""
    coeffs = dict(expansion_table("BZero", GOLDEN_ORDER).coeffs)
    if perturb is not None:
        power, i, j = perturb
        if power not in coeffs:
            raise ValueError(f"no coefficient of beta'^-{power} to perturb")
        coeffs[power] = perturbed(coeffs[power], i, j)
    return coeffs


def _compare(name, derived: dict, reference: dict) -> CheckResult:
    diff = []
    for power in sorted(reference):
        d = derived[power]
        if d != reference[power]:
            diff.append(f"c_{power}:")
            diff.extend("  " + line for line in d.diff_against(reference[power]))
    return CheckResult(name, not diff, tuple(diff))


def theorem_check(perturb=None) -> CheckResult:
    return _compare("general (mu, delta) coefficients", derived_coefficients(perturb), theorem_coefficients())


def classical_check(perturb=None) -> CheckResult:
    derived = {p: c.subs_delta(0) for p, c in derived_coefficients(perturb).items()}
    return _compare("delta = 0 specialisation", derived, classical_coefficients())


def spherical_check(perturb=None) -> CheckResult:
    derived = {p: c.subs_delta(Fraction(1, 2)) for p, c in derived_coefficients(perturb).items()}
    return _compare("delta = 1/2 specialisation", derived, spherical_coefficients())


def spherical_offset_check(n_max: int = 50, k_max: int = 50) -> CheckResult:
    """(k + (n + 1/2)/2 - 3/4) equals (k + n/2 - 1/2) exactly."""
    bad = []
    for n in range(n_max + 1):
        for k in range(1, k_max + 1):
            lhs = k + (n + Fraction(1, 2)) / 2 - Fraction(3, 4)
            rhs = k + Fraction(n, 2) - Fraction(1, 2)
            if lhs != rhs:
                bad.append(f"n={n} k={k}: {lhs} != {rhs}")
    return CheckResult("spherical beta' offset identity", not bad, tuple(bad))


def kind_independence_check(order: int = GOLDEN_ORDER) -> CheckResult:
    a = expansion_table("AZero", order)
    b = expansion_table("BZero", order)
    ok = a.coeffs == b.coeffs
    return CheckResult("shared coefficients for both kinds", ok, () if ok else ("tables differ",))


def all_symbolic_checks(perturb=None) -> list:
    return [
        theorem_check(perturb),
        classical_check(perturb),
        spherical_check(perturb),
        spherical_offset_check(),
        kind_independence_check(),
    ]
