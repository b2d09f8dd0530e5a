"""Exact derivation of the McMahon-type expansion for zeros of x^{-delta} F'_nu.

Starting from Hankel's large-argument forms of Y_nu and Y'_nu, the zero
condition for y'_{nu,delta} becomes cot(chi) = T(1/x) with

    T = (S + delta/x P) / (R - delta/x Q),   chi = x - (nu/2 + 1/4) pi,

so that the k-th zero satisfies b' = beta' - arctan T(1/b').  Reverting this
implicit relation gives b' = beta' + sum_j c_j beta'^{-j}.  The J-side zero
condition tan(chi) = -T produces the same c_j with beta' shifted by -pi/2.

Every step runs over exact rationals; nothing here touches floating point
except :func:`eval_expansion`, which evaluates a finished table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import DELTA, MU, ONE, MuDeltaPoly
from .series import AsymSeries

MAX_ORDER = 8
BETA_OFFSET = {"AZero": Fraction(-3, 4), "BZero": Fraction(-1, 4)}


def _kind(kind: str) -> str:
    k = str(kind).strip()
    aliases = {"a": "AZero", "azero": "AZero", "b": "BZero", "bzero": "BZero"}
    out = aliases.get(k.lower())
    if out is None:
        raise ValueError(f"unknown zero kind {kind!r}; expected 'a' or 'b'")
    return out


@lru_cache(maxsize=None)
def hankel_A(s: int) -> MuDeltaPoly:
    """A_s = prod_{i=1..s} (mu - (2i-1)^2) / (s! 8^s)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    out = ONE
    for i in range(1, s + 1):
        out = out * (MU - (2 * i - 1) ** 2)
    return out / (math.factorial(s) * 8**s)


def _modulus_factor(n: int) -> MuDeltaPoly:
    """(mu + 4n^2 - 1) A_n / (mu - (2n-1)^2), divided exactly."""
    if n == 0:
        return ONE
    return ((MU + (4 * n * n - 1)) * hankel_A(n)).divexact(MU - (2 * n - 1) ** 2)


@lru_cache(maxsize=None)
def pqrs_series(order: int):
    """Hankel auxiliary series (P, Q, R, S) through x^{-order}.

    P, Q belong to Y_nu and R, S to Y'_nu; the coefficients of R and S are
    written with the apparent poles (mu - (2n-1)^2)^{-1} and reduced by exact
    polynomial division, so any failure of the cancellation raises.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    P, Q, R, S = ([MuDeltaPoly()] * (order + 1) for _ in range(4))
    P, Q, R, S = list(P), list(Q), list(R), list(S)
    for n in range(order + 1):
        sign = -1 if (n // 2) % 2 else 1
        a = hankel_A(n) * sign
        r = _modulus_factor(n) * sign
        if n % 2 == 0:
            P[n], R[n] = a, r
        else:
            Q[n], S[n] = a, r
    return tuple(AsymSeries(c, order) for c in (P, Q, R, S))


@lru_cache(maxsize=None)
def t_series(order: int) -> AsymSeries:
    """T = (S + delta x^{-1} P) / (R - delta x^{-1} Q) as an exact series."""
    P, Q, R, S = pqrs_series(order)
    num = S + P.shift(1) * DELTA
    den = R - Q.shift(1) * DELTA
    return num / den


def _arctan_taylor(order: int):
    return [Fraction(0) if n % 2 == 0 else Fraction((-1) ** (n // 2), n) for n in range(order + 1)]


def arccot_compose(T: AsymSeries, order: int | None = None) -> AsymSeries:
    """pi/2 - arccot(T) = T - T^3/3 + T^5/5 - ... for a series T vanishing at infinity."""
    order = T.order if order is None else order
    if not T[0].is_zero():
        raise ValueError("T must have zero constant term")
    T = AsymSeries(T.coeffs, min(order, T.order))
    return T.compose(_arctan_taylor(T.order))


def revert_series(rhs: AsymSeries, order: int | None = None) -> list:
    """Solve b = beta + sum_j d_j b^{-j} for b = beta + sum_j c_j beta^{-j}.

    ``rhs`` holds d_j (its constant term must vanish).  The correction
    e(w) = sum c_j w^j, w = 1/beta, is found by iterating
    e <- sum_j d_j (w / (1 + e w))^j; each pass fixes at least one more
    power of w, so ``order`` passes reach the truncation order exactly.
    Returns [c_0, c_1, ..., c_order] with c_0 = 0.
    """
    order = rhs.order if order is None else min(order, rhs.order)
    if not rhs[0].is_zero():
        raise ValueError("rhs must have zero constant term")
    d = AsymSeries(rhs.coeffs, order)
    w = AsymSeries.inv_x(order)
    e = AsymSeries.zero(order)
    for _ in range(order + 1):
        u = w / (AsymSeries.one(order) + e.shift(1))
        new = AsymSeries.zero(order)
        power = AsymSeries.one(order)
        for j in range(1, order + 1):
            power = power * u
            if not d[j].is_zero():
                new = new + power * d[j]
        if new == e:
            break
        e = new
    return list(e.coeffs)


@dataclass(frozen=True)
class ExpansionTable:
    """zero ~ beta' + sum_{j odd <= 2*order-1} c_j beta'^{-j}."""

    kind: str
    order: int
    coeffs: tuple  # (power, MuDeltaPoly) pairs, odd powers ascending
    beta_offset: Fraction

    def coefficient(self, power: int) -> MuDeltaPoly:
        for p, c in self.coeffs:
            if p == power:
                return c
        if power % 2 == 1 and power <= 2 * self.order - 1:
            return MuDeltaPoly()
        raise KeyError(f"power {power} not in table of order {self.order}")

    @property
    def powers(self):
        return [p for p, _ in self.coeffs]

    def truncated(self, order: int) -> ExpansionTable:
        if order > self.order:
            raise ValueError("cannot extend a table by truncation")
        keep = tuple((p, c) for p, c in self.coeffs if p <= 2 * order - 1)
        return ExpansionTable(self.kind, order, keep, self.beta_offset)

    def beta_prime(self, nu, k):
        return (k + nu / 2 + float(self.beta_offset)) * math.pi

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "order": self.order,
            "beta_offset": f"{self.beta_offset.numerator}/{self.beta_offset.denominator}",
            "coefficients": [{"power": p, "poly": c.to_records()} for p, c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> ExpansionTable:
        coeffs = tuple((int(c["power"]), MuDeltaPoly.from_records(c["poly"]))
                       for c in doc["coefficients"])
        return cls(_kind(doc["kind"]), int(doc["order"]), coeffs, Fraction(doc["beta_offset"]))


@lru_cache(maxsize=None)
def _shared_coefficients(order: int) -> tuple:
    if order == 0:
        return ()
    n = 2 * order - 1
    rhs = -arccot_compose(t_series(n), n)
    c = revert_series(rhs, n)
    return tuple((j, c[j]) for j in range(1, n + 1, 2))


def expansion_table(kind: str, order: int, max_order: int = MAX_ORDER) -> ExpansionTable:
    """Coefficient table through beta'^{-(2*order-1)}; identical for both kinds."""
    kind = _kind(kind)
    if not 0 <= order <= max_order:
        raise ValueError(f"order must lie in [0, {max_order}]")
    return ExpansionTable(kind, order, _shared_coefficients(order), BETA_OFFSET[kind])


def eval_expansion(table: ExpansionTable, nu: float, delta: float, k: int) -> float:
    """Double-precision value of the truncated expansion for the k-th zero."""
    if k < 1:
        raise ValueError("k must be >= 1")
    beta = table.beta_prime(nu, k)
    mu = 4.0 * nu * nu
    total = 0.0
    inv = 1.0 / beta
    for p, c in reversed(table.coeffs):
        total += c(mu, float(delta)) * inv**p
    return beta + total


def eval_expansion_mp(table: ExpansionTable, nu, delta, k: int):
    """Same as :func:`eval_expansion` in mpmath working precision.

    nu and delta are taken as exact binary values; c_j is evaluated exactly
    before conversion so the only rounding is in the final sum.
    """
    import mpmath

    if k < 1:
        raise ValueError("k must be >= 1")
    nu_q = Fraction(nu)
    mu = 4 * nu_q * nu_q
    d = Fraction(delta)
    beta = (k + nu_q / 2 + table.beta_offset) * mpmath.pi
    total = mpmath.mpf(0)
    for p, c in table.coeffs:
        v = c(mu, d)
        total += mpmath.mpf(v.numerator) / v.denominator / beta**p
    return beta + total
