"""Exact bivariate polynomials in mu = 4 nu^2 and delta over the rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

Rat = Fraction


def _rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


class MuDeltaPoly:
    """Polynomial sum c_ij mu^i delta^j with Fraction coefficients.

    Instances are treated as immutable.  Zero coefficients are never stored,
    so two polynomials are equal iff their term dictionaries are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = _rat(c)
                if c:
                    i, j = key
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent")
                    clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> MuDeltaPoly:
        return cls({(0, 0): c})

    @classmethod
    def mu(cls) -> MuDeltaPoly:
        return cls({(1, 0): 1})

    @classmethod
    def delta(cls) -> MuDeltaPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_mu_coeffs(cls, coeffs) -> MuDeltaPoly:
        """Build a polynomial in mu alone from ascending coefficients."""
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, other) -> MuDeltaPoly:
        if isinstance(other, MuDeltaPoly):
            return other
        return cls.const(other)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = MuDeltaPoly.coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return MuDeltaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MuDeltaPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-MuDeltaPoly.coerce(other))

    def __rsub__(self, other):
        return MuDeltaPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MuDeltaPoly):
            c = _rat(other)
            return MuDeltaPoly({k: v * c for k, v in self.terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return MuDeltaPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MuDeltaPoly):
            return self.divexact(other)
        c = _rat(other)
        return MuDeltaPoly({k: v / c for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MuDeltaPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, divisor: MuDeltaPoly) -> MuDeltaPoly:
        """Exact division by a polynomial in mu alone.

        Raises ArithmeticError if the division leaves a remainder, which is how
        the pole cancellation in the Hankel modulus series is asserted.
        """
        if divisor.delta_degree() > 0:
            raise ValueError("divisor must not depend on delta")
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        dcoef = divisor.mu_coeffs()
        ddeg = len(dcoef) - 1
        lead = dcoef[-1]
        quotient: dict = {}
        for j in range(self.delta_degree() + 1):
            rem = self.mu_coeffs(j)
            if not any(rem):
                continue
            for shift in range(len(rem) - 1 - ddeg, -1, -1):
                q = rem[shift + ddeg] / lead
                if q:
                    quotient[(shift, j)] = q
                    for t, dc in enumerate(dcoef):
                        rem[shift + t] -= q * dc
            if any(rem):
                raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return MuDeltaPoly(quotient)

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def constant(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def mu_degree(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    def delta_degree(self) -> int:
        return max((j for _, j in self.terms), default=0)

    def mu_coeffs(self, delta_exp: int = 0) -> list:
        """Ascending mu-coefficients of the delta^delta_exp slice."""
        out = [Fraction(0)] * (self.mu_degree() + 1)
        for (i, j), c in self.terms.items():
            if j == delta_exp:
                out[i] = c
        return out

    def sorted_terms(self):
        """Terms ordered by descending mu power, then ascending delta power."""
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1]))

    # -- evaluation ---------------------------------------------------------
    def subs_delta(self, delta) -> MuDeltaPoly:
        """Substitute an exact rational for delta; result is a poly in mu."""
        d = _rat(delta)
        out: dict = {}
        for (i, j), c in self.terms.items():
            out[(i, 0)] = out.get((i, 0), 0) + c * d**j
        return MuDeltaPoly(out)

    def subs_mu(self, mu) -> MuDeltaPoly:
        m = _rat(mu)
        out: dict = {}
        for (i, j), c in self.terms.items():
            out[(0, j)] = out.get((0, j), 0) + c * m**i
        return MuDeltaPoly(out)

    def __call__(self, mu, delta=0):
        """Evaluate at numeric (mu, delta); the result follows the input type.

        Exact inputs (int/Fraction) give a Fraction, floats give a float, and
        any other number type (e.g. mpmath.mpf) is used as the working type so
        coefficients are converted without passing through double precision.
        """
        if all(isinstance(v, (int, Fraction)) for v in (mu, delta)):
            return sum((c * Fraction(mu) ** i * Fraction(delta) ** j
                        for (i, j), c in self.terms.items()), Fraction(0))
        if isinstance(mu, float) or isinstance(delta, float):
            def conv(c):
                return c.numerator / c.denominator
        else:
            kind = type(mu) if not isinstance(mu, (int, Fraction)) else type(delta)

            def conv(c):
                return kind(c.numerator) / c.denominator
        total = 0
        for (i, j), c in self.terms.items():
            total += conv(c) * mu**i * delta**j
        return total

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MuDeltaPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MuDeltaPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"MuDeltaPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(
                s for s in (
                    ("mu" if i == 1 else f"mu^{i}") if i else "",
                    ("delta" if j == 1 else f"delta^{j}") if j else "",
                ) if s
            )
            coef = str(abs(c))
            if mono:
                body = mono if abs(c) == 1 else f"{coef}*{mono}"
            else:
                body = coef
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_records(self) -> list:
        """Serialisable term list: mu_exp, delta_exp and exact num/den strings."""
        return [
            {"mu_exp": i, "delta_exp": j, "num": str(c.numerator), "den": str(c.denominator)}
            for (i, j), c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, records) -> MuDeltaPoly:
        return cls({
            (int(r["mu_exp"]), int(r["delta_exp"])): Fraction(int(r["num"]), int(r["den"]))
            for r in records
        })

    def diff_against(self, other: MuDeltaPoly) -> list:
        """Human-readable listing of coefficients that differ."""
        lines = []
        keys = sorted(set(self.terms) | set(other.terms), key=lambda k: (-k[0], k[1]))
        for key in keys:
            a = self.terms.get(key, Fraction(0))
            b = other.terms.get(key, Fraction(0))
            if a != b:
                lines.append(f"mu^{key[0]} delta^{key[1]}: derived {a} != reference {b}")
        return lines


MU = MuDeltaPoly.mu()
DELTA = MuDeltaPoly.delta()
ONE = MuDeltaPoly.const(1)
ZERO = MuDeltaPoly()
