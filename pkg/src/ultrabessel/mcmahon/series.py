"""Truncated series sum_j c_j x^{-j} with MuDeltaPoly coefficients."""

from __future__ import annotations

from fractions import Fraction

from .poly import MuDeltaPoly, ZERO


class AsymSeries:
    """Series in the small variable 1/x, truncated after the x^{-order} term.

    Arithmetic between two series truncates at the smaller order.  Only
    constant (rational) leading coefficients can be inverted, which is all the
    McMahon pipeline needs: every denominator there starts with 1.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [MuDeltaPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, order: int) -> AsymSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> AsymSeries:
        return cls([1], order)

    @classmethod
    def inv_x(cls, order: int) -> AsymSeries:
        """The series 1/x itself."""
        return cls([0, 1], order)

    def __getitem__(self, j: int) -> MuDeltaPoly:
        return self.coeffs[j] if 0 <= j <= self.order else ZERO

    def _coerce(self, other) -> AsymSeries:
        if isinstance(other, AsymSeries):
            return other
        return AsymSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return AsymSeries([self[j] + other[j] for j in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return AsymSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, AsymSeries):
            return AsymSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return AsymSeries(out, n)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> AsymSeries:
        """Multiply by x^{-k}."""
        return AsymSeries([ZERO] * k + self.coeffs[: self.order + 1 - k], self.order)

    def inverse(self) -> AsymSeries:
        lead = self[0]
        if lead.is_zero() or not lead.is_constant():
            raise ZeroDivisionError("leading coefficient must be a nonzero rational constant")
        inv0 = 1 / lead.constant()
        out = [MuDeltaPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, n + 1):
                if not self[j].is_zero():
                    acc = acc + self[j] * out[n - j]
            out.append(acc * (-inv0))
        return AsymSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, AsymSeries):
            return self * other.inverse()
        return AsymSeries([c / other for c in self.coeffs], self.order)

    def __pow__(self, n: int):
        result = AsymSeries.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def compose(self, taylor) -> AsymSeries:
        """Return sum_n taylor[n] * self**n for a rational Taylor sequence.

        self must have zero constant term, so only powers up to ``order``
        contribute before truncation.
        """
        if not self[0].is_zero():
            raise ValueError("inner series must have zero constant term")
        result = AsymSeries.zero(self.order)
        power = AsymSeries.one(self.order)
        for n, a in enumerate(taylor):
            if n > self.order:
                break
            if a:
                result = result + power * Fraction(a)
            power = power * self
        return result

    def parity(self):
        """'odd', 'even', or None according to which powers are nonzero."""
        nz = [j for j, c in enumerate(self.coeffs) if not c.is_zero()]
        if all(j % 2 for j in nz):
            return "odd"
        if all(j % 2 == 0 for j in nz):
            return "even"
        return None

    def __eq__(self, other):
        if not isinstance(other, AsymSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        body = ", ".join(f"x^-{j}: {c}" for j, c in enumerate(self.coeffs) if not c.is_zero())
        return f"AsymSeries(order={self.order}; {body})"
