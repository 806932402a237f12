"""Dense univariate polynomials with cyclotomic coefficients.

Used for characteristic polynomials and eigenvalue extraction; the
coefficient field is Q(zeta_N) with a uniform conductor per polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .field import CycloElement, embed_lift, common_conductor, from_rational

Coeff = Union[int, Fraction, CycloElement]


def _as_element(c: Coeff, conductor: int) -> CycloElement:
    if isinstance(c, CycloElement):
        return embed_lift(c, conductor) if c.conductor != conductor else c
    return CycloElement(conductor, [Fraction(c)])


class CycloPoly:
    """Polynomial sum c_i x^i, coefficients ascending and trimmed."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, coeffs: Sequence[Coeff], conductor: int | None = None):
        elems = [c for c in coeffs if isinstance(c, CycloElement)]
        if conductor is None:
            conductor = common_conductor(elems) if elems else 1
        lifted = [_as_element(c, conductor) for c in coeffs]
        while lifted and lifted[-1].is_zero():
            lifted.pop()
        self.conductor = conductor
        self.coeffs = tuple(lifted)

    # -- basics ----------------------------------------------------------

    @classmethod
    def constant(cls, c: Coeff, conductor: int = 1) -> "CycloPoly":
        return cls([c], conductor)

    @classmethod
    def x(cls, conductor: int = 1) -> "CycloPoly":
        return cls([0, 1], conductor)

    @classmethod
    def from_roots(cls, roots: Iterable[CycloElement]) -> "CycloPoly":
        roots = list(roots)
        n = common_conductor(roots) if roots else 1
        p = cls([1], n)
        for r in roots:
            p = p * cls([-r, 1], n)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> CycloElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading().is_one()

    def __eq__(self, other):
        if not isinstance(other, CycloPoly):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        n = common_conductor([from_rational(0, self.conductor), from_rational(0, other.conductor)])
        return self.lift(n).coeffs == other.lift(n).coeffs

    __hash__ = None

    def lift(self, conductor: int) -> "CycloPoly":
        return CycloPoly([embed_lift(c, conductor) for c in self.coeffs], conductor)

    # -- arithmetic --------------------------------------------------------

    def _pair(self, other: "CycloPoly"):
        if self.conductor == other.conductor:
            return self, other
        n = common_conductor(
            [from_rational(0, self.conductor), from_rational(0, other.conductor)]
        )
        return self.lift(n), other.lift(n)

    def __add__(self, other: "CycloPoly") -> "CycloPoly":
        a, b = self._pair(other)
        m = max(len(a.coeffs), len(b.coeffs))
        zero = from_rational(0, a.conductor)
        out = [
            (a.coeffs[i] if i < len(a.coeffs) else zero)
            + (b.coeffs[i] if i < len(b.coeffs) else zero)
            for i in range(m)
        ]
        return CycloPoly(out, a.conductor)

    def __neg__(self) -> "CycloPoly":
        return CycloPoly([-c for c in self.coeffs], self.conductor)

    def __sub__(self, other: "CycloPoly") -> "CycloPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            s = _as_element(other, self.conductor)
            return CycloPoly([c * s for c in self.coeffs], self.conductor)
        a, b = self._pair(other)
        if a.is_zero() or b.is_zero():
            return CycloPoly([], a.conductor)
        zero = from_rational(0, a.conductor)
        out = [zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b.coeffs):
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
        return CycloPoly(out, a.conductor)

    __rmul__ = __mul__

    def monic(self) -> "CycloPoly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.leading().inverse()
        return CycloPoly([c * inv for c in self.coeffs], self.conductor)

    def divmod(self, other: "CycloPoly") -> tuple["CycloPoly", "CycloPoly"]:
        a, b = self._pair(other)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = list(a.coeffs)
        den = b.coeffs
        zero = from_rational(0, a.conductor)
        if len(num) < len(den):
            return CycloPoly([], a.conductor), a
        q = [zero] * (len(num) - len(den) + 1)
        lead_inv = den[-1].inverse()
        for i in range(len(num) - 1, len(den) - 2, -1):
            c = num[i] * lead_inv
            if c.is_zero():
                continue
            q[i - len(den) + 1] = c
            for j, dj in enumerate(den):
                num[i - len(den) + 1 + j] = num[i - len(den) + 1 + j] - c * dj
        return CycloPoly(q, a.conductor), CycloPoly(num[: len(den) - 1], a.conductor)

    def __floordiv__(self, other: "CycloPoly") -> "CycloPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "CycloPoly") -> "CycloPoly":
        return self.divmod(other)[1]

    def gcd(self, other: "CycloPoly") -> "CycloPoly":
        a, b = self._pair(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "CycloPoly":
        return CycloPoly(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.conductor
        )

    def __call__(self, value: Coeff) -> CycloElement:
        """Horner evaluation at a field element."""
        if isinstance(value, CycloElement) and value.conductor != self.conductor:
            n = common_conductor([value, from_rational(0, self.conductor)])
            return self.lift(n)(embed_lift(value, n))
        value = _as_element(value, self.conductor)
        acc = from_rational(0, self.conductor)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def deflate(self, root: CycloElement) -> "CycloPoly":
        """Exact division by (x - root); the caller guarantees p(root) = 0."""
        q, r = self.divmod(CycloPoly([-root, 1], self.conductor))
        assert r.is_zero(), "deflation by a non-root"
        return q

    def __repr__(self):
        if self.is_zero():
            return "CycloPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                parts.append(f"({c})")
            elif i == 1:
                parts.append(f"({c})*x")
            else:
                parts.append(f"({c})*x^{i}")
        return "CycloPoly(" + " + ".join(parts) + ")"
