"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as coefficient vectors over Q in the power basis
1, zeta, ..., zeta^(phi(N)-1), canonically reduced modulo the N-th
cyclotomic polynomial Phi_N.  Reduction makes equality a plain
coefficient comparison, and inversion goes through the extended
Euclidean algorithm in Q[x] mod Phi_N, so no factorization machinery
is ever needed.

Conductors are explicit: binary operations require both operands in the
same field and raise :class:`ConductorMismatch` otherwise (plain ints
and Fractions embed implicitly).  Use :func:`embed_lift` or
:func:`unify` to move elements between conductors.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import mpmath

from .errors import ConductorMismatch, DivisionByZero, InvalidConductor, NotInSubfield

# Rationals are stdlib Fractions: always in lowest terms, positive denominator.
Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Session-wide working conductor: the field searched when eigenvalues do
# not already live in an input's own field.  24 covers the 4th, 6th, 8th
# and 12th roots of unity and sqrt(2).
_default_conductor = 24


def set_default_conductor(n: int) -> None:
    if n < 1:
        raise InvalidConductor(f"conductor must be >= 1, got {n}")
    global _default_conductor
    _default_conductor = n


def get_default_conductor() -> int:
    return _default_conductor


def euler_phi(n: int) -> int:
    """Euler's totient of a positive integer."""
    if n < 1:
        raise InvalidConductor(f"conductor must be >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    divs = [d for d in range(1, n // 2 + 1) if n % d == 0]
    divs.append(n)
    return divs


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree, monic.

    Computed by exact division of x^n - 1 by the Phi_d for proper
    divisors d of n.
    """
    if n < 1:
        raise InvalidConductor(f"conductor must be >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _int_poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic, remainder zero)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        out[i - dn] = c
        if c:
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def _zeta_power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta_n^j in the power basis, as integer vectors, for 0 <= j < n."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    # zeta^phi = -(cyc[0] + cyc[1] z + ... + cyc[phi-1] z^(phi-1))
    rows: list[tuple[int, ...]] = []
    for j in range(phi):
        rows.append(tuple(1 if i == j else 0 for i in range(phi)))
    for j in range(phi, n):
        prev = rows[j - 1]
        shifted = [0] + list(prev[: phi - 1])
        top = prev[phi - 1]
        if top:
            for i in range(phi):
                shifted[i] -= top * cyc[i]
        rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_coeffs(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """Reduce an arbitrary-length coefficient vector modulo Phi_n."""
    phi = euler_phi(n)
    out = [Fraction(c) for c in coeffs[:phi]]
    out.extend([_ZERO] * (phi - len(out)))
    if len(coeffs) > phi:
        table = _zeta_power_table(n)
        for j in range(phi, len(coeffs)):
            c = Fraction(coeffs[j])
            if not c:
                continue
            # exponents >= n wrap around since zeta^n = 1
            for i, t in enumerate(table[j % n]):
                if t:
                    out[i] += c * t
    return tuple(out)


class CycloElement:
    """An element of Q(zeta_N), exactly represented.

    Immutable; all arithmetic returns new elements.  ``conductor`` is N
    and ``coeffs`` has length phi(N).
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence[Union[int, Fraction]] = ()):
        if conductor < 1:
            raise InvalidConductor(f"conductor must be >= 1, got {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce_coeffs([Fraction(c) for c in coeffs], conductor))

    def __setattr__(self, name, value):
        raise AttributeError("CycloElement is immutable")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotInSubfield(f"{self} is not rational")
        return self.coeffs[0]

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    # -- coercion ------------------------------------------------------

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {other.conductor} != {self.conductor}; lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.conductor, [Fraction(other)])
        return NotImplemented

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _raw(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _raw(self.conductor, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        # fast paths: rational scaling avoids the convolution entirely
        if all(c == 0 for c in b[1:]):
            s = b[0]
            if not s:
                return _raw(self.conductor, (_ZERO,) * len(a))
            return _raw(self.conductor, tuple(c * s for c in a))
        if all(c == 0 for c in a[1:]):
            s = a[0]
            if not s:
                return _raw(self.conductor, (_ZERO,) * len(b))
            return _raw(self.conductor, tuple(c * s for c in b))
        phi = len(a)
        conv = [_ZERO] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
        if phi == 1:
            return _raw(self.conductor, (conv[0],))
        out = conv[:phi]
        table = _zeta_power_table(self.conductor)
        for j in range(phi, 2 * phi - 1):
            c = conv[j]
            if not c:
                continue
            for i, t in enumerate(table[j]):
                if t:
                    out[i] += c * t
        return _raw(self.conductor, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        """Multiplicative inverse via extended Euclid in Q[x] mod Phi_N."""
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(zeta_%d)" % self.conductor)
        if self.is_rational():
            return _raw(self.conductor, (1 / self.coeffs[0],) + (_ZERO,) * (len(self.coeffs) - 1))
        # extended gcd of self (as polynomial) and Phi_N
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r1 = list(self.coeffs)
        _trim(r1)
        s0: list[Fraction] = [_ZERO]
        s1: list[Fraction] = [_ONE]
        while True:
            q, r = _poly_divmod(r0, r1)
            _trim(r)
            if not r:
                break
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        # r1 is a nonzero constant gcd (Phi_N has no rational roots for N>1)
        assert len(r1) == 1, "element shares a factor with the cyclotomic polynomial"
        g = r1[0]
        inv = [c / g for c in s1]
        return CycloElement(self.conductor, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloElement(self.conductor, [1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloElement):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        n = math.lcm(self.conductor, other.conductor)
        return embed_lift(self, n).coeffs == embed_lift(other, n).coeffs

    __hash__ = None  # semantic cross-conductor equality is incompatible with hashing

    def __bool__(self):
        return not self.is_zero()

    # -- display -------------------------------------------------------

    def __repr__(self):
        return f"CycloElement({self.conductor}, {self!s})"

    def __str__(self):
        if self.is_zero():
            return "0"
        sym = f"z{self.conductor}"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mon = sym if i == 1 else f"{sym}^{i}"
                if c == 1:
                    parts.append(mon)
                elif c == -1:
                    parts.append(f"-{mon}")
                else:
                    parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def _raw(conductor: int, coeffs: tuple[Fraction, ...]) -> CycloElement:
    """Internal constructor skipping reduction (coeffs already canonical)."""
    elem = CycloElement.__new__(CycloElement)
    object.__setattr__(elem, "conductor", conductor)
    object.__setattr__(elem, "coeffs", coeffs)
    return elem


# -- polynomial helpers over Q (dense lists, ascending) -----------------


def _trim(p: list[Fraction]) -> None:
    while p and p[-1] == 0:
        p.pop()


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    q = [_ZERO] * max(len(num) - len(den) + 1, 0)
    dlead = den[-1]
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i] / dlead
        if c:
            q[i - len(den) + 1] = c
            for j, dj in enumerate(den):
                num[i - len(den) + 1 + j] -= c * dj
    return q, num[: len(den) - 1]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_ZERO] * max(0, len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    return out


# -- public constructors and operations ---------------------------------


def cyclo_new(conductor: int, coeffs: Iterable[Union[int, Fraction]] = ()) -> CycloElement:
    """Build a field element from conductor and power-basis coefficients."""
    return CycloElement(conductor, list(coeffs))


def from_rational(value: Union[int, Fraction], conductor: int = 1) -> CycloElement:
    return CycloElement(conductor, [Fraction(value)])


def root_of_unity(conductor: int, k: int) -> CycloElement:
    """zeta_N^k, with k reduced modulo N."""
    if conductor < 1:
        raise InvalidConductor(f"conductor must be >= 1, got {conductor}")
    k %= conductor
    table = _zeta_power_table(conductor)
    return _raw(conductor, tuple(Fraction(t) for t in table[k]))


def cyclo_op(kind: str, x: CycloElement, y: CycloElement) -> CycloElement:
    """Named field operation; ``kind`` in {add, sub, mul, div}."""
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    raise ValueError(f"unknown operation {kind!r}")


@lru_cache(maxsize=None)
def _subfield_basis(big: int, small: int) -> tuple[tuple[Fraction, ...], ...]:
    """Power basis of Q(zeta_small) expressed in the basis of Q(zeta_big)."""
    step = big // small
    rows = []
    for j in range(euler_phi(small)):
        rows.append(root_of_unity(big, j * step).coeffs)
    return tuple(rows)


def embed_lift(x: CycloElement, target_conductor: int) -> CycloElement:
    """Re-express ``x`` in Q(zeta_target); :class:`NotInSubfield` if impossible.

    When the source conductor divides the target this is the embedding
    zeta_M -> zeta_N^(N/M); otherwise the element is lifted to the
    compositum and projected back down by solving an exact linear system
    over the subfield's power basis.
    """
    if target_conductor < 1:
        raise InvalidConductor(f"conductor must be >= 1, got {target_conductor}")
    src = x.conductor
    if src == target_conductor:
        return x
    if target_conductor % src == 0:
        step = target_conductor // src
        out = [_ZERO] * euler_phi(target_conductor)
        table = _zeta_power_table(target_conductor)
        for i, c in enumerate(x.coeffs):
            if not c:
                continue
            for j, t in enumerate(table[(i * step) % target_conductor]):
                if t:
                    out[j] += c * t
        return _raw(target_conductor, tuple(out))
    big = math.lcm(src, target_conductor)
    lifted = embed_lift(x, big) if big != src else x
    # solve sum_j d_j * basis_j = lifted over Q
    basis = _subfield_basis(big, target_conductor)
    m = len(basis)
    dim = euler_phi(big)
    # Gaussian elimination on the (dim x (m+1)) augmented system
    aug = [[basis[j][i] for j in range(m)] + [lifted.coeffs[i]] for i in range(dim)]
    pivots = []
    row = 0
    for col in range(m):
        pivot = next((r for r in range(row, dim) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(dim):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    sol = [_ZERO] * m
    for r, col in enumerate(pivots):
        sol[col] = aug[r][m]
    for r in range(row, dim):
        if aug[r][m] != 0:
            raise NotInSubfield(
                f"element of Q(zeta_{src}) does not lie in Q(zeta_{target_conductor})"
            )
    candidate = _raw(target_conductor, tuple(sol))
    return candidate


def common_conductor(elements: Iterable[CycloElement]) -> int:
    n = 1
    for x in elements:
        n = math.lcm(n, x.conductor)
    return n


def unify(*elements: CycloElement) -> list[CycloElement]:
    """Lift all elements to their least common conductor."""
    n = common_conductor(elements)
    return [embed_lift(x, n) for x in elements]


def galois_apply(x: CycloElement, k: int) -> CycloElement:
    """Image of ``x`` under the automorphism zeta -> zeta^k (k coprime to N)."""
    n = x.conductor
    if math.gcd(k, n) != 1:
        raise ValueError(f"{k} is not coprime to the conductor {n}")
    out = [_ZERO] * len(x.coeffs)
    table = _zeta_power_table(n)
    for i, c in enumerate(x.coeffs):
        if not c:
            continue
        for j, t in enumerate(table[(i * k) % n]):
            if t:
                out[j] += c * t
    return _raw(n, tuple(out))


def sort_key(x: CycloElement):
    """Deterministic ordering key (lexicographic on coefficient vectors)."""
    return tuple(x.coeffs)


# -- numeric embeddings --------------------------------------------------


def complex_embedding(x: CycloElement, precision_bits: int = 64) -> "mpmath.mpc":
    """Approximate image of ``x`` under zeta_N -> exp(2 pi i / N)."""
    with mpmath.workprec(precision_bits + 16):
        n = x.conductor
        total = mpmath.mpc(0)
        for i, c in enumerate(x.coeffs):
            if not c:
                continue
            w = mpmath.expjpi(mpmath.mpf(2 * i) / n)
            total += (mpmath.mpf(c.numerator) / c.denominator) * w
        return total


class ComplexEnclosure:
    """Rigorous complex box: center (real, imag) plus a radius bound."""

    __slots__ = ("real", "imag", "radius")

    def __init__(self, real, imag, radius):
        self.real = real
        self.imag = imag
        self.radius = radius

    def contains_zero(self) -> bool:
        return mpmath.sqrt(self.real**2 + self.imag**2) <= self.radius

    def __repr__(self):
        return f"ComplexEnclosure({self.real}, {self.imag}, r<={self.radius})"


def complex_enclosure(x: CycloElement, precision_bits: int = 64) -> ComplexEnclosure:
    """Enclosure of ``x`` under the standard embedding.

    The radius is a rigorous bound obtained from interval arithmetic;
    exact dyadic rationals come back with radius zero.
    """
    if precision_bits < 16:
        raise ValueError("precision_bits must be >= 16")
    if x.is_rational():
        q = x.coeffs[0]
        den = q.denominator
        if den & (den - 1) == 0:  # power of two: exactly representable
            with mpmath.workprec(max(precision_bits, q.numerator.bit_length() + 8)):
                center = mpmath.ldexp(mpmath.mpf(q.numerator), -(den.bit_length() - 1))
                return ComplexEnclosure(center, mpmath.mpf(0), mpmath.mpf(0))
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = precision_bits + 24
        n = x.conductor
        re = iv.mpf(0)
        im = iv.mpf(0)
        for i, c in enumerate(x.coeffs):
            if not c:
                continue
            angle = iv.pi * (iv.mpf(2 * i) / n)
            coeff = iv.mpf(c.numerator) / c.denominator
            re += coeff * iv.cos(angle)
            im += coeff * iv.sin(angle)
        radius = mpmath.mpf(re.delta) / 2 + mpmath.mpf(im.delta) / 2
        return ComplexEnclosure(mpmath.mpf(re.mid), mpmath.mpf(im.mid), radius)
    finally:
        iv.prec = old
