"""Exact dense linear algebra over cyclotomic field elements.

Everything here is sized for the workloads of this package (matrices up
to 8x8), so the storage is dense row-major tuples and the algorithms
are the classical exact ones: Gauss-Jordan for RREF and kernels,
Bareiss fraction-free elimination for determinants, Faddeev-LeVerrier
for characteristic polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import Singular
from .field import CycloElement, common_conductor, embed_lift, from_rational
from .poly import CycloPoly

Entry = Union[int, Fraction, CycloElement]


def _lift_entry(e: Entry, conductor: int) -> CycloElement:
    if isinstance(e, CycloElement):
        return embed_lift(e, conductor) if e.conductor != conductor else e
    return CycloElement(conductor, [Fraction(e)])


class ExactMatrix:
    """Immutable dense matrix with a uniform conductor across entries."""

    __slots__ = ("rows", "cols", "conductor", "entries")

    def __init__(self, rows_data: Sequence[Sequence[Entry]], conductor: int | None = None):
        if not rows_data:
            raise ValueError("matrix needs at least one row")
        width = len(rows_data[0])
        if any(len(r) != width for r in rows_data):
            raise ValueError("ragged rows")
        if conductor is None:
            conductor = 1
            for r in rows_data:
                for e in r:
                    if isinstance(e, CycloElement):
                        conductor = math.lcm(conductor, e.conductor)
        entries = tuple(
            tuple(_lift_entry(e, conductor) for e in r) for r in rows_data
        )
        object.__setattr__(self, "rows", len(rows_data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, n: int, conductor: int = 1) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], conductor)

    @classmethod
    def zero(cls, rows: int, cols: int, conductor: int = 1) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)], conductor)

    @classmethod
    def diagonal(cls, values: Sequence[Entry], conductor: int | None = None) -> "ExactMatrix":
        n = len(values)
        return cls(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], conductor
        )

    @classmethod
    def block_diagonal(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        conductor = 1
        for b in blocks:
            conductor = math.lcm(conductor, b.conductor)
        data: list[list[Entry]] = [[0] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b.entries[i][j]
            r0 += b.rows
            c0 += b.cols
        return cls(data, conductor)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Entry]], conductor: int | None = None) -> "ExactMatrix":
        n = len(columns[0])
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)], conductor)

    def lift(self, conductor: int) -> "ExactMatrix":
        if conductor == self.conductor:
            return self
        return ExactMatrix(self.entries, conductor)

    # -- access ----------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> CycloElement:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[CycloElement, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[CycloElement, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx], self.conductor
        )

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.conductor != other.conductor:
            n = math.lcm(self.conductor, other.conductor)
            return self.lift(n) == other.lift(n)
        return self.entries == other.entries

    __hash__ = None

    # -- arithmetic ----------------------------------------------------------

    def _pair(self, other: "ExactMatrix"):
        if self.conductor == other.conductor:
            return self, other
        n = math.lcm(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        a, b = self._pair(other)
        return ExactMatrix(
            [
                [a.entries[i][j] + b.entries[i][j] for j in range(a.cols)]
                for i in range(a.rows)
            ],
            a.conductor,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        a, b = self._pair(other)
        return ExactMatrix(
            [
                [a.entries[i][j] - b.entries[i][j] for j in range(a.cols)]
                for i in range(a.rows)
            ],
            a.conductor,
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-e for e in r] for r in self.entries], self.conductor)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            s = _lift_entry(other, self.conductor) if not isinstance(other, CycloElement) else other
            if isinstance(other, CycloElement) and other.conductor != self.conductor:
                n = math.lcm(self.conductor, other.conductor)
                return self.lift(n) * embed_lift(other, n)
            return ExactMatrix([[e * s for e in r] for r in self.entries], self.conductor)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        a, b = self._pair(other)
        if a.cols != b.rows:
            raise ValueError(f"dimension mismatch {a.cols} vs {b.rows}")
        bt = list(zip(*b.entries))
        zero = from_rational(0, a.conductor)
        data = []
        for arow in a.entries:
            out_row = []
            for bcol in bt:
                acc = zero
                for x, y in zip(arow, bcol):
                    if not (x.is_zero() or y.is_zero()):
                        acc = acc + x * y
                out_row.append(acc)
            data.append(out_row)
        return ExactMatrix(data, a.conductor)

    def matvec(self, v: Sequence[CycloElement]) -> tuple[CycloElement, ...]:
        zero = from_rational(0, self.conductor)
        out = []
        for r in self.entries:
            acc = zero
            for x, y in zip(r, v):
                if not x.is_zero():
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def power(self, k: int) -> "ExactMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        result = ExactMatrix.identity(self.rows, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.entries)), self.conductor)

    def trace(self) -> CycloElement:
        acc = from_rational(0, self.conductor)
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def __repr__(self):
        body = "; ".join(
            "[" + ", ".join(str(e) for e in r) + "]" for r in self.entries
        )
        return f"ExactMatrix({self.rows}x{self.cols} @ {self.conductor}: {body})"


class Subspace:
    """Subspace of K^n, canonically represented by an RREF basis.

    Basis vectors are stored as rows; two subspaces are equal exactly
    when their canonical bases coincide.
    """

    __slots__ = ("ambient_dim", "conductor", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[Entry]], conductor: int | None = None):
        vectors = list(vectors)
        if conductor is None:
            conductor = 1
            for v in vectors:
                for e in v:
                    if isinstance(e, CycloElement):
                        conductor = math.lcm(conductor, e.conductor)
        if vectors:
            mat = ExactMatrix(vectors, conductor)
            red, rank, _ = rref(mat)
            rows = [red.row(i) for i in range(rank)]
        else:
            rows = []
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "basis", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def lift(self, conductor: int) -> "Subspace":
        return Subspace(
            self.ambient_dim,
            [[embed_lift(e, conductor) for e in v] for v in self.basis],
            conductor,
        )

    def contains(self, vector: Sequence[Entry]) -> bool:
        vec = [_lift_entry(e, self.conductor) for e in vector]
        joined = Subspace(self.ambient_dim, list(self.basis) + [vec], self.conductor)
        return joined.dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        n = math.lcm(self.conductor, other.conductor)
        a = self.lift(n) if n != self.conductor else self
        b = other.lift(n) if n != other.conductor else other
        if a.dim == 0 or b.dim == 0:
            return Subspace(self.ambient_dim, [], n)
        # solve sum a_i u_i = sum b_j v_j:  kernel of [U^T | -V^T]
        cols = [list(v) for v in a.basis] + [[-e for e in v] for v in b.basis]
        system = ExactMatrix.from_columns(cols, n)
        ker = kernel(system)
        vectors = []
        for coeffs in ker.basis:
            vec = [from_rational(0, n)] * a.ambient_dim
            for c, u in zip(coeffs[: a.dim], a.basis):
                if not c.is_zero():
                    vec = [w + c * e for w, e in zip(vec, u)]
            vectors.append(vec)
        return Subspace(self.ambient_dim, vectors, n)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        n = math.lcm(self.conductor, other.conductor)
        return self.lift(n).basis == other.lift(n).basis

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient_dim})"


# -- elimination ---------------------------------------------------------


def rref(m: ExactMatrix) -> tuple[ExactMatrix, int, list[int]]:
    """Reduced row-echelon form; returns (R, rank, pivot columns)."""
    data = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if not data[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        inv = data[r][c].inverse()
        data[r] = [e * inv for e in data[r]]
        for i in range(rows):
            if i != r and not data[i][c].is_zero():
                f = data[i][c]
                data[i] = [a - f * b for a, b in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return ExactMatrix(data, m.conductor), len(pivots), pivots


def kernel(m: ExactMatrix) -> Subspace:
    """Right null space {v : M v = 0} as a canonical subspace."""
    red, rank, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    zero = from_rational(0, m.conductor)
    one = from_rational(1, m.conductor)
    vectors = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -red.entries[r][f]
        vectors.append(v)
    return Subspace(m.cols, vectors, m.conductor)


def solve(m: ExactMatrix, rhs: Sequence[CycloElement]) -> tuple[CycloElement, ...] | None:
    """One solution of M x = rhs, or None if the system is inconsistent."""
    n = m.conductor
    aug = ExactMatrix(
        [list(m.entries[i]) + [_lift_entry(rhs[i], n)] for i in range(m.rows)], n
    )
    red, rank, pivots = rref(aug)
    if m.cols in pivots:
        return None
    zero = from_rational(0, n)
    x = [zero] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red.entries[r][m.cols]
    return tuple(x)


def determinant(m: ExactMatrix) -> CycloElement:
    """Determinant by Bareiss fraction-free elimination."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    data = [list(r) for r in m.entries]
    prev = from_rational(1, m.conductor)
    sign = 1
    for k in range(n - 1):
        if data[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not data[i][k].is_zero()), None)
            if swap is None:
                return from_rational(0, m.conductor)
            data[k], data[swap] = data[swap], data[k]
            sign = -sign
        inv_prev = prev.inverse()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                data[i][j] = (data[i][j] * data[k][k] - data[i][k] * data[k][j]) * inv_prev
        prev = data[k][k]
    det = data[n - 1][n - 1]
    return -det if sign < 0 else det


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse; raises :class:`Singular` when the matrix is singular."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    ident = ExactMatrix.identity(n, m.conductor)
    aug = ExactMatrix(
        [list(m.entries[i]) + list(ident.entries[i]) for i in range(n)], m.conductor
    )
    red, rank, pivots = rref(aug)
    if rank < n or pivots[:n] != list(range(n)):
        raise Singular("matrix is singular")
    return red.submatrix(range(n), range(n, 2 * n))


def char_poly(m: ExactMatrix) -> CycloPoly:
    """Monic characteristic polynomial via Faddeev-LeVerrier."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    ident = ExactMatrix.identity(n, m.conductor)
    coeffs = [from_rational(0, m.conductor)] * (n + 1)
    coeffs[n] = from_rational(1, m.conductor)
    mk = m
    for k in range(1, n + 1):
        ck = mk.trace() * Fraction(-1, k)
        coeffs[n - k] = ck
        if k < n:
            mk = m @ (mk + ck * ident)
    return CycloPoly(coeffs, m.conductor)


def eval_poly_at_matrix(p: CycloPoly, m: ExactMatrix) -> ExactMatrix:
    """p(M) by Horner's rule."""
    n = math.lcm(p.conductor, m.conductor)
    mat = m.lift(n)
    ident = ExactMatrix.identity(mat.rows, n)
    acc = ExactMatrix.zero(mat.rows, mat.cols, n)
    for c in reversed(p.coeffs):
        acc = acc @ mat + embed_lift(c, n) * ident
    return acc


def kronecker(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product a (x) b."""
    x, y = a._pair(b)
    data = []
    for i in range(x.rows):
        for k in range(y.rows):
            row = []
            for j in range(x.cols):
                aij = x.entries[i][j]
                if aij.is_zero():
                    row.extend([0] * y.cols)
                else:
                    row.extend(aij * y.entries[k][l] for l in range(y.cols))
            data.append(row)
    return ExactMatrix(data, x.conductor)


def intertwiner_space(
    a1: ExactMatrix, b1: ExactMatrix, a2: ExactMatrix, b2: ExactMatrix
) -> Subspace:
    """Canonical basis of {M : A1 M = M A2 and B1 M = M B2}.

    Solutions are vectorized row-major in K^(n*n); use
    :func:`subspace_matrices` to get them back as matrices.
    """
    n = a1.rows
    conductor = 1
    for m in (a1, b1, a2, b2):
        conductor = math.lcm(conductor, m.conductor)
    a1, b1, a2, b2 = (x.lift(conductor) for x in (a1, b1, a2, b2))
    ident = ExactMatrix.identity(n, conductor)
    # row-major vec: vec(A M) = (A (x) I) vec(M), vec(M B) = (I (x) B^T) vec(M)
    top = kronecker(a1, ident) - kronecker(ident, a2.transpose())
    bottom = kronecker(b1, ident) - kronecker(ident, b2.transpose())
    stacked = ExactMatrix(list(top.entries) + list(bottom.entries), conductor)
    return kernel(stacked)


def subspace_matrices(space: Subspace, n: int) -> list[ExactMatrix]:
    """Reshape the basis of a vectorized matrix subspace into n x n matrices."""
    out = []
    for v in space.basis:
        out.append(
            ExactMatrix([[v[i * n + j] for j in range(n)] for i in range(n)], space.conductor)
        )
    return out


def vectorize(m: ExactMatrix) -> tuple[CycloElement, ...]:
    """Row-major vectorization."""
    return tuple(e for r in m.entries for e in r)
