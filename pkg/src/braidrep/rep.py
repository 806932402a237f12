"""B3 representations as verified matrix pairs.

A representation of the braid group on three strands is a pair of
invertible matrices (A, B) with ABA = BAB; everything in this module
checks that identity exactly and keeps it as a standing invariant.

Indecomposability is decided through the endomorphism algebra: the
joint commutant of A and B together with its trace-form (Dickson)
radical.  The representation is indecomposable precisely when the
quotient is one-dimensional, i.e. the endomorphism algebra is local.
Over the cyclotomic subfields used here this is geometric
indecomposability (indecomposability over the algebraic closure),
which is the notion the classification targets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BraidRelationViolated,
    NotInvertible,
    SpectrumNotInField,
)
from .field import CycloElement, embed_lift, from_rational, sort_key
from .linalg import (
    ExactMatrix,
    Subspace,
    determinant,
    intertwiner_space,
    inverse,
    kernel,
    solve,
    subspace_matrices,
    vectorize,
)
from .spectra import _RowReducer, generalized_eigenspaces, matrix_spectrum


@dataclass(frozen=True)
class B3Rep:
    """A verified pair (A, B) with ABA = BAB; build through make_rep."""

    A: ExactMatrix
    B: ExactMatrix

    @property
    def dim(self) -> int:
        return self.A.rows

    @property
    def conductor(self) -> int:
        return self.A.conductor

    def lift(self, conductor: int) -> "B3Rep":
        return B3Rep(self.A.lift(conductor), self.B.lift(conductor))

    def conjugate(self, m: ExactMatrix) -> "B3Rep":
        """The equivalent representation (M^-1 A M, M^-1 B M)."""
        n = math.lcm(self.conductor, m.conductor)
        mm = m.lift(n)
        m_inv = inverse(mm)
        return B3Rep(m_inv @ self.A.lift(n) @ mm, m_inv @ self.B.lift(n) @ mm)


@dataclass(frozen=True)
class EndAlgebra:
    """Joint commutant of (A, B) with its trace-form radical."""

    basis: tuple[ExactMatrix, ...]
    radical_basis: tuple[ExactMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def radical_dim(self) -> int:
        return len(self.radical_basis)


@dataclass(frozen=True)
class DecompositionReport:
    """Indecomposable summands plus the block-diagonalizing witness."""

    summands: tuple[tuple[Subspace, B3Rep], ...]
    witness: ExactMatrix

    @property
    def summand_dims(self) -> tuple[int, ...]:
        return tuple(sorted(s.dim for s, _ in self.summands))


@dataclass(frozen=True)
class InvariantSubspaces:
    """Common invariant subspaces of one fixed dimension.

    ``subspaces`` lists the isolated ones.  When a common eigenspace of
    dimension >= 2 makes the collection infinite, ``infinite`` is set
    and ``pencil_representatives`` carries sample members.
    """

    dimension: int
    subspaces: tuple[Subspace, ...]
    infinite: bool = False
    pencil_representatives: tuple[Subspace, ...] = ()


def braid_defect(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """ABA - BAB, exactly."""
    if not (a.is_square() and b.is_square() and a.rows == b.rows):
        raise ValueError("braid defect needs square matrices of equal size")
    return a @ b @ a - b @ a @ b


def make_rep(a: ExactMatrix, b: ExactMatrix) -> B3Rep:
    """Verify invertibility and the braid relation, then wrap the pair."""
    if not (a.is_square() and b.is_square() and a.rows == b.rows):
        raise ValueError("generators must be square matrices of equal size")
    n = math.lcm(a.conductor, b.conductor)
    a, b = a.lift(n), b.lift(n)
    if determinant(a).is_zero():
        raise NotInvertible("generator A is singular")
    if determinant(b).is_zero():
        raise NotInvertible("generator B is singular")
    defect = braid_defect(a, b)
    if not defect.is_zero():
        raise BraidRelationViolated("ABA != BAB", defect=defect)
    return B3Rep(a, b)


def direct_sum(reps: list[B3Rep]) -> B3Rep:
    """Block-diagonal direct sum; the braid relation is re-verified."""
    if not reps:
        raise ValueError("direct sum of an empty list")
    return make_rep(
        ExactMatrix.block_diagonal([r.A for r in reps]),
        ExactMatrix.block_diagonal([r.B for r in reps]),
    )


# -- irreducibility (Burnside closure) -------------------------------------


def is_irreducible(rep: B3Rep) -> bool:
    """Burnside test: the algebra generated by A and B is all of M_n."""
    n = rep.dim
    reducer = _RowReducer(n * n, rep.conductor)
    ident = ExactMatrix.identity(n, rep.conductor)
    queue = [ident]
    reducer.add(vectorize(ident))
    while queue and reducer.rank < n * n:
        x = queue.pop()
        for g in (rep.A, rep.B):
            y = g @ x
            if reducer.add(vectorize(y)):
                queue.append(y)
    return reducer.rank == n * n


# -- commutant and radical ---------------------------------------------------


def commutant(rep: B3Rep) -> EndAlgebra:
    """Joint commutant {M : MA = AM, MB = BM} with its Dickson radical."""
    space = intertwiner_space(rep.A, rep.B, rep.A, rep.B)
    basis = tuple(subspace_matrices(space, rep.dim))
    radical = tuple(_radical_of(basis))
    return EndAlgebra(basis=basis, radical_basis=radical)


def _radical_of(basis: tuple[ExactMatrix, ...]) -> list[ExactMatrix]:
    if not basis:
        return []
    conductor = basis[0].conductor
    gram = ExactMatrix(
        [[(ei @ ej).trace() for ej in basis] for ei in basis], conductor
    )
    coeff_space = kernel(gram)
    radical = []
    for coeffs in coeff_space.basis:
        acc = ExactMatrix.zero(basis[0].rows, basis[0].cols, coeff_space.conductor)
        for c, e in zip(coeffs, basis):
            if not c.is_zero():
                acc = acc + c * e
        radical.append(acc)
    return radical


def algebra_radical(alg: EndAlgebra) -> tuple[int, tuple[ExactMatrix, ...]]:
    """Radical dimension and basis (already computed on construction)."""
    return alg.radical_dim, alg.radical_basis


def is_indecomposable(rep: B3Rep) -> bool:
    """True iff the endomorphism algebra is local (dim - radical_dim = 1)."""
    alg = commutant(rep)
    return alg.dim - alg.radical_dim == 1


# -- invariant subspaces ----------------------------------------------------


def _eigen_lines(m: ExactMatrix, precision_bits: int):
    """Eigenvalue -> plain eigenspace (not generalized) pairs."""
    report = matrix_spectrum(m, precision_bits)
    if not report.split:
        raise SpectrumNotInField("matrix spectrum does not lie in the working field")
    out = []
    for lam, _ in report.roots:
        conductor = math.lcm(m.conductor, lam.conductor)
        shifted = m.lift(conductor) - lam * ExactMatrix.identity(m.rows, conductor)
        out.append((lam, kernel(shifted)))
    return out


def _common_lines(rep: B3Rep, precision_bits: int) -> InvariantSubspaces:
    """All 1-dimensional common invariant subspaces (or pencil markers)."""
    lines: list[Subspace] = []
    pencil_reps: list[Subspace] = []
    infinite = False
    for _, ea in _eigen_lines(rep.A, precision_bits):
        for _, eb in _eigen_lines(rep.B, precision_bits):
            meet = ea.intersection(eb)
            if meet.dim == 1:
                lines.append(meet)
            elif meet.dim >= 2:
                infinite = True
                for v in meet.basis:
                    pencil_reps.append(Subspace(meet.ambient_dim, [v], meet.conductor))
    return InvariantSubspaces(
        dimension=1,
        subspaces=tuple(lines),
        infinite=infinite,
        pencil_representatives=tuple(pencil_reps),
    )


def common_invariant_subspaces(
    rep: B3Rep, d: int, precision_bits: int = 256
) -> InvariantSubspaces:
    """Complete list of d-dimensional common invariant subspaces, n <= 3.

    d = 1 comes from intersecting eigenspaces of A and B; d = n-1 from
    the transpose (dual) representation's lines.  For n <= 3 those two
    cases exhaust all proper nonzero invariant subspaces.
    """
    n = rep.dim
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < {n}, got {d}")
    if n > 3:
        raise ValueError("exhaustive enumeration is only supported for n <= 3")
    if d == 1:
        return _common_lines(rep, precision_bits)
    # d == n-1: dualize
    dual = B3Rep(rep.A.transpose(), rep.B.transpose())
    dual_lines = _common_lines(dual, precision_bits)

    def annihilator(line: Subspace) -> Subspace:
        w = line.basis[0]
        return kernel(ExactMatrix([list(w)], line.conductor))

    return InvariantSubspaces(
        dimension=d,
        subspaces=tuple(annihilator(l) for l in dual_lines.subspaces),
        infinite=dual_lines.infinite,
        pencil_representatives=tuple(
            annihilator(l) for l in dual_lines.pencil_representatives
        ),
    )


# -- decomposition -----------------------------------------------------------


def restrict_to(rep: B3Rep, space: Subspace) -> B3Rep:
    """Restriction of the action to an invariant subspace, in its basis."""
    conductor = math.lcm(rep.conductor, space.conductor)
    basis_cols = ExactMatrix.from_columns([list(v) for v in space.basis], conductor)

    def restrict(m: ExactMatrix) -> ExactMatrix:
        cols = []
        for v in space.basis:
            image = m.lift(conductor).matvec([embed_lift(e, conductor) for e in v])
            coords = solve(basis_cols, image)
            if coords is None:
                raise ValueError("subspace is not invariant")
            cols.append(list(coords))
        return ExactMatrix.from_columns(cols, conductor)

    return make_rep(restrict(rep.A), restrict(rep.B))


def _center_elements(basis: tuple[ExactMatrix, ...]) -> list[ExactMatrix]:
    """Elements of the commutant commuting with the whole commutant."""
    if len(basis) <= 1:
        return []
    conductor = basis[0].conductor
    # coefficient vectors c with sum c_i (E_i X - X E_i) = 0 for all X
    system_rows = []
    for x in basis:
        for pos in range(basis[0].rows ** 2):
            system_rows.append(
                [vectorize(e @ x - x @ e)[pos] for e in basis]
            )
    ker = kernel(ExactMatrix(system_rows, conductor))
    out = []
    for coeffs in ker.basis:
        acc = ExactMatrix.zero(basis[0].rows, basis[0].cols, ker.conductor)
        for c, e in zip(coeffs, basis):
            if not c.is_zero():
                acc = acc + c * e
        out.append(acc)
    return out


def _is_scalar(m: ExactMatrix) -> bool:
    lead = m.entries[0][0]
    target = lead * ExactMatrix.identity(m.rows, m.conductor)
    return m == target


def _splitting_candidates(basis: tuple[ExactMatrix, ...]):
    """Deterministic stream of commutant elements to try as splitters."""
    for c in _center_elements(basis):
        if not _is_scalar(c):
            yield c
    for e in basis:
        if not _is_scalar(e):
            yield e
    for i, j in itertools.combinations(range(len(basis)), 2):
        yield basis[i] + basis[j]
        yield basis[i] - basis[j]
    if len(basis) <= 5:
        values = [0, 1, -1, 2, -2, 3, -3]
        for combo in itertools.product(values, repeat=len(basis)):
            if all(v == 0 for v in combo):
                continue
            acc = ExactMatrix.zero(basis[0].rows, basis[0].cols, basis[0].conductor)
            for v, e in zip(combo, basis):
                if v:
                    acc = acc + v * e
            if not _is_scalar(acc):
                yield acc
    else:
        acc = ExactMatrix.zero(basis[0].rows, basis[0].cols, basis[0].conductor)
        for idx, e in enumerate(basis):
            acc = acc + (idx + 1) * e
        yield acc


def decompose(rep: B3Rep, precision_bits: int = 256) -> DecompositionReport:
    """Split into indecomposable summands with an exact witness.

    Recursively finds a commutant element with at least two distinct
    eigenvalues in the field and splits along its generalized
    eigenspaces; each of those is invariant under everything commuting
    with the element, in particular under A and B.
    """
    n = rep.dim
    if is_indecomposable(rep):
        full = Subspace(
            n, ExactMatrix.identity(n, rep.conductor).entries, rep.conductor
        )
        return DecompositionReport(
            summands=((full, rep),),
            witness=ExactMatrix.identity(n, rep.conductor),
        )
    alg = commutant(rep)
    split_spaces = None
    for candidate in _splitting_candidates(alg.basis):
        try:
            spaces = generalized_eigenspaces(candidate, precision_bits)
        except SpectrumNotInField:
            continue
        if len(spaces) >= 2:
            split_spaces = [s for _, s in spaces]
            break
    if split_spaces is None:
        raise SpectrumNotInField(
            "no commutant element splits over the working field; "
            "partial split: trivial"
        )
    summands: list[tuple[Subspace, B3Rep]] = []
    conductor = rep.conductor
    for space in split_spaces:
        conductor = math.lcm(conductor, space.conductor)
    for space in split_spaces:
        sub = restrict_to(rep, space)
        inner = decompose(sub, precision_bits)
        for inner_space, leaf in inner.summands:
            # map the inner subspace back to ambient coordinates
            ambient_vectors = []
            for coeffs in inner_space.basis:
                vec = [from_rational(0, conductor)] * n
                for c, basis_vec in zip(coeffs, space.basis):
                    if not c.is_zero():
                        vec = [
                            w + embed_lift(c, conductor) * embed_lift(e, conductor)
                            for w, e in zip(vec, basis_vec)
                        ]
                ambient_vectors.append(vec)
            summands.append((Subspace(n, ambient_vectors, conductor), leaf))
    columns = []
    for space, _ in summands:
        for v in space.basis:
            columns.append(list(v))
    witness = ExactMatrix.from_columns(columns, conductor)
    return DecompositionReport(summands=tuple(summands), witness=witness)


# -- equivalence -------------------------------------------------------------


def _grid_values(count: int) -> list[int]:
    values = [0]
    k = 1
    while len(values) < count:
        values.append(k)
        if len(values) < count:
            values.append(-k)
        k += 1
    return values


def equivalent(rep1: B3Rep, rep2: B3Rep) -> ExactMatrix | None:
    """Invertible intertwiner witnessing equivalence, or None.

    The intertwiner space is exact; an invertible element is found by a
    deterministic grid search with n+1 values per coordinate, which is
    exhaustive for deciding whether det vanishes identically on the
    space (the determinant has degree <= n in each coordinate).
    """
    if rep1.dim != rep2.dim:
        return None
    n = rep1.dim
    space = intertwiner_space(rep1.A, rep1.B, rep2.A, rep2.B)
    if space.dim == 0:
        return None
    mats = subspace_matrices(space, n)
    values = _grid_values(n + 1)
    total = len(values) ** len(mats)
    if total > 500_000:
        raise RuntimeError(
            f"intertwiner grid of size {total} is too large to search exhaustively"
        )
    for combo in itertools.product(values, repeat=len(mats)):
        if all(v == 0 for v in combo):
            continue
        acc = ExactMatrix.zero(n, n, space.conductor)
        for v, e in zip(combo, mats):
            if v:
                acc = acc + v * e
        if determinant(acc).is_zero():
            continue
        lcm = math.lcm(acc.conductor, rep1.conductor, rep2.conductor)
        m = acc.lift(lcm)
        assert (rep1.A.lift(lcm) @ m) == (m @ rep2.A.lift(lcm))
        assert (rep1.B.lift(lcm) @ m) == (m @ rep2.B.lift(lcm))
        return m
    return None
