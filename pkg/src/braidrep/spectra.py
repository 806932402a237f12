"""Eigenstructure over Q(zeta_N): exact roots, generalized eigenspaces,
Jordan normal forms.

Root finding is numeric-then-exact: complex roots are isolated at
working precision, each candidate is reconstructed as a field element
(rational coordinates in the zeta power basis, recovered per coordinate
by continued fractions), and only candidates that satisfy the
polynomial *exactly* are ever reported.  A failed reconstruction can
therefore cost completeness but never soundness; the report says
honestly whether the polynomial split.

Reconstruction detail: a single complex embedding underdetermines the
phi(N) rational coordinates once phi(N) > 2, so the solver assembles
the full Galois orbit - the conjugate sigma_k(r) is a root of the
exactly-computed conjugate polynomial sigma_k(p) - and enumerates the
finitely many candidate orbit assignments, solving a fixed Vandermonde
system for each.  Complex conjugation pins half the orbit for free, so
at conductor 24 a degree-d polynomial needs at most d^3 assignments.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import SpectrumNotInField
from .field import (
    CycloElement,
    complex_embedding,
    embed_lift,
    euler_phi,
    from_rational,
    galois_apply,
    get_default_conductor,
    sort_key,
)
from .linalg import ExactMatrix, Subspace, char_poly, inverse, kernel
from .poly import CycloPoly

_MAX_PRECISION = 4096


@dataclass(frozen=True)
class SpectrumReport:
    """Roots found in the field with multiplicities; ``split`` is True
    when the multiplicities add up to the full degree."""

    roots: tuple[tuple[CycloElement, int], ...]
    split: bool

    def distinct(self) -> list[CycloElement]:
        return [r for r, _ in self.roots]


@dataclass(frozen=True)
class JordanData:
    """Exact Jordan decomposition: P^-1 M P = J."""

    J: ExactMatrix
    P: ExactMatrix
    P_inv: ExactMatrix
    block_structure: tuple[tuple[CycloElement, tuple[int, ...]], ...]


def _mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


def _rational_candidate(x: mpmath.mpf, prec: int) -> Fraction:
    return _mpf_to_fraction(x).limit_denominator(1 << max(prec // 3, 16))


def _conjugate_pairs(n: int) -> tuple[list[int], list[int]]:
    """Units mod n, and the representatives strictly below n/2 (excluding 1)."""
    units = [k for k in range(1, n) if math.gcd(k, n) == 1]
    free = [k for k in units if k != 1 and k < n - k]
    return units, free


def _embed_poly(p: CycloPoly, prec: int) -> list[mpmath.mpc]:
    return [complex_embedding(c, prec) for c in reversed(p.coeffs)]


def _numeric_roots(p: CycloPoly, prec: int) -> list[mpmath.mpc]:
    coeffs = _embed_poly(p, prec)
    with mpmath.workprec(prec + 32):
        try:
            return list(mpmath.polyroots(coeffs, maxsteps=200, extraprec=prec // 2))
        except mpmath.libmp.NoConvergence:
            return []


def _reconstruct_candidates(z: mpmath.mpc, n: int, prec: int, conj_roots) -> list[CycloElement]:
    """Exact candidates for the field element approximated by z.

    ``conj_roots`` maps each free Galois representative k to the numeric
    roots of the conjugated polynomial (source of candidate values for
    sigma_k of the root).
    """
    tol = mpmath.mpf(2) ** (-(prec // 4))
    out: list[CycloElement] = []
    # rational candidate straight from the real part
    if abs(z.imag) < tol:
        out.append(CycloElement(n, [_rational_candidate(z.real, prec)]))
    phi = euler_phi(n)
    if phi == 1:
        return out
    if phi == 2:
        with mpmath.workprec(prec + 32):
            zeta = mpmath.expjpi(mpmath.mpf(2) / n)
            c1 = z.imag / zeta.imag
            c0 = z.real - c1 * zeta.real
        out.append(
            CycloElement(n, [_rational_candidate(c0, prec), _rational_candidate(c1, prec)])
        )
        return out
    units, free = _conjugate_pairs(n)
    with mpmath.workprec(prec + 32):
        vand = mpmath.matrix(
            [[mpmath.expjpi(mpmath.mpf(2 * k * i) / n) for i in range(phi)] for k in units]
        )
        vand_inv = vand**-1
        for assignment in itertools.product(*(conj_roots[k] for k in free)):
            values = {1: z}
            for k, v in zip(free, assignment):
                values[k] = v
            for k in units:
                if k not in values:
                    values[k] = mpmath.conj(values[n - k])
            rhs = mpmath.matrix([values[k] for k in units])
            coords = vand_inv * rhs
            if any(abs(coords[i].imag) > tol for i in range(phi)):
                continue
            out.append(
                CycloElement(n, [_rational_candidate(coords[i].real, prec) for i in range(phi)])
            )
    return out


def _roots_at_conductor(p: CycloPoly, n: int, precision_bits: int):
    """All exactly verified roots of p lying in Q(zeta_n), with multiplicities.

    Returns (found, remainder): the remainder is the unsplit factor.
    """
    work = p.lift(n).monic()
    found: list[tuple[CycloElement, int]] = []

    def strip(root: CycloElement) -> int:
        nonlocal work
        mult = 0
        while work.degree >= 1 and work(root).is_zero():
            work = work.deflate(root)
            mult += 1
        return mult

    prec = precision_bits
    while work.degree >= 1:
        square_free = work.divmod(work.gcd(work.derivative()))[0]
        approx = _numeric_roots(square_free, prec)
        units, free = _conjugate_pairs(n)
        conj_roots = {}
        if free and euler_phi(n) > 2:
            for k in free:
                conj = CycloPoly([galois_apply(c, k) for c in square_free.coeffs], n)
                conj_roots[k] = _numeric_roots(conj, prec)
        progressed = False
        for z in approx:
            if work.degree < 1:
                break
            for cand in _reconstruct_candidates(z, n, prec, conj_roots):
                if work.degree >= 1 and work(cand).is_zero():
                    mult = strip(cand)
                    found.append((cand, mult))
                    progressed = True
                    break
        if work.degree < 1 or (not progressed and prec >= _MAX_PRECISION):
            break
        if not progressed:
            prec = min(prec * 2, _MAX_PRECISION)
    return found, work


def roots_in_field(
    p: CycloPoly,
    precision_bits: int = 256,
    conductor: int | None = None,
    candidates: tuple[CycloElement, ...] = (),
) -> SpectrumReport:
    """Roots of ``p`` that lie in the working cyclotomic field.

    The polynomial's own conductor is tried first; if the polynomial
    does not split there, the search widens to the session working
    conductor (default 24).  Explicit exact ``candidates`` (e.g. the
    diagonal of a triangular matrix) are checked before any numerics.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("root finding needs a nonzero polynomial of degree >= 1")
    work = p.monic()
    found: list[tuple[CycloElement, int]] = []
    for cand in candidates:
        if work.degree < 1:
            break
        mult = 0
        while work.degree >= 1 and work(cand).is_zero():
            work = work.divmod(CycloPoly([-cand, 1], cand.conductor))[0]
            mult += 1
        if mult:
            found.append((cand, mult))
    if work.degree >= 1:
        session = conductor if conductor is not None else get_default_conductor()
        ladder = [work.conductor]
        widened = math.lcm(work.conductor, session)
        if widened != work.conductor:
            ladder.append(widened)
        for n in ladder:
            extra, work = _roots_at_conductor(work, n, precision_bits)
            found.extend(extra)
            if work.degree < 1:
                break
    split = work.degree < 1
    target = math.lcm(p.conductor, *(r.conductor for r, _ in found)) if found else p.conductor
    lifted = [(embed_lift(r, target), m) for r, m in found]
    lifted.sort(key=lambda rm: sort_key(rm[0]))
    return SpectrumReport(tuple(lifted), split)


def matrix_spectrum(m: ExactMatrix, precision_bits: int = 256) -> SpectrumReport:
    """Eigenvalues of a square matrix, using the diagonal as exact hints."""
    p = char_poly(m)
    diag: list[CycloElement] = []
    for i in range(m.rows):
        e = m.entries[i][i]
        if not any(e == other for other in diag):
            diag.append(e)
    return roots_in_field(p, precision_bits, candidates=tuple(diag))


def generalized_eigenspaces(
    m: ExactMatrix, precision_bits: int = 256
) -> list[tuple[CycloElement, Subspace]]:
    """Pairs (eigenvalue, kernel of (M - lambda I)^mult), canonically ordered."""
    report = matrix_spectrum(m, precision_bits)
    if not report.split:
        raise SpectrumNotInField(
            "characteristic polynomial does not split over the working field"
        )
    out = []
    for lam, mult in report.roots:
        shifted = m.lift(math.lcm(m.conductor, lam.conductor))
        n_mat = shifted - lam * ExactMatrix.identity(m.rows, lam.conductor)
        space = kernel(n_mat.power(mult))
        assert space.dim == mult, "generalized eigenspace dimension mismatch"
        out.append((lam, space))
    return out


class _RowReducer:
    """Incremental rank tracker over the field (rows kept in echelon form)."""

    def __init__(self, width: int, conductor: int):
        self.width = width
        self.conductor = conductor
        self.rows: list[list[CycloElement]] = []
        self.pivots: list[int] = []

    def add(self, vector) -> bool:
        """Reduce ``vector`` against the stored rows; keep it if independent."""
        v = [embed_lift(e, self.conductor) if e.conductor != self.conductor else e for e in vector]
        for row, piv in zip(self.rows, self.pivots):
            if not v[piv].is_zero():
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        piv = next((i for i, e in enumerate(v) if not e.is_zero()), None)
        if piv is None:
            return False
        inv = v[piv].inverse()
        self.rows.append([e * inv for e in v])
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def jordan_form(m: ExactMatrix, precision_bits: int = 256) -> JordanData:
    """Exact Jordan decomposition with deterministic block ordering.

    Eigenvalues are ordered lexicographically by coefficient vector and
    blocks by descending size, so equal inputs give identical output.
    """
    if not m.is_square():
        raise ValueError("Jordan form of a non-square matrix")
    spectrum = matrix_spectrum(m, precision_bits)
    if not spectrum.split:
        raise SpectrumNotInField(
            "characteristic polynomial does not split over the working field"
        )
    conductor = math.lcm(m.conductor, *(r.conductor for r, _ in spectrum.roots))
    mat = m.lift(conductor)
    n = mat.rows
    ident = ExactMatrix.identity(n, conductor)
    columns: list[tuple[CycloElement, ...]] = []
    structure = []
    diag_blocks: list[ExactMatrix] = []
    for lam, mult in spectrum.roots:
        lam = embed_lift(lam, conductor)
        nilp = mat - lam * ident
        powers = [ident]
        kernels: list[Subspace] = []
        while True:
            powers.append(powers[-1] @ nilp)
            kernels.append(kernel(powers[-1]))
            if kernels[-1].dim == mult:
                break
        depth = len(kernels)
        tops: list[tuple[tuple[CycloElement, ...], int]] = []
        sizes = []
        for level in range(depth, 0, -1):
            reducer = _RowReducer(n, conductor)
            if level > 1:
                for v in kernels[level - 2].basis:
                    reducer.add(v)
            for vec, top_level in tops:  # images of higher chains at this level
                reducer.add(powers[top_level - level].matvec(vec))
            for v in kernels[level - 1].basis:
                if reducer.add(v):
                    tops.append((v, level))
                    sizes.append(level)
        block_sizes = tuple(sorted(sizes, reverse=True))
        for vec, top_level in sorted(tops, key=lambda t: -t[1]):
            chain = [powers[j].matvec(vec) for j in range(top_level - 1, -1, -1)]
            columns.extend(chain)
            block = [
                [
                    lam if i == j else (from_rational(1, conductor) if j == i + 1 else from_rational(0, conductor))
                    for j in range(top_level)
                ]
                for i in range(top_level)
            ]
            diag_blocks.append(ExactMatrix(block, conductor))
        structure.append((lam, block_sizes))
    p_mat = ExactMatrix.from_columns(columns, conductor)
    j_mat = ExactMatrix.block_diagonal(diag_blocks)
    p_inv = inverse(p_mat)
    assert (p_inv @ mat @ p_mat) == j_mat, "Jordan witness failed to verify"
    return JordanData(J=j_mat, P=p_mat, P_inv=p_inv, block_structure=tuple(structure))


def jordan_type(m: ExactMatrix, precision_bits: int = 256):
    """Multiset signature of the Jordan structure: sorted block-size tuples
    per eigenvalue, with the eigenvalues themselves."""
    data = jordan_form(m, precision_bits)
    return [(lam, sizes) for lam, sizes in data.block_structure]
