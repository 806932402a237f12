"""Catalog of the classified B3 representation families.

Families are keyed by stable string ids:

* ``TW2``, ``TW3``: the triangular canonical forms of the irreducible
  representations in dimensions 2 and 3;
* ``D2_1``, ``D2_2``: the strictly indecomposable classes in dimension 2;
* ``W1_*``: dimension 3 with a one-dimensional minimal common invariant
  subspace (ids mirror the case numbering of the classification:
  ``W1_1_1`` .. ``W1_1_4``, ``W1_2``, ``W1_3_1``, ``W1_3_2``,
  ``W1_4_1``, ``W1_4_2``, ``W1_5``);
* ``W2_1``, ``W2_2``, ``W2_3``: dimension 3 with a two-dimensional
  minimal common invariant subspace.  These come with two displayed
  presentations each (``first`` and ``alternate``), which are
  equivalent representations.

Root-of-unity constraints are held as exact polynomial relations
(x^2 - xy + y^2 = 0 encodes y = x e^{+-i pi/3}, x^2 + y^2 = 0 encodes
y = x e^{+-i pi/2}); the sign branch is recovered from the parameter
values rather than trusted from the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import ConstraintViolated, UnknownFamily, ZeroEigenvalue
from .field import CycloElement, embed_lift, from_rational, root_of_unity
from .linalg import ExactMatrix
from .rep import B3Rep, make_rep

ParamValue = Union[int, Fraction, CycloElement]

PLUS = "+"
MINUS = "-"


def _elem(value: ParamValue) -> CycloElement:
    if isinstance(value, CycloElement):
        return value
    return CycloElement(1, [Fraction(value)])


def _unify(params: dict[str, CycloElement], extra_conductor: int = 1) -> dict[str, CycloElement]:
    n = extra_conductor
    for v in params.values():
        n = math.lcm(n, v.conductor)
    return {k: embed_lift(v, n) for k, v in params.items()}


def _zeta6(sign: str, conductor: int = 6) -> CycloElement:
    return embed_lift(root_of_unity(6, 1 if sign == PLUS else 5), conductor)


def _zeta4(sign: str, conductor: int = 4) -> CycloElement:
    return embed_lift(root_of_unity(4, 1 if sign == PLUS else 3), conductor)


def _rel_pi3(x: CycloElement, y: CycloElement) -> CycloElement:
    """Zero iff y = x e^{+- i pi/3} (given x, y nonzero)."""
    return x * x - x * y + y * y


def _rel_pi2(x: CycloElement, y: CycloElement) -> CycloElement:
    """Zero iff y = x e^{+- i pi/2}."""
    return x * x + y * y


def remark_polynomial(l1: CycloElement, l2: CycloElement, l3: CycloElement) -> CycloElement:
    """(l1^2 + l2 l3)(l2^2 + l1 l3)(l3^2 + l1 l2): nonzero is necessary for a
    3-dimensional irreducible with this spectrum."""
    return (l1 * l1 + l2 * l3) * (l2 * l2 + l1 * l3) * (l3 * l3 + l1 * l2)


@dataclass(frozen=True)
class FamilySpec:
    """Static description of one family."""

    family: str
    dim: int
    eigen_params: tuple[str, ...]  # eigenvalue-valued parameters
    anchor: str  # the parameter others are derived from
    extra_params: tuple[str, ...] = ()
    has_sign: bool = False
    presentations: tuple[str, ...] = ("first",)


@dataclass
class FamilyInstance:
    """A family id with fully resolved parameters."""

    family: str
    params: dict[str, CycloElement]
    sign: str | None = None
    presentation: str = "first"

    def param(self, name: str) -> CycloElement:
        return self.params[name]

    def __eq__(self, other):
        if not isinstance(other, FamilyInstance):
            return NotImplemented
        return (
            self.family == other.family
            and self.presentation == other.presentation
            and set(self.params) == set(other.params)
            and all(self.params[k] == other.params[k] for k in self.params)
        )


FAMILY_SPECS: dict[str, FamilySpec] = {
    s.family: s
    for s in [
        FamilySpec("TW2", 2, ("l1", "l2"), "l1"),
        FamilySpec("TW3", 3, ("l1", "l2", "l3"), "l1"),
        FamilySpec("D2_1", 2, ("l1", "l2"), "l1", has_sign=True),
        FamilySpec("D2_2", 2, ("l1",), "l1"),
        FamilySpec("W1_1_1", 3, ("l1", "l2", "l3"), "l1", has_sign=True),
        FamilySpec("W1_1_2", 3, ("l1", "l2", "l3"), "l3", has_sign=True),
        FamilySpec("W1_1_3", 3, ("l1", "l2", "l3"), "l2", has_sign=True),
        FamilySpec("W1_1_4", 3, ("l1", "l2", "l3"), "l1"),
        FamilySpec("W1_2", 3, ("l1", "l2"), "l2", has_sign=True),
        FamilySpec("W1_3_1", 3, ("l1", "l2"), "l2", has_sign=True),
        FamilySpec("W1_3_2", 3, ("l1", "l2"), "l1", has_sign=True),
        FamilySpec("W1_4_1", 3, ("l1", "l2"), "l2", extra_params=("beta",), has_sign=True),
        FamilySpec("W1_4_2", 3, ("l1", "l2"), "l2"),
        FamilySpec("W1_5", 3, ("l1",), "l1"),
        FamilySpec("W2_1", 3, ("l1", "l2", "l3"), "l2", presentations=("first", "alternate")),
        FamilySpec("W2_2", 3, ("l1", "l2"), "l2", has_sign=True, presentations=("first", "alternate")),
        FamilySpec("W2_3", 3, ("l1", "l2"), "l2", presentations=("first", "alternate")),
    ]
}

STRICT_FAMILIES = tuple(f for f in FAMILY_SPECS if not f.startswith("TW"))


def family_ids() -> list[str]:
    return list(FAMILY_SPECS)


def _spec(family: str) -> FamilySpec:
    try:
        return FAMILY_SPECS[family]
    except KeyError:
        raise UnknownFamily(f"unknown family id {family!r}") from None


# -- parameter resolution ----------------------------------------------------


def _derive(family: str, params: dict[str, CycloElement], sign: str) -> dict[str, CycloElement]:
    """Fill in derivable eigenvalues; missing underivable ones stay absent."""
    p = dict(params)

    def have(*names):
        return all(n in p for n in names)

    other_sign = MINUS if sign == PLUS else PLUS
    if family in ("D2_1",):
        if have("l1") and not have("l2"):
            p = _unify(p, 6)
            p["l2"] = p["l1"] * _zeta6(sign, p["l1"].conductor)
    elif family == "W1_1_1":
        if have("l1") and not have("l2") and not have("l3"):
            p = _unify(p, 6)
            p["l2"] = p["l1"] * _zeta6(sign, p["l1"].conductor)
            p["l3"] = p["l1"] * _zeta6(other_sign, p["l1"].conductor)
    elif family == "W1_1_2":
        if have("l3") and not have("l1") and not have("l2"):
            p = _unify(p, 6)
            p["l1"] = p["l3"] * _zeta6(sign, p["l3"].conductor)
            p["l2"] = p["l3"] * _zeta6(other_sign, p["l3"].conductor)
    elif family == "W1_1_3":
        if have("l2") and not have("l1") and not have("l3"):
            p = _unify(p, 6)
            p["l1"] = p["l2"] * _zeta6(sign, p["l2"].conductor)
            p["l3"] = p["l2"] * _zeta6(other_sign, p["l2"].conductor)
    elif family == "W1_1_4":
        if have("l1", "l2") and not p["l2"].is_zero() and not p["l1"].is_zero():
            p = _unify(p)
            p.setdefault("l3", -(p["l1"] * p["l1"]) / p["l2"])
    elif family in ("W1_2", "W1_3_1", "W1_4_1"):
        if have("l2") and not have("l1"):
            p = _unify(p, 6)
            p["l1"] = p["l2"] * _zeta6(sign, p["l2"].conductor)
    elif family == "W1_3_2":
        if have("l1") and not have("l2"):
            p = _unify(p, 4)
            p["l2"] = p["l1"] * _zeta4(sign, p["l1"].conductor)
    elif family == "W2_2":
        if have("l2") and not have("l1"):
            p = _unify(p, 4)
            p["l1"] = p["l2"] * _zeta4(sign, p["l2"].conductor)
    elif family in ("W1_4_2", "W2_3"):
        if have("l2") and not have("l1"):
            p["l1"] = -p["l2"]
        elif have("l1") and not have("l2"):
            p["l2"] = -p["l1"]
    elif family == "W2_1":
        if have("l2", "l3") and not have("l1") and not p["l2"].is_zero():
            p = _unify(p)
            p["l1"] = -(p["l3"] * p["l3"]) / p["l2"]
    if family == "W1_4_1":
        p.setdefault("beta", from_rational(0))
    return _unify(p)


def _recover_sign(family: str, p: dict[str, CycloElement]) -> str | None:
    ratios = {
        "D2_1": ("l2", "l1", 6),
        "W1_1_1": ("l2", "l1", 6),
        "W1_1_2": ("l1", "l3", 6),
        "W1_1_3": ("l1", "l2", 6),
        "W1_2": ("l1", "l2", 6),
        "W1_3_1": ("l1", "l2", 6),
        "W1_4_1": ("l1", "l2", 6),
        "W1_3_2": ("l2", "l1", 4),
        "W2_2": ("l1", "l2", 4),
    }
    if family not in ratios:
        return None
    num, den, order = ratios[family]
    if num not in p or den not in p or p[den].is_zero():
        return None
    ratio = p[num] / p[den]
    if ratio == root_of_unity(order, 1):
        return PLUS
    if ratio == root_of_unity(order, -1):
        return MINUS
    return None


def resolve_instance(
    family: str,
    params: Mapping[str, ParamValue],
    sign: str = PLUS,
    presentation: str = "first",
) -> FamilyInstance:
    """Derive missing parameters and package an instance (no validation)."""
    spec = _spec(family)
    if presentation not in spec.presentations:
        raise UnknownFamily(f"family {family} has no presentation {presentation!r}")
    lifted = {k: _elem(v) for k, v in params.items()}
    full = _derive(family, lifted, sign)
    return FamilyInstance(
        family=family,
        params=full,
        sign=_recover_sign(family, full),
        presentation=presentation,
    )


# -- validation ---------------------------------------------------------------


def _violations(instance: FamilyInstance) -> list[str]:
    fam = instance.family
    spec = _spec(fam)
    p = instance.params
    out: list[str] = []
    for name in spec.eigen_params:
        if name not in p:
            out.append(f"missing parameter {name}")
    if out:
        return out
    for name in spec.eigen_params:
        if p[name].is_zero():
            out.append(f"{name} must be nonzero")
    if out:
        return out
    l1 = p.get("l1")
    l2 = p.get("l2")
    l3 = p.get("l3")

    def distinct(a_name, b_name):
        if p[a_name] == p[b_name]:
            out.append(f"{a_name} and {b_name} must differ")

    def require_zero(value: CycloElement, text: str):
        if not value.is_zero():
            out.append(text)

    def require_nonzero(value: CycloElement, text: str):
        if value.is_zero():
            out.append(text)

    if fam in ("TW2", "TW3", "D2_2", "W1_5"):
        pass
    elif fam == "D2_1":
        distinct("l1", "l2")
        require_zero(_rel_pi3(l1, l2), "need l2 = l1 * e^{+-i pi/3} (l1^2 - l1 l2 + l2^2 = 0)")
    elif fam == "W1_1_1":
        distinct("l2", "l3")
        require_zero(_rel_pi3(l1, l2), "need l2 = l1 * e^{+-i pi/3}")
        require_zero(_rel_pi3(l1, l3), "need l3 = l1 * e^{-+i pi/3}")
    elif fam == "W1_1_2":
        distinct("l1", "l2")
        require_zero(_rel_pi3(l3, l1), "need l1 = l3 * e^{+-i pi/3}")
        require_zero(_rel_pi3(l3, l2), "need l2 = l3 * e^{-+i pi/3}")
    elif fam == "W1_1_3":
        distinct("l1", "l3")
        require_zero(_rel_pi3(l2, l1), "need l1 = l2 * e^{+-i pi/3}")
        require_zero(_rel_pi3(l2, l3), "need l3 = l2 * e^{-+i pi/3}")
    elif fam == "W1_1_4":
        require_nonzero(l1 * l1 + l2 * l2, "displayed denominator l1^2 + l2^2 vanishes")
        if not out:
            expected = -(l1 * l1) / l2
            if l3 != expected:
                out.append("l3 must equal -l1^2 / l2")
            distinct("l1", "l2")
            distinct("l1", "l3")
            distinct("l2", "l3")
    elif fam in ("W1_2", "W1_3_1", "W1_4_1"):
        require_zero(_rel_pi3(l2, l1), "need l1 = l2 * e^{+-i pi/3}")
    elif fam == "W1_3_2":
        require_zero(_rel_pi2(l1, l2), "need l2 = l1 * e^{+-i pi/2} (l1^2 + l2^2 = 0)")
    elif fam == "W1_4_2":
        require_zero(l1 + l2, "need l1 = -l2")
    elif fam == "W2_1":
        require_nonzero(l2 * l2 + l3 * l3, "displayed denominator l2^2 + l3^2 vanishes")
        if not out:
            expected = -(l3 * l3) / l2
            if l1 != expected:
                out.append("l1 must equal -l3^2 / l2")
            require_nonzero(_rel_pi3(l1, l2), "need l1^2 - l1 l2 + l2^2 != 0")
            distinct("l1", "l2")
            distinct("l1", "l3")
            distinct("l2", "l3")
    elif fam == "W2_2":
        require_zero(_rel_pi2(l2, l1), "need l1 = l2 * e^{+-i pi/2}")
    elif fam == "W2_3":
        require_zero(l1 + l2, "need l1 = -l2")
    return out


def validate_params(
    family: str, params: Mapping[str, ParamValue], sign: str = PLUS
) -> list[str]:
    """Constraint violations for the (derived) parameter set; empty = valid."""
    instance = resolve_instance(family, params, sign)
    return _violations(instance)


# -- matrix builders -----------------------------------------------------------


def _build_matrices(instance: FamilyInstance) -> tuple[list[list], list[list]]:
    fam = instance.family
    p = instance.params
    l1 = p.get("l1")
    l2 = p.get("l2")
    l3 = p.get("l3")
    if fam == "TW2":
        a = [[l1, l1], [0, l2]]
        b = [[l2, 0], [-l2, l1]]
    elif fam == "TW3":
        t = l1 * l3 / l2
        a = [[l1, t + l2, l2], [0, l2, l2], [0, 0, l3]]
        b = [[l3, 0, 0], [-l2, l2, 0], [l2, -t - l2, l1]]
    elif fam == "D2_1":
        a = [[l1, 0], [0, l2]]
        b = [[l1, 1], [0, l2]]
    elif fam == "D2_2":
        a = [[l1, 1], [0, l1]]
        b = a
    elif fam == "W1_1_1":
        a = _diag3(l1, l2, l3)
        b = [[l1, 1, 1], [0, l2, 0], [0, 0, l3]]
    elif fam == "W1_1_2":
        a = _diag3(l1, l2, l3)
        b = [[l1, 0, 1], [0, l2, 1], [0, 0, l3]]
    elif fam == "W1_1_3":
        a = _diag3(l1, l2, l3)
        b = [[l1, 1, 1], [0, l2, 2 * l2], [0, 0, l3]]
    elif fam == "W1_1_4":
        q = l1 * l1 + l2 * l2
        a = _diag3(l1, l2, l3)
        b = [
            [l1, 1, -(l2 * l2) * _rel_pi3(l1, l2) / (l1 * q)],
            [0, -(l1 ** 4) / (l2 * q), l1 * l1 * (l1 ** 4 + l1 * l1 * l2 * l2 + l2 ** 4) / (q * q)],
            [0, 1, l2 ** 3 / q],
        ]
    elif fam == "W1_2":
        d = l1 - l2
        a = _diag3(l1, l1, l2)
        b = [
            [l1, 1, l1 * l2 / d],
            [0, (l2 * l2) / (l2 - l1), 0],
            [0, 1, l1 * l1 / d],
        ]
    elif fam == "W1_3_1":
        a = [[l1, 0, 0], [0, l2, 1], [0, 0, l2]]
        b = [[l1, 0, 1], [0, l2, 1], [0, 0, l2]]
    elif fam == "W1_3_2":
        a = [[l1, 0, 0], [0, l2, 1], [0, 0, l2]]
        b = [[l1, 1, (l1 + l2) / (l1 * l1)], [0, l2, 0], [0, l1 * l1, l2]]
    elif fam == "W1_4_1":
        beta = p["beta"]
        a = [[l1, 1, 0], [0, l1, 0], [0, 0, l2]]
        b = [[l1, 1 + l1 * beta / (l2 * l2), 1], [0, l1, 0], [0, beta, l2]]
    elif fam == "W1_4_2":
        a = [[l1, 1, 0], [0, l1, 0], [0, 0, l2]]
        b = [
            [l1, -2, 0],
            [0, l2 / 2, 1],
            [0, 3 * l2 * l2 / 4, -l2 / 2],
        ]
    elif fam == "W1_5":
        a = [[l1, 1, 0], [0, l1, 1], [0, 0, l1]]
        b = a
    elif fam == "W2_1":
        q = l2 * l2 + l3 * l3
        if instance.presentation == "first":
            a = _diag3(l1, l2, l3)
            b = [
                [l2 ** 3 / q, 1, 1],
                [
                    l3 * l3 * (l2 ** 4 + l2 * l2 * l3 * l3 + l3 ** 4) / (q * q),
                    -(l3 ** 4) / (l2 * q),
                    -(l3 ** 3) * (l2 * l2 + l2 * l3 + l3 * l3) / (l2 * l2 * q),
                ],
                [0, 0, l3],
            ]
        else:
            a = [[l2, l2, 0], [0, l1, 0], [0, 0, l3]]
            b = [
                [l1, 0, (l3 * l3 - (l1 - l2) * l3 + l2 * l2) / q],
                [-l1, l2, -1],
                [0, 0, l3],
            ]
    elif fam == "W2_2":
        if instance.presentation == "first":
            a = [[l1, 1, 0], [0, l1, 0], [0, 0, l2]]
            b = [[2 * l1, 1, (2 * l1 + l2) / (l2 * l2)], [l2 * l2, 0, 1], [0, 0, l2]]
        else:
            a = [[l1, l1, 0], [0, l1, 0], [0, 0, l2]]
            b = [
                [l1, 0, 1 + l1 / l2],
                [-l1, l1, l2 / l1],
                [0, 0, l2],
            ]
    elif fam == "W2_3":
        if instance.presentation == "first":
            a = [[l1, 0, 0], [0, l2, 1], [0, 0, l2]]
            b = [
                [l2 / 2, 1, 0],
                [3 * l2 * l2 / 4, -l2 / 2, -2],
                [0, 0, l2],
            ]
        else:
            a = [[l1, l1, 1], [0, l2, -2], [0, 0, l2]]
            b = [[l2, 0, -2], [-l2, l1, 4], [0, 0, l2]]
    else:  # pragma: no cover - the registry and builders are kept in sync
        raise UnknownFamily(fam)
    return a, b


def _diag3(x, y, z):
    return [[x, 0, 0], [0, y, 0], [0, 0, z]]


def construct(
    family_or_instance: Union[str, FamilyInstance],
    params: Mapping[str, ParamValue] | None = None,
    sign: str = PLUS,
    presentation: str = "first",
) -> B3Rep:
    """Build the displayed (A, B) pair of a family instance.

    Parameters are validated first; the braid relation is then verified
    exactly on the constructed matrices, so a violation here means a
    transcription bug rather than bad input.
    """
    if isinstance(family_or_instance, FamilyInstance):
        instance = family_or_instance
    else:
        instance = resolve_instance(family_or_instance, params or {}, sign, presentation)
    problems = _violations(instance)
    if problems:
        raise ConstraintViolated(problems)
    a_rows, b_rows = _build_matrices(instance)
    return make_rep(ExactMatrix(a_rows), ExactMatrix(b_rows))


def spectrum_triple(instance: FamilyInstance) -> tuple[CycloElement, ...]:
    """Eigenvalues of the instance's A with multiplicity (diagonal read-off;
    every displayed A is triangular)."""
    a_rows, _ = _build_matrices(instance)
    mat = ExactMatrix(a_rows)
    return tuple(mat.entries[i][i] for i in range(mat.rows))


def tuba_wenzl(d: int, lambdas: Sequence[ParamValue]) -> tuple[B3Rep, bool]:
    """Triangular canonical pair in dimension d (2 or 3) plus its
    irreducibility flag (the non-vanishing criterion on the eigenvalues)."""
    if d not in (2, 3):
        raise ValueError("only dimensions 2 and 3 are catalogued")
    values = [_elem(v) for v in lambdas]
    if len(values) != d:
        raise ValueError(f"need {d} eigenvalues, got {len(values)}")
    if any(v.is_zero() for v in values):
        raise ZeroEigenvalue("Tuba-Wenzl eigenvalues must be nonzero")
    names = _unify({f"l{i + 1}": v for i, v in enumerate(values)})
    if d == 2:
        rep = construct(FamilyInstance("TW2", names))
        flag = not _rel_pi3(names["l1"], names["l2"]).is_zero()
    else:
        rep = construct(FamilyInstance("TW3", names))
        flag = not remark_polynomial(names["l1"], names["l2"], names["l3"]).is_zero()
    return rep, flag
