"""Tests for exact cyclotomic arithmetic."""

from fractions import Fraction

import mpmath
import pytest

from braidrep.errors import ConductorMismatch, DivisionByZero, InvalidConductor, NotInSubfield
from braidrep.field import (
    CycloElement,
    complex_enclosure,
    cyclo_new,
    cyclo_op,
    cyclotomic_polynomial,
    embed_lift,
    euler_phi,
    from_rational,
    galois_apply,
    root_of_unity,
    unify,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(24) == (1, 0, 0, 0, -1, 0, 0, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12, 24])
def test_root_of_unity_satisfies_minimal_polynomial(n):
    z = root_of_unity(n, 1)
    value = from_rational(0, n)
    for i, c in enumerate(cyclotomic_polynomial(n)):
        value = value + c * z**i
    assert value.is_zero()


def test_cyclo_new_examples():
    assert cyclo_new(6, [1]) == 1
    # zeta_6^2 reduces to zeta_6 - 1  (division by Phi_6 = x^2 - x + 1)
    assert cyclo_new(6, [0, 0, 1]).coeffs == (Fraction(-1), Fraction(1))
    assert cyclo_new(12, []).is_zero()
    with pytest.raises(InvalidConductor):
        cyclo_new(0, [1])


def test_field_op_examples():
    z6 = root_of_unity(6, 1)
    assert cyclo_op("mul", z6, root_of_unity(6, 5)) == 1
    # the d=2 eigenvalue constraint at (1, zeta_6): 1 - z + z^2 = 0
    assert (1 - z6 + z6 * z6).is_zero()
    # extended-gcd inversion
    assert cyclo_op("div", from_rational(1, 6), z6) == root_of_unity(6, 5)
    with pytest.raises(DivisionByZero):
        cyclo_op("div", z6, from_rational(0, 6))
    with pytest.raises(ConductorMismatch):
        cyclo_op("add", z6, root_of_unity(4, 1))


def test_root_of_unity_examples():
    z6 = root_of_unity(6, 1)
    assert (z6 * z6 - z6 + 1).is_zero()
    assert root_of_unity(4, 1) ** 2 == -1
    assert root_of_unity(24, 0) == 1
    assert root_of_unity(6, -1) == root_of_unity(6, 5)


def test_embed_lift_examples():
    z6 = root_of_unity(6, 1)
    assert embed_lift(z6, 24) == root_of_unity(24, 4)
    assert embed_lift(from_rational(1), 24) == 1
    with pytest.raises(NotInSubfield):
        embed_lift(root_of_unity(24, 1), 6)
    # lowering a lifted element round-trips, including across non-divisible
    # conductors whose fields agree (Q(zeta_3) = Q(zeta_6))
    assert embed_lift(embed_lift(z6, 24), 6) == z6
    assert embed_lift(z6, 3) == root_of_unity(3, 1) + 1


def test_sqrt_two_lives_at_conductor_24():
    z24 = root_of_unity(24, 1)
    sqrt2 = z24**3 + z24**21
    assert sqrt2 * sqrt2 == 2


def test_field_axioms_on_samples():
    z24 = root_of_unity(24, 1)
    samples = [
        from_rational(Fraction(3, 2), 24),
        z24,
        z24**5 - 2,
        1 + z24**3 + z24**7,
        from_rational(-1, 24),
    ]
    for x in samples:
        for y in samples:
            assert x * y == y * x
            for z in samples:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z
            if not y.is_zero():
                assert (x * y) / y == x


def test_embed_lift_is_field_homomorphism():
    z6 = root_of_unity(6, 1)
    pairs = [(z6, z6**2 - 3), (1 + z6, z6 / 2), (from_rational(5, 6), z6)]
    for x, y in pairs:
        assert embed_lift(x * y, 24) == embed_lift(x, 24) * embed_lift(y, 24)
        assert embed_lift(x + y, 24) == embed_lift(x, 24) + embed_lift(y, 24)


def test_inverse_round_trip():
    z24 = root_of_unity(24, 1)
    for x in [z24, 1 + z24, z24**5 - Fraction(1, 3), z24**2 + z24**6 - 4]:
        assert (x * x.inverse()).is_one()
        assert (x.inverse().inverse()) == x


def test_galois_apply():
    z24 = root_of_unity(24, 1)
    x = 2 + 3 * z24 - z24**5
    for k in (5, 7, 11, 13, 23):
        gx = galois_apply(x, k)
        # automorphisms are multiplicative
        assert galois_apply(x * x, k) == gx * gx
    assert galois_apply(z24, 23) == z24**23


def test_unify():
    a, b = unify(root_of_unity(6, 1), root_of_unity(4, 1))
    assert a.conductor == b.conductor == 12


def test_complex_enclosure_zeta6():
    enc = complex_enclosure(root_of_unity(6, 1), 64)
    assert abs(enc.real - mpmath.mpf(1) / 2) < mpmath.mpf(2) ** -52
    assert abs(enc.imag - mpmath.sqrt(3) / 2) < mpmath.mpf(2) ** -52
    assert enc.radius <= mpmath.mpf(2) ** -50


def test_complex_enclosure_exact_cases():
    one = complex_enclosure(from_rational(1, 24), 64)
    assert one.real == 1 and one.imag == 0 and one.radius == 0
    zero = complex_enclosure(from_rational(0, 6), 64)
    assert zero.real == 0 and zero.radius == 0


def test_enclosure_of_nonzero_excludes_zero():
    x = root_of_unity(24, 1) - root_of_unity(24, 7) + Fraction(1, 7)
    enc = complex_enclosure(x, 128)
    assert not enc.contains_zero()


def test_rationals_canonical():
    x = from_rational(Fraction(4, -6), 6)
    assert x.as_rational() == Fraction(-2, 3)
    assert x.as_rational().denominator > 0
