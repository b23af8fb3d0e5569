import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from hyperasym.cyclo import (CycloNumber, cos_pi, cyclotomic_polynomial,
                             e2pi_cyclo, format_rational, parse_rational,
                             root_of_unity_log, root_of_unity_order, sin_pi)
from hyperasym.numerics import embed_cyclo


CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 12]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def cyclos(draw):
    n = draw(st.sampled_from(CONDUCTORS))
    deg = len(cyclotomic_polynomial(n)) - 1
    coeffs = draw(st.lists(rationals, min_size=deg, max_size=deg))
    return CycloNumber(n, coeffs)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zeta_orders():
    for n in (2, 3, 4, 5, 8, 12):
        z = CycloNumber.zeta(n)
        acc = CycloNumber.from_rational(1)
        for _ in range(n):
            acc = acc * z
        assert acc == CycloNumber.from_rational(1)
        assert root_of_unity_order(z) == n
        assert root_of_unity_log(z) == Fraction(1, n)


@given(cyclos(), cyclos(), cyclos())
@settings(max_examples=60, deadline=None)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + CycloNumber.from_rational(0) == x
    assert x * CycloNumber.from_rational(1) == x
    assert x - x == CycloNumber.from_rational(0)


@given(cyclos())
@settings(max_examples=40, deadline=None)
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == CycloNumber.from_rational(1)


@given(cyclos(), cyclos())
@settings(max_examples=40, deadline=None)
def test_embedding_homomorphism(x, y):
    P = 50
    tol = mpmath.mpf(10) ** (4 - P)
    with mpmath.mp.workdps(P + 10):
        ex, ey = embed_cyclo(x, P).value, embed_cyclo(y, P).value
        assert abs(embed_cyclo(x + y, P).value - (ex + ey)) <= tol * (1 + abs(ex) + abs(ey))
        assert abs(embed_cyclo(x * y, P).value - ex * ey) <= tol * (1 + abs(ex) * abs(ey))


@given(cyclos())
@settings(max_examples=40, deadline=None)
def test_literal_roundtrip(x):
    assert CycloNumber.parse(x.literal()) == x


def test_sin_cos_pi():
    with mpmath.mp.workdps(60):
        for r in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6), Fraction(2, 5),
                  Fraction(5, 7), Fraction(1, 12)):
            sv = embed_cyclo(sin_pi(r), 50).value
            cv = embed_cyclo(cos_pi(r), 50).value
            assert abs(sv - mpmath.sinpi(r)) < mpmath.mpf(10) ** -45
            assert abs(cv - mpmath.cospi(r)) < mpmath.mpf(10) ** -45


def test_e2pi_cyclo():
    assert e2pi_cyclo(Fraction(1, 2)) == CycloNumber.from_rational(-1)
    assert e2pi_cyclo(Fraction(0)) == CycloNumber.from_rational(1)
    assert e2pi_cyclo(Fraction(5, 4)) == CycloNumber.zeta(4)
    assert e2pi_cyclo(Fraction(-1, 4)) == CycloNumber.zeta(4, 3)


@given(rationals)
@settings(max_examples=30, deadline=None)
def test_rational_format_roundtrip(q):
    assert parse_rational(format_rational(q)) == q
