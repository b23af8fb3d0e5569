from fractions import Fraction

import mpmath
import pytest
from mpmath import mp

from hyperasym.continuation import (compute_Mp, continuation_value,
                                    distinct_case_formula)
from hyperasym.exact import HyperParams
from hyperasym.hring import h_normalize
from hyperasym.series import annihilation_failures


def test_log_closed_form():
    params = HyperParams((Fraction(1), Fraction(1)), (Fraction(2),))
    exp = compute_Mp(params, 30)
    with mp.workdps(50):
        for z in (-4, -10):
            v = continuation_value(exp, z, 40).value
            ref = -mpmath.log(1 - mpmath.mpf(z)) / z
            assert abs(v - ref) / abs(ref) < 1e-15
    assert annihilation_failures(params, exp, sign=-1) == []


def test_binomial_closed_form():
    params = HyperParams((Fraction(1, 2),), ())
    exp = compute_Mp(params, 30)
    with mp.workdps(50):
        for z in (-4, -25):
            v = continuation_value(exp, z, 40).value
            ref = (1 - mpmath.mpf(z)) ** mpmath.mpf("-0.5")
            assert abs(v - ref) / abs(ref) < 1e-14
    assert annihilation_failures(params, exp, sign=-1) == []


def test_distinct_case_matches_residue_engine():
    params = HyperParams((Fraction(1, 3), Fraction(1, 2)), (Fraction(3, 4),))
    md = compute_Mp(params, 8)
    dd = distinct_case_formula(params, 8)
    assert set(md.terms) == set(dd.terms)
    for key in md.terms:
        lhs = h_normalize(md.prefactor * md.terms[key])
        rhs = h_normalize(dd.terms[key])
        assert lhs == rhs, key


def test_distinct_case_rejects_repeats():
    params = HyperParams((Fraction(1, 3), Fraction(4, 3)), (Fraction(3, 4),))
    with pytest.raises(ValueError):
        distinct_case_formula(params, 6)


def test_rejects_wrong_shape():
    with pytest.raises(ValueError):
        compute_Mp(HyperParams((Fraction(1, 2),), (Fraction(1, 3),)), 6)
    with pytest.raises(ValueError):
        compute_Mp(HyperParams((Fraction(-2), Fraction(1)), ()), 6)


def test_log_pole_structure():
    # doubled upper parameter mod Z gives a log(-z) term
    params = HyperParams((Fraction(1), Fraction(1)), (Fraction(2),))
    exp = compute_Mp(params, 6)
    assert any(i >= 1 for (_, _, i) in exp.terms)
