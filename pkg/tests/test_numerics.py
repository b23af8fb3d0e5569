from fractions import Fraction

import mpmath
import pytest
from mpmath import mp

from hyperasym.exact import HyperParams
from hyperasym.numerics import (BigComplex, PrecisionError, n_euler_gamma,
                                n_gamma, n_hurwitz, n_pFq, n_polylog,
                                n_polylog_root_of_unity, n_psi_k)


def close(x, y, P):
    with mp.workdps(P + 10):
        return abs(x - y) <= mpmath.mpf(10) ** (4 - P) * max(1, abs(y))


def test_gamma_values():
    with mp.workdps(50):
        assert close(n_gamma(Fraction(1, 2), 40).value,
                     mpmath.sqrt(mpmath.pi), 40)
    with pytest.raises(ValueError):
        n_gamma(Fraction(-3), 40)


def test_hurwitz_against_mpmath():
    with mp.workdps(60):
        for s in (2, 3, 5):
            for r in (Fraction(1, 3), Fraction(5, 2), Fraction(1, 7)):
                ref = mpmath.zeta(s, mpmath.mpf(r.numerator) / r.denominator)
                assert close(n_hurwitz(s, r, 50).value, ref, 50)


def test_psi_against_mpmath():
    with mp.workdps(60):
        for k in (0, 1, 2):
            for r in (Fraction(1, 3), Fraction(5, 7), Fraction(3, 2)):
                ref = mpmath.psi(k, mpmath.mpf(r.numerator) / r.denominator)
                assert close(n_psi_k(k, r, 50).value, ref, 50)


def test_euler_gamma():
    with mp.workdps(60):
        assert close(n_euler_gamma(50).value, mpmath.euler, 50)


def test_polylog_two_paths_agree():
    # direct/analytic summation against the Hurwitz transform route
    with mp.workdps(60):
        for s in (2, 3):
            for p, q in ((1, 3), (2, 5), (1, 4)):
                a = n_polylog(s, mpmath.exp(2j * mpmath.pi * p / q), 45).value
                b = n_polylog_root_of_unity(s, p, q, 45).value
                assert close(a, b, 45)


def test_polylog_log_case():
    with mp.workdps(50):
        assert close(n_polylog(1, mpmath.mpf("0.5"), 40).value,
                     mpmath.log(2), 40)


def test_pfq_against_mpmath():
    with mp.workdps(60):
        cases = [
            (HyperParams((Fraction(1, 3),), (Fraction(5, 7),)), 2.5),
            (HyperParams((Fraction(1), Fraction(1)), (Fraction(2),)), -0.5),
            (HyperParams((Fraction(1, 2), Fraction(3, 2)),
                         (Fraction(1, 3), Fraction(4, 3))), 1 + 2j),
        ]
        for params, z in cases:
            ref = mpmath.hyper(
                [mpmath.mpf(a.numerator) / a.denominator for a in params.a_list],
                [mpmath.mpf(b.numerator) / b.denominator for b in params.b_list],
                z)
            assert close(n_pFq(params, z, 50).value, ref, 50)


def test_pfq_rejects_divergent():
    params = HyperParams((Fraction(1), Fraction(1)), (Fraction(2),))
    with pytest.raises(ValueError):
        n_pFq(params, 1.5, 30)


@pytest.mark.parametrize("P", [30, 50])
def test_precision_monotonicity(P):
    # agreement between P and P + 10 digits within the advertised envelope
    lo = n_gamma(Fraction(2, 7), P).value
    hi = n_gamma(Fraction(2, 7), P + 10).value
    assert close(lo, hi, P)
    lo = n_hurwitz(3, Fraction(2, 7), P).value
    hi = n_hurwitz(3, Fraction(2, 7), P + 10).value
    assert close(lo, hi, P)


def test_bigcomplex_arithmetic():
    a = BigComplex(1.5, 30)
    b = BigComplex(2j, 40)
    c = a * b
    assert c.prec == 40
    with mp.workdps(40):
        assert abs(c.value - 3j) < mpmath.mpf(10) ** -25
