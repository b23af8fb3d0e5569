import math
from fractions import Fraction

from hyperasym.assembler import (LocalBlock, LocalData, assemble_expansion,
                                 eta_series, kummer_local_data,
                                 local_data_from_json, local_data_to_json,
                                 y_series)
from hyperasym.asymp import compute_full_expansion
from hyperasym.exact import HyperParams
from hyperasym.hring import HElement, h_normalize


def test_y_series_facts():
    assert y_series(Fraction(-1), 0, 1)[0] == 1
    for t in range(3):
        assert all(c == 0 for c in y_series(Fraction(t), 0, 6))
        assert y_series(Fraction(t), 1, 1)[0] == (-1) ** (t + 1) * math.factorial(t)


def test_y_series_negative_gap():
    # t = -5/2, n = 0: gap is negative, reciprocal-series branch
    ys = y_series(Fraction(-5, 2), 0, 3)
    assert ys[0] == Fraction(4, 3)  # Gamma(1/2) / Gamma(5/2)


def test_eta_series_plain_block():
    blk = LocalBlock(Fraction(-1, 2), [[Fraction(1), Fraction(2)]],
                     [HElement.one()])
    eta = eta_series(blk, 0, 2)
    y = y_series(Fraction(-1, 2), 0, 2)
    assert eta[0].as_scalar().as_rational() == y[0]
    assert eta[1].as_scalar().as_rational() == 2 * y[1]


def test_fixture_matches_residue_engine():
    a, b = Fraction(1, 3), Fraction(5, 7)
    for branch in ("upper", "lower"):
        for depth in (3, 6):
            asm = assemble_expansion(kummer_local_data(a, b, depth, branch),
                                     depth, branch)
            ref = compute_full_expansion(HyperParams((a,), (b,)), branch, depth)
            folded = {k: h_normalize(ref.prefactor * c)
                      for k, c in ref.terms.items()}
            assert set(asm.terms) == set(folded)
            for k in folded:
                assert h_normalize(asm.terms[k]) == folded[k], k


def test_local_data_json_roundtrip():
    data = kummer_local_data(Fraction(1, 3), Fraction(5, 7), 4, "upper")
    back = local_data_from_json(local_data_to_json(data))
    assert set(back) == set(data)
    for rho in data:
        for b1, b2 in zip(data[rho].blocks, back[rho].blocks):
            assert b1.t == b2.t
            assert [[HElement.from_scalar(c) if not isinstance(c, HElement)
                     else c for c in s] for s in b1.g_series] == b2.g_series
            assert [HElement.from_scalar(c) if not isinstance(c, HElement)
                    else c for c in b1.constants] == b2.constants
