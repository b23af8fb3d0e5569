"""Analytic continuation of (p+1)Fp beyond the unit disk.

For |z| > 1, |arg(-z)| < pi the function equals

    prod Gamma(b_j) / prod Gamma(a_j)  *  sum of residues of R(s) (-z)^s

over the poles s = -a_j - k, with the same R(s) quotient (now with p+1
numerator Gammas) and the same Laurent residue engine as the confluent
expansion.  Everything is stored in the variable W = -z with its principal
branch, so all phase factors are exact cyclotomic numbers; numeric
evaluation at a point z substitutes W = -z.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp

from .exact import HyperParams, group_parameters, is_nonpositive_integer, pochhammer
from .hring import HElement, h_gamma, h_invert_unit
from .numerics import BigComplex, GUARD_DIGITS
from . import numerics
from .series import AsymptoticExpansion
from .asymp import residue_terms_at


def _check_continuation_params(params: HyperParams):
    if params.p != params.q + 1:
        raise ValueError("continuation needs p + 1 upper and p lower parameters")
    for a in params.rational_a():
        if is_nonpositive_integer(a):
            raise ValueError("upper parameters in Z_{<=0} give a polynomial")


def continuation_prefactor(params: HyperParams) -> HElement:
    num = HElement.one()
    for b in params.b_list:
        num = num * h_gamma(b)
    den = HElement.one()
    for a in params.rational_a():
        den = den * h_gamma(a)
    return num * h_invert_unit(den)


def compute_Mp(params: HyperParams, depth=12) -> AsymptoticExpansion:
    """Residue series for the continuation, as an expansion in W = -z.

    Terms are keyed (0, -a_j - k, logpow) exactly like the confluent L-part;
    the prefactor prod Gamma(b) / prod Gamma(a) is kept separate.
    """
    _check_continuation_params(params)
    exp = AsymptoticExpansion("continuation", continuation_prefactor(params), {}, depth)
    for grp in group_parameters(params.rational_a()):
        for k in range(depth):
            for (rho, beta, m), c in residue_terms_at(
                    params, -grp.representative - k).items():
                exp.add_term(rho, beta, m, c)
    return exp


def distinct_case_formula(params: HyperParams, depth=12) -> AsymptoticExpansion:
    """The explicit distinct-parameter continuation formula.

    f(z) = sum_j (-z)^{-a_j} [prod_{k != j} Gamma(a_k - a_j) / Gamma(a_k)]
           [prod Gamma(b_k) / Gamma(b_k - a_j)]
           (p+1)Fp[a_j, 1 - b + a_j; 1 - a_i + a_j (i != j); 1/z].

    The inner argument is 1/z (derived from the residue series; rewriting
    1/z = -1/W flips the sign of the odd inner coefficients here since the
    result is stored in W = -z).  The prefactor is folded in, so the object
    equals compute_Mp with its prefactor folded in.
    """
    _check_continuation_params(params)
    a_list = params.rational_a()
    for i, x in enumerate(a_list):
        for y in a_list[i + 1:]:
            if (x - y).denominator == 1:
                raise ValueError("parameters must be pairwise distinct mod Z")
    exp = AsymptoticExpansion("continuation", HElement.one(), {}, depth)
    for j, aj in enumerate(a_list):
        front = HElement.one()
        dead = False
        den = HElement.one()
        for i, ak in enumerate(a_list):
            if i != j:
                front = front * h_gamma(ak - aj)
                den = den * h_gamma(ak)
        for b in params.b_list:
            front = front * h_gamma(b)
            if is_nonpositive_integer(b - aj):
                dead = True
                break
            den = den * h_gamma(b - aj)
        if dead:
            continue
        front = front * h_invert_unit(den)
        # inner hypergeometric coefficients in the variable 1/z = -1/W
        upper = [aj] + [1 - b + aj for b in params.b_list]
        lower = [1 - ak + aj for i, ak in enumerate(a_list) if i != j]
        fact = 1
        for k in range(depth):
            if k:
                fact *= k
            c = Fraction(1, fact)
            for u in upper:
                c *= pochhammer(u, k)
            for l in lower:
                c /= pochhammer(l, k)
            c *= (-1) ** k  # (1/z)^k = (-1)^k W^{-k}
            if c:
                exp.add_term(Fraction(0), -aj - k, 0, front * c)
    return exp


def continuation_value(exp: AsymptoticExpansion, z, P=numerics.DEFAULT_PRECISION,
                       with_prefactor=True) -> BigComplex:
    """Evaluate a continuation expansion at a point z with |z| > 1."""
    dps = P + GUARD_DIGITS
    with mp.workdps(dps):
        zv = mpmath.mpc(z.value if isinstance(z, BigComplex) else z)
        return exp.eval_at(-zv, P, with_prefactor=with_prefactor)
