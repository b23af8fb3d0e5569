"""Asymptotic expansion at infinity of pFp(lambda z) with rational parameters.

The expansion splits into an exponential part K = e^z z^nu sum C_k z^{-k}
with rational C_k and an algebraic part L built from the residues of

    R(s) = prod_j Gamma(a_j + s) Gamma(-s) / prod_j Gamma(b_j + s)

times z^s at the poles s = -a_j - k.  Residues are extracted uniformly from
truncated Laurent series of the Gamma factors, so simple and multiple poles
(which contribute log(1/z) powers) share one code path.  The sector branch
is folded in afterwards by substituting z -> e^{-i pi} x (upper half plane)
or z -> e^{i pi} x (lower half plane), which turns the phases into exact
cyclotomic numbers and log(1/z) into log(1/x) +- i pi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath
from mpmath import mp

from .cyclo import CycloNumber, cyclo_i, e2pi_cyclo, root_of_unity_log
from .exact import HyperParams, group_parameters, is_nonpositive_integer, nu, pochhammer
from .hring import (HElement, gamma_laurent_at, h_gamma, h_invert_unit, h_pi,
                    recip_gamma_series_at, series_mul, series_trim)
from .numerics import BigComplex, GUARD_DIGITS, embed_cyclo, n_pFq
from . import numerics
from .series import AsymptoticExpansion, annihilation_failures


# ---------------------------------------------------------------------------
# Laurent expansion of R(s) z^s at a pole

def _flip_eps(val, coeffs):
    """Substitute eps -> -eps in a Laurent series (val, coeffs)."""
    return val, [c * ((-1) ** ((val + i) % 2)) for i, c in enumerate(coeffs)]


def _laurent_normalize(val, coeffs):
    while coeffs and coeffs[0].is_zero():
        coeffs = coeffs[1:]
        val += 1
    return val, coeffs


def gamma_quotient_laurent(params: HyperParams, s0: Fraction, M: int):
    """Laurent series in eps of R(s0 + eps): returns (valuation, coeffs)."""
    a_list = params.rational_a()
    val = 0
    coeffs = [HElement.one()]
    for a in a_list:
        v, c = gamma_laurent_at(a + s0, M)
        val += v
        coeffs = series_mul(coeffs, series_trim(c, M), M)
    # Gamma(-s) = Gamma(-s0 - eps)
    v, c = _flip_eps(*gamma_laurent_at(-s0, M))
    val += v
    coeffs = series_mul(coeffs, series_trim(c, M), M)
    for b in params.b_list:
        c = recip_gamma_series_at(b + s0, M)
        coeffs = series_mul(coeffs, series_trim(c, M), M)
    return _laurent_normalize(val, coeffs)


def residue_terms_at(params: HyperParams, s0: Fraction, M=None):
    """Residue of R(s) z^s at s = s0 as {(0, s0, logpow): HElement}.

    The z^{s0+eps} factor contributes exp(eps log z); the coefficient of
    log(1/z)^m z^{s0} is (-1)^m / m! times the eps^{-1-m} Laurent
    coefficient of R.
    """
    if M is None:
        M = params.p + 4
    val, coeffs = gamma_quotient_laurent(params, s0, M)
    out = {}
    m = 0
    fact = 1
    while val <= -1 - m:
        idx = (-1 - m) - val
        if idx < len(coeffs) and not coeffs[idx].is_zero():
            out[(Fraction(0), s0, m)] = coeffs[idx] * Fraction((-1) ** m, fact)
        m += 1
        fact *= m
    return out


def compute_Lp_raw(params: HyperParams, depth: int):
    """All residues of R(s) z^s at s = -a_j - k, 0 <= k < depth, unfolded.

    The result is a terms dict in the variable z itself; the sector displays
    use it with z replaced by e^{-+ i pi} x.
    """
    terms = {}
    for grp in group_parameters(params.rational_a()):
        for k in range(depth):
            for key, c in residue_terms_at(params, -grp.representative - k).items():
                cur = terms.get(key)
                total = c if cur is None else cur + c
                if total.is_zero():
                    terms.pop(key, None)
                else:
                    terms[key] = total
    return terms


def fold_branch(terms, branch):
    """Substitute z = e^{-i pi} x (upper) or z = e^{i pi} x (lower).

    z^beta picks up the cyclotomic phase e^{-+ i pi beta} and
    log(1/z) = log(1/x) +- i pi, expanded binomially with i pi carried as
    zeta_4 times the Pi atom.
    """
    if branch not in ("upper", "lower"):
        raise ValueError("branch must be 'upper' or 'lower'")
    sgn = -1 if branch == "upper" else 1  # z = e^{sgn * i pi} x
    ipi = HElement({(): cyclo_i()}) * h_pi()
    out = {}
    for (rho, beta, m), c in terms.items():
        phase = e2pi_cyclo(Fraction(sgn * beta, 2))
        base = c * phase
        shift = HElement.one()
        for j in range(m, -1, -1):
            add = base * (shift * comb(m, j))
            key = (rho, beta, j)
            cur = out.get(key)
            total = add if cur is None else cur + add
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
            # log(1/z) = log(1/x) - sgn * i pi
            shift = shift * (ipi * (-sgn))
    return out


# ---------------------------------------------------------------------------
# the exponential part: C_k coefficients

@dataclass(frozen=True)
class CkSequence:
    values: tuple
    provenance: str


def _rational_residual(params, k, v):
    """Operator residual of e^z z^{v - k} as {exponent: Fraction}."""
    from .series import apply_hyp_operator
    basis = {(Fraction(1), v - k, 0): HElement.one()}
    res = apply_hyp_operator(params, basis)
    out = {}
    for (rho, beta, i), c in res.items():
        out[beta] = out.get(beta, Fraction(0)) + c.as_scalar().as_rational()
    return {b: c for b, c in out.items() if c}


def compute_Ck_ode(params: HyperParams, K: int):
    """C_k determined by annihilation of e^z z^nu sum C_k z^{-k}.

    Writing the operator residual of the basis element e^z z^{nu-k} as
    R_k, the coefficient equations at the exponents nu + p - j
    (j = 1..K) determine C_1..C_K sequentially; the leading exponent
    nu + p + 1 cancels identically.
    """
    v = nu(params)
    p = params.p
    residuals = [_rational_residual(params, k, v) for k in range(K + 1)]
    if any(r.get(v - k + p + 1) for k, r in enumerate(residuals)):
        raise AssertionError("leading exponent failed to cancel")
    C = [Fraction(1)]
    for j in range(1, K + 1):
        gamma = v + p - j
        pivot = residuals[j].get(gamma)
        if not pivot:
            raise ValueError("degenerate parameters: sequential solve broke down")
        acc = Fraction(0)
        for k in range(j):
            acc += C[k] * residuals[k].get(gamma, Fraction(0))
        C.append(-acc / pivot)
    return CkSequence(tuple(C), "ode")


def e_km(params: HyperParams, k: int, m: int) -> Fraction:
    """The printed two-index recursion kernel (with b_{p+1} = 1)."""
    a = params.rational_a()
    b = list(params.b_list) + [Fraction(1)]
    v = nu(params)
    total = Fraction(0)
    for j in range(len(b)):
        den = Fraction(1)
        for i in range(len(b)):
            if i != j:
                den *= b[i] - b[j]
        if den == 0:
            raise ValueError("repeated lower parameters make e_km singular")
        num = Fraction(1)
        for ai in a:
            num *= ai - b[j]
        total += pochhammer(1 - v + b[j] + m, k - m) * num / den
    return total


def compute_Ck_printed_recursion(params: HyperParams, K: int):
    C = [Fraction(1)]
    for k in range(1, K + 1):
        acc = Fraction(0)
        for m in range(k):
            acc += e_km(params, k, m) * C[m]
        C.append(acc / k)
    return CkSequence(tuple(C), "printed_recursion")


def compute_Ck_printed_closed_form(params: HyperParams, K: int):
    """The printed multinomial closed form, with B_j and K_j the partial sums
    of the b's and of the summation indices."""
    a = params.rational_a()
    b = list(params.b_list)
    p = params.p
    values = []
    for k in range(K + 1):
        total = Fraction(0)
        for ks in _compositions(k, p):
            Ksum = [0]
            for kj in ks:
                Ksum.append(Ksum[-1] + kj)
            term = pochhammer(1 - a[p - 1], ks[p - 1])
            for j in range(p - 1):
                term *= pochhammer(a[j + 1] + b[j + 1] - a[j], ks[j])
            Bj = Fraction(0)
            for j in range(p):
                Bj += b[j]
                term *= pochhammer(Bj + Ksum[j], ks[j])
            for kj in ks:
                for m in range(2, kj + 1):
                    term /= m
            total += term
        values.append(total)
    return CkSequence(tuple(values), "printed_closed_form")


def _compositions(k, parts):
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def compute_Ck_classical_p1(params: HyperParams, K: int):
    """The classical Kummer coefficients for 1F1: (b-a)_k (1-a)_k / k!."""
    if params.p != 1 or params.q != 1:
        raise ValueError("classical formula is for 1F1 only")
    a = params.rational_a()[0]
    b = params.b_list[0]
    values, fact = [], 1
    for k in range(K + 1):
        if k:
            fact *= k
        values.append(pochhammer(b - a, k) * pochhammer(1 - a, k) / fact)
    return CkSequence(tuple(values), "classical_p1")


def compute_Ck_numeric_fit(params: HyperParams, K: int, P=60):
    """Fit C_0..C_K from high-precision samples on the positive real axis.

    e^{-x} x^{-nu} (prod Gamma(a) / prod Gamma(b)) f(x) = sum C_k x^{-k}
    up to an exponentially small remainder; solved as a square Vandermonde
    system with extra fit coefficients absorbing the next few orders.
    """
    v = nu(params)
    unknowns = K + 8
    dps = P + GUARD_DIGITS + 10
    with mp.workdps(dps):
        pref = mpmath.mpf(1)
        for a in params.rational_a():
            pref *= numerics.n_gamma(a, P + 20).value.real
        for b in params.b_list:
            pref /= numerics.n_gamma(b, P + 20).value.real
        # far out on the axis the K+8 truncation error is ~ x^{-(K+8)}
        xs = [mpmath.mpf(2000 + 400 * i) for i in range(unknowns)]
        rows, rhs = [], []
        for x in xs:
            fx = n_pFq(params, BigComplex(x, P + 20), P + 20).value.real
            g = pref * fx * mpmath.exp(-x) * x ** (-mpmath.mpf(v.numerator) / v.denominator)
            rows.append([x ** (-j) for j in range(unknowns)])
            rhs.append(g)
        sol = mpmath.lu_solve(mpmath.matrix(rows), mpmath.matrix(rhs))
        return CkSequence(tuple(BigComplex(sol[k], P) for k in range(K + 1)),
                          "numeric_fit")


_CK_METHODS = {
    "ode": compute_Ck_ode,
    "printed_recursion": compute_Ck_printed_recursion,
    "printed_closed_form": compute_Ck_printed_closed_form,
    "classical_p1": compute_Ck_classical_p1,
}


def compute_Ck(params: HyperParams, K: int, method="ode", P=60) -> CkSequence:
    if method == "numeric_fit":
        return compute_Ck_numeric_fit(params, K, P)
    try:
        fn = _CK_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown C_k method {method!r}") from None
    return fn(params, K)


# ---------------------------------------------------------------------------
# full expansion

def hyper_prefactor(params: HyperParams) -> HElement:
    """prod Gamma(b_j) / prod Gamma(a_j) as a unit HElement."""
    num = HElement.one()
    for b in params.b_list:
        num = num * h_gamma(b)
    den = HElement.one()
    for a in params.rational_a():
        den = den * h_gamma(a)
    return num * h_invert_unit(den)


def compute_full_expansion(params: HyperParams, branch="upper", depth=12,
                           ck_method="ode") -> AsymptoticExpansion:
    if params.p != params.q:
        raise ValueError("the confluent engine needs p = q")
    a_list = params.rational_a()
    if any(is_nonpositive_integer(b) for b in params.b_list):
        raise ValueError("lower parameters must avoid Z_{<=0}")
    if any(is_nonpositive_integer(a) for a in a_list):
        return _polynomial_expansion(params, branch)
    v = nu(params)
    exp = AsymptoticExpansion(branch, hyper_prefactor(params), {}, depth)
    cks = compute_Ck(params, depth - 1, method=ck_method)
    for k, ck in enumerate(cks.values):
        if ck:
            exp.add_term(Fraction(1), v - k, 0, HElement.from_scalar(ck))
    for key, c in fold_branch(compute_Lp_raw(params, depth), branch).items():
        rho, beta, i = key
        exp.add_term(rho, beta, i, c)
    if not (params.scale.is_rational() and params.scale.as_rational() == 1):
        exp = scale_expansion(exp, params.scale)
    return exp


def _polynomial_expansion(params: HyperParams, branch):
    """pFp degenerates to a polynomial when some a_j is in Z_{<=0}."""
    a_list = params.rational_a()
    deg = min(-int(a) for a in a_list if is_nonpositive_integer(a))
    exp = AsymptoticExpansion(branch, HElement.one(), {}, deg + 1)
    fact = 1
    for n in range(deg + 1):
        if n:
            fact *= n
        c = Fraction(1, fact)
        for a in a_list:
            c *= pochhammer(a, n)
        for b in params.b_list:
            c /= pochhammer(b, n)
        if c:
            exp.add_term(Fraction(0), Fraction(n), 0, HElement.from_scalar(c))
    return exp


def scale_expansion(exp: AsymptoticExpansion, lam: CycloNumber) -> AsymptoticExpansion:
    """Expansion of f(lambda x) from that of f(z), for lambda a root of unity.

    z = lambda x rescales the exponential to e^{lambda x}, multiplies each
    power by the cyclotomic lambda^beta and shifts log(1/z) by -log(lambda)
    = -2 i pi t.  Other algebraic lambda would need opaque power atoms and
    is not supported symbolically.
    """
    t = root_of_unity_log(lam)
    if t is None:
        raise NotImplementedError("only root-of-unity scaling is exact")
    if t > Fraction(1, 2):
        t -= 1  # principal logarithm
    ipi2t = HElement({(): cyclo_i() * (2 * t)}) * h_pi()
    out = AsymptoticExpansion(exp.branch, exp.prefactor, {}, exp.depth)
    for (rho, beta, m), c in exp.terms.items():
        new_rho = rho * lam if not _zero(rho) else rho
        base = c * _cyclo_power(lam, t, beta)
        shift = HElement.one()
        for j in range(m, -1, -1):
            out.add_term(new_rho, beta, j, base * (shift * comb(m, j)))
            shift = shift * (-ipi2t)
    return out


def _zero(rho):
    if isinstance(rho, CycloNumber):
        return rho.is_zero()
    return rho == 0


def _cyclo_power(lam, t, beta: Fraction) -> CycloNumber:
    # lambda^beta = exp(2 i pi t beta) with the principal log fixed by t
    return e2pi_cyclo(t * beta)


# ---------------------------------------------------------------------------
# the simple-pole closed form (independent cross-check path)

def simple_pole_L_terms(params: HyperParams, depth: int):
    """The distinct-parameter residue formula, computed without Laurent series:

    sum_j sum_k (-1)^k Gamma(a_j+k) prod_{i != j} Gamma(a_i-a_j-k)
                / (k! prod_i Gamma(b_i-a_j-k)) * z^{-a_j-k}
    """
    a_list = params.rational_a()
    for i, x in enumerate(a_list):
        for y in a_list[i + 1:]:
            if (x - y).denominator == 1:
                raise ValueError("parameters must be pairwise distinct mod Z")
    terms = {}
    for j, aj in enumerate(a_list):
        fact = 1
        for k in range(depth):
            if k:
                fact *= k
            coeff = HElement.from_scalar(Fraction((-1) ** k, fact)) * h_gamma(aj + k)
            for i, ai in enumerate(a_list):
                if i != j:
                    coeff = coeff * h_gamma(ai - aj - k)
            dead = False
            den = HElement.one()
            for b in params.b_list:
                arg = b - aj - k
                if is_nonpositive_integer(arg):
                    dead = True  # 1/Gamma vanishes at the pole
                    break
                den = den * h_gamma(arg)
            if dead:
                continue
            coeff = coeff * h_invert_unit(den)
            key = (Fraction(0), -aj - k, 0)
            terms[key] = terms.get(key, HElement.zero()) + coeff
    return terms
