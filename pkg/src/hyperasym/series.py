"""Truncated log-power series algebra and asymptotic-expansion objects.

An expansion is a finite sum of terms

    coeff * e^{rho x} * x^beta * log(1/x)^i

with HElement coefficients, beta rational and rho a scalar exponential scale
(0 or 1 for the confluent engine, possibly times a cyclotomic lambda).  The
formal Euler operator theta = x d/dx acts exactly on such terms, which gives
a symbolic annihilation check for the hypergeometric operator

    theta prod_j (theta + b_j - 1) - z prod_j (theta + a_j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mp

from .cyclo import CycloNumber, format_rational, parse_rational
from .hring import HElement
from .numerics import GUARD_DIGITS, BigComplex, embed_cyclo
from . import numerics


def _is_zero_scalar(c):
    if isinstance(c, CycloNumber):
        return c.is_zero()
    return c == 0


@dataclass
class AsymptoticExpansion:
    """Map (rho, beta, logpow) -> HElement, with sector and prefactor data.

    The represented object is  prefactor * sum coeff e^{rho x} x^beta log(1/x)^i.
    branch is "upper" (arg x in (0, pi)), "lower" (arg x in (-pi, 0)), or
    "continuation" (the |z| > 1 domain of the (p+1)F(p) engine, in which case
    the formal variable is -z).
    """
    branch: str
    prefactor: HElement
    terms: dict = field(default_factory=dict)
    depth: int = 12

    def add_term(self, rho, beta, logpow, coeff):
        key = (rho, Fraction(beta), int(logpow))
        cur = self.terms.get(key)
        coeff = coeff if isinstance(coeff, HElement) else HElement.from_scalar(coeff)
        total = coeff if cur is None else cur + coeff
        if total.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = total
        return self

    def cleaned(self):
        out = AsymptoticExpansion(self.branch, self.prefactor, {}, self.depth)
        for (rho, beta, i), c in self.terms.items():
            if not c.is_zero():
                out.terms[(rho, beta, i)] = c
        return out

    # -- grouping ----------------------------------------------------------

    def classes(self):
        """Group term keys by (rho, beta mod 1): the exponent ladders that the
        hypergeometric operator never mixes."""
        out = {}
        for (rho, beta, i), c in self.terms.items():
            out.setdefault((rho, beta % 1), []).append((beta, i, c))
        return out

    # -- numeric evaluation ------------------------------------------------

    def eval_at(self, x, P=numerics.DEFAULT_PRECISION, with_prefactor=True):
        from .hring import h_eval
        dps = P + GUARD_DIGITS
        with mp.workdps(dps):
            xv = mpmath.mpc(x.value if isinstance(x, BigComplex) else x)
            lx = mpmath.log(xv)
            total = mpmath.mpc(0)
            for (rho, beta, i), c in self.terms.items():
                if isinstance(rho, CycloNumber):
                    rv = embed_cyclo(rho, P).value
                else:
                    rq = Fraction(rho)
                    rv = mpmath.mpf(rq.numerator) / rq.denominator
                v = h_eval(c, P).value
                v *= mpmath.exp(rv * xv)
                v *= mpmath.exp(mpmath.mpf(beta.numerator) / beta.denominator * lx)
                if i:
                    v *= (-lx) ** i
                total += v
            pre = h_eval(self.prefactor, P).value if with_prefactor else 1
            return BigComplex(pre * total, P)

    # -- JSON ---------------------------------------------------------------

    def to_json(self):
        rows = []
        # alpha is the leading exponent of each (rho, class) ladder; n counts down
        alpha_of = {}
        for (rho, cls), entries in self.classes().items():
            alpha_of[(rho, cls)] = -max(b for b, _, _ in entries)
        for (rho, beta, i), c in self.terms.items():
            alpha = alpha_of[(rho, beta % 1)]
            rows.append({
                "rho": _rho_str(rho),
                "alpha": format_rational(alpha),
                "logpow": i,
                "n": int(-beta - alpha),
                "coeff": c.to_json(),
            })
        rows.sort(key=lambda r: (r["rho"], parse_rational(r["alpha"]),
                                 r["n"], r["logpow"]))
        return {"sector": {"branch": self.branch},
                "prefactor": self.prefactor.to_json(),
                "terms": rows}

    @staticmethod
    def from_json(d, depth=12):
        out = AsymptoticExpansion(d["sector"]["branch"],
                                  HElement.from_json(d["prefactor"]), {}, depth)
        for row in d["terms"]:
            rho = _rho_parse(row["rho"])
            beta = -parse_rational(row["alpha"]) - row["n"]
            out.add_term(rho, beta, row["logpow"], HElement.from_json(row["coeff"]))
        return out


def _rho_str(rho):
    if isinstance(rho, CycloNumber):
        return rho.literal()
    return format_rational(Fraction(rho))


def _rho_parse(s):
    if s.startswith("cyclo("):
        return CycloNumber.parse(s)
    return parse_rational(s)


# ---------------------------------------------------------------------------
# the formal hypergeometric operator

def _theta(terms):
    """theta = x d/dx on a dict (rho, beta, i) -> HElement."""
    out = {}

    def bump(key, coeff):
        if coeff.is_zero():
            return
        cur = out.get(key)
        total = coeff if cur is None else cur + coeff
        if total.is_zero():
            out.pop(key, None)
        else:
            out[key] = total

    for (rho, beta, i), c in terms.items():
        if not _is_zero_scalar(rho):
            bump((rho, beta + 1, i), c * rho)
        if beta:
            bump((rho, beta, i), c * beta)
        if i:
            bump((rho, beta, i - 1), c * (-i))
    return out


def _shift_z(terms):
    """Multiplication by the formal variable: beta -> beta + 1."""
    return {(rho, beta + 1, i): c for (rho, beta, i), c in terms.items()}


def _theta_plus(terms, shift):
    out = dict(_theta(terms))
    for key, c in terms.items():
        v = c * shift
        cur = out.get(key)
        total = v if cur is None else cur + v
        if total.is_zero():
            out.pop(key, None)
        else:
            out[key] = total
    return out


def apply_hyp_operator(params, expansion, sign=1):
    """Residual of theta prod(theta + b_j - 1) - sign * z prod(theta + a_j).

    sign = +1 is the operator annihilating pFq(z); sign = -1 is the same
    operator rewritten in the variable Z = -z, which is how continuation
    expansions are stored.  Returns a terms dict keyed like the expansion.
    """
    terms = expansion.terms if isinstance(expansion, AsymptoticExpansion) else expansion
    left = dict(terms)
    for b in params.b_list:
        left = _theta_plus(left, Fraction(b) - 1)
    left = _theta(left)
    right = dict(terms)
    for a in params.a_list:
        aa = a if isinstance(a, CycloNumber) else Fraction(a)
        right = _theta_plus(right, aa)
    right = _shift_z(right)
    out = dict(left)
    for key, c in right.items():
        v = c * (-sign)
        cur = out.get(key)
        total = v if cur is None else cur + v
        if total.is_zero():
            out.pop(key, None)
        else:
            out[key] = total
    return out


def annihilation_failures(params, expansion, sign=1):
    """Keys at which the operator residual is provably nonzero.

    For terms without an exponential scale (rho = 0) the residual at
    exponent gamma draws on input coefficients at gamma and gamma - 1; with
    a scale the q + 1 Euler factors reach down to gamma - q - 1.  Within
    each (rho, beta mod 1) ladder only residual exponents whose full input
    window survives the truncation are checked; coefficients are normalized
    (reflection pairing included) before the zero test.
    """
    from .hring import h_normalize
    exp = expansion if isinstance(expansion, AsymptoticExpansion) else None
    terms = exp.terms if exp else expansion
    reach = len(params.b_list) + 1
    floors = {}
    for (rho, beta, i) in terms:
        key = (rho, beta % 1)
        floors[key] = min(floors.get(key, beta), beta)
    residual = apply_hyp_operator(params, terms, sign)
    bad = []
    for (rho, beta, i), c in residual.items():
        floor = floors.get((rho, beta % 1))
        window = 1 if _is_zero_scalar(rho) else reach
        if floor is not None and beta < floor + window:
            continue
        c = h_normalize(c)
        if not c.is_zero():
            bad.append(((rho, beta, i), c))
    return bad


# ---------------------------------------------------------------------------
# power-series helpers (coefficient lists with HElement or scalar entries)

def hadamard_star(f, g):
    """Coefficientwise product of two coefficient lists of equal length."""
    if len(f) != len(g):
        raise ValueError("hadamard_star needs equal truncation depths")
    return [a * b for a, b in zip(f, g)]


def laplace_coeffs(c_list, r=1):
    """Coefficient map of the Laplace transform of sum c_n z^n / n!.

    For r = 1 returns the coefficients c_n of sum c_n z^{-n-1}; for general
    positive r the input series is read in the variable z^r (the function is
    sum c_n z^{rn} / n!) and the output coefficient of z^{-rn-1} is
    c_n (rn)! / n!.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    out = []
    fact_rn, fact_n = 1, 1
    for n, c in enumerate(c_list):
        if n:
            fact_n *= n
            for j in range(r * (n - 1) + 1, r * n + 1):
                fact_rn *= j
        out.append(c * Fraction(fact_rn, fact_n))
    return out
