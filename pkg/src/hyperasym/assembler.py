"""Assembly of asymptotic expansions from local solution data.

Given, for each singularity rho of the Laplace dual, a basis of local
solutions (z-rho)^{t_j} sum_k g_{j,k}(z-rho) log(z-rho)^{k'}/k'! and
connection constants, the expansion of the E-function is

    sum_rho e^{rho x} sum_j sum_k varpi_{j,k} x^{-t_j-1}
        sum_i ( sum_l (-1)^l/l! recipGamma^(l)(1-{t_j}) eta_{j,k-l-i}(1/x) )
        log(1/x)^i / i!

with eta_{j,k} = sum_m y_{t_j,m} (Hadamard) g_{j,k-m} and y_{alpha,i} the
rational series whose n-th coefficient is the i-th Taylor coefficient of
Gamma(1-{t}) / Gamma(-t-n) at t = alpha (right-derivatives at integers).
The local data are inputs here, never computed from operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .cyclo import CycloNumber, e2pi_cyclo, format_rational, parse_rational
from .hring import HElement, recip_gamma_series_at, h_gamma, h_invert_unit
from .series import AsymptoticExpansion, hadamard_star


# ---------------------------------------------------------------------------
# the rational y series

def _frac_polys(alpha: Fraction, order: int):
    """Coefficient lists (low to high in eps) of Gamma(1-{t}-eps)/Gamma(-t-n-eps)
    at t = alpha, for n = 0, 1, 2, ...: a generator of Fraction lists.

    With c = 1 - {alpha} and gap g = 1 + floor(alpha) + n the ratio is
    prod_{j=1}^{g} (c - j - eps) for g >= 0 and the reciprocal of
    prod_{j=0}^{-g-1} (c + j - eps) for g < 0.
    """
    alpha = Fraction(alpha)
    c = 1 - (alpha - floor(alpha))
    n = 0
    while True:
        g = 1 + floor(alpha) + n
        if g >= 0:
            poly = [Fraction(1)] + [Fraction(0)] * order
            for j in range(1, g + 1):
                poly = _poly_mul(poly, [c - j, Fraction(-1)], order)
        else:
            den = [Fraction(1)] + [Fraction(0)] * order
            for j in range(0, -g):
                den = _poly_mul(den, [c + j, Fraction(-1)], order)
            poly = _poly_inv(den, order)
        yield poly
        n += 1


def _poly_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[:order + 1]):
        if x:
            for j, y in enumerate(b[:order + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


def _poly_inv(a, order):
    if a[0] == 0:
        raise ZeroDivisionError("series has no reciprocal")
    inv0 = 1 / a[0]
    out = [inv0] + [Fraction(0)] * order
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += a[k] * out[n - k] if k < len(a) else 0
        out[n] = -inv0 * acc
    return out


def y_series(alpha, i: int, depth: int):
    """First `depth` coefficients of y_{alpha,i}, exact rationals."""
    gen = _frac_polys(Fraction(alpha), i)
    out = []
    for _ in range(depth):
        out.append(next(gen)[i])
    return out


# ---------------------------------------------------------------------------
# local data containers

@dataclass
class LocalBlock:
    """One exponent block: (z-rho)^t with log-depth K = len(constants) - 1.

    g_series[k] is the coefficient list (HElement entries) of g_{j,k};
    constants[k] is the connection constant varpi_{j,k}.
    """
    t: Fraction
    g_series: list
    constants: list

    def __post_init__(self):
        self.t = Fraction(self.t)
        if len(self.g_series) != len(self.constants):
            raise ValueError("need one g series per connection constant")


@dataclass
class LocalData:
    rho: object
    blocks: list = field(default_factory=list)


def eta_series(block: LocalBlock, k: int, depth: int):
    """eta_{j,k} = sum_{m<=k} y_{t_j,m} (Hadamard) g_{j,k-m}."""
    if not 0 <= k < len(block.g_series):
        raise IndexError("log index out of range")
    total = [HElement.zero()] * depth
    for m in range(k + 1):
        y = y_series(block.t, m, depth)
        g = [_as_h(c) for c in block.g_series[k - m][:depth]]
        g += [HElement.zero()] * (depth - len(g))
        prod = hadamard_star([HElement.from_scalar(c) for c in y], g)
        total = [a + b for a, b in zip(total, prod)]
    return total


def _as_h(c):
    return c if isinstance(c, HElement) else HElement.from_scalar(c)


def assemble_expansion(data, depth=8, branch="upper") -> AsymptoticExpansion:
    """Assemble the full expansion from {rho: LocalData}.

    The branch tag is metadata only here: any branch dependence must already
    be folded into the supplied connection constants.
    """
    exp = AsymptoticExpansion(branch, HElement.one(), {}, depth)
    for rho, ld in data.items():
        for block in ld.blocks:
            t = block.t
            frac_t = t - floor(t)
            K = len(block.constants) - 1
            # l-th derivative of 1/Gamma at 1 - {t}: l! times the series coeff
            rg = recip_gamma_series_at(1 - frac_t, K)
            etas = {k: eta_series(block, k, depth) for k in range(K + 1)}
            inv_fact = [Fraction(1)]
            for m in range(1, K + 2):
                inv_fact.append(inv_fact[-1] / m)
            for k, varpi in enumerate(block.constants):
                varpi = _as_h(varpi)
                if varpi.is_zero():
                    continue
                for i in range(k + 1):
                    for l in range(k - i + 1):
                        # recipGamma^(l) = l! rg[l]; the (-1)^l/l! cancels l!
                        gam = rg[l] * Fraction((-1) ** l)
                        if gam.is_zero():
                            continue
                        eta = etas[k - l - i]
                        for m, em in enumerate(eta):
                            if em.is_zero():
                                continue
                            coeff = varpi * gam * em * inv_fact[i]
                            exp.add_term(rho, -t - 1 - m, i, coeff)
    return exp


# ---------------------------------------------------------------------------
# JSON for local data

def local_data_to_json(data):
    rows = []
    for rho, ld in sorted(data.items(), key=lambda kv: str(kv[0])):
        blocks = []
        for b in ld.blocks:
            blocks.append({
                "t": format_rational(b.t),
                "series": [[_as_h(c).to_json() for c in s] for s in b.g_series],
                "constants": [_as_h(c).to_json() for c in b.constants],
            })
        rows.append({"rho": format_rational(Fraction(rho)), "blocks": blocks})
    return rows


def local_data_from_json(rows):
    out = {}
    for row in rows:
        rho = parse_rational(row["rho"])
        blocks = []
        for b in row["blocks"]:
            blocks.append(LocalBlock(
                parse_rational(b["t"]),
                [[HElement.from_json(c) for c in s] for s in b["series"]],
                [HElement.from_json(c) for c in b["constants"]],
            ))
        out[rho] = LocalData(rho, blocks)
    return out


# ---------------------------------------------------------------------------
# the confluent 1F1 fixture: local data of the Laplace dual
# g(z) = (1/z) 2F1[a, 1; b; 1/z], singular at z = 0 and z = 1

def kummer_local_data(a, b, depth=8, branch="upper"):
    """Local data reproducing the expansion of 1F1[a; b; x].

    Derived from the classical connection formulas of 2F1 at its singular
    points: at z = 1 the singular block is
    Gamma(b)Gamma(1+a-b)/Gamma(a) (z-1)^{b-a-1} (1+(z-1))^{a-1}, at z = 0 it
    is e^{+- i pi a} Gamma(b)Gamma(1-a)/Gamma(b-a) z^{a-1} (1-z)^{b-a-1}
    with the phase sign fixed by the branch.
    """
    a, b = Fraction(a), Fraction(b)
    for bad in (a, b, b - a, 1 + a - b):
        if bad.denominator == 1 and bad <= 0:
            raise ValueError("fixture needs non-integer parameter differences")
    # (1+u)^{a-1} and (1-u)^{b-a-1} Taylor coefficients
    binom_plus, binom_minus = [Fraction(1)], [Fraction(1)]
    for n in range(1, depth):
        binom_plus.append(binom_plus[-1] * (a - 1 - (n - 1)) / n)
        binom_minus.append(binom_minus[-1] * (b - a - 1 - (n - 1)) / n * (-1))
    varpi1 = h_gamma(b) * h_gamma(1 + a - b) * h_invert_unit(h_gamma(a))
    sgn = 1 if branch == "upper" else -1
    phase = e2pi_cyclo(Fraction(sgn, 2) * a)  # e^{+- i pi a}
    varpi0 = (h_gamma(b) * h_gamma(1 - a) * h_invert_unit(h_gamma(b - a))
              * HElement.from_scalar(phase))
    return {
        Fraction(1): LocalData(Fraction(1), [
            LocalBlock(b - a - 1, [binom_plus], [varpi1])]),
        Fraction(0): LocalData(Fraction(0), [
            LocalBlock(a - 1, [binom_minus], [varpi0])]),
    }
