"""Exact verification of the classical-identity suite.

Every checker returns a report dict

    {"identity": name, "depth": N, "status": "ok" | "fail", "first_failure": n}

with first_failure the smallest index at which the two sides differ (None on
success).  The series checks are exact (coefficientwise in a cyclotomic
field); the Gauss digamma/Hurwitz/polylog suite is numeric within 10^{4-P}.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import mpmath
from mpmath import mp

from .cyclo import CycloNumber, e2pi_cyclo
from .exact import pochhammer
from .numerics import (DEFAULT_PRECISION, GUARD_DIGITS, BigComplex,
                       embed_cyclo, n_euler_gamma, n_hurwitz, n_log,
                       n_polylog, n_psi_k)


class ESeries:
    """Exact coefficient stream c_n of sum c_n z^n / n!, lazily extended."""

    def __init__(self, coeff_fn):
        self._fn = coeff_fn
        self._cache = []

    def coeff(self, n):
        while len(self._cache) <= n:
            self._cache.append(self._fn(len(self._cache)))
        return self._cache[n]

    def ordinary(self, n):
        """Coefficient of z^n (the c_n / n! normalization)."""
        c = self.coeff(n)
        f = Fraction(1, factorial(n))
        return c * f

    def binomial_product(self, other):
        """The series of the product function (binomial convolution)."""
        return ESeries(lambda n: _sum(
            self.coeff(k) * other.coeff(n - k) * comb(n, k)
            for k in range(n + 1)))


def _sum(it):
    total = None
    for v in it:
        total = v if total is None else total + v
    return Fraction(0) if total is None else total


def _is_zero(c):
    if isinstance(c, CycloNumber):
        return c.is_zero()
    return c == 0


def _report(name, depth, first_failure):
    return {"identity": name, "depth": depth,
            "status": "ok" if first_failure is None else "fail",
            "first_failure": first_failure}


def _compare(name, depth, lhs: ESeries, rhs: ESeries):
    for n in range(depth + 1):
        if not _is_zero(lhs.coeff(n) - rhs.coeff(n)):
            return _report(name, depth, n)
    return _report(name, depth, None)


def sqrt2_cyclo() -> CycloNumber:
    z = CycloNumber.zeta(8)
    return z + z.inverse()


# ---------------------------------------------------------------------------
# series identities

def check_L_identity(depth=100):
    """a_n = sum_k C(n,k) C(n+k,k) against e^{(3-2v2)z} 1F1[1/2;1;4v2 z].

    Both sides live in Q(zeta_8); the left side is summed directly, the
    right side by binomial convolution of the two factor series.
    """
    r2 = sqrt2_cyclo()
    one = CycloNumber.from_rational(1)

    def lhs_c(n):
        return one * sum(comb(n, k) * comb(n + k, k) for k in range(n + 1))

    c_exp = CycloNumber.from_rational(3) - r2 * 2
    w = r2 * 4

    def f1_c(n):
        # 1F1[1/2; 1; w z] as sum c_n z^n / n!: c_n = (1/2)_n w^n / n!
        return w ** n * (pochhammer(Fraction(1, 2), n) / factorial(n))

    rhs = ESeries(lambda n: c_exp ** n).binomial_product(ESeries(f1_c))
    return _compare("L", depth, ESeries(lhs_c), rhs)


def check_H_identity(depth=100):
    """Harmonic-number series against z e^z 2F2[1,1;2,2;-z]."""

    def lhs_c(n):
        return _sum(Fraction(1, k) for k in range(1, n + 1))

    def f22_c(n):
        # 2F2[1,1;2,2;-z] coefficient c_n of z^n/n!: (-1)^n (1)_n^2 / (2)_n^2
        v = Fraction((-1) ** n)
        v *= pochhammer(Fraction(1), n) ** 2
        return v / pochhammer(Fraction(2), n) ** 2

    # multiply by z: shifts c_n -> n * c_{n-1}
    inner = ESeries(lambda n: Fraction(1)).binomial_product(ESeries(f22_c))
    rhs = ESeries(lambda n: inner.coeff(n - 1) * n if n else Fraction(0))
    return _compare("H", depth, ESeries(lhs_c), rhs)


def check_alpha_identity(alpha, depth=100):
    """1F1[alpha+1; alpha; z] against (1 + z/alpha) e^z.

    alpha may be a Fraction or any invertible CycloNumber outside Z_{<=0}.
    """
    if isinstance(alpha, (int, Fraction)):
        alpha = CycloNumber.from_rational(Fraction(alpha))
    if alpha.is_zero():
        raise ValueError("alpha must be nonzero")
    one = CycloNumber.from_rational(1)

    def lhs_c(n):
        num = pochhammer(alpha + one, n)
        return num / pochhammer(alpha, n)

    inv = alpha.inverse()

    def rhs_c(n):
        return one + inv * n

    return _compare("alpha", depth, ESeries(lhs_c), ESeries(rhs_c))


# ---------------------------------------------------------------------------
# the polylog-tail operator check

def _operator_polys(s, alpha, variant):
    one = CycloNumber.from_rational(1)

    def P(x):
        return one * ((x + 2) * (x + 1) ** (s + 1))

    def R(x):
        return alpha * x ** s

    if variant == "printed":
        def Q(x):
            return (alpha * x ** s - one * (x + 1) ** s) * (x + 1)
    elif variant in ("sign_corrected", "augmented"):
        def Q(x):
            return (alpha * (-x ** s) - one * (x + 1) ** s) * (x + 1)
    else:
        raise ValueError("variant must be printed, sign_corrected or augmented")
    return P, Q, R


def check_annihilator(s, alpha, depth=60, variant="printed"):
    """Apply P(theta-2) + z Q(theta-1) + z^2 R(theta) to the polylog-tail
    series sum_{n>=2} (sum_{k<n} alpha^k / k^s) z^n / n! and report the first
    surviving coefficient.

    variant "printed" uses Q(x) = (x+1)(alpha x^s - (x+1)^s) verbatim; it is
    not an annihilator (the alpha x^s term needs the opposite sign).
    "sign_corrected" flips that sign, which kills everything except the
    boundary coefficient alpha z^2 left over by the telescoping.  "augmented"
    composes the corrected operator with theta - 2 on the left, removing the
    boundary term; it is an exact annihilator (of order s + 3).
    """
    if not isinstance(s, int) or s < 1:
        raise ValueError("s must be a positive integer")
    if isinstance(alpha, (int, Fraction)):
        alpha = CycloNumber.from_rational(Fraction(alpha))
    if abs(embed_cyclo(alpha, 30).value) >= 1:
        raise ValueError("need |alpha| < 1")
    P, Q, R = _operator_polys(s, alpha, variant)

    tail = [CycloNumber.from_rational(0)]

    def c_fn(n):
        # divided-factorial coefficient: the tail sum itself
        while len(tail) < n:
            k = len(tail)
            tail.append(tail[-1] + alpha ** k * Fraction(1, k ** s))
        return tail[n - 1] if n else tail[0]

    f = ESeries(c_fn)

    def u(n):
        return f.ordinary(n) if n >= 0 else CycloNumber.from_rational(0)

    first = None
    for n in range(depth + 1):
        r = P(n - 2) * u(n) + Q(n - 2) * u(n - 1) + R(n - 2) * u(n - 2)
        if variant == "augmented":
            r = r * (n - 2)
        if not r.is_zero():
            first = n
            break
    return _report(f"annihilator[s={s},variant={variant}]", depth, first)


# ---------------------------------------------------------------------------
# digamma / Hurwitz / polylog transform suite

def _close(x, y, P):
    with mp.workdps(P + GUARD_DIGITS):
        return abs(x - y) <= mpmath.mpf(10) ** (4 - P)


def _mu_pow(q, k, P):
    return embed_cyclo(e2pi_cyclo(Fraction(k, q)), P).value


def check_gauss_suite(qmax=6, smax=4, P=DEFAULT_PRECISION):
    """Numeric verification of the five finite Fourier/telescoping identities
    linking Psi, Hurwitz zeta and polylogarithms at roots of unity.

    Each is checked in both directions (the s >= 2 pair and the s = 1 pair
    are mutually inverse linear maps) for all 0 < p <= q <= qmax and
    2 <= s <= smax, to within 10^{4-P}.
    """
    checks = []
    dps = P + GUARD_DIGITS

    def add(name, ok, where):
        checks.append({"identity": name, "status": "ok" if ok else "fail",
                       "at": None if ok else where})

    with mp.workdps(dps):
        gamma = n_euler_gamma(P).value
        for q in range(1, qmax + 1):
            logq = n_log(q, P).value if q > 1 else mpmath.mpf(0)
            psi = {n: n_psi_k(0, Fraction(n, q), P).value for n in range(1, q + 1)}
            li1 = {n: -mpmath.log(1 - _mu_pow(q, n, P)) for n in range(1, q)}
            for p in range(1, q + 1):
                # Psi(p/q) from the logarithm lattice
                rhs = -gamma - logq
                for n in range(1, q):
                    rhs -= _mu_pow(q, -n * p, P) * li1[n]
                add("gauss1", _close(psi[p], rhs, P), {"p": p, "q": q})
                if p < q:
                    rhs = mpmath.mpc(0)
                    for n in range(1, q + 1):
                        rhs += _mu_pow(q, n * p, P) * psi[n]
                    add("gauss2", _close(li1[p], -rhs / q, P), {"p": p, "q": q})
            for s in range(2, smax + 1):
                hz = {n: n_hurwitz(s, Fraction(n, q), P).value
                      for n in range(1, q + 1)}
                li = {n: n_polylog(s, _mu_pow(q, n, P), P).value
                      for n in range(1, q + 1)}
                for p in range(1, q + 1):
                    rhs = mpmath.mpc(0)
                    for n in range(1, q + 1):
                        rhs += _mu_pow(q, -n * p, P) * li[n]
                    add("gauss3", _close(hz[p], mpmath.mpf(q) ** (s - 1) * rhs, P),
                        {"p": p, "q": q, "s": s})
                    rhs = mpmath.mpc(0)
                    for n in range(1, q + 1):
                        rhs += _mu_pow(q, n * p, P) * hz[n]
                    add("gauss4", _close(li[p], rhs / mpmath.mpf(q) ** s, P),
                        {"p": p, "q": q, "s": s})
            for p in range(1, q + 1):
                for n in range(1, 5):
                    lhs = n_psi_k(0, Fraction(p, q) + n, P).value
                    rhs = psi[p]
                    for k in range(n):
                        rhs += 1 / (k + mpmath.mpf(p) / q)
                    add("gauss5", _close(lhs, rhs, P), {"p": p, "q": q, "n": n})

    bad = [c for c in checks if c["status"] == "fail"]
    rep = _report("gauss_suite", qmax, bad[0]["at"] if bad else None)
    rep["checks"] = checks
    return rep


def run_identity_suite(depth=100, qmax=6, smax=4, P=DEFAULT_PRECISION):
    """All checkers with their standard arguments, as a list of reports."""
    reports = [
        check_L_identity(depth),
        check_H_identity(depth),
        check_alpha_identity(Fraction(1), depth),
        check_alpha_identity(sqrt2_cyclo(), depth),
        check_annihilator(1, Fraction(1, 2), 60, variant="augmented"),
        check_annihilator(2, Fraction(1, 3), 60, variant="augmented"),
        check_gauss_suite(qmax, smax, P),
    ]
    return reports
