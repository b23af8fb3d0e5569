"""Arbitrary-precision numeric oracle.

All exported operations take a working precision P in decimal digits and
carry the error contract |err| <= 10^(4-P).  mpmath supplies the big-float
substrate and the Gamma function; the series-based quantities (Hurwitz zeta,
digamma, pFq partial sums, Euler's constant) are summed here with explicit
tail bounds so that an evaluation that cannot certify its bound raises
instead of returning.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp

DEFAULT_PRECISION = 50
GUARD_DIGITS = 10


class PrecisionError(ArithmeticError):
    """Raised when a tail bound cannot be certified at the requested precision."""


class BigComplex:
    """Arbitrary-precision complex value tagged with its working precision."""

    __slots__ = ("value", "prec")

    def __init__(self, value, prec=DEFAULT_PRECISION):
        self.prec = int(prec)
        with mp.workdps(self.prec + GUARD_DIGITS):
            self.value = mpmath.mpc(value)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def _binop(self, other, op):
        if isinstance(other, BigComplex):
            p = max(self.prec, other.prec)
            other = other.value
        else:
            p = self.prec
        with mp.workdps(p + GUARD_DIGITS):
            return BigComplex(op(self.value, mpmath.mpc(other)), p)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __neg__(self):
        return BigComplex(-self.value, self.prec)

    def __abs__(self):
        with mp.workdps(self.prec + GUARD_DIGITS):
            return abs(self.value)

    def __complex__(self):
        return complex(self.value)

    def __repr__(self):
        return f"BigComplex({self.value}, prec={self.prec})"

    def to_str(self, digits=None):
        with mp.workdps(self.prec):
            v = self.value
            if abs(v.imag) < mpmath.mpf(10) ** (4 - self.prec):
                return mpmath.nstr(v.real, digits or self.prec)
            return mpmath.nstr(v, digits or self.prec)


class NumContext:
    """Adapter used by CycloNumber.embed: exact rationals and roots of unity."""

    def __init__(self, prec=DEFAULT_PRECISION):
        self.prec = prec

    def from_rational(self, q):
        q = Fraction(q)
        with mp.workdps(self.prec + GUARD_DIGITS):
            return mpmath.mpf(q.numerator) / q.denominator

    def e2pi(self, t):
        t = Fraction(t)
        with mp.workdps(self.prec + GUARD_DIGITS):
            return mpmath.expjpi(2 * mpmath.mpf(t.numerator) / t.denominator)


def embed_cyclo(x, P=DEFAULT_PRECISION) -> BigComplex:
    """Complex embedding of a CycloNumber (or Fraction) at precision P."""
    if isinstance(x, (int, Fraction)):
        return BigComplex(NumContext(P).from_rational(x), P)
    return BigComplex(x.embed(NumContext(P)), P)


def _to_mpc(z, dps):
    with mp.workdps(dps):
        if isinstance(z, BigComplex):
            return mpmath.mpc(z.value)
        if isinstance(z, Fraction):
            return mpmath.mpc(mpmath.mpf(z.numerator) / z.denominator)
        return mpmath.mpc(z)


def n_gamma(r, P=DEFAULT_PRECISION) -> BigComplex:
    """Gamma(r); raises at the poles r in Z_{<=0}."""
    if isinstance(r, (int, Fraction)):
        r = Fraction(r)
        if r.denominator == 1 and r <= 0:
            raise ValueError(f"Gamma has a pole at {r}")
    with mp.workdps(P + GUARD_DIGITS + 5):
        z = _to_mpc(r, P + GUARD_DIGITS + 5)
        return BigComplex(mpmath.gamma(z), P)


def n_log(z, P=DEFAULT_PRECISION) -> BigComplex:
    with mp.workdps(P + GUARD_DIGITS):
        return BigComplex(mpmath.log(_to_mpc(z, P + GUARD_DIGITS)), P)


def _bernoulli(n, dps):
    with mp.workdps(dps):
        return mpmath.bernoulli(n)


def n_hurwitz(s, r, P=DEFAULT_PRECISION) -> BigComplex:
    """Hurwitz zeta(s, r) = sum_{n>=0} 1/(n+r)^s by Euler-Maclaurin.

    Requires s >= 2 (integer) or real s > 1, and r > 0.  The Euler-Maclaurin
    remainder after the B_{2J} term is bounded in modulus by the first
    omitted term, which is checked against the contract explicitly.
    """
    s_val = Fraction(s) if isinstance(s, (int, Fraction)) else s
    if isinstance(s_val, Fraction) and s_val < 1 or (not isinstance(s_val, Fraction) and float(s_val) <= 1):
        raise ValueError("n_hurwitz needs s > 1")
    r = Fraction(r)
    if r <= 0:
        raise ValueError("n_hurwitz needs r > 0")
    dps = P + GUARD_DIGITS + 10
    with mp.workdps(dps):
        sm = mpmath.mpf(Fraction(s_val).numerator) / Fraction(s_val).denominator \
            if isinstance(s_val, Fraction) else mpmath.mpf(s_val)
        rm = mpmath.mpf(r.numerator) / r.denominator
        # direct terms up to M, then the integral + correction terms
        M = max(10, int(1.2 * dps))
        acc = mpmath.mpf(0)
        for n in range(M):
            acc += (n + rm) ** (-sm)
        x = M + rm
        acc += x ** (1 - sm) / (sm - 1)
        acc += x ** (-sm) / 2
        # sum_j B_2j/(2j)! * (s)_{2j-1} x^{-s-2j+1}
        poch = sm  # (s)_1
        target = mpmath.mpf(10) ** (-(P + GUARD_DIGITS))
        certified = False
        term = None
        for j in range(1, 200):
            term = _bernoulli(2 * j, dps) / mpmath.factorial(2 * j) * poch * x ** (-sm - 2 * j + 1)
            acc += term
            # next pochhammer (s)_{2j+1}
            poch *= (sm + 2 * j - 1) * (sm + 2 * j)
            nxt = abs(_bernoulli(2 * j + 2, dps) / mpmath.factorial(2 * j + 2) * poch) * abs(x ** (-sm - 2 * j - 1))
            if nxt < target and nxt < abs(term):
                certified = True
                acc_err = nxt
                break
        if not certified:
            raise PrecisionError("Euler-Maclaurin tail for zeta(s,r) did not certify")
        return BigComplex(acc, P)


def n_psi_k(k, r, P=DEFAULT_PRECISION) -> BigComplex:
    """Psi^{(k)}(r); k >= 1 through the Hurwitz zeta, k = 0 by Euler-Maclaurin."""
    r = Fraction(r)
    if k >= 1:
        # Psi^{(k)}(r) = (-1)^{k+1} k! zeta(k+1, r)
        z = n_hurwitz(k + 1, r, P)
        with mp.workdps(P + GUARD_DIGITS):
            return BigComplex((-1) ** (k + 1) * mpmath.factorial(k) * z.value, P)
    dps = P + GUARD_DIGITS + 10
    with mp.workdps(dps):
        rm = mpmath.mpf(r.numerator) / r.denominator
        M = max(10, int(1.2 * dps))
        # Psi(r) = Psi(r+M) - sum_{n=0}^{M-1} 1/(r+n)
        acc = -sum(1 / (rm + n) for n in range(M))
        x = rm + M
        acc += mpmath.log(x) - 1 / (2 * x)
        target = mpmath.mpf(10) ** (-(P + GUARD_DIGITS))
        certified = False
        for j in range(1, 200):
            term = -_bernoulli(2 * j, dps) / (2 * j) / x ** (2 * j)
            acc += term
            nxt = abs(_bernoulli(2 * j + 2, dps) / (2 * j + 2) / x ** (2 * j + 2))
            if nxt < target and nxt < abs(term):
                certified = True
                break
        if not certified:
            raise PrecisionError("Euler-Maclaurin tail for Psi(r) did not certify")
        return BigComplex(acc, P)


def n_euler_gamma(P=DEFAULT_PRECISION) -> BigComplex:
    """Euler's constant, as -Psi(1) via the Euler-Maclaurin digamma scheme."""
    return -n_psi_k(0, Fraction(1), P)


def n_polylog(s, z, P=DEFAULT_PRECISION) -> BigComplex:
    """Li_s(z) for integer s >= 1, |z| <= 1, excluding (s, z) = (1, 1)."""
    dps = P + GUARD_DIGITS + 5
    zm = _to_mpc(z, dps)
    with mp.workdps(dps):
        az = abs(zm)
        # inputs on the unit circle may overshoot by rounding in the caller
        if az > 1 + mpmath.mpf(10) ** (-P + 4):
            raise ValueError("n_polylog needs |z| <= 1")
        if s == 1:
            if abs(zm - 1) < mpmath.mpf(10) ** (-dps + 2):
                raise ValueError("Li_1 diverges at z = 1")
            return BigComplex(-mpmath.log(1 - zm), P)
        if az < mpmath.mpf("0.75"):
            # direct sum, geometric tail |z|^{n+1}/((n+1)^s (1-|z|))
            acc = mpmath.mpc(0)
            n = 1
            target = mpmath.mpf(10) ** (-(P + GUARD_DIGITS))
            zn = zm
            while True:
                acc += zn / mpmath.mpf(n) ** s
                tail = az ** (n + 1) / ((1 - az) * mpmath.mpf(n + 1) ** s)
                if tail < target:
                    return BigComplex(acc, P)
                zn *= zm
                n += 1
                if n > 100000:
                    raise PrecisionError("polylog sum did not certify its tail")
        # |z| near or on the unit circle: delegate to mpmath's analytic routine
        return BigComplex(mpmath.polylog(s, zm), P)


def n_polylog_root_of_unity(s, p, q, P=DEFAULT_PRECISION) -> BigComplex:
    """Li_s(exp(2*pi*i*p/q)) for s >= 2 through Hurwitz zeta values.

    Independent of n_polylog's summation path: uses
    Li_s(mu^p) = q^{-s} sum_{n=1}^{q} mu^{np} zeta(s, n/q).
    """
    if s < 2:
        raise ValueError("use n_polylog for s = 1")
    dps = P + GUARD_DIGITS + 5
    ctx = NumContext(P + 5)
    with mp.workdps(dps):
        acc = mpmath.mpc(0)
        for n in range(1, q + 1):
            acc += ctx.e2pi(Fraction(n * p, q)) * n_hurwitz(s, Fraction(n, q), P + 5).value
        acc /= mpmath.mpf(q) ** s
        return BigComplex(acc, P)


def n_pFq(params, z, P=DEFAULT_PRECISION) -> BigComplex:
    """Partial sum of pFq(a; b; z) with a certified geometric tail bound.

    Entire for q >= p; for q = p - 1 requires |z| < 1.  Each numerator
    Pochhammer factor is paired with a denominator one (the implicit (1)_n
    included); for every m >= n the term ratio |t_{m+1}/t_m| is at most

        r_n = |z| * s_n * prod_j max(1, (n + |a_j|) / (n + d_j))

    with s_n = 1/(n+1) in the confluent case q = p and s_n = 1 for q = p-1,
    each paired factor monotone nonincreasing in n once n + d_j > 0.  When
    r_n < 1 the tail after t_n is bounded by |t_n| r_n / (1 - r_n).
    """
    a_list = [Fraction(a) if not hasattr(a, "embed") else a for a in params.a_list]
    b_list = [Fraction(b) for b in params.b_list]
    p, q = len(a_list), len(b_list)
    if q not in (p, p - 1):
        raise ValueError("n_pFq handles q = p and q = p - 1 only")
    dps = P + GUARD_DIGITS + 10
    zm = _to_mpc(z, dps)
    with mp.workdps(dps):
        az = abs(zm)
        if q == p - 1 and az >= 1:
            raise ValueError("series for (p)F(p-1) converges only for |z| < 1")
        av = [embed_cyclo(a, P + GUARD_DIGITS + 10).value if hasattr(a, "embed")
              else mpmath.mpf(a.numerator) / a.denominator for a in a_list]
        bv = [mpmath.mpf(b.numerator) / b.denominator for b in b_list]
        # pair each a_j with a denominator shift; the implicit (1)_n absorbs
        # one numerator factor when q = p - 1 and contributes 1/(n+1) for q = p
        dv = list(bv) + ([mpmath.mpf(1)] if q == p - 1 else [])
        abs_a = [abs(aj) for aj in av]
        n_min = int(max([1.0] + [float(-b) + 2 for b in bv]))
        term = mpmath.mpc(1)
        acc = mpmath.mpc(1)
        biggest = mpmath.mpf(1)
        target = mpmath.mpf(10) ** (-(P + GUARD_DIGITS))
        n = 0
        while True:
            ratio = zm / (n + 1)
            for aj in av:
                ratio *= (aj + n)
            for bj in bv:
                ratio /= (bj + n)
            term = term * ratio
            n += 1
            acc += term
            biggest = max(biggest, abs(acc))
            if n >= n_min:
                r = az / (n + 1) if q == p else az
                for aa, dd in zip(abs_a, dv):
                    f = (n + aa) / (n + dd)
                    if f > 1:
                        r *= f
                if r < 1 and abs(term) * r / (1 - r) < target * biggest:
                    return BigComplex(acc, P)
            if n > 500000:
                raise PrecisionError("pFq summation did not certify its tail")
