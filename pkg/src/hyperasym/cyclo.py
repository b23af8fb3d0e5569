"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1} modulo
the N-th cyclotomic polynomial, with Fraction coefficients.  Elements of
different conductors combine by lifting both to the lcm conductor.  The
complex embedding sends zeta_N to exp(2*pi*i/N).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def parse_rational(s):
    """Parse "p/q" (minus sign allowed, unicode minus tolerated)."""
    return Fraction(str(s).strip().replace("−", "-"))


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# cyclotomic polynomials

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Coefficient tuple (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_divide_exact(num, den):
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + i]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[i] = q
        for j, dj in enumerate(den):
            num[i + j] -= q * dj
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def _reduction_rows(n: int):
    """x^k mod Phi_n for k = deg..2*deg-2, as tuples of Fractions."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    # x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1}), monic
    rows.append(tuple(Fraction(-c) for c in phi[:deg]))
    for _ in range(deg - 2):
        shifted = [Fraction(0)] + list(rows[-1])
        overflow = shifted[deg]
        shifted = shifted[:deg]
        if overflow:
            shifted = [a + overflow * b for a, b in zip(shifted, rows[0])]
        rows.append(tuple(shifted))
    return tuple(rows)


def _degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CycloNumber:
    """An element of Q(zeta_N), immutable and hashable."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor, coeffs):
        deg = _degree(conductor)
        coeffs = tuple(c if type(c) is Fraction else Fraction(c) for c in coeffs)
        if len(coeffs) > deg:
            coeffs = _reduce(conductor, list(coeffs))
        elif len(coeffs) < deg:
            coeffs = coeffs + (Fraction(0),) * (deg - len(coeffs))
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("CycloNumber is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_rational(q) -> "CycloNumber":
        return CycloNumber(1, (Fraction(q),))

    @staticmethod
    def zeta(n: int, power: int = 1) -> "CycloNumber":
        """zeta_n^power."""
        power %= n
        g = gcd(power, n) if power else n
        if power == 0:
            return CycloNumber.from_rational(1)
        # reduce to a primitive root of unity of order n/g
        m = n // g
        k = power // g
        deg = _degree(m)
        if k < deg:
            coeffs = [Fraction(0)] * deg
            coeffs[k] = Fraction(1)
            return CycloNumber(m, coeffs)
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return CycloNumber(m, coeffs)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def demoted(self) -> "CycloNumber":
        """Drop to conductor 1 when the element is rational."""
        if self.conductor != 1 and self.is_rational():
            return CycloNumber(1, (self.coeffs[0],))
        return self

    def lift(self, m: int) -> "CycloNumber":
        """Rewrite in Q(zeta_m); m must be a multiple of the conductor."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError("can only lift to a multiple of the conductor")
        return _lift_cached(self, m)

    def _lift_impl(self, m: int) -> "CycloNumber":
        n = self.conductor
        step = m // n
        out = [Fraction(0)] * (2 * _degree(m))
        for i, c in enumerate(self.coeffs):
            if c:
                _add_power(out, m, i * step, c)
        return CycloNumber(m, _reduce(m, out))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = _common(self, other)
        return CycloNumber(a.conductor,
                           tuple(x + y for x, y in zip(a.coeffs, b.coeffs))).demoted()

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            q = other.coeffs[0]
            return CycloNumber(self.conductor, tuple(c * q for c in self.coeffs)).demoted()
        if self.is_rational():
            q = self.coeffs[0]
            return CycloNumber(other.conductor, tuple(c * q for c in other.coeffs)).demoted()
        a, b = _common(self, other)
        deg = len(a.coeffs)
        # clear denominators and convolve over the integers
        da = 1
        for c in a.coeffs:
            da = da * c.denominator // gcd(da, c.denominator)
        db = 1
        for c in b.coeffs:
            db = db * c.denominator // gcd(db, c.denominator)
        na = [c.numerator * (da // c.denominator) for c in a.coeffs]
        nb = [c.numerator * (db // c.denominator) for c in b.coeffs]
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        prod[i + j] += x * y
        rows = _reduction_rows_int(a.conductor) if deg > 1 else ()
        out = prod[:deg]
        for k in range(deg, len(prod)):
            c = prod[k]
            if c:
                row = rows[k - deg]
                for j in range(deg):
                    out[j] += c * row[j]
        den = da * db
        return CycloNumber(a.conductor,
                           tuple(Fraction(v, den) for v in out)).demoted()

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return CycloNumber.from_rational(1 / self.coeffs[0])
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        inv = _poly_modinv(list(self.coeffs), phi)
        return CycloNumber(self.conductor, tuple(inv)).demoted()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNumber.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        if self._hash is None:
            h = hash((self.demoted().conductor, self.demoted().coeffs))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return self.literal()

    # -- I/O ---------------------------------------------------------------

    def literal(self) -> str:
        """The "cyclo(N)[c0,c1,...]" literal used by the CLI and JSON."""
        x = self.demoted()
        body = ",".join(format_rational(c) for c in x.coeffs)
        return f"cyclo({x.conductor})[{body}]"

    @staticmethod
    def parse(text: str) -> "CycloNumber":
        text = text.strip()
        if not text.startswith("cyclo("):
            return CycloNumber.from_rational(parse_rational(text))
        head, _, body = text.partition(")[")
        n = int(head[len("cyclo("):])
        if not body.endswith("]"):
            raise ValueError(f"bad cyclotomic literal: {text!r}")
        coeffs = [parse_rational(t) for t in body[:-1].split(",") if t.strip()]
        return CycloNumber(n, coeffs)

    def embed(self, ctx):
        """Complex value under zeta_N -> exp(2*pi*i/N), via a numeric context
        exposing e2pi(Fraction)."""
        total = None
        n = self.conductor
        for i, c in enumerate(self.coeffs):
            if c:
                term = ctx.e2pi(Fraction(i, n)) * ctx.from_rational(c)
                total = term if total is None else total + term
        return total if total is not None else ctx.from_rational(0)


@lru_cache(maxsize=None)
def _reduction_rows_int(n):
    rows = []
    for row in _reduction_rows(n):
        assert all(x.denominator == 1 for x in row)
        rows.append(tuple(x.numerator for x in row))
    return tuple(rows)


@lru_cache(maxsize=65536)
def _lift_cached(x: CycloNumber, m: int) -> CycloNumber:
    return x._lift_impl(m)


def _common(a: CycloNumber, b: CycloNumber):
    if a.conductor == b.conductor:
        return a, b
    m = a.conductor * b.conductor // gcd(a.conductor, b.conductor)
    return a.lift(m), b.lift(m)


def _reduce(n, prod):
    deg = _degree(n)
    prod = [c if type(c) is Fraction else Fraction(c) for c in prod]
    if len(prod) < deg:
        prod += [Fraction(0)] * (deg - len(prod))
    # clear denominators and work over the integers
    den = 1
    for c in prod:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in prod]
    if len(ints) > 2 * deg - 1:
        # reduce high powers one at a time (rare: only from lift)
        phi = cyclotomic_polynomial(n)
        while len(ints) > deg:
            top = ints.pop()
            if top:
                k = len(ints) - deg
                for j in range(deg):
                    ints[k + j] -= top * phi[j]
        return tuple(Fraction(v, den) for v in ints)
    rows = _reduction_rows_int(n) if deg > 1 else ()
    out = ints[:deg]
    for k in range(deg, len(ints)):
        c = ints[k]
        if c:
            row = rows[k - deg]
            for j in range(deg):
                out[j] += c * row[j]
    return tuple(Fraction(v, den) for v in out)


def _add_power(acc, n, power, coeff):
    """acc += coeff * x^power, acc a plain list long enough to hold it."""
    power %= n
    deg = _degree(n)
    if power < len(acc):
        acc[power] += coeff
    else:
        acc.extend([Fraction(0)] * (power - len(acc) + 1))
        acc[power] += coeff


def _poly_modinv(a, modulus):
    """Inverse of a modulo the (monic, irreducible) modulus over Q."""
    # extended Euclid on polynomials with Fraction coefficients
    def pdeg(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def pdivmod(num, den):
        num = num[:]
        dd = pdeg(den)
        q = [Fraction(0)] * (max(pdeg(num) - dd, -1) + 1)
        while pdeg(num) >= dd:
            k = pdeg(num) - dd
            c = num[pdeg(num)] / den[dd]
            q[k] = c
            for j in range(dd + 1):
                num[k + j] -= c * den[j]
        return q, num

    r0, r1 = modulus[:], a[:]
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while pdeg(r1) > 0:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s2 = s0[:]
        # s2 = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        ln = max(len(s2), len(prod))
        s2 = [(s2[i] if i < len(s2) else 0) - (prod[i] if i < len(prod) else 0)
              for i in range(ln)]
        s0, s1 = s1, s2
    d = pdeg(r1)
    if d < 0:
        raise ZeroDivisionError("element is not invertible")
    c = r1[d]
    return [x / c for x in s1]


# ---------------------------------------------------------------------------
# trigonometric constructors

def e2pi_cyclo(t) -> CycloNumber:
    """exp(2*pi*i*t) for rational t, as an exact root of unity."""
    t = Fraction(t) % 1
    return CycloNumber.zeta(t.denominator, t.numerator)


def cyclo_i() -> CycloNumber:
    return CycloNumber.zeta(4, 1)


def sin_pi(r) -> CycloNumber:
    """sin(pi*r) for rational r, as an element of a cyclotomic field."""
    r = Fraction(r)
    z = e2pi_cyclo(r / 2)
    return (z - z.inverse()) / (2 * cyclo_i())


def cos_pi(r) -> CycloNumber:
    r = Fraction(r)
    z = e2pi_cyclo(r / 2)
    return (z + z.inverse()) / 2


def root_of_unity_order(x: CycloNumber):
    """Return the order m if x is a root of unity (x = zeta_m^k), else None."""
    n = x.demoted().conductor
    for m in (n, 2 * n):
        y = x ** m
        if y.is_rational() and y.as_rational() == 1:
            # smallest order dividing m
            for d in sorted(_divisors(m)):
                z = x ** d
                if z.is_rational() and z.as_rational() == 1:
                    return d
    return None


def root_of_unity_log(x: CycloNumber):
    """If x = exp(2*pi*i*p/q), return the Fraction p/q in [0,1); else None."""
    m = root_of_unity_order(x)
    if m is None:
        return None
    for k in range(m):
        if x == CycloNumber.zeta(m, k):
            return Fraction(k, m)
    return None


def _divisors(n):
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out.append(d)
    return out
