"""Symbolic model of the constant ring generated by Gamma values at rationals.

The ring is generated over the cyclotomic scalars by the atoms

    Gamma(r)          0 < r < 1
    Psi(r)            0 < r < 1          (Psi(1) is rewritten to -EulerGamma)
    HurwitzZeta(s,r)  integer s >= 2, 0 < r <= 1
    EulerGamma, Pi, InvPi
    LogPrime(p)       p prime
    OpaquePolylog(s,alpha)   |alpha| < 1, alpha not a root of unity

An HElement is a finite linear combination of atom monomials with CycloNumber
coefficients.  The constructors below canonicalize eagerly (argument shifts,
factorial collapses, polylog elimination at roots of unity, prime splitting
of logarithms); h_normalize re-runs the same constructors on raw data.  The
rewrite system claims soundness only: equal elements need not have equal
normal forms, and numeric evaluation is the equality test of last resort.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp

from .cyclo import (CycloNumber, e2pi_cyclo, format_rational, parse_rational,
                    root_of_unity_log, sin_pi)
from . import numerics
from .numerics import GUARD_DIGITS, BigComplex, embed_cyclo

_KINDS = ("Gamma", "Psi", "HurwitzZeta", "EulerGamma", "Pi", "InvPi",
          "LogPrime", "OpaquePolylog")


@dataclass(frozen=True)
class HAtom:
    kind: str
    args: tuple = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        object.__setattr__(self, "_hash", hash((self.kind, self.args)))
        object.__setattr__(self, "_key",
                           (self.kind, tuple(str(a) for a in self.args)))

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return self._key

    def to_json(self):
        d = {"kind": self.kind}
        if self.kind in ("Gamma", "Psi"):
            d["r"] = format_rational(self.args[0])
        elif self.kind == "HurwitzZeta":
            d["s"] = self.args[0]
            d["r"] = format_rational(self.args[1])
        elif self.kind == "LogPrime":
            d["p"] = self.args[0]
        elif self.kind == "OpaquePolylog":
            d["s"] = self.args[0]
            d["alpha"] = self.args[1].literal()
        return d

    @staticmethod
    def from_json(d):
        k = d["kind"]
        if k in ("Gamma", "Psi"):
            return HAtom(k, (parse_rational(d["r"]),))
        if k == "HurwitzZeta":
            return HAtom(k, (int(d["s"]), parse_rational(d["r"])))
        if k == "LogPrime":
            return HAtom(k, (int(d["p"]),))
        if k == "OpaquePolylog":
            return HAtom(k, (int(d["s"]), CycloNumber.parse(d["alpha"])))
        return HAtom(k)

    def __repr__(self):
        if not self.args:
            return self.kind
        body = ",".join(str(a) for a in self.args)
        return f"{self.kind}({body})"


def _canon_monomial(atoms):
    """Sort atoms and cancel Pi against InvPi pairs."""
    atoms = sorted(atoms, key=HAtom.sort_key)
    npi = sum(1 for a in atoms if a.kind == "Pi")
    ninv = sum(1 for a in atoms if a.kind == "InvPi")
    if npi and ninv:
        drop = min(npi, ninv)
        out, dp, di = [], drop, drop
        for a in atoms:
            if a.kind == "Pi" and dp:
                dp -= 1
            elif a.kind == "InvPi" and di:
                di -= 1
            else:
                out.append(a)
        atoms = out
    return tuple(atoms)


@lru_cache(maxsize=None)
def _reflection_unit(r) -> CycloNumber:
    return sin_pi(r).inverse()


@lru_cache(maxsize=1)
def _cyclo_one() -> CycloNumber:
    return CycloNumber.from_rational(1)


def _reduce_monomial(atoms):
    """Apply the reflection rewrite Gamma(r)Gamma(1-r) -> Pi / sin(pi r)
    inside a monomial.  Returns (reduced monomial, cyclotomic factor)."""
    rest, gammas = [], []
    for a in atoms:
        (gammas if a.kind == "Gamma" else rest).append(a)
    if not gammas:
        return _canon_monomial(atoms), _cyclo_one()
    cnt = Counter(a.args[0] for a in gammas)
    factor = _cyclo_one()
    changed = False
    for r in sorted(cnt):
        s = 1 - r
        if r < s:
            pairs = min(cnt[r], cnt.get(s, 0))
            if pairs:
                cnt[r] -= pairs
                cnt[s] -= pairs
        elif r == s:
            pairs = cnt[r] // 2
            if pairs:
                cnt[r] -= 2 * pairs
        else:
            continue
        if pairs:
            changed = True
            for _ in range(pairs):
                rest.append(HAtom("Pi"))
                factor = factor * _reflection_unit(r)
    if not changed:
        return _canon_monomial(atoms), _cyclo_one()
    mono = rest + [HAtom("Gamma", (r,)) for r, n in cnt.items() for _ in range(n)]
    return _canon_monomial(mono), factor


class HElement:
    """Finite sum of atom monomials with CycloNumber coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            if not isinstance(c, CycloNumber):
                c = CycloNumber.from_rational(Fraction(c))
            if c.is_zero():
                continue
            mono, factor = _reduce_monomial(_canon_monomial(mono))
            if not (factor.is_rational() and factor.as_rational() == 1):
                c = c * factor
            if mono in clean:
                c = clean[mono] + c
                if c.is_zero():
                    del clean[mono]
                    continue
            clean[mono] = c
        self.terms = clean

    @classmethod
    def _make(cls, terms):
        # trusted path: monomials already canonical, coefficients CycloNumber
        el = object.__new__(cls)
        el.terms = {m: c for m, c in terms.items() if not c.is_zero()}
        return el

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return HElement()

    @staticmethod
    def one():
        return HElement.from_scalar(1)

    @staticmethod
    def from_scalar(c):
        if not isinstance(c, CycloNumber):
            c = CycloNumber.from_rational(Fraction(c))
        return HElement({(): c})

    @staticmethod
    def from_atom(atom, coeff=1):
        return HElement({(atom,): coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_scalar(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def as_scalar(self) -> CycloNumber:
        if self.is_zero():
            return CycloNumber.from_rational(0)
        if not self.is_scalar():
            raise ValueError(f"{self!r} is not a pure scalar")
        return self.terms[()]

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, HElement):
            return other
        if isinstance(other, (int, Fraction, CycloNumber)):
            return HElement.from_scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            cur = out.get(mono)
            out[mono] = c if cur is None else cur + c
        return HElement._make(out)

    __radd__ = __add__

    def __neg__(self):
        return HElement._make({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_scalar():
            if other.is_zero():
                return HElement.zero()
            s = other.terms[()]
            return HElement._make({m: c * s for m, c in self.terms.items()})
        if self.is_scalar():
            return other * self
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono, factor = _reduce_monomial(m1 + m2)
                c = c1 * c2
                if factor is not _cyclo_one():
                    c = c * factor
                if mono in out:
                    out[mono] = out[mono] + c
                else:
                    out[mono] = c
        return HElement._make(out)

    __rmul__ = __mul__

    def scalar_div(self, c):
        if not isinstance(c, CycloNumber):
            c = CycloNumber.from_rational(Fraction(c))
        inv = c.inverse()
        return HElement._make({m: x * inv for m, x in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            return self.scalar_div(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if self.is_zero():
            return "H<0>"
        bits = []
        for mono, c in sorted(self.terms.items(),
                              key=lambda kv: [a.sort_key() for a in kv[0]]):
            head = c.literal()
            tail = "*".join(repr(a) for a in mono)
            bits.append(head + ("*" + tail if tail else ""))
        return "H<" + " + ".join(bits) + ">"

    # -- I/O ---------------------------------------------------------------

    def to_json(self):
        rows = []
        for mono, c in sorted(self.terms.items(),
                              key=lambda kv: [a.sort_key() for a in kv[0]]):
            rows.append({"monomial": [a.to_json() for a in mono],
                         "coeff": c.literal()})
        return {"terms": rows}

    @staticmethod
    def from_json(d):
        out = {}
        for row in d["terms"]:
            mono = tuple(HAtom.from_json(a) for a in row["monomial"])
            out[mono] = CycloNumber.parse(row["coeff"])
        return HElement(out)


# ---------------------------------------------------------------------------
# canonicalizing atom constructors

def h_gamma(r) -> HElement:
    """Gamma(r) for rational r outside Z_{<=0}, shifted into the atom range."""
    r = Fraction(r)
    if r.denominator == 1:
        if r <= 0:
            raise ValueError(f"Gamma has a pole at {r}")
        f = 1
        for k in range(2, r.numerator):
            f *= k
        return HElement.from_scalar(f)
    scale = Fraction(1)
    while r > 1:
        r -= 1
        scale *= r
    while r < 0:
        scale /= r
        r += 1
    return HElement.from_atom(HAtom("Gamma", (r,)), scale)


def h_euler_gamma() -> HElement:
    return HElement.from_atom(HAtom("EulerGamma"))


def h_pi() -> HElement:
    return HElement.from_atom(HAtom("Pi"))


def h_inv_pi() -> HElement:
    return HElement.from_atom(HAtom("InvPi"))


def h_psi(r) -> HElement:
    """Psi(r) for rational r outside Z_{<=0}; Psi(1) becomes -EulerGamma."""
    r = Fraction(r)
    if r.denominator == 1 and r <= 0:
        raise ValueError(f"Psi has a pole at {r}")
    shift = Fraction(0)
    while r > 1:
        r -= 1
        shift += 1 / r
    while r <= 0:
        shift -= 1 / r
        r += 1
    if r == 1:
        return HElement.from_atom(HAtom("EulerGamma"), -1) + shift
    return HElement.from_atom(HAtom("Psi", (r,))) + shift


def h_zeta(s: int, r) -> HElement:
    """HurwitzZeta(s, r), s >= 2, r outside Z_{<=0}, shifted into (0, 1]."""
    if s < 2:
        raise ValueError("HurwitzZeta needs s >= 2")
    r = Fraction(r)
    if r.denominator == 1 and r <= 0:
        raise ValueError(f"HurwitzZeta is undefined at r = {r}")
    shift = Fraction(0)
    # zeta(s, x) = x^{-s} + zeta(s, x+1)
    while r > 1:
        r -= 1
        shift -= Fraction(1) / r ** s
    while r <= 0:
        shift += Fraction(1) / r ** s
        r += 1
    return HElement.from_atom(HAtom("HurwitzZeta", (s, r))) + shift


def _factorize(n: int):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def h_log_rational(q) -> HElement:
    """log(q) for a positive rational q, as a Z-combination of prime logs."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("logarithm argument must be positive")
    out = HElement.zero()
    for p, e in _factorize(q.numerator).items():
        out = out + HElement.from_atom(HAtom("LogPrime", (p,)), e)
    for p, e in _factorize(q.denominator).items():
        out = out + HElement.from_atom(HAtom("LogPrime", (p,)), -e)
    return out


def h_polylog(s: int, alpha) -> HElement:
    """Li_s(alpha).  Roots of unity are eliminated through Psi or Hurwitz
    zeta values; other arguments (|alpha| < 1) stay opaque atoms."""
    if s < 1:
        raise ValueError("polylog weight must be >= 1")
    if not isinstance(alpha, CycloNumber):
        alpha = CycloNumber.from_rational(Fraction(alpha))
    t = root_of_unity_log(alpha)
    if t is not None:
        q = t.denominator
        p = t.numerator if t else q
        if s == 1:
            if p == q:
                raise ValueError("Li_1 diverges at 1")
            # Li_1(mu^p) = -(1/q) sum_n mu^{np} Psi(n/q)
            out = HElement.zero()
            for n in range(1, q + 1):
                w = e2pi_cyclo(Fraction(n * p, q))
                out = out + HElement({(): w}) * h_psi(Fraction(n, q))
            return out.scalar_div(-q)
        # Li_s(mu^p) = q^{-s} sum_n mu^{np} zeta(s, n/q)
        out = HElement.zero()
        for n in range(1, q + 1):
            w = e2pi_cyclo(Fraction(n * p, q))
            out = out + HElement({(): w}) * h_zeta(s, Fraction(n, q))
        return out.scalar_div(Fraction(q) ** s)
    av = abs(embed_cyclo(alpha, 30).value)
    if av >= 1:
        raise ValueError("opaque polylog needs |alpha| < 1")
    return HElement.from_atom(HAtom("OpaquePolylog", (s, alpha)))


def h_normalize(x: HElement) -> HElement:
    """Re-run the canonicalizing constructors on every atom of x.

    Canonical atoms are fixed points, so the map is idempotent; it preserves
    the numeric value but does not decide equality in the ring.
    """
    out = HElement.zero()
    for mono, c in x.terms.items():
        term = HElement.from_scalar(c)
        for atom in mono:
            term = term * _rebuild_atom(atom)
        out = out + term
    return out


def _rebuild_atom(atom: HAtom) -> HElement:
    if atom.kind == "Gamma":
        return h_gamma(atom.args[0])
    if atom.kind == "Psi":
        return h_psi(atom.args[0])
    if atom.kind == "HurwitzZeta":
        return h_zeta(*atom.args)
    if atom.kind == "LogPrime":
        return HElement.from_atom(atom)
    if atom.kind == "OpaquePolylog":
        return h_polylog(*atom.args)
    return HElement.from_atom(atom)


def h_invert_gamma(r) -> HElement:
    """1/Gamma(r) for 0 < r <= 1, via the reflection formula."""
    r = Fraction(r)
    if not 0 < r <= 1:
        raise ValueError("h_invert_gamma needs 0 < r <= 1")
    if r == 1:
        return HElement.one()
    return HElement({(): sin_pi(r)}) * h_inv_pi() * h_gamma(1 - r)


def h_invert_unit(x: HElement) -> HElement:
    """Invert an element that is a single monomial in Gamma, Pi, InvPi atoms
    with a nonzero cyclotomic coefficient."""
    if len(x.terms) != 1:
        raise ValueError("can only invert monomial units")
    (mono, c), = x.terms.items()
    out = HElement.from_scalar(c.inverse())
    for atom in mono:
        if atom.kind == "Gamma":
            out = out * h_invert_gamma(atom.args[0])
        elif atom.kind == "Pi":
            out = out * h_inv_pi()
        elif atom.kind == "InvPi":
            out = out * h_pi()
        else:
            raise ValueError(f"no inversion rule for atom {atom!r}")
    return out


# ---------------------------------------------------------------------------
# numeric evaluation

def _eval_atom(atom: HAtom, P):
    dps = P + GUARD_DIGITS
    if atom.kind == "Gamma":
        return numerics.n_gamma(atom.args[0], P).value
    if atom.kind == "Psi":
        return numerics.n_psi_k(0, atom.args[0], P).value
    if atom.kind == "HurwitzZeta":
        return numerics.n_hurwitz(atom.args[0], atom.args[1], P).value
    if atom.kind == "EulerGamma":
        return numerics.n_euler_gamma(P).value
    if atom.kind == "Pi":
        with mp.workdps(dps):
            return +mpmath.pi
    if atom.kind == "InvPi":
        with mp.workdps(dps):
            return 1 / mpmath.pi
    if atom.kind == "LogPrime":
        return numerics.n_log(Fraction(atom.args[0]), P).value
    if atom.kind == "OpaquePolylog":
        s, alpha = atom.args
        return numerics.n_polylog(s, embed_cyclo(alpha, P + 5), P).value
    raise ValueError(atom.kind)


def h_eval(x: HElement, P=numerics.DEFAULT_PRECISION) -> BigComplex:
    dps = P + GUARD_DIGITS
    with mp.workdps(dps):
        total = mpmath.mpc(0)
        for mono, c in x.terms.items():
            v = embed_cyclo(c, P).value
            for atom in mono:
                v *= _eval_atom(atom, P)
            total += v
        return BigComplex(total, P)


def h_gamma_derivative(s: int, r) -> HElement:
    """s-th derivative of Gamma at rational r > 0 (or r < 0 outside the
    poles), as an HElement."""
    if s < 0:
        raise ValueError("derivative order must be >= 0")
    series = gamma_series_at(Fraction(r), s)
    f = 1
    for k in range(2, s + 1):
        f *= k
    return series[s] * f


# ---------------------------------------------------------------------------
# truncated series in a formal epsilon with HElement coefficients
#
# These power the Laurent expansion of Gamma factors in the residue engines.
# A series is a plain list [c0, c1, ...] of HElements.

def series_trim(a, M):
    a = list(a[:M + 1])
    while len(a) < M + 1:
        a.append(HElement.zero())
    return a


def series_add(a, b, M):
    a, b = series_trim(a, M), series_trim(b, M)
    return [x + y for x, y in zip(a, b)]


def series_mul(a, b, M):
    out = [HElement.zero() for _ in range(M + 1)]
    for i, x in enumerate(a[:M + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[:M + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def series_scale(a, c):
    return [x * c for x in a]


def series_exp(a, M):
    """exp of a series with zero constant term."""
    if not a[0].is_zero():
        raise ValueError("series_exp needs zero constant term")
    out = [HElement.one()] + [HElement.zero()] * M
    # out' = a' * out, solved coefficientwise
    for n in range(1, M + 1):
        acc = HElement.zero()
        for k in range(1, n + 1):
            if k < len(a) and not a[k].is_zero():
                acc = acc + a[k] * out[n - k] * k
        out[n] = acc.scalar_div(n)
    return out


def series_inv(a, M, invert_constant=h_invert_unit):
    """Reciprocal of a series whose constant term is a monomial unit."""
    a = series_trim(a, M)
    c0inv = invert_constant(a[0])
    out = [c0inv] + [HElement.zero()] * M
    for n in range(1, M + 1):
        acc = HElement.zero()
        for k in range(1, n + 1):
            acc = acc + a[k] * out[n - k]
        out[n] = -(c0inv * acc)
    return out


def gamma_series_at(c, M):
    """Taylor coefficients of Gamma(c + eps) through eps^M, c not in Z_{<=0}.

    Gamma(c+eps) = Gamma(c) exp(Psi(c) eps + sum_{k>=2} (-1)^k zeta(k,c) eps^k / k).
    """
    c = Fraction(c)
    if c.denominator == 1 and c <= 0:
        raise ValueError(f"Gamma has a pole at {c}")
    arg = [HElement.zero(), h_psi(c)]
    for k in range(2, M + 1):
        arg.append(h_zeta(k, c) * Fraction((-1) ** k, k))
    e = series_exp(series_trim(arg, M), M)
    return series_scale(e, h_gamma(c))


def recip_gamma_series_at(c, M):
    """Taylor coefficients of 1/Gamma(c + eps) through eps^M, any rational c.

    At c = -m (m >= 0) the function has a zero of order 1:
    1/Gamma(eps-m) = prod_{j=0}^{m} (eps - j) / Gamma(1 + eps).
    """
    c = Fraction(c)
    if c.denominator > 1 or c > 0:
        return series_inv(gamma_series_at(c, M), M)
    m = -int(c)
    base = series_inv(gamma_series_at(Fraction(1), M), M)
    for j in range(m + 1):
        poly = [HElement.from_scalar(-j), HElement.one()]
        base = series_mul(base, poly, M)
    return base


def gamma_laurent_at(c, M):
    """Laurent expansion of Gamma(c + eps): (valuation, coefficient list).

    valuation is -1 at the poles c in Z_{<=0} and 0 elsewhere; the list gives
    the coefficients of eps^{valuation} .. eps^{valuation + M}.
    """
    c = Fraction(c)
    if c.denominator > 1 or c > 0:
        return 0, gamma_series_at(c, M)
    # Gamma(eps-m) = Gamma(1+eps) / (eps (eps-1) ... (eps-m))
    m = -int(c)
    num = gamma_series_at(Fraction(1), M)
    den = [HElement.one()]
    for j in range(1, m + 1):
        den = series_mul(den, [HElement.from_scalar(-j), HElement.one()], M)
    return -1, series_mul(num, series_inv(den, M), M)


# ---------------------------------------------------------------------------
# literal parser for the CLI ("Gamma(1/3)", "2/3*Pi*InvPi + EulerGamma")

def parse_h_element(text: str) -> HElement:
    # whitespace carries no meaning in this grammar
    text = text.replace(" ", "")
    out = HElement.zero()
    for sign, term in _split_terms(text):
        el = HElement.one()
        for factor in _split_top(term, "*"):
            el = el * _parse_factor(factor.strip())
        out = out + (el if sign > 0 else -el)
    return out


def _split_terms(text):
    terms, depth, cur, sign = [], 0, [], 1
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and cur and cur[-1].strip():
            terms.append((sign, "".join(cur).strip()))
            cur, sign = [], (1 if ch == "+" else -1)
        else:
            cur.append(ch)
    if "".join(cur).strip():
        terms.append((sign, "".join(cur).strip()))
    return terms


def _split_top(text, sep):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch == sep:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _parse_factor(text: str) -> HElement:
    if not text:
        raise ValueError("empty factor")
    if text.startswith("cyclo("):
        return HElement.from_scalar(CycloNumber.parse(text))
    if text[0].isdigit() or text[0] in "+-":
        return HElement.from_scalar(parse_rational(text))
    name, _, rest = text.partition("(")
    name = name.strip()
    if not rest:
        if name == "EulerGamma":
            return h_euler_gamma()
        if name == "Pi":
            return h_pi()
        if name == "InvPi":
            return h_inv_pi()
        raise ValueError(f"unknown constant {name!r}")
    if not rest.endswith(")"):
        raise ValueError(f"unbalanced parentheses in {text!r}")
    args = [t.strip() for t in rest[:-1].split(",")]
    if name == "Gamma":
        return h_gamma(parse_rational(args[0]))
    if name == "Psi":
        return h_psi(parse_rational(args[0]))
    if name == "HurwitzZeta":
        return h_zeta(int(args[0]), parse_rational(args[1]))
    if name == "LogPrime":
        return HElement.from_atom(HAtom("LogPrime", (int(args[0]),)))
    if name == "Log":
        return h_log_rational(parse_rational(args[0]))
    if name == "Polylog":
        return h_polylog(int(args[0]), CycloNumber.parse(args[1]))
    raise ValueError(f"unknown function {name!r}")
