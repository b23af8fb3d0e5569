"""Exact parameter bookkeeping for hypergeometric series.

Rational parameters are plain ``fractions.Fraction``; algebraic parameters
are ``CycloNumber``.  Includes the rising factorial, grouping of parameters
modulo the integers, and the E-function classifier for hypergeometric
series with (possibly irrational) algebraic parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .cyclo import CycloNumber, parse_rational


def pochhammer(a, n: int):
    """Rising factorial a(a+1)...(a+n-1); 1 for n = 0."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    one = 1 if not isinstance(a, CycloNumber) else CycloNumber.from_rational(1)
    out = one
    for k in range(n):
        out = out * (a + k)
    if isinstance(a, Fraction) and not isinstance(out, Fraction):
        out = Fraction(out)
    return out


def is_nonpositive_integer(x) -> bool:
    if isinstance(x, CycloNumber):
        if not x.is_rational():
            return False
        x = x.as_rational()
    x = Fraction(x)
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class ParameterGroup:
    """Parameters equal mod Z: smallest representative, offsets, multiplicity."""
    representative: Fraction
    offsets: tuple  # nonnegative integers a_j - representative, sorted
    @property
    def multiplicity(self) -> int:
        return len(self.offsets)


def group_parameters(a_list):
    """Partition rationals into classes mod Z, smallest member first.

    Output order: by fractional part then representative, so it is invariant
    under permutation of the input.
    """
    groups = {}
    for a in a_list:
        a = Fraction(a)
        if is_nonpositive_integer(a):
            raise ValueError(f"parameter {a} is a non-positive integer")
        groups.setdefault(a % 1, []).append(a)
    out = []
    for frac in sorted(groups):
        members = sorted(groups[frac])
        c = members[0]
        offsets = tuple(int(m - c) for m in members)
        out.append(ParameterGroup(representative=c, offsets=offsets))
    return out


@dataclass(frozen=True)
class HyperParams:
    """Parameters of a pFq series, with an optional scale lambda.

    For the confluent engine q = p; for the continuation engine there are
    p+1 upper and p lower parameters.
    """
    a_list: tuple
    b_list: tuple
    scale: CycloNumber = field(default_factory=lambda: CycloNumber.from_rational(1))

    def __post_init__(self):
        object.__setattr__(self, "a_list", tuple(self.a_list))
        object.__setattr__(self, "b_list", tuple(Fraction(b) for b in self.b_list))
        for b in self.b_list:
            if is_nonpositive_integer(b):
                raise ValueError(f"lower parameter {b} is a non-positive integer")

    @property
    def p(self) -> int:
        return len(self.a_list)

    @property
    def q(self) -> int:
        return len(self.b_list)

    def rational_a(self):
        out = []
        for a in self.a_list:
            if isinstance(a, CycloNumber):
                out.append(a.as_rational())
            else:
                out.append(Fraction(a))
        return out

    @staticmethod
    def parse(a_text: str, b_text: str, scale_text: str = "1") -> "HyperParams":
        a = [parse_rational(t) for t in a_text.split(",")] if a_text.strip() else []
        b = [parse_rational(t) for t in b_text.split(",")] if b_text.strip() else []
        return HyperParams(tuple(a), tuple(b), CycloNumber.parse(scale_text))


def nu(params: HyperParams) -> Fraction:
    """sum(a_j) - sum(b_j) for the confluent case p = q."""
    if params.p != params.q:
        raise ValueError("nu is defined for the confluent case p = q")
    return sum(params.rational_a(), Fraction(0)) - sum(params.b_list, Fraction(0))


@dataclass(frozen=True)
class GalochkinVerdict:
    is_E_function: bool
    pairing: tuple  # ((a, b), ...) witness pairs for the irrational parameters
    reason: str = ""


def _as_cyclo(x) -> CycloNumber:
    return x if isinstance(x, CycloNumber) else CycloNumber.from_rational(Fraction(x))


def galochkin_classify(a_list, b_list) -> GalochkinVerdict:
    """Galochkin's criterion for pFq(z^{q-p+1}) being an E-function.

    All CycloNumber parameters are algebraic, so the only content is whether
    the irrational parameters can be matched in pairs (a, b) with
    a - b a nonnegative integer.
    """
    a_list = [_as_cyclo(a) for a in a_list]
    b_list = [_as_cyclo(b) for b in b_list]
    if len(b_list) < len(a_list):
        raise ValueError("classifier expects q >= p")
    for x in a_list + b_list:
        if is_nonpositive_integer(x):
            raise ValueError("parameters in Z_{<=0} are not allowed")
    for a in a_list:
        for b in b_list:
            if a == b:
                raise ValueError("requires a_i != b_j for all i, j")
    irr_a = [a for a in a_list if not a.is_rational()]
    irr_b = [b for b in b_list if not b.is_rational()]
    if not irr_a and not irr_b:
        return GalochkinVerdict(True, (), "all parameters rational")
    if len(irr_a) != len(irr_b):
        return GalochkinVerdict(False, (),
                                "irrational parameters cannot be perfectly paired")
    for perm in permutations(range(len(irr_b))):
        pairs = []
        for i, a in enumerate(irr_a):
            b = irr_b[perm[i]]
            d = a - b
            if d.is_rational() and d.as_rational().denominator == 1 \
                    and d.as_rational() >= 0:
                pairs.append((a, b))
            else:
                break
        else:
            return GalochkinVerdict(True, tuple(pairs),
                                    "irrational parameters paired with a - b in N")
    return GalochkinVerdict(False, (), "no pairing with a - b in N exists")
