"""Large-|x| behaviour of a confluent hypergeometric series.

Builds the full expansion of 1F1[1/3; 5/7] at infinity on both sides of the
positive real axis, prints the symbolic terms, and checks the truncation
against direct high-precision summation.
"""

from fractions import Fraction

import mpmath
from mpmath import mp

from hyperasym.asymp import compute_full_expansion
from hyperasym.exact import HyperParams
from hyperasym.hring import h_eval
from hyperasym.numerics import BigComplex, n_pFq

params = HyperParams((Fraction(1, 3),), (Fraction(5, 7),))

for branch, sgn in (("upper", 1), ("lower", -1)):
    exp = compute_full_expansion(params, branch, 10)
    print("=== branch:", branch)
    print("prefactor:", exp.prefactor)
    for (rho, beta, logpow), coeff in sorted(exp.terms.items()):
        tag = " log(x)^%d" % logpow if logpow else ""
        print("  e^{%sx} x^{%s}%s  *  %s" % (rho, beta, tag, coeff))

    with mp.workdps(60):
        x = 40 * mpmath.exp(sgn * 1j * mpmath.pi / 3)
        approx = exp.eval_at(x, 50).value
        exact = n_pFq(params, BigComplex(x, 50), 50).value
        print("x = 40 e^{%+di pi/3}" % sgn)
        print("  truncated expansion:", mpmath.nstr(approx, 20))
        print("  direct summation:   ", mpmath.nstr(exact, 20))
        print("  rel err: %.3e" % abs((approx - exact) / exact))
    print()

# a balanced 2F2 whose local exponents collide: a log(x) term appears
params = HyperParams((Fraction(1, 4), Fraction(5, 4)),
                     (Fraction(1, 2), Fraction(2, 3)))
exp = compute_full_expansion(params, "upper", 8)
logs = [k for k in exp.terms if k[2] >= 1]
print("2F2[1/4,5/4;1/2,2/3] has %d logarithmic terms, e.g." % len(logs))
rho, beta, i = logs[0]
print("  e^{%sx} x^{%s} log(x)^%d * %s" % (rho, beta, i, exp.terms[(rho, beta, i)]))
with mp.workdps(60):
    x = 50 * mpmath.exp(1j * mpmath.pi / 3)
    approx = exp.eval_at(x, 50).value
    exact = n_pFq(params, BigComplex(x, 50), 50).value
    print("  rel err at |x|=50: %.3e" % abs((approx - exact) / exact))
