"""Continuation of q+1Fq beyond the unit disc.

The continuation expansion converges for |z| > 1; here it is checked against
two closed forms and against mpmath's own continuation for a generic 3F2.
"""

from fractions import Fraction

import mpmath
from mpmath import mp

from hyperasym.continuation import compute_Mp, continuation_value
from hyperasym.exact import HyperParams

# 2F1[1,1;2;z] = -log(1-z)/z
params = HyperParams((Fraction(1), Fraction(1)), (Fraction(2),))
exp = compute_Mp(params, 40)
print("2F1[1,1;2;z] vs -log(1-z)/z")
with mp.workdps(50):
    for z in (-3, -12, -50):
        v = continuation_value(exp, z, 40).value
        ref = -mpmath.log(1 - mpmath.mpf(z)) / z
        print("  z=%4d  rel err %.3e" % (z, abs((v - ref) / ref)))

# 1F0[1/2;z] = (1-z)^{-1/2}
params = HyperParams((Fraction(1, 2),), ())
exp = compute_Mp(params, 40)
print("1F0[1/2;z] vs (1-z)^{-1/2}")
with mp.workdps(50):
    for z in (-3, -12, -50):
        v = continuation_value(exp, z, 40).value
        ref = (1 - mpmath.mpf(z)) ** mpmath.mpf("-0.5")
        print("  z=%4d  rel err %.3e" % (z, abs((v - ref) / ref)))

# generic rational parameters, checked against mpmath.hyper
params = HyperParams((Fraction(1, 3), Fraction(1, 2), Fraction(5, 4)),
                     (Fraction(3, 4), Fraction(5, 6)))
exp = compute_Mp(params, 8)
print("3F2[1/3,1/2,5/4; 3/4,5/6] vs mpmath.hyper")
with mp.workdps(50):
    for z in (-8, -40):
        v = continuation_value(exp, z, 40).value
        ref = mpmath.hyper([mpmath.mpf(1) / 3, mpmath.mpf(1) / 2,
                            mpmath.mpf(5) / 4],
                           [mpmath.mpf(3) / 4, mpmath.mpf(5) / 6], z)
        print("  z=%4d  rel err %.3e" % (z, abs((v - ref) / ref)))
