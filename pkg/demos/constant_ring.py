"""Exact arithmetic in the ring of special constants.

Elements are sums of monomials in Gamma, psi, zeta, log and polylog values at
rationals (and roots of unity), with cyclotomic coefficients.  The normalizer
applies the known functional relations; everything can be evaluated to any
precision as a cross-check.
"""

from fractions import Fraction

from hyperasym.cyclo import CycloNumber
from hyperasym.hring import (h_eval, h_gamma, h_invert_gamma, h_log_rational,
                             h_normalize, h_polylog, h_psi, h_zeta,
                             parse_h_element)

# reflection: Gamma(1/3) Gamma(2/3) collapses to an explicit cyclotomic
x = h_gamma(Fraction(1, 3)) * h_gamma(Fraction(2, 3))
print("Gamma(1/3) Gamma(2/3) =", x)
print("  numeric:", h_eval(x, 30).value)

# the Gamma unit: Gamma(r) has an exact inverse in the ring
r = Fraction(5, 12)
print("Gamma(5/12) * Gamma(5/12)^{-1} =",
      h_gamma(r) * h_invert_gamma(r))

# digamma values stay atomic in normal form; the numeric layer still
# confirms psi(3/4) - psi(1/4) = pi
y = h_psi(Fraction(3, 4)) - h_psi(Fraction(1, 4))
print("psi(3/4) - psi(1/4) =", h_normalize(y))
print("  numeric:", h_eval(y, 30).value)

# Hurwitz-type shifts: zeta(2, 1/6) in terms of smaller data
z = h_zeta(2, Fraction(1, 6))
print("zeta(2, 1/6) =", z)

# polylogs at roots of unity reduce to zeta and log values when possible
w = h_polylog(2, CycloNumber.from_rational(-1))
print("Li_2(-1) =", w, "  numeric:", h_eval(w, 30).value)

# round trip through the text form
t = "3/2*Gamma(1/3)*Psi(2/7) + Log(5/3)"
e = parse_h_element(t)
print("parsed:", e)
print("  numeric at 40 digits:", h_eval(e, 40).value)
print("  numeric at 60 digits:", h_eval(e, 60).value)
