"""Exact identity checks on entire series with factorial-decay coefficients.

Runs the bundled verification suite: two classical series identities proved
coefficientwise over exact arithmetic, the (1 + z/alpha) e^z relation, the
three-term recurrence operator in its printed and corrected forms, and a
battery of numeric constant relations.
"""

from fractions import Fraction

from hyperasym.identities import (check_alpha_identity, check_annihilator,
                                  check_gauss_suite, check_H_identity,
                                  check_L_identity, sqrt2_cyclo)

for name, rep in (("L-series", check_L_identity(80)),
                  ("H-series", check_H_identity(80)),
                  ("alpha = sqrt(2)", check_alpha_identity(sqrt2_cyclo(), 80)),
                  ("alpha = -3/2", check_alpha_identity(Fraction(-3, 2), 80))):
    print("%-16s depth %3d  %s" % (name, rep["depth"], rep["status"]))

print()
print("three-term operator on the polylog-tail series (s=1, alpha=1/2):")
for variant in ("printed", "sign_corrected", "augmented"):
    rep = check_annihilator(1, Fraction(1, 2), 40, variant=variant)
    where = ("" if rep["first_failure"] is None
             else " (first residual at z^%d)" % rep["first_failure"])
    print("  %-15s %s%s" % (variant, rep["status"], where))

print()
rep = check_gauss_suite(5, 3, 40)
print("constant relation suite: %d checks, status %s"
      % (len(rep["checks"]), rep["status"]))
